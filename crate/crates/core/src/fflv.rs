//! Dyck paths, FFLV patterns and the lattice points `Pi_lambda` of the FFLV
//! polytope.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::triangle::{pair_count, pair_index, pairs};

/// `lambda = a_1 omega_1 + ... + a_{n-1} omega_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    n: usize,
    coeffs: Vec<u32>,
}

impl DominantWeight {
    pub fn new(n: usize, coeffs: Vec<u32>) -> Result<Self> {
        if n < 2 || coeffs.len() != n - 1 {
            return Err(Error::ShapeMismatch(format!("need {} coefficients for n = {n}", n.saturating_sub(1))));
        }
        Ok(DominantWeight { n, coeffs })
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight { n, coeffs: vec![0; n - 1] }
    }

    /// The fundamental weight `omega_k`.
    pub fn fundamental(n: usize, k: usize) -> Self {
        let mut w = Self::zero(n);
        w.coeffs[k - 1] = 1;
        w
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a_k`, 1-based.
    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs[k - 1]
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn total(&self) -> u32 {
        self.coeffs.iter().sum()
    }

    /// Sorted `k` with `a_k > 0`.
    pub fn support(&self) -> Vec<usize> {
        (1..self.n).filter(|&k| self.coeff(k) > 0).collect()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ShapeMismatch("weights for different n".into()));
        }
        Ok(DominantWeight { n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    /// Column heights of the Young diagram, non-increasing.
    pub fn column_heights(&self) -> Vec<usize> {
        (1..self.n).rev().flat_map(|k| std::iter::repeat(k).take(self.coeff(k) as usize)).collect()
    }

    /// `a_from + ... + a_to` (inclusive, 1-based; empty if `from > to`).
    pub fn range_sum(&self, from: usize, to: usize) -> u32 {
        (from..=to).map(|k| self.coeff(k)).sum()
    }

    /// All weights with `sum a_i <= max_total`, ordered by total then lexicographically.
    pub fn all_up_to(n: usize, max_total: u32) -> Vec<DominantWeight> {
        let mut out = Vec::new();
        for total in 0..=max_total {
            let mut cur = vec![0u32; n - 1];
            compositions(total, 0, &mut cur, &mut |c| out.push(DominantWeight { n, coeffs: c.to_vec() }));
        }
        out
    }
}

fn compositions(rest: u32, pos: usize, cur: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        emit(cur);
        cur[pos] = 0;
        return;
    }
    for v in (0..=rest).rev() {
        cur[pos] = v;
        compositions(rest - v, pos + 1, cur, emit);
    }
    cur[pos] = 0;
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..self.n)
            .filter(|&k| self.coeff(k) > 0)
            .map(|k| if self.coeff(k) == 1 { format!("w{k}") } else { format!("{}w{k}", self.coeff(k)) })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Nonnegative integer array indexed by pairs `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrianglePattern {
    n: usize,
    t: Vec<u32>,
}

impl TrianglePattern {
    pub fn zero(n: usize) -> Self {
        TrianglePattern { n, t: vec![0; pair_count(n)] }
    }

    pub fn from_entries(n: usize, t: Vec<u32>) -> Result<Self> {
        if t.len() != pair_count(n) {
            return Err(Error::ShapeMismatch(format!("pattern needs {} entries", pair_count(n))));
        }
        Ok(TrianglePattern { n, t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.t[pair_index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        let idx = pair_index(self.n, i, j);
        self.t[idx] = v;
    }

    /// Entries in lexicographic pair order.
    pub fn entries(&self) -> &[u32] {
        &self.t
    }

    pub fn total(&self) -> u32 {
        self.t.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().all(|&v| v == 0)
    }

    /// Pairs with nonzero entry, lexicographic.
    pub fn support(&self) -> Vec<(usize, usize)> {
        pairs(self.n).filter(|&(i, j)| self.get(i, j) > 0).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        TrianglePattern { n: self.n, t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect() }
    }

    /// Entrywise difference, `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let t = self.t.iter().zip(&other.t).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>()?;
        Some(TrianglePattern { n: self.n, t })
    }
}

impl fmt::Display for TrianglePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..self.n {
            let row: Vec<String> = (1..=self.n - r).map(|i| self.get(i, i + r).to_string()).collect();
            writeln!(f, "{}{}", " ".repeat(r - 1), row.join(" "))?;
        }
        Ok(())
    }
}

/// A path through the root triangle starting and ending in the top row,
/// each step moving to `(i+1, j)` or `(i, j+1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<(usize, usize)>,
}

impl DyckPath {
    pub fn new(n: usize, steps: Vec<(usize, usize)>) -> Result<Self> {
        let bad = || Error::InvalidIndex(format!("not a Dyck path for n = {n}: {steps:?}"));
        let (first, last) = match (steps.first(), steps.last()) {
            (Some(f), Some(l)) => (*f, *l),
            _ => return Err(bad()),
        };
        if first.1 != first.0 + 1 || last.1 != last.0 + 1 {
            return Err(bad());
        }
        if steps.iter().any(|&(i, j)| !(1 <= i && i < j && j <= n)) {
            return Err(bad());
        }
        if steps.windows(2).any(|w| w[1] != (w[0].0 + 1, w[0].1) && w[1] != (w[0].0, w[0].1 + 1)) {
            return Err(bad());
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    /// `M(lambda, d) = a_{i_1} + ... + a_{i_N}`.
    pub fn bound(&self, lambda: &DominantWeight) -> u32 {
        lambda.range_sum(self.steps[0].0, self.steps.last().unwrap().0)
    }

    /// `S(T, d)`, the sum of `T` over the path cells.
    pub fn sum(&self, t: &TrianglePattern) -> u32 {
        self.steps.iter().map(|&(i, j)| t.get(i, j)).sum()
    }
}

/// All Dyck paths for `n`, lexicographic on step sequences. Cached per `n`.
pub fn dyck_paths(n: usize) -> Arc<Vec<DyckPath>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<DyckPath>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let paths = Arc::new(enumerate_dyck_paths(n));
    cache.lock().unwrap().insert(n, paths.clone());
    paths
}

fn enumerate_dyck_paths(n: usize) -> Vec<DyckPath> {
    fn walk(n: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<DyckPath>) {
        let (i, j) = *cur.last().unwrap();
        if j == i + 1 {
            out.push(DyckPath { steps: cur.clone() });
        }
        // lexicographic order: (i, j+1) < (i+1, j)
        if j < n {
            cur.push((i, j + 1));
            walk(n, cur, out);
            cur.pop();
        }
        if i + 1 < j {
            cur.push((i + 1, j));
            walk(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for i in 1..n {
        let mut cur = vec![(i, i + 1)];
        walk(n, &mut cur, &mut out);
    }
    out.sort();
    out
}

pub fn path_bound(lambda: &DominantWeight, path: &DyckPath) -> u32 {
    path.bound(lambda)
}

pub fn path_sum(t: &TrianglePattern, path: &DyckPath) -> u32 {
    path.sum(t)
}

pub fn is_fflv_pattern(t: &TrianglePattern, lambda: &DominantWeight) -> bool {
    t.n() == lambda.n() && dyck_paths(t.n()).iter().all(|p| p.sum(t) <= p.bound(lambda))
}

/// Upper bound for `T_{i,j}`: the bound of the shortest path through `(i, j)`,
/// which is `a_i + ... + a_{j-1}`.
pub fn cell_bound(lambda: &DominantWeight, i: usize, j: usize) -> u32 {
    lambda.range_sum(i, j - 1)
}

/// All of `Pi_lambda`, lexicographic on entry vectors.
pub fn enumerate_patterns(lambda: &DominantWeight) -> Vec<TrianglePattern> {
    let n = lambda.n();
    let cells: Vec<(usize, usize)> = pairs(n).collect();
    let bounds: Vec<u32> = cells.iter().map(|&(i, j)| cell_bound(lambda, i, j)).collect();
    // each path is checked once its last cell (in fill order) is assigned
    let mut closing: Vec<Vec<(Vec<usize>, u32)>> = vec![Vec::new(); cells.len()];
    for p in dyck_paths(n).iter() {
        let idx: Vec<usize> = p.steps().iter().map(|&(i, j)| pair_index(n, i, j)).collect();
        let last = *idx.iter().max().unwrap();
        closing[last].push((idx, p.bound(lambda)));
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; cells.len()];
    fn fill(
        pos: usize,
        cur: &mut Vec<u32>,
        bounds: &[u32],
        closing: &[Vec<(Vec<usize>, u32)>],
        n: usize,
        out: &mut Vec<TrianglePattern>,
    ) {
        if pos == cur.len() {
            out.push(TrianglePattern { n, t: cur.clone() });
            return;
        }
        for v in 0..=bounds[pos] {
            cur[pos] = v;
            let ok = closing[pos].iter().all(|(cells, b)| cells.iter().map(|&c| cur[c]).sum::<u32>() <= *b);
            if !ok {
                // path sums only grow with v
                break;
            }
            fill(pos + 1, cur, bounds, closing, n, out);
        }
        cur[pos] = 0;
    }
    fill(0, &mut cur, &bounds, &closing, n, &mut out);
    out
}

/// Weyl dimension formula for `L_lambda`.
pub fn weyl_dim(lambda: &DominantWeight) -> BigUint {
    let n = lambda.n();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in pairs(n) {
        let pairing: u64 = (i..j).map(|t| lambda.coeff(t) as u64 + 1).sum();
        num *= pairing;
        den *= (j - i) as u64;
    }
    num / den
}

/// Whether `Pi_lambda + Pi_mu = Pi_{lambda+mu}` as sets.
pub fn minkowski_check(lambda: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    let sum_weight = lambda.add(mu)?;
    let left = enumerate_patterns(lambda);
    let right = enumerate_patterns(mu);
    let sums: BTreeSet<TrianglePattern> = left.iter().flat_map(|t| right.iter().map(move |s| t.add(s))).collect();
    let target: BTreeSet<TrianglePattern> = enumerate_patterns(&sum_weight).into_iter().collect();
    Ok(sums == target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, c: &[u32]) -> DominantWeight {
        DominantWeight::new(n, c.to_vec()).unwrap()
    }

    fn pattern(n: usize, cells: &[((usize, usize), u32)]) -> TrianglePattern {
        let mut t = TrianglePattern::zero(n);
        for &((i, j), v) in cells {
            t.set(i, j, v);
        }
        t
    }

    /// Counts paths by dynamic programming over the cells: `ways[c]` is the
    /// number of partial paths from the top row ending at `c`.
    fn dyck_count_oracle(n: usize) -> u64 {
        let mut ways = vec![vec![0u64; n + 2]; n + 2];
        let mut total = 0;
        // process cells so predecessors come first: by i + j, then i descending
        let mut order: Vec<(usize, usize)> = pairs(n).collect();
        order.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
        for (i, j) in order {
            let mut v = if j == i + 1 { 1 } else { 0 };
            if i >= 2 && i - 1 < j {
                v += ways[i - 1][j];
            }
            if j - 1 > i {
                v += ways[i][j - 1];
            }
            ways[i][j] = v;
            if j == i + 1 {
                total += v;
            }
        }
        total
    }

    #[test]
    fn dyck_paths_small() {
        let p2 = dyck_paths(2);
        assert_eq!(p2.len(), 1);
        assert_eq!(p2[0].steps(), &[(1, 2)]);
        let p3 = dyck_paths(3);
        let steps: Vec<&[(usize, usize)]> = p3.iter().map(|p| p.steps()).collect();
        assert_eq!(steps, vec![&[(1, 2)][..], &[(1, 2), (1, 3), (2, 3)], &[(2, 3)]]);
        for n in 2..=7 {
            assert_eq!(dyck_paths(n).len() as u64, dyck_count_oracle(n), "n = {n}");
        }
    }

    #[test]
    fn path_validation() {
        assert!(DyckPath::new(3, vec![(1, 2), (1, 3), (2, 3)]).is_ok());
        assert!(DyckPath::new(3, vec![(1, 3)]).is_err());
        assert!(DyckPath::new(3, vec![(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn bounds_and_sums() {
        let lam = w(3, &[1, 1]);
        let long = DyckPath::new(3, vec![(1, 2), (1, 3), (2, 3)]).unwrap();
        let short = DyckPath::new(3, vec![(1, 2)]).unwrap();
        assert_eq!(path_bound(&DominantWeight::zero(3), &long), 0);
        assert_eq!(path_bound(&lam, &long), 2);
        assert_eq!(path_bound(&lam, &short), 1);
        let t = pattern(3, &[((1, 3), 2)]);
        assert_eq!(path_sum(&TrianglePattern::zero(3), &long), 0);
        assert_eq!(path_sum(&t, &long), 2);
        assert_eq!(path_sum(&t, &short), 0);
    }

    #[test]
    fn pattern_membership() {
        let lam = w(3, &[1, 1]);
        assert!(is_fflv_pattern(&TrianglePattern::zero(3), &lam));
        assert!(is_fflv_pattern(&pattern(3, &[((1, 3), 2)]), &lam));
        assert!(!is_fflv_pattern(&pattern(3, &[((1, 2), 2)]), &lam));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_patterns(&DominantWeight::zero(4)), vec![TrianglePattern::zero(4)]);
        assert_eq!(enumerate_patterns(&w(3, &[1, 1])).len(), 8);
        assert_eq!(enumerate_patterns(&w(4, &[0, 1, 0])).len(), 6);
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_dim(&DominantWeight::zero(5)), BigUint::from(1u32));
        assert_eq!(weyl_dim(&w(3, &[1, 1])), BigUint::from(8u32));
        assert_eq!(weyl_dim(&w(4, &[1, 1, 1])), BigUint::from(64u32));
        assert_eq!(weyl_dim(&w(4, &[0, 2, 0])), BigUint::from(20u32));
    }

    #[test]
    fn minkowski_examples() {
        assert!(minkowski_check(&DominantWeight::zero(3), &DominantWeight::zero(3)).unwrap());
        assert!(minkowski_check(&w(3, &[1, 0]), &w(3, &[0, 1])).unwrap());
        assert!(minkowski_check(&w(4, &[1, 0, 1]), &w(4, &[0, 1, 0])).unwrap());
        assert!(minkowski_check(&w(3, &[1, 0]), &w(4, &[0, 1, 0])).is_err());
    }

    #[test]
    fn fundamental_patterns_are_antichains() {
        for n in 2..=6 {
            for k in 1..n {
                for t in enumerate_patterns(&DominantWeight::fundamental(n, k)) {
                    let supp = t.support();
                    for &(i, j) in &supp {
                        assert_eq!(t.get(i, j), 1);
                        assert!(i <= k && j > k);
                    }
                    for a in &supp {
                        for b in &supp {
                            if a != b {
                                assert!(!(a.0 <= b.0 && a.1 <= b.1), "{a:?} <= {b:?}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weights_up_to_total() {
        let all = DominantWeight::all_up_to(4, 2);
        // 1 + 3 + 6
        assert_eq!(all.len(), 10);
        assert!(all[0].is_zero());
        assert_eq!(w(4, &[2, 0, 1]).column_heights(), vec![3, 1, 1]);
    }
}
