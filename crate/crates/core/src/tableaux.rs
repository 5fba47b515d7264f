//! PBW tableaux, PBW semistandard tableaux and the bijection with FFLV
//! patterns.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fflv::{is_fflv_pattern, DominantWeight, TrianglePattern};

/// A filling of the Young diagram of `shape`, stored column by column
/// (column `c` has height `shape.column_heights()[c]`, rows top to bottom).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PBWTableau {
    n: usize,
    shape: DominantWeight,
    columns: Vec<Vec<usize>>,
}

impl PBWTableau {
    /// Checks only the shape and that entries lie in `[1, n]`.
    pub fn new(shape: DominantWeight, columns: Vec<Vec<usize>>) -> Result<Self> {
        let n = shape.n();
        let heights = shape.column_heights();
        if heights.len() != columns.len() || heights.iter().zip(&columns).any(|(h, c)| *h != c.len()) {
            return Err(Error::ShapeMismatch(format!("columns do not match shape {shape}")));
        }
        if columns.iter().flatten().any(|&e| e < 1 || e > n) {
            return Err(Error::ShapeMismatch(format!("entries must lie in [1, {n}]")));
        }
        Ok(PBWTableau { n, shape, columns })
    }

    /// `Y_{i,j} = i`.
    pub fn identity(shape: &DominantWeight) -> Self {
        let columns = shape.column_heights().into_iter().map(|h| (1..=h).collect()).collect();
        PBWTableau { n: shape.n(), shape: shape.clone(), columns }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &DominantWeight {
        &self.shape
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Sorted content of each column.
    pub fn column_contents(&self) -> Vec<Vec<usize>> {
        self.columns
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.sort_unstable();
                s
            })
            .collect()
    }

    pub fn is_pbw_tableau(&self) -> bool {
        self.columns.iter().all(|c| is_pbw_column(c))
    }

    pub fn is_pbw_ssyt(&self) -> bool {
        self.is_pbw_tableau() && self.columns.windows(2).all(|w| columns_compatible(&w[0], &w[1]))
    }
}

/// Conditions (1)-(3) for one column of height `c.len()`.
pub fn is_pbw_column(c: &[usize]) -> bool {
    let h = c.len();
    let distinct = c.iter().collect::<BTreeSet<_>>().len() == h;
    let small_in_place = c.iter().enumerate().all(|(row, &e)| e > h || e == row + 1);
    let large: Vec<usize> = c.iter().copied().filter(|&e| e > h).collect();
    let large_decreasing = large.windows(2).all(|w| w[0] > w[1]);
    distinct && small_in_place && large_decreasing
}

/// Condition (4) between consecutive columns `left` and `right`.
pub fn columns_compatible(left: &[usize], right: &[usize]) -> bool {
    right.len() <= left.len()
        && right.iter().enumerate().all(|(i, &y)| left[i..].iter().any(|&x| x >= y))
}

/// The unique PBW column with the given content: entries `<= h` in their own
/// row, the rest filling the remaining rows in decreasing order.
pub fn pbw_column(content: &[usize]) -> Vec<usize> {
    let h = content.len();
    let mut col = vec![0; h];
    for &e in content.iter().filter(|&&e| e <= h) {
        col[e - 1] = e;
    }
    let mut large: Vec<usize> = content.iter().copied().filter(|&e| e > h).collect();
    large.sort_unstable_by(|a, b| b.cmp(a));
    let mut it = large.into_iter();
    for slot in col.iter_mut().filter(|s| **s == 0) {
        *slot = it.next().expect("content has distinct entries");
    }
    col
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=n {
            cur.push(e);
            rec(n, k, e + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

/// All PBW semistandard tableaux of shape `lambda`, in lexicographic order of
/// column contents.
pub fn enumerate_ssyt(lambda: &DominantWeight) -> Vec<PBWTableau> {
    let n = lambda.n();
    let heights = lambda.column_heights();
    let columns_by_height: Vec<Vec<Vec<usize>>> =
        (0..n).map(|h| if h == 0 { Vec::new() } else { subsets(n, h).iter().map(|s| pbw_column(s)).collect() }).collect();
    let mut out = Vec::new();
    let mut cur: Vec<Vec<usize>> = Vec::new();
    fn rec(
        heights: &[usize],
        by_height: &[Vec<Vec<usize>>],
        cur: &mut Vec<Vec<usize>>,
        lambda: &DominantWeight,
        out: &mut Vec<PBWTableau>,
    ) {
        let pos = cur.len();
        if pos == heights.len() {
            out.push(PBWTableau { n: lambda.n(), shape: lambda.clone(), columns: cur.clone() });
            return;
        }
        for col in &by_height[heights[pos]] {
            if pos > 0 && !columns_compatible(&cur[pos - 1], col) {
                continue;
            }
            cur.push(col.clone());
            rec(heights, by_height, cur, lambda, out);
            cur.pop();
        }
    }
    rec(&heights, &columns_by_height, &mut cur, lambda, &mut out);
    out
}

/// `x ⪯ y`: `|x| >= |y|` and the two-column tableau with contents `x`, `y`
/// is PBW semistandard.
pub fn order_preceq(n: usize, x: &[usize], y: &[usize]) -> Result<bool> {
    for s in [x, y] {
        let set: BTreeSet<usize> = s.iter().copied().collect();
        if set.is_empty() || set.len() >= n || set.len() != s.len() || set.iter().any(|&e| e < 1 || e > n) {
            return Err(Error::InvalidIndex(format!("{s:?} is not a nonempty proper subset of [1, {n}]")));
        }
    }
    if x.len() < y.len() {
        return Ok(false);
    }
    let mut xs = x.to_vec();
    xs.sort_unstable();
    let mut ys = y.to_vec();
    ys.sort_unstable();
    Ok(columns_compatible(&pbw_column(&xs), &pbw_column(&ys)))
}

/// Pattern of one PBW column: `T_{i,j} = 1` iff row `i` holds `j > i`.
pub fn column_pattern(n: usize, col: &[usize]) -> TrianglePattern {
    let mut t = TrianglePattern::zero(n);
    for (row, &e) in col.iter().enumerate() {
        if e > row + 1 {
            t.set(row + 1, e, 1);
        }
    }
    t
}

pub fn tau(y: &PBWTableau) -> Result<TrianglePattern> {
    if !y.is_pbw_tableau() {
        return Err(Error::Precondition("tau needs a PBW tableau".into()));
    }
    Ok(y.columns.iter().fold(TrianglePattern::zero(y.n), |acc, c| acc.add(&column_pattern(y.n, c))))
}

/// Inverse of [`tau`] on `Pi_lambda`: peels off, column by column, the
/// maximal cells of the residual support lying in rows `<= h` and columns
/// `> h`, where `h` is the tallest remaining column.
pub fn zeta(t: &TrianglePattern, lambda: &DominantWeight) -> Result<PBWTableau> {
    if t.n() != lambda.n() || !is_fflv_pattern(t, lambda) {
        return Err(Error::NotInPolytope);
    }
    let n = lambda.n();
    let mut residual = t.clone();
    let mut columns = Vec::new();
    for h in lambda.column_heights() {
        let support = residual.support();
        let maximal: Vec<(usize, usize)> = support
            .iter()
            .copied()
            .filter(|&(i, j)| {
                i <= h && j > h && !support.iter().any(|&(a, b)| (a, b) != (i, j) && i <= a && j <= b)
            })
            .collect();
        let mut col: Vec<usize> = (1..=h).collect();
        let mut piece = TrianglePattern::zero(n);
        for &(i, j) in &maximal {
            col[i - 1] = j;
            piece.set(i, j, 1);
        }
        residual = residual.checked_sub(&piece).ok_or(Error::NotInPolytope)?;
        columns.push(col);
    }
    if !residual.is_zero() {
        return Err(Error::NotInPolytope);
    }
    Ok(PBWTableau { n, shape: lambda.clone(), columns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fflv::enumerate_patterns;

    fn w(n: usize, c: &[u32]) -> DominantWeight {
        DominantWeight::new(n, c.to_vec()).unwrap()
    }

    fn tab(shape: DominantWeight, cols: &[&[usize]]) -> PBWTableau {
        PBWTableau::new(shape, cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn pbw_tableau_conditions() {
        let lam = w(3, &[1, 1]);
        assert!(PBWTableau::identity(&lam).is_pbw_tableau());
        assert!(tab(w(3, &[1, 0]), &[&[3]]).is_pbw_tableau());
        assert!(!tab(w(3, &[0, 1]), &[&[2, 1]]).is_pbw_tableau());
        // two large entries must decrease down the column
        assert!(is_pbw_column(&[4, 3]));
        assert!(!is_pbw_column(&[3, 4]));
        assert!(!is_pbw_column(&[3, 3]));
    }

    #[test]
    fn ssyt_condition() {
        let lam = w(3, &[1, 1]);
        assert!(PBWTableau::identity(&lam).is_pbw_ssyt());
        assert!(tab(lam.clone(), &[&[1, 3], &[3]]).is_pbw_ssyt());
        assert!(!tab(lam, &[&[1, 2], &[3]]).is_pbw_ssyt());
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(&DominantWeight::zero(3)).len(), 1);
        assert_eq!(enumerate_ssyt(&w(3, &[1, 0])).len(), 3);
        assert_eq!(enumerate_ssyt(&w(3, &[1, 1])).len(), 8);
        for y in enumerate_ssyt(&w(4, &[1, 1, 1])) {
            assert!(y.is_pbw_ssyt());
        }
    }

    #[test]
    fn order_examples() {
        assert!(order_preceq(3, &[1, 2], &[1]).unwrap());
        assert!(order_preceq(3, &[1, 3], &[3]).unwrap());
        assert!(!order_preceq(3, &[1, 2], &[3]).unwrap());
        assert!(!order_preceq(3, &[1], &[1, 2]).unwrap());
        assert!(order_preceq(3, &[1, 2, 3], &[1]).is_err());
    }

    #[test]
    fn order_agrees_with_ssyt() {
        let n = 4;
        let sets: Vec<Vec<usize>> = (1..n).flat_map(|k| subsets(n, k)).collect();
        for x in &sets {
            for y in &sets {
                if x.len() < y.len() {
                    continue;
                }
                let mut coeffs = vec![0u32; n - 1];
                coeffs[x.len() - 1] += 1;
                coeffs[y.len() - 1] += 1;
                let shape = DominantWeight::new(n, coeffs).unwrap();
                let t = PBWTableau::new(shape, vec![pbw_column(x), pbw_column(y)]).unwrap();
                assert_eq!(order_preceq(n, x, y).unwrap(), t.is_pbw_ssyt(), "{x:?} {y:?}");
            }
        }
    }

    #[test]
    fn tau_examples() {
        let lam = w(3, &[1, 1]);
        assert!(tau(&PBWTableau::identity(&lam)).unwrap().is_zero());
        let t = tau(&tab(w(3, &[0, 1]), &[&[1, 3]])).unwrap();
        assert_eq!((t.get(2, 3), t.total()), (1, 1));
        let t = tau(&tab(lam, &[&[1, 3], &[3]])).unwrap();
        assert_eq!((t.get(2, 3), t.get(1, 3), t.total()), (1, 1, 2));
    }

    #[test]
    fn zeta_examples() {
        let lam = w(3, &[1, 1]);
        assert_eq!(zeta(&TrianglePattern::zero(3), &lam).unwrap(), PBWTableau::identity(&lam));
        let mut t = TrianglePattern::zero(3);
        t.set(2, 3, 1);
        t.set(1, 3, 1);
        let y = zeta(&t, &lam).unwrap();
        assert_eq!(y.columns(), &[vec![1, 3], vec![3]]);
        let mut bad = TrianglePattern::zero(3);
        bad.set(1, 2, 2);
        assert_eq!(zeta(&bad, &lam), Err(Error::NotInPolytope));
    }

    #[test]
    fn round_trip_small() {
        for n in 2..=4 {
            for lam in DominantWeight::all_up_to(n, 2) {
                let pats = enumerate_patterns(&lam);
                for t in &pats {
                    let y = zeta(t, &lam).unwrap();
                    assert!(y.is_pbw_ssyt(), "zeta({t:?}) not semistandard");
                    assert_eq!(&tau(&y).unwrap(), t);
                }
                let ssyt = enumerate_ssyt(&lam);
                assert_eq!(ssyt.len(), pats.len(), "{lam}");
                for y in &ssyt {
                    assert_eq!(&zeta(&tau(y).unwrap(), &lam).unwrap(), y);
                }
            }
        }
    }
}
