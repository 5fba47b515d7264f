//! Weight systems `A = (a_{i,j})` and the cone `K` they live in.
//!
//! `K` is cut out by
//!
//! * (a) `a_{i,i+1} + a_{i+1,i+2} >= a_{i,i+2}` for `1 <= i <= n-2`,
//! * (b) `a_{i,j} + a_{i+1,j+1} >= a_{i,j+1} + a_{i+1,j}` for `1 <= i < j-1 <= n-2`.
//!
//! Faces of `K` are represented by the set of inequalities that are tight at
//! a concrete point ([`FaceSignature`]).

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::triangle::{pair_count, pair_index, pairs};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    n: usize,
    a: Vec<i64>,
}

impl WeightSystem {
    pub fn from_fn<F: FnMut(usize, usize) -> i64>(n: usize, mut f: F) -> Self {
        assert!(n >= 2, "weight systems need n >= 2");
        WeightSystem { n, a: pairs(n).map(|(i, j)| f(i, j)).collect() }
    }

    /// Builds from entries in lexicographic pair order.
    pub fn from_entries(n: usize, a: Vec<i64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::ShapeMismatch(format!("n = {n} < 2")));
        }
        if a.len() != pair_count(n) {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries for n = {n}, got {}",
                pair_count(n),
                a.len()
            )));
        }
        Ok(WeightSystem { n, a })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0)
    }

    pub fn constant(n: usize, c: i64) -> Self {
        Self::from_fn(n, |_, _| c)
    }

    /// `a_{i,j} = (j - i + 1)(n - j)`, an interior point of `K`.
    pub fn toric(n: usize) -> Self {
        Self::from_fn(n, |i, j| ((j - i + 1) * (n - j)) as i64)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[pair_index(self.n, i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        let idx = pair_index(self.n, i, j);
        self.a[idx] = v;
    }

    /// Entries in lexicographic pair order.
    pub fn entries(&self) -> &[i64] {
        &self.a
    }

    fn slack_a(&self, i: usize) -> i64 {
        self.get(i, i + 1) + self.get(i + 1, i + 2) - self.get(i, i + 2)
    }

    fn slack_b(&self, i: usize, j: usize) -> i64 {
        self.get(i, j) + self.get(i + 1, j + 1) - self.get(i, j + 1) - self.get(i + 1, j)
    }

    /// Indices `i` of the type (a) inequalities.
    pub fn a_positions(n: usize) -> impl Iterator<Item = usize> {
        1..=n.saturating_sub(2)
    }

    /// Pairs `(i, j)` of the type (b) inequalities.
    pub fn b_positions(n: usize) -> impl Iterator<Item = (usize, usize)> {
        (1..n).flat_map(move |i| (i + 2..n).map(move |j| (i, j)))
    }

    pub fn check_cone_membership(&self) -> bool {
        Self::a_positions(self.n).all(|i| self.slack_a(i) >= 0)
            && Self::b_positions(self.n).all(|(i, j)| self.slack_b(i, j) >= 0)
    }

    /// The consequences (A) `a_{i,j} + a_{j,k} >= a_{i,k}` and
    /// (B) `a_{i,j} + a_{k,l} >= a_{i,l} + a_{k,j}` for `i < k < j < l`.
    pub fn derived_inequalities_hold(&self) -> bool {
        let n = self.n;
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    if self.get(i, j) + self.get(j, k) < self.get(i, k) {
                        return false;
                    }
                }
            }
        }
        for i in 1..=n {
            for k in i + 1..=n {
                for j in k + 1..=n {
                    for l in j + 1..=n {
                        if self.get(i, j) + self.get(k, l) < self.get(i, l) + self.get(k, j) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub(crate) fn require_cone(&self) -> Result<()> {
        if self.check_cone_membership() {
            Ok(())
        } else {
            Err(Error::NotInCone(self.to_string()))
        }
    }

    pub fn face_signature(&self) -> Result<FaceSignature> {
        self.require_cone()?;
        Ok(FaceSignature {
            n: self.n,
            tight_a: Self::a_positions(self.n).filter(|&i| self.slack_a(i) == 0).collect(),
            tight_b: Self::b_positions(self.n).filter(|&(i, j)| self.slack_b(i, j) == 0).collect(),
        })
    }

    pub fn is_interior(&self) -> Result<bool> {
        Ok(self.face_signature()?.is_interior())
    }

    /// Uniformly random integer triangle with entries in `[lo, hi]`.
    pub fn random<R: Rng>(n: usize, lo: i64, hi: i64, rng: &mut R) -> Self {
        Self::from_fn(n, |_, _| rng.gen_range(lo..=hi))
    }

    /// Rejection-samples a random point of `K` with entries in `[lo, hi]`.
    pub fn random_in_cone<R: Rng>(n: usize, lo: i64, hi: i64, rng: &mut R) -> Self {
        loop {
            let w = Self::random(n, lo, hi, rng);
            if w.check_cone_membership() {
                return w;
            }
        }
    }

    /// Parses the text triangle: line `r` holds `a_{i,i+r}` for `i = 1..n-r`.
    pub fn parse_triangle(text: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        let first = rows.first().ok_or_else(|| Error::Parse("empty triangle".into()))?;
        let n = first.len() + 1;
        if rows.len() != n - 1 || rows.iter().enumerate().any(|(r, row)| row.len() != n - 1 - r) {
            return Err(Error::Parse("rows do not form a triangle".into()));
        }
        Ok(Self::from_fn(n, |i, j| rows[j - i - 1][i - 1]))
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..self.n {
            let row: Vec<String> = (1..=self.n - r).map(|i| self.get(i, i + r).to_string()).collect();
            writeln!(f, "{}{}", " ".repeat(r - 1), row.join(" "))?;
        }
        Ok(())
    }
}

/// The inequalities that hold with equality at a point of `K`; equivalently
/// the minimal face containing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FaceSignature {
    pub n: usize,
    pub tight_a: BTreeSet<usize>,
    pub tight_b: BTreeSet<(usize, usize)>,
}

impl FaceSignature {
    pub fn is_interior(&self) -> bool {
        self.tight_a.is_empty() && self.tight_b.is_empty()
    }

    /// Whether the face of `self` contains the face of `inner`, i.e. every
    /// inequality tight on `self` is also tight on `inner`.
    pub fn face_contains(&self, inner: &FaceSignature) -> Result<bool> {
        if self.n != inner.n {
            return Err(Error::ShapeMismatch(format!("signatures for n = {} and n = {}", self.n, inner.n)));
        }
        Ok(self.tight_a.is_subset(&inner.tight_a) && self.tight_b.is_subset(&inner.tight_b))
    }
}

/// The named representatives used throughout: classical (zero), abelian
/// (all ones), toric, and one point in each of the `2^{n-2}` faces where
/// every (b) is tight, labelled by its tight (a) set.
pub fn canonical_weight_systems(n: usize) -> Vec<(String, WeightSystem)> {
    let mut out = vec![
        ("classical".to_string(), WeightSystem::zero(n)),
        ("abelian".to_string(), WeightSystem::constant(n, 1)),
        ("toric".to_string(), WeightSystem::toric(n)),
    ];
    let m = n.saturating_sub(2);
    for mask in 0u64..(1u64 << m) {
        let tight: BTreeSet<usize> = (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let label = format!(
            "pbw-locus[{}]",
            tight.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        );
        out.push((label, pbw_locus_representative(n, &tight)));
    }
    out
}

/// A point with every (b) tight and exactly the (a) inequalities in `tight`
/// tight. Built from the superdiagonal and the defects of (a), then extended
/// by the (b) equalities.
pub fn pbw_locus_representative(n: usize, tight: &BTreeSet<usize>) -> WeightSystem {
    let all_b: BTreeSet<(usize, usize)> = WeightSystem::b_positions(n).collect();
    for scale in 1..=(n * n).max(1) as i64 {
        let w = locus_candidate(n, tight, scale);
        if let Ok(sig) = w.face_signature() {
            if sig.tight_a == *tight && sig.tight_b == all_b {
                return w;
            }
        }
    }
    unreachable!("no representative found for tight set {tight:?} at n = {n}")
}

fn locus_candidate(n: usize, tight: &BTreeSet<usize>, scale: i64) -> WeightSystem {
    let mut w = WeightSystem::zero(n);
    for i in 1..n {
        w.set(i, i + 1, scale);
    }
    for i in 1..=n.saturating_sub(2) {
        let defect = if tight.contains(&i) { 0 } else { scale };
        w.set(i, i + 2, 2 * scale - defect);
    }
    for len in 3..n {
        for i in 1..=n - len {
            let j = i + len;
            let v = w.get(i, j - 1) + w.get(i + 1, j) - w.get(i + 1, j - 1);
            w.set(i, j, v);
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_of<T: Ord + Clone>(v: &[T]) -> BTreeSet<T> {
        v.iter().cloned().collect()
    }

    #[test]
    fn membership_examples() {
        assert!(WeightSystem::zero(4).check_cone_membership());
        assert!(WeightSystem::constant(4, 1).check_cone_membership());
        let mut w = WeightSystem::zero(4);
        w.set(1, 3, 1);
        assert!(!w.check_cone_membership());
    }

    #[test]
    fn derived_examples() {
        assert!(WeightSystem::constant(4, 1).derived_inequalities_hold());
        let w5 = WeightSystem::from_fn(5, |i, j| ((j - i + 1) * (5 - j)) as i64);
        assert!(w5.derived_inequalities_hold());
        let mut w = WeightSystem::zero(4);
        w.set(1, 3, 5);
        assert!(!w.derived_inequalities_hold());
    }

    #[test]
    fn signature_examples() {
        let z = WeightSystem::zero(4).face_signature().unwrap();
        assert_eq!(z.tight_a, set_of(&[1, 2]));
        assert_eq!(z.tight_b, set_of(&[(1, 3)]));
        let one = WeightSystem::constant(4, 1).face_signature().unwrap();
        assert!(one.tight_a.is_empty());
        assert_eq!(one.tight_b, set_of(&[(1, 3)]));
        let t = WeightSystem::toric(4).face_signature().unwrap();
        assert!(t.is_interior());

        let mut bad = WeightSystem::zero(4);
        bad.set(1, 3, 1);
        assert!(matches!(bad.face_signature(), Err(Error::NotInCone(_))));
        assert!(bad.is_interior().is_err());
    }

    #[test]
    fn interior_examples() {
        assert!(WeightSystem::toric(4).is_interior().unwrap());
        assert!(!WeightSystem::zero(4).is_interior().unwrap());
        for n in 4..7 {
            assert!(!WeightSystem::constant(n, 1).is_interior().unwrap());
        }
    }

    #[test]
    fn containment_examples() {
        let zero = WeightSystem::zero(4).face_signature().unwrap();
        let ones = WeightSystem::constant(4, 1).face_signature().unwrap();
        let toric = WeightSystem::toric(4).face_signature().unwrap();
        assert!(ones.face_contains(&zero).unwrap());
        assert!(toric.face_contains(&zero).unwrap());
        assert!(toric.face_contains(&ones).unwrap());
        assert!(!zero.face_contains(&toric).unwrap());
        let zero3 = WeightSystem::zero(3).face_signature().unwrap();
        let toric3 = WeightSystem::toric(3).face_signature().unwrap();
        assert!(!zero3.face_contains(&toric3).unwrap());
        assert!(zero3.face_contains(&zero).is_err());
    }

    #[test]
    fn canonical_systems_at_small_n() {
        let c2 = canonical_weight_systems(2);
        assert_eq!(c2.len(), 4);
        assert_eq!(c2[0].1.get(1, 2), 0);
        assert_eq!(c2[1].1.get(1, 2), 1);
        assert_eq!(c2[2].1.get(1, 2), 0);

        for n in 2..=7 {
            let all = canonical_weight_systems(n);
            assert_eq!(all.len(), 3 + (1 << (n - 2)));
            let mut seen = BTreeSet::new();
            for (label, w) in &all {
                assert!(w.check_cone_membership(), "{label} not in K");
                if label.starts_with("pbw-locus") {
                    let sig = w.face_signature().unwrap();
                    assert_eq!(sig.tight_b.len(), WeightSystem::b_positions(n).count(), "{label}");
                    assert!(seen.insert(sig.tight_a.clone()), "{label} repeats a tight set");
                }
            }
            assert_eq!(seen.len(), 1 << (n - 2));
        }
    }

    #[test]
    fn locus_extremes_are_classical_and_abelian_faces() {
        let all: BTreeSet<usize> = (1..=3).collect();
        let w = pbw_locus_representative(5, &all);
        assert_eq!(w.face_signature().unwrap(), WeightSystem::zero(5).face_signature().unwrap());
        let w = pbw_locus_representative(5, &BTreeSet::new());
        assert_eq!(w, WeightSystem::constant(5, 1));
    }

    #[test]
    fn triangle_text_round_trip() {
        let w = WeightSystem::toric(5);
        let text = w.to_string();
        assert_eq!(WeightSystem::parse_triangle(&text).unwrap(), w);
        assert!(WeightSystem::parse_triangle("1 2\n3 4\n").is_err());
    }
}
