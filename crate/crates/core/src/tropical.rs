//! The map `h` from weight systems to Plücker gradings, its image cone, and
//! bounded certificates for tropical membership.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::degrees::{degree_unchecked, GradingVector, PlueckerIndex};
use crate::error::{Error, Result};
use crate::ideals::{initial_part, GradedPolynomial, PlueckerIdeal, PlueckerMonomial};
use crate::linalg::{rank, SparseRow};
use crate::poly::{rat, Monomial, Rational};
use crate::triangle::pairs;
use crate::weights::WeightSystem;

/// A point of `Q^{2^n - 2}` with one coordinate per proper nonempty subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalPoint {
    n: usize,
    s: BTreeMap<PlueckerIndex, Rational>,
}

impl TropicalPoint {
    pub fn zero(n: usize) -> Self {
        TropicalPoint { n, s: PlueckerIndex::all_proper(n).into_iter().map(|i| (i, Rational::zero())).collect() }
    }

    /// Requires a value for every proper nonempty subset and nothing else.
    pub fn from_values(n: usize, s: BTreeMap<PlueckerIndex, Rational>) -> Result<Self> {
        let expected = PlueckerIndex::all_proper(n);
        for idx in &expected {
            if !s.contains_key(idx) {
                return Err(Error::MissingIndex(idx.key()));
            }
        }
        if let Some(extra) = s.keys().find(|k| k.n() != n || k.is_empty() || k.len() >= n) {
            return Err(Error::InvalidIndex(extra.key()));
        }
        Ok(TropicalPoint { n, s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, index: &PlueckerIndex) -> &Rational {
        &self.s[index]
    }

    pub fn set(&mut self, index: &PlueckerIndex, v: Rational) {
        self.s.insert(index.clone(), v);
    }

    pub fn values(&self) -> &BTreeMap<PlueckerIndex, Rational> {
        &self.s
    }

    /// The grading this point induces on the variables of sizes `d`.
    pub fn grading(&self, d: &[usize]) -> Result<GradingVector> {
        GradingVector::from_values(self.n, d, &self.s)
    }

    fn at(&self, elems: &[usize]) -> &Rational {
        &self.s[&PlueckerIndex::new(self.n, elems).expect("valid index")]
    }
}

/// `h(A)` for an arbitrary integer triangle; `h` is linear.
pub fn h_linear(a: &WeightSystem) -> TropicalPoint {
    let n = a.n();
    TropicalPoint {
        n,
        s: PlueckerIndex::all_proper(n).into_iter().map(|i| {
            let v = degree_unchecked(a, &i);
            (i, rat(v))
        }).collect(),
    }
}

/// `h(A)` for a cone point.
pub fn map_h(a: &WeightSystem) -> Result<TropicalPoint> {
    a.require_cone()?;
    Ok(h_linear(a))
}

/// Subtracts `s_{1..k}` from every size-`k` coordinate.
pub fn normalize(s: &TropicalPoint) -> TropicalPoint {
    let shift: Vec<Rational> = (0..s.n).map(|k| if k == 0 { Rational::zero() } else { s.at(&(1..=k).collect::<Vec<_>>()).clone() }).collect();
    TropicalPoint { n: s.n, s: s.s.iter().map(|(i, v)| (i.clone(), v - &shift[i.len()])).collect() }
}

/// `{1..i-1} ∪ {i+1..k} ∪ {j}`, whose coordinate equals `a_{i,j}` on the image of `h`.
pub fn root_index(n: usize, i: usize, k: usize, j: usize) -> PlueckerIndex {
    let elems: Vec<usize> = (1..i).chain(i + 1..=k).chain(std::iter::once(j)).collect();
    PlueckerIndex::new(n, &elems).expect("valid index")
}

/// A failed defining condition of the cone `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `s_{1..k} != 0`.
    Initial { k: usize },
    /// `s` differs on `root_index(i,k,j)` and `root_index(i,l,j)`.
    RootConstancy { i: usize, j: usize, k: usize, l: usize },
    /// `s_I` is not the sum over its complement pairs.
    Additivity { index: PlueckerIndex },
    /// The triangle inequality at `i`.
    Triangle { i: usize },
    /// The square inequality at `(i, j)`.
    Square { i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Initial { k } => write!(f, "[i] k={k}"),
            Violation::RootConstancy { i, j, k, l } => write!(f, "[ii] i={i} j={j} k={k} l={l}"),
            Violation::Additivity { index } => write!(f, "[iii] {index}"),
            Violation::Triangle { i } => write!(f, "[iv] i={i}"),
            Violation::Square { i, j } => write!(f, "[v] i={i} j={j}"),
        }
    }
}

/// Outcome of [`cone_c_membership`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeReport {
    /// Whether the normalized point lies in `C`.
    pub member: bool,
    /// Whether the input already satisfied `s_{1..k} = 0`.
    pub was_normalized: bool,
    /// Conditions failed by the normalized point, in a fixed order.
    pub violations: Vec<Violation>,
}

fn linear_violations(s: &TropicalPoint) -> Vec<Violation> {
    let n = s.n;
    let mut out = Vec::new();
    for k in 1..n {
        if !s.at(&(1..=k).collect::<Vec<_>>()).is_zero() {
            out.push(Violation::Initial { k });
        }
    }
    for (i, j) in pairs(n) {
        for k in i..j {
            for l in k + 1..j {
                if s.get(&root_index(n, i, k, j)) != s.get(&root_index(n, i, l, j)) {
                    out.push(Violation::RootConstancy { i, j, k, l });
                }
            }
        }
    }
    for index in PlueckerIndex::all_proper(n) {
        let sum: Rational = index.complement_pairs().iter().map(|&(p, q)| s.get(&root_index(n, p, p, q)).clone()).sum();
        if *s.get(&index) != sum {
            out.push(Violation::Additivity { index });
        }
    }
    out
}

fn inequality_violations(s: &TropicalPoint) -> Vec<Violation> {
    let n = s.n;
    let r = |i: usize, j: usize| s.get(&root_index(n, i, i, j)).clone();
    let mut out = Vec::new();
    for i in 1..=n.saturating_sub(2) {
        if r(i, i + 1) + r(i + 1, i + 2) < r(i, i + 2) {
            out.push(Violation::Triangle { i });
        }
    }
    for i in 1..n {
        for j in i + 2..n {
            if r(i, j) + r(i + 1, j + 1) < r(i, j + 1) + r(i + 1, j) {
                out.push(Violation::Square { i, j });
            }
        }
    }
    out
}

/// Evaluates the defining conditions of `C` on the normalized point.
pub fn cone_c_membership(s: &TropicalPoint) -> ConeReport {
    let was_normalized = (1..s.n).all(|k| s.at(&(1..=k).collect::<Vec<_>>()).is_zero());
    let normalized = normalize(s);
    let mut violations = linear_violations(&normalized);
    violations.extend(inequality_violations(&normalized));
    ConeReport { member: violations.is_empty(), was_normalized, violations }
}

/// Outcome of [`in_trop_necessary_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropCheck {
    /// No monomial was found in any checked component.
    pub passed: bool,
    pub degree_bound: u32,
    /// Multidegrees examined, in order, up to and including the first failure.
    pub checked: Vec<Vec<u32>>,
    /// The component and monomial that ended the search.
    pub monomial: Option<(Vec<u32>, PlueckerMonomial)>,
}

/// Searches the initial ideal of the Plücker ideal of sizes `d` under `s` for
/// monomials in all multidegrees up to `degree_bound`. Passing is necessary,
/// not sufficient, for tropical membership.
pub fn in_trop_necessary_check(s: &TropicalPoint, d: &[usize], degree_bound: u32) -> Result<TropCheck> {
    let ideal = PlueckerIdeal::new(s.n, d)?;
    trop_check_with(&ideal, s, degree_bound)
}

/// As [`in_trop_necessary_check`] with a prepared ideal, so components are
/// shared across points.
pub fn trop_check_with(ideal: &PlueckerIdeal, s: &TropicalPoint, degree_bound: u32) -> Result<TropCheck> {
    let g = s.grading(ideal.ring().d())?;
    let mut checked = Vec::new();
    for mu in ideal.ring().multidegrees_up_to(degree_bound) {
        checked.push(mu.clone());
        if let Some(m) = ideal.initial_component(&mu, &g)?.contains_monomial() {
            return Ok(TropCheck { passed: false, degree_bound, checked, monomial: Some((mu, m)) });
        }
    }
    Ok(TropCheck { passed: true, degree_bound, checked, monomial: None })
}

fn prefix_with(n: usize, prefix_end: usize, extra: &[usize]) -> PlueckerIndex {
    let elems: Vec<usize> = (1..=prefix_end).chain(extra.iter().copied()).collect();
    PlueckerIndex::new(n, &elems).expect("valid index")
}

fn binomial_term(x: PlueckerIndex, y: PlueckerIndex, c: i64) -> (PlueckerMonomial, Rational) {
    (Monomial::from_vars(vec![x, y]), rat(c))
}

/// The Plücker relation certifying a failed triangle inequality at `i`.
pub fn triangle_relation(n: usize, i: usize) -> GradedPolynomial {
    GradedPolynomial::from_terms([
        binomial_term(prefix_with(n, i, &[i + 2]), prefix_with(n, i - 1, &[i + 1]), 1),
        binomial_term(prefix_with(n, i, &[i + 1]), prefix_with(n, i - 1, &[i + 2]), -1),
        binomial_term(prefix_with(n, i - 1, &[i + 1, i + 2]), prefix_with(n, i, &[]), -1),
    ])
}

/// The Plücker relation certifying a failed square inequality at `(i, j)`.
pub fn square_relation(n: usize, i: usize, j: usize) -> GradedPolynomial {
    GradedPolynomial::from_terms([
        binomial_term(prefix_with(n, i - 1, &[i + 1, j]), prefix_with(n, i, &[j + 1]), 1),
        binomial_term(prefix_with(n, i - 1, &[i + 1, j + 1]), prefix_with(n, i, &[j]), -1),
        binomial_term(prefix_with(n, i - 1, &[j, j + 1]), prefix_with(n, i, &[i + 1]), 1),
    ])
}

/// A relation whose `s`-initial part is a single monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub violation: Violation,
    pub relation: GradedPolynomial,
    pub initial: GradedPolynomial,
}

/// For a point satisfying the linear conditions, a relation certifying the
/// first failed inequality, or `None` when `s` lies in `C`.
pub fn maximality_witness(s: &TropicalPoint) -> Result<Option<Witness>> {
    let normalized = normalize(s);
    let linear = linear_violations(&normalized);
    if let Some(v) = linear.first() {
        return Err(Error::Precondition(format!("point violates the linear condition {v}")));
    }
    let n = s.n;
    let Some(violation) = inequality_violations(&normalized).into_iter().next() else {
        return Ok(None);
    };
    let relation = match violation {
        Violation::Triangle { i } => triangle_relation(n, i),
        Violation::Square { i, j } => square_relation(n, i, j),
        _ => unreachable!("only inequalities remain"),
    };
    let sizes: Vec<usize> = {
        let mut v: Vec<usize> = relation.monomials().flat_map(|m| m.vars().iter().map(|x| x.len())).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let initial = initial_part(&relation, &s.grading(&sizes)?)?;
    Ok(Some(Witness { violation, relation, initial }))
}

/// Rank of `h` computed from the images of the unit triangles.
pub fn h_rank(n: usize) -> usize {
    let indices = PlueckerIndex::all_proper(n);
    let rows: Vec<SparseRow> = pairs(n)
        .map(|(i, j)| {
            let mut unit = WeightSystem::zero(n);
            unit.set(i, j, 1);
            let image = h_linear(&unit);
            indices
                .iter()
                .enumerate()
                .filter(|(_, idx)| !image.get(idx).is_zero())
                .map(|(c, idx)| (c, image.get(idx).clone()))
                .collect()
        })
        .collect();
    rank(indices.len(), &rows)
}

impl fmt::Display for TropicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, (i, v)) in self.s.iter().enumerate() {
            if t > 0 {
                write!(f, " ")?;
            }
            write!(f, "s_{{{}}}={}", i.key(), crate::poly::format_rational(v))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::PlueckerRing;
    use crate::weights::canonical_weight_systems;

    fn x(n: usize, e: &[usize]) -> PlueckerIndex {
        PlueckerIndex::new(n, e).unwrap()
    }

    #[test]
    fn abelian_image() {
        let s = map_h(&WeightSystem::constant(3, 1)).unwrap();
        let keys = [&[1][..], &[2], &[3], &[1, 2], &[1, 3], &[2, 3]];
        let vals: Vec<Rational> = keys.iter().map(|k| s.get(&x(3, k)).clone()).collect();
        assert_eq!(vals, [0, 1, 1, 0, 1, 1].map(rat).to_vec());
        assert!(map_h(&WeightSystem::from_fn(3, |i, j| if (i, j) == (1, 3) { 5 } else { 0 })).is_err());
    }

    #[test]
    fn root_index_tables() {
        assert_eq!(root_index(4, 1, 1, 3), x(4, &[3]));
        assert_eq!(root_index(4, 1, 2, 3), x(4, &[2, 3]));
        assert_eq!(root_index(4, 2, 3, 4), x(4, &[1, 3, 4]));
        assert_eq!(root_index(4, 2, 2, 4), x(4, &[1, 4]));
        assert_eq!(root_index(3, 1, 2, 3), x(3, &[2, 3]));
    }

    #[test]
    fn normalize_is_idempotent_and_shift_invariant() {
        let s = map_h(&WeightSystem::toric(4)).unwrap();
        let mut shifted = s.clone();
        for idx in PlueckerIndex::all_proper(4) {
            let v = shifted.get(&idx) + Rational::new((idx.len() as i64 * 7).into(), 3.into());
            shifted.set(&idx, v);
        }
        assert_eq!(normalize(&shifted), s);
        assert_eq!(normalize(&normalize(&shifted)), normalize(&shifted));
        assert!(!cone_c_membership(&shifted).was_normalized);
        assert!(cone_c_membership(&shifted).member);
    }

    #[test]
    fn canonical_images_are_members() {
        for n in 2..=5 {
            for (_, a) in canonical_weight_systems(n) {
                let r = cone_c_membership(&map_h(&a).unwrap());
                assert!(r.member, "{a}: {:?}", r.violations);
            }
        }
        assert!(cone_c_membership(&TropicalPoint::zero(4)).member);
    }

    #[test]
    fn triangle_violation_witness() {
        // s_2 + s_13 < s_3 with the linear conditions intact
        let a = WeightSystem::from_fn(3, |i, j| if (i, j) == (1, 3) { 1 } else { 0 });
        let s = h_linear(&a);
        let r = cone_c_membership(&s);
        assert_eq!(r.violations, vec![Violation::Triangle { i: 1 }]);
        let w = maximality_witness(&s).unwrap().unwrap();
        let expected = GradedPolynomial::from_monomial(Monomial::from_vars(vec![x(3, &[2]), x(3, &[1, 3])]), rat(1));
        assert_eq!(w.initial, expected);
        assert!(!in_trop_necessary_check(&s, &[1, 2], 2).unwrap().passed);
    }

    #[test]
    fn witnesses_are_relations() {
        for n in 3..=5 {
            let d: Vec<usize> = (1..n).collect();
            let ring = PlueckerRing::full_flag(n);
            let ideal = PlueckerIdeal::new(n, &d).unwrap();
            let mut relations = Vec::new();
            for i in 1..=n - 2 {
                relations.push(triangle_relation(n, i));
            }
            for i in 1..n {
                for j in i + 2..n {
                    relations.push(square_relation(n, i, j));
                }
            }
            for rel in relations {
                let mu = ring.homogeneous_degree(&rel).unwrap().unwrap();
                assert!(ideal.component(&mu).unwrap().contains(&rel).unwrap(), "{rel}");
            }
        }
    }

    #[test]
    fn members_have_no_witness() {
        assert!(maximality_witness(&map_h(&WeightSystem::toric(4)).unwrap()).unwrap().is_none());
        let mut bad = TropicalPoint::zero(3);
        bad.set(&x(3, &[2, 3]), rat(1));
        assert!(maximality_witness(&bad).is_err());
    }

    #[test]
    fn rank_of_h() {
        for n in 2..=6 {
            assert_eq!(h_rank(n), n * (n - 1) / 2);
        }
    }
}
