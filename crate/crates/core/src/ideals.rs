//! Plücker ideals, their multigraded components and initial ideals.
//!
//! All computations happen one multidegree `mu` at a time: the component
//! `R_mu` has a finite monomial basis, and an ideal component is a subspace
//! of it kept in fully reduced row echelon form over the canonical monomial
//! order (lexicographic on sorted index tuples). Initial ideals are computed
//! by re-echelonizing with the columns sorted by ascending grade, so every
//! pivot is a lowest-grade monomial of its row.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::degrees::{validate_sizes, GradingVector, PlueckerIndex};
use crate::error::{Error, Result};
use crate::fflv::{weyl_dim, DominantWeight};
use crate::limits::check_dim;
use crate::linalg::{Echelon, Rref, SparseRow};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::tableaux::enumerate_ssyt;
use crate::weights::WeightSystem;

pub type PlueckerMonomial = Monomial<PlueckerIndex>;
pub type GradedPolynomial = Polynomial<PlueckerIndex>;

/// Sorts `seq` into a Plücker index; `None` when an entry repeats (the
/// coordinate vanishes), otherwise the index with the sign of the sorting
/// permutation.
pub fn normalize_index(n: usize, seq: &[usize]) -> Result<Option<(PlueckerIndex, i8)>> {
    if seq.iter().any(|&e| e < 1 || e > n) {
        return Err(Error::InvalidIndex(format!("{seq:?} has entries outside [1, {n}]")));
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    let inversions = (0..seq.len()).flat_map(|a| (a + 1..seq.len()).map(move |b| (a, b))).filter(|&(a, b)| seq[a] > seq[b]).count();
    let sign = if inversions % 2 == 0 { 1 } else { -1 };
    Ok(Some((PlueckerIndex::new(n, &sorted)?, sign)))
}

fn signed_product(n: usize, left: &[usize], right: &[usize]) -> Result<Option<(PlueckerMonomial, i8)>> {
    let (Some((a, sa)), Some((b, sb))) = (normalize_index(n, left)?, normalize_index(n, right)?) else {
        return Ok(None);
    };
    Ok(Some((Monomial::from_vars(vec![a, b]), sa * sb)))
}

fn subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..items.len() {
            cur.push(items[t]);
            rec(items, k, t + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The quadratic exchange relations
/// `X_i X_j - sum_r X_{i'} X_{r, j_{k+1..q}}` for every `p >= q` in `d`,
/// `1 <= k <= q` and increasing tuples `i`, `j`, where `r` runs over the
/// `k`-subsets of `i` and `i'` is `i` with `r_m` replaced by `j_m`.
///
/// Relations that vanish identically are dropped and the rest are
/// deduplicated up to scalar, keeping first-generation order.
pub fn plucker_relations(n: usize, d: &[usize]) -> Result<Vec<GradedPolynomial>> {
    validate_sizes(n, d)?;
    let mut seen: HashSet<GradedPolynomial> = HashSet::new();
    let mut out = Vec::new();
    for &p in d.iter().rev() {
        for &q in d.iter().filter(|&&q| q <= p) {
            for k in 1..=q {
                for i in PlueckerIndex::all_of_size(n, p) {
                    let i = i.elems();
                    for j in PlueckerIndex::all_of_size(n, q) {
                        let j = j.elems();
                        let mut rel = GradedPolynomial::zero();
                        if let Some((m, s)) = signed_product(n, &i, &j)? {
                            rel.add_term(m, Rational::from_integer(s.into()));
                        }
                        for r in subsets_of(&i, k) {
                            let i_prime: Vec<usize> = i
                                .iter()
                                .map(|&x| match r.iter().position(|&y| y == x) {
                                    Some(m) => j[m],
                                    None => x,
                                })
                                .collect();
                            let second: Vec<usize> = r.iter().copied().chain(j[k..].iter().copied()).collect();
                            if let Some((m, s)) = signed_product(n, &i_prime, &second)? {
                                rel.add_term(m, -Rational::from_integer(s.into()));
                            }
                        }
                        if rel.is_zero() {
                            continue;
                        }
                        let rel = rel.normalized();
                        if seen.insert(rel.clone()) {
                            out.push(rel);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `sum_I e_I s_I` for a monomial `prod X_I^{e_I}`.
pub fn grad_of(m: &PlueckerMonomial, g: &GradingVector) -> Result<Rational> {
    let mut total = Rational::zero();
    for v in m.vars() {
        total += g.get(v)?;
    }
    Ok(total)
}

/// Sum of the terms of `f` of minimal grade.
pub fn initial_part(f: &GradedPolynomial, g: &GradingVector) -> Result<GradedPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let graded: Vec<(Rational, &PlueckerMonomial, &Rational)> =
        f.terms().map(|(m, c)| Ok((grad_of(m, g)?, m, c))).collect::<Result<_>>()?;
    let min = graded.iter().map(|(gr, _, _)| gr).min().unwrap().clone();
    Ok(GradedPolynomial::from_terms(
        graded.into_iter().filter(|(gr, _, _)| *gr == min).map(|(_, m, c)| (m.clone(), c.clone())),
    ))
}

/// The ring `R_d` of Plücker variables of sizes `d`, graded by multidegree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlueckerRing {
    n: usize,
    d: Vec<usize>,
}

impl PlueckerRing {
    pub fn new(n: usize, d: &[usize]) -> Result<Self> {
        validate_sizes(n, d)?;
        Ok(PlueckerRing { n, d: d.to_vec() })
    }

    /// The complete flag, `d = (1, ..., n-1)`.
    pub fn full_flag(n: usize) -> Self {
        PlueckerRing { n, d: (1..n).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn variables(&self) -> Vec<PlueckerIndex> {
        self.d.iter().flat_map(|&k| PlueckerIndex::all_of_size(self.n, k)).collect()
    }

    fn check_mu(&self, mu: &[u32]) -> Result<()> {
        if mu.len() != self.d.len() {
            return Err(Error::ShapeMismatch(format!("multidegree {mu:?} has wrong length for d = {:?}", self.d)));
        }
        Ok(())
    }

    /// Per-size exponent totals of `m`.
    pub fn multidegree(&self, m: &PlueckerMonomial) -> Result<Vec<u32>> {
        let mut mu = vec![0u32; self.d.len()];
        for v in m.vars() {
            let pos = self
                .d
                .iter()
                .position(|&k| k == v.len())
                .ok_or_else(|| Error::InvalidIndex(format!("{} has size outside d", v.key())))?;
            mu[pos] += 1;
        }
        Ok(mu)
    }

    /// Multidegree of a polynomial, if all its terms share one.
    pub fn homogeneous_degree(&self, f: &GradedPolynomial) -> Result<Option<Vec<u32>>> {
        let mut deg: Option<Vec<u32>> = None;
        for m in f.monomials() {
            let md = self.multidegree(m)?;
            match &deg {
                None => deg = Some(md),
                Some(prev) if *prev != md => {
                    return Err(Error::Precondition("polynomial is not multihomogeneous".into()));
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// `mu` viewed as the dominant weight `sum_j mu_j omega_{d_j}`.
    pub fn weight_of(&self, mu: &[u32]) -> DominantWeight {
        let mut coeffs = vec![0u32; self.n - 1];
        for (pos, &k) in self.d.iter().enumerate() {
            coeffs[k - 1] = mu[pos];
        }
        DominantWeight::new(self.n, coeffs).expect("sizes validated")
    }

    /// Monomial basis of `R_mu` in canonical order.
    pub fn monomials(&self, mu: &[u32]) -> Result<Vec<PlueckerMonomial>> {
        self.check_mu(mu)?;
        let mut acc = vec![PlueckerMonomial::one()];
        for (pos, &k) in self.d.iter().enumerate() {
            let vars = PlueckerIndex::all_of_size(self.n, k);
            let parts = multisets(&vars, mu[pos] as usize);
            acc = acc.iter().flat_map(|a| parts.iter().map(move |b| a.mul(b))).collect();
        }
        acc.sort();
        Ok(acc)
    }

    /// Nonzero multidegrees of total degree at most `bound`.
    pub fn multidegrees_up_to(&self, bound: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for total in 1..=bound {
            let mut cur = vec![0u32; self.d.len()];
            fill_compositions(total, 0, &mut cur, &mut out);
        }
        out
    }

    /// Multidegrees of total degree exactly `total`.
    pub fn multidegrees_of_total(&self, total: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.d.len()];
        fill_compositions(total, 0, &mut cur, &mut out);
        out
    }

    /// Row-reduced basis of the span of `g * m` over generators `g` and
    /// monomials `m` of complementary multidegree.
    pub fn component_basis(&self, gens: &[GradedPolynomial], mu: &[u32]) -> Result<ComponentBasis> {
        let monomials = self.monomials(mu)?;
        check_dim("component dimension", monomials.len())?;
        let mut by_degree: BTreeMap<Vec<u32>, Vec<&GradedPolynomial>> = BTreeMap::new();
        for g in gens {
            if let Some(deg) = self.homogeneous_degree(g)? {
                by_degree.entry(deg).or_default().push(g);
            }
        }
        let mut cb = ComponentBasis::empty(self.clone(), mu.to_vec(), monomials);
        let mut ech = Echelon::new(cb.dim());
        for (nu, group) in by_degree {
            let Some(rest) = mu.iter().zip(&nu).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<u32>>>() else {
                continue;
            };
            // reduce the generators of degree nu to a basis before multiplying
            let local = self.component_of_span(&nu, group.iter().copied())?;
            let multipliers = self.monomials(&rest)?;
            for row in local.polynomials() {
                for m in &multipliers {
                    let prod = row.mul_monomial(m);
                    ech.insert(&cb.to_row(&prod)?);
                    if ech.is_full() {
                        break;
                    }
                }
            }
        }
        cb.rref = ech.into_rref();
        Ok(cb)
    }

    /// Row-reduced span of homogeneous polynomials of degree `mu`.
    pub fn component_of_span<'a, I: IntoIterator<Item = &'a GradedPolynomial>>(
        &self,
        mu: &[u32],
        polys: I,
    ) -> Result<ComponentBasis> {
        let monomials = self.monomials(mu)?;
        let mut cb = ComponentBasis::empty(self.clone(), mu.to_vec(), monomials);
        let mut ech = Echelon::new(cb.dim());
        for p in polys {
            ech.insert(&cb.to_row(p)?);
        }
        cb.rref = ech.into_rref();
        Ok(cb)
    }

    /// `in_g(I)_mu` for the ideal generated by `gens`.
    pub fn initial_component(&self, gens: &[GradedPolynomial], mu: &[u32], g: &GradingVector) -> Result<ComponentBasis> {
        self.component_basis(gens, mu)?.initial_span(g)
    }
}

fn multisets(vars: &[PlueckerIndex], size: usize) -> Vec<PlueckerMonomial> {
    fn rec(vars: &[PlueckerIndex], size: usize, start: usize, cur: &mut Vec<PlueckerIndex>, out: &mut Vec<PlueckerMonomial>) {
        if cur.len() == size {
            out.push(Monomial::from_vars(cur.clone()));
            return;
        }
        for t in start..vars.len() {
            cur.push(vars[t].clone());
            rec(vars, size, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, size, 0, &mut Vec::new(), &mut out);
    out
}

fn fill_compositions(rest: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    for v in (0..=rest).rev() {
        cur[pos] = v;
        fill_compositions(rest - v, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

/// A subspace of `R_mu` in fully reduced echelon form over the canonical
/// monomial order.
#[derive(Debug, Clone)]
pub struct ComponentBasis {
    ring: PlueckerRing,
    mu: Vec<u32>,
    monomials: Vec<PlueckerMonomial>,
    column: HashMap<PlueckerMonomial, usize>,
    rref: Rref,
}

impl PartialEq for ComponentBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.mu == other.mu && self.rref == other.rref
    }
}

impl ComponentBasis {
    fn empty(ring: PlueckerRing, mu: Vec<u32>, monomials: Vec<PlueckerMonomial>) -> Self {
        let column = monomials.iter().cloned().enumerate().map(|(c, m)| (m, c)).collect();
        let rref = Rref::from_rows(monomials.len(), std::iter::empty());
        ComponentBasis { ring, mu, monomials, column, rref }
    }

    pub fn ring(&self) -> &PlueckerRing {
        &self.ring
    }

    pub fn mu(&self) -> &[u32] {
        &self.mu
    }

    /// Monomial basis of `R_mu`, canonical order.
    pub fn monomials(&self) -> &[PlueckerMonomial] {
        &self.monomials
    }

    /// `dim R_mu`.
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn rank(&self) -> usize {
        self.rref.rank()
    }

    /// `dim R_mu - rank`, the dimension of the quotient component.
    pub fn codim(&self) -> usize {
        self.dim() - self.rank()
    }

    pub fn rref(&self) -> &Rref {
        &self.rref
    }

    pub fn to_row(&self, f: &GradedPolynomial) -> Result<SparseRow> {
        let mut row: SparseRow = f
            .terms()
            .map(|(m, c)| {
                self.column
                    .get(m)
                    .map(|&col| (col, c.clone()))
                    .ok_or_else(|| Error::Precondition(format!("monomial {m} is not of multidegree {:?}", self.mu)))
            })
            .collect::<Result<_>>()?;
        row.sort_by_key(|(c, _)| *c);
        Ok(row)
    }

    pub fn row_polynomial(&self, row: &[(usize, Rational)]) -> GradedPolynomial {
        GradedPolynomial::from_terms(row.iter().map(|(c, v)| (self.monomials[*c].clone(), v.clone())))
    }

    /// The basis rows as polynomials.
    pub fn polynomials(&self) -> Vec<GradedPolynomial> {
        self.rref.rows().iter().map(|r| self.row_polynomial(r)).collect()
    }

    pub fn contains(&self, f: &GradedPolynomial) -> Result<bool> {
        Ok(self.rref.contains(&self.to_row(f)?))
    }

    /// Some monomial lying in the span, if any. A unit vector lies in a fully
    /// reduced span exactly when it is itself a basis row.
    pub fn contains_monomial(&self) -> Option<PlueckerMonomial> {
        self.rref.rows().iter().find(|r| r.len() == 1).map(|r| self.monomials[r[0].0].clone())
    }

    fn with_rows(&self, rows: &[SparseRow]) -> ComponentBasis {
        let mut out = self.clone();
        out.rref = Rref::from_rows(self.dim(), rows);
        out
    }

    /// The span of the `g`-initial parts of all elements of this subspace.
    ///
    /// Columns are sorted by ascending grade and the rows are brought to fully
    /// reduced echelon form in that order. The initial part of each row
    /// contains its pivot, which no other row touches, so the initial parts
    /// are independent and, having the right count, span the initial space.
    pub fn initial_span(&self, g: &GradingVector) -> Result<ComponentBasis> {
        let grades: Vec<Rational> = self.monomials.iter().map(|m| grad_of(m, g)).collect::<Result<_>>()?;
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| grades[a].cmp(&grades[b]).then(a.cmp(&b)));
        let mut position = vec![0usize; self.dim()];
        for (p, &c) in order.iter().enumerate() {
            position[c] = p;
        }
        let mut ech = Echelon::new(self.dim());
        for r in self.rref.rows() {
            let mut permuted: SparseRow = r.iter().map(|(c, v)| (position[*c], v.clone())).collect();
            permuted.sort_by_key(|(c, _)| *c);
            ech.insert(&permuted);
        }
        let graded = ech.into_rref();
        let initial_rows: Vec<SparseRow> = graded
            .rows()
            .iter()
            .map(|r| {
                let lead = &grades[order[r[0].0]];
                let mut row: SparseRow =
                    r.iter().filter(|(p, _)| grades[order[*p]] == *lead).map(|(p, v)| (order[*p], v.clone())).collect();
                row.sort_by_key(|(c, _)| *c);
                row
            })
            .collect();
        Ok(self.with_rows(&initial_rows))
    }

    /// Whether the images of `X(Y)`, `Y` a PBW semistandard tableau of the
    /// weight of `mu`, form a basis of the quotient component.
    pub fn standard_monomials_form_basis(&self) -> Result<bool> {
        let weight = self.ring.weight_of(&self.mu);
        let tableaux = enumerate_ssyt(&weight);
        if tableaux.len() != self.codim() {
            return Ok(false);
        }
        let mut ech = self.rref.to_echelon();
        for y in &tableaux {
            let vars = y
                .column_contents()
                .iter()
                .map(|c| PlueckerIndex::new(self.ring.n, c))
                .collect::<Result<Vec<_>>>()?;
            let m = GradedPolynomial::from_monomial(Monomial::from_vars(vars), Rational::one());
            if !ech.insert(&self.to_row(&m)?) {
                return Ok(false);
            }
        }
        Ok(ech.is_full())
    }

    /// Whether `weyl_dim` of the weight of `mu` equals the codimension.
    pub fn codim_matches_weyl(&self) -> bool {
        weyl_dim(&self.ring.weight_of(&self.mu)) == self.codim().into()
    }
}

/// The Plücker ideal `I_d` with its components cached per multidegree.
#[derive(Debug)]
pub struct PlueckerIdeal {
    ring: PlueckerRing,
    relations: Vec<GradedPolynomial>,
    cache: Mutex<HashMap<Vec<u32>, Arc<ComponentBasis>>>,
}

impl PlueckerIdeal {
    pub fn new(n: usize, d: &[usize]) -> Result<Self> {
        let ring = PlueckerRing::new(n, d)?;
        let relations = plucker_relations(n, d)?;
        Ok(PlueckerIdeal { ring, relations, cache: Mutex::new(HashMap::new()) })
    }

    pub fn ring(&self) -> &PlueckerRing {
        &self.ring
    }

    pub fn relations(&self) -> &[GradedPolynomial] {
        &self.relations
    }

    /// `I_mu`.
    pub fn component(&self, mu: &[u32]) -> Result<Arc<ComponentBasis>> {
        if let Some(cb) = self.cache.lock().unwrap().get(mu) {
            return Ok(cb.clone());
        }
        let cb = Arc::new(self.ring.component_basis(&self.relations, mu)?);
        self.cache.lock().unwrap().insert(mu.to_vec(), cb.clone());
        Ok(cb)
    }

    /// `in_g(I)_mu`.
    pub fn initial_component(&self, mu: &[u32], g: &GradingVector) -> Result<ComponentBasis> {
        self.component(mu)?.initial_span(g)
    }

    /// `I^A_mu`, the initial component for the grading induced by `a`.
    pub fn degenerate_component(&self, a: &WeightSystem, mu: &[u32]) -> Result<ComponentBasis> {
        let g = GradingVector::from_weights(a, self.ring.d())?;
        self.initial_component(mu, &g)
    }

    /// Whether the ideal generated by the quadratic initial forms
    /// `in(I)_nu`, `|nu| = 2`, agrees with `in(I)` at `mu`.
    pub fn quadratic_generation_check(&self, a: &WeightSystem, mu: &[u32]) -> Result<bool> {
        let g = GradingVector::from_weights(a, self.ring.d())?;
        let full = self.initial_component(mu, &g)?;
        let gens: Vec<GradedPolynomial> =
            self.relations.iter().map(|f| initial_part(f, &g)).collect::<Result<_>>()?;
        let generated = self.ring.component_basis(&gens, mu)?;
        Ok(generated == full)
    }

    /// Whether `in_{grad^B}(I^A)_mu = I^B_mu`. Requires the minimal face of
    /// `b` to contain the minimal face of `a`.
    pub fn face_degeneration_check(&self, a: &WeightSystem, b: &WeightSystem, mu: &[u32]) -> Result<bool> {
        let sig_a = a.face_signature()?;
        let sig_b = b.face_signature()?;
        if !sig_b.face_contains(&sig_a)? {
            return Err(Error::FaceOrder("the face of B does not contain the face of A".into()));
        }
        let gb = GradingVector::from_weights(b, self.ring.d())?;
        let lhs = self.degenerate_component(a, mu)?.initial_span(&gb)?;
        let rhs = self.initial_component(mu, &gb)?;
        Ok(lhs == rhs)
    }
}

/// `component_basis` over an explicit generator list.
pub fn component_basis(n: usize, d: &[usize], gens: &[GradedPolynomial], mu: &[u32]) -> Result<ComponentBasis> {
    PlueckerRing::new(n, d)?.component_basis(gens, mu)
}

/// `initial_component` over an explicit generator list.
pub fn initial_component(
    n: usize,
    d: &[usize],
    gens: &[GradedPolynomial],
    mu: &[u32],
    g: &GradingVector,
) -> Result<ComponentBasis> {
    PlueckerRing::new(n, d)?.initial_component(gens, mu, g)
}

pub fn contains_monomial(cb: &ComponentBasis) -> Option<PlueckerMonomial> {
    cb.contains_monomial()
}

pub fn quadratic_generation_check(a: &WeightSystem, d: &[usize], mu: &[u32]) -> Result<bool> {
    a.require_cone()?;
    PlueckerIdeal::new(a.n(), d)?.quadratic_generation_check(a, mu)
}

pub fn face_degeneration_check(a: &WeightSystem, b: &WeightSystem, d: &[usize], mu: &[u32]) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::ShapeMismatch("weight systems for different n".into()));
    }
    PlueckerIdeal::new(a.n(), d)?.face_degeneration_check(a, b, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn x(n: usize, e: &[usize]) -> PlueckerIndex {
        PlueckerIndex::new(n, e).unwrap()
    }

    #[test]
    fn normalize_signs() {
        assert_eq!(normalize_index(4, &[3, 1]).unwrap(), Some((x(4, &[1, 3]), -1)));
        assert_eq!(normalize_index(4, &[2, 3, 1]).unwrap(), Some((x(4, &[1, 2, 3]), 1)));
        assert_eq!(normalize_index(4, &[2, 2]).unwrap(), None);
        assert!(normalize_index(4, &[5]).is_err());
    }

    #[test]
    fn small_relation_sets() {
        assert!(plucker_relations(2, &[1]).unwrap().is_empty());
        let r = plucker_relations(3, &[1, 2]).unwrap();
        assert_eq!(r.len(), 1);
        let expected = GradedPolynomial::from_terms([
            (Monomial::from_vars(vec![x(3, &[1]), x(3, &[2, 3])]), rat(1)),
            (Monomial::from_vars(vec![x(3, &[2]), x(3, &[1, 3])]), rat(-1)),
            (Monomial::from_vars(vec![x(3, &[3]), x(3, &[1, 2])]), rat(1)),
        ]);
        assert_eq!(r[0], expected.normalized());
        let g24 = plucker_relations(4, &[2]).unwrap();
        assert_eq!(g24.len(), 1);
        assert_eq!(g24[0].len(), 3);
    }

    #[test]
    fn quotient_dims_match_weyl() {
        for n in 2..=4 {
            let ideal = PlueckerIdeal::new(n, &(1..n).collect::<Vec<_>>()).unwrap();
            for mu in ideal.ring().multidegrees_up_to(2) {
                let cb = ideal.component(&mu).unwrap();
                assert!(cb.codim_matches_weyl(), "n={n} mu={mu:?}");
            }
        }
    }

    #[test]
    fn classical_initial_is_identity() {
        let ideal = PlueckerIdeal::new(3, &[1, 2]).unwrap();
        let a = WeightSystem::zero(3);
        assert_eq!(*ideal.component(&[1, 1]).unwrap(), ideal.degenerate_component(&a, &[1, 1]).unwrap());
    }

    #[test]
    fn toric_and_abelian_initials() {
        let ideal = PlueckerIdeal::new(3, &[1, 2]).unwrap();
        let binomial = GradedPolynomial::from_terms([
            (Monomial::from_vars(vec![x(3, &[1]), x(3, &[2, 3])]), rat(1)),
            (Monomial::from_vars(vec![x(3, &[3]), x(3, &[1, 2])]), rat(1)),
        ]);
        for a in [WeightSystem::toric(3), WeightSystem::constant(3, 1)] {
            let cb = ideal.degenerate_component(&a, &[1, 1]).unwrap();
            assert_eq!(cb.polynomials(), vec![binomial.clone()]);
            assert!(cb.contains_monomial().is_none());
        }
        let abelian = ideal.degenerate_component(&WeightSystem::constant(3, 1), &[1, 1]).unwrap();
        assert!(abelian.standard_monomials_form_basis().unwrap());
    }

    #[test]
    fn face_order_enforced() {
        let ideal = PlueckerIdeal::new(3, &[1, 2]).unwrap();
        let interior = WeightSystem::toric(3);
        let zero = WeightSystem::zero(3);
        assert!(ideal.face_degeneration_check(&zero, &interior, &[1, 1]).unwrap());
        assert!(matches!(
            ideal.face_degeneration_check(&interior, &zero, &[1, 1]),
            Err(Error::FaceOrder(_))
        ));
    }
}
