//! The acceptance battery: thirteen structural checks at desk scale, each
//! with its own workload, exact oracle and optional time limit.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::fflv::{enumerate_patterns, minkowski_check, weyl_dim, DominantWeight};
use crate::ideals::{initial_part, PlueckerIdeal, PlueckerRing};
use crate::representations::{
    annihilator_monomial_check, cyclic_module_dim, exp_coordinates, fflv_basis_check, is_pattern_monomial,
    psi_substitution_check, ActionMode,
};
use crate::tableaux::{enumerate_ssyt, tau, zeta};
use crate::tropical::{cone_c_membership, h_linear, h_rank, map_h, maximality_witness, trop_check_with};
use crate::weights::{canonical_weight_systems, WeightSystem};

/// Workload caps. The full scale runs every criterion at its stated size;
/// a smaller `max_n` restricts every criterion to `n <= max_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scale {
    pub max_n: usize,
    /// Total-degree cap for the ideal-theoretic criteria.
    pub max_degree: u32,
    pub seed: u64,
}

impl Scale {
    pub const FULL_N: usize = 6;

    pub fn full() -> Self {
        Scale { max_n: Self::FULL_N, max_degree: 3, seed: 0x5eed_cafe }
    }

    pub fn capped(max_n: usize) -> Self {
        Scale { max_n: max_n.clamp(2, Self::FULL_N), ..Self::full() }
    }

    fn ns(&self, lo: usize, hi: usize) -> std::ops::RangeInclusive<usize> {
        lo..=hi.min(self.max_n)
    }

    fn degree(&self, d: u32) -> u32 {
        d.min(self.max_degree)
    }
}

pub const CRITERIA: [(u8, &str); 13] = [
    (1, "cone soundness"),
    (2, "combinatorial dimension agreement"),
    (3, "bijection round trip"),
    (4, "minkowski property"),
    (5, "initial ideal dimension"),
    (6, "classical recovery"),
    (7, "quadratic generation"),
    (8, "face degeneration"),
    (9, "toric detection"),
    (10, "representation dimensions"),
    (11, "monomial annihilator"),
    (12, "tropical cone"),
    (13, "psi substitution consistency"),
];

/// Time limits pinned per criterion (full scale, optimized build).
pub fn time_limit(id: u8) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(1)),
        2 => Some(Duration::from_secs(30)),
        5 => Some(Duration::from_secs(300)),
        _ => None,
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual checks performed.
    pub checks: usize,
    /// Description of the first failing case, or a summary.
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CriterionResult {
    pub fn within_limit(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed <= l)
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_limit()
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2} {}: {} ({} checks, {:.3}s", self.id, self.name, self.detail, self.checks, self.elapsed.as_secs_f64())?;
        if let Some(l) = self.limit {
            write!(f, ", limit {}s", l.as_secs())?;
        }
        write!(f, ")")
    }
}

/// Counts checks and remembers the first failure.
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self, id: u8, summary: String, start: Instant) -> CriterionResult {
        let name = CRITERIA[usize::from(id) - 1].1;
        CriterionResult {
            id,
            name,
            passed: self.failure.is_none(),
            checks: self.checks,
            detail: self.failure.unwrap_or(summary),
            elapsed: start.elapsed(),
            limit: time_limit(id),
        }
    }
}

pub fn run_criterion(id: u8, scale: &Scale) -> Result<CriterionResult> {
    let start = Instant::now();
    let mut t = Tally::new();
    let summary = match id {
        1 => cone_soundness(scale, &mut t),
        2 => dimension_agreement(scale, &mut t),
        3 => round_trip(scale, &mut t),
        4 => minkowski(scale, &mut t),
        5 => initial_dimension(scale, &mut t)?,
        6 => classical_recovery(scale, &mut t)?,
        7 => quadratic_generation(scale, &mut t)?,
        8 => face_degeneration(scale, &mut t)?,
        9 => toric_detection(scale, &mut t)?,
        10 => representation_dimensions(scale, &mut t)?,
        11 => monomial_annihilator(scale, &mut t)?,
        12 => tropical_cone(scale, &mut t)?,
        13 => psi_consistency(scale, &mut t)?,
        _ => return Err(crate::Error::InvalidIndex(format!("no criterion {id}"))),
    };
    Ok(t.finish(id, summary, start))
}

pub fn run_all(scale: &Scale) -> Result<Vec<CriterionResult>> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id, scale)).collect()
}

fn cone_soundness(scale: &Scale, t: &mut Tally) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(scale.seed);
    let ns: Vec<usize> = scale.ns(2, 6).collect();
    let (mut accepted, mut drawn) = (0, 0);
    while accepted < 200 {
        let n = ns[rng.gen_range(0..ns.len())];
        let a = WeightSystem::random(n, -3, 3, &mut rng);
        drawn += 1;
        if a.check_cone_membership() {
            accepted += 1;
            t.check(a.derived_inequalities_hold(), || format!("derived inequalities fail for {a}"));
        }
    }
    format!("{accepted} cone points from {drawn} draws")
}

fn dimension_agreement(scale: &Scale, t: &mut Tally) -> String {
    for n in scale.ns(2, 5) {
        for l in DominantWeight::all_up_to(n, 3) {
            let patterns = enumerate_patterns(&l).len();
            let tableaux = enumerate_ssyt(&l).len();
            let dim = weyl_dim(&l);
            t.check(BigUint::from(patterns) == dim && BigUint::from(tableaux) == dim, || {
                format!("n={n} {l}: |Pi|={patterns} |Y|={tableaux} weyl={dim}")
            });
        }
    }
    "patterns, tableaux and Weyl dimensions agree".into()
}

fn round_trip(scale: &Scale, t: &mut Tally) -> String {
    for n in scale.ns(2, 4) {
        for l in DominantWeight::all_up_to(n, 2) {
            for p in enumerate_patterns(&l) {
                let back = zeta(&p, &l).and_then(|y| tau(&y));
                t.check(back.as_ref().ok() == Some(&p), || format!("tau(zeta(T)) != T for n={n} {l}:\n{p}"));
            }
            for y in enumerate_ssyt(&l) {
                let back = tau(&y).and_then(|p| zeta(&p, &l));
                t.check(back.as_ref().ok() == Some(&y), || format!("zeta(tau(Y)) != Y for n={n} {l}: {:?}", y.columns()));
            }
        }
    }
    "tau and zeta are mutually inverse".into()
}

fn minkowski(scale: &Scale, t: &mut Tally) -> String {
    for n in scale.ns(2, 4) {
        for i in 1..n {
            for j in i..n {
                let (a, b) = (DominantWeight::fundamental(n, i), DominantWeight::fundamental(n, j));
                let ok = minkowski_check(&a, &b).unwrap_or(false);
                t.check(ok, || format!("n={n}: Pi(w{i}) + Pi(w{j}) != Pi(w{i}+w{j})"));
            }
        }
    }
    "sums of fundamental polytopes are exact".into()
}

/// The rings used by the ideal criteria: the full flag for `n = 3` and the
/// Grassmannian of planes for `n = 4`.
fn ideal_cases(scale: &Scale) -> Vec<(usize, Vec<usize>)> {
    let mut cases = vec![(3, vec![1, 2])];
    if scale.max_n >= 4 {
        cases.push((4, vec![2]));
    }
    cases
}

fn initial_dimension(scale: &Scale, t: &mut Tally) -> Result<String> {
    for (n, d) in ideal_cases(scale) {
        let ideal = PlueckerIdeal::new(n, &d)?;
        for mu in ideal.ring().multidegrees_up_to(scale.degree(3)) {
            let expected = weyl_dim(&ideal.ring().weight_of(&mu));
            for (label, a) in canonical_weight_systems(n) {
                let cb = ideal.degenerate_component(&a, &mu)?;
                t.check(BigUint::from(cb.codim()) == expected, || {
                    format!("n={n} d={d:?} mu={mu:?} {label}: codim {} vs {expected}", cb.codim())
                });
            }
        }
    }
    Ok("quotient dimensions equal Weyl dimensions".into())
}

fn classical_recovery(scale: &Scale, t: &mut Tally) -> Result<String> {
    let mut cases = ideal_cases(scale);
    if scale.max_n >= 4 {
        cases.push((4, vec![1, 2, 3]));
    }
    for (n, d) in cases {
        let ideal = PlueckerIdeal::new(n, &d)?;
        let bound = if d.len() > 2 { scale.degree(2) } else { scale.degree(3) };
        for mu in ideal.ring().multidegrees_up_to(bound) {
            let full = ideal.component(&mu)?;
            let initial = ideal.degenerate_component(&WeightSystem::zero(n), &mu)?;
            t.check(*full == initial, || format!("n={n} d={d:?} mu={mu:?}: initial ideal differs"));
        }
    }
    Ok("zero grading leaves every component unchanged".into())
}

fn quadratic_generation(scale: &Scale, t: &mut Tally) -> Result<String> {
    let ideal = PlueckerIdeal::new(3, &[1, 2])?;
    for mu in ideal.ring().multidegrees_of_total(scale.degree(3)) {
        for (label, a) in canonical_weight_systems(3) {
            let ok = ideal.quadratic_generation_check(&a, &mu)?;
            t.check(ok, || format!("{label} mu={mu:?}: quadratic initial forms do not generate"));
        }
    }
    Ok("initial ideals are generated by initial forms of the relations".into())
}

fn face_degeneration(scale: &Scale, t: &mut Tally) -> Result<String> {
    let ideal = PlueckerIdeal::new(3, &[1, 2])?;
    let (zero, abelian, toric) = (WeightSystem::zero(3), WeightSystem::constant(3, 1), WeightSystem::toric(3));
    let pairs = [("zero", &zero, "abelian", &abelian), ("abelian", &abelian, "toric", &toric), ("zero", &zero, "toric", &toric)];
    for mu in ideal.ring().multidegrees_up_to(scale.degree(2)) {
        for (la, a, lb, b) in pairs {
            let ok = ideal.face_degeneration_check(a, b, &mu)?;
            t.check(ok, || format!("({la}, {lb}) mu={mu:?}"));
        }
    }
    Ok("regrading a degeneration by a larger face reaches that face".into())
}

fn toric_detection(scale: &Scale, t: &mut Tally) -> Result<String> {
    for n in scale.ns(2, 4) {
        let a = WeightSystem::toric(n);
        let mode = ActionMode::degenerate(a.clone())?;
        for k in 1..n {
            for (idx, c) in exp_coordinates(&mode, k)? {
                t.check(is_pattern_monomial(&c, &idx), || format!("n={n} C_{idx} = {c}"));
            }
        }
        let ideal = PlueckerIdeal::new(n, &(1..n).collect::<Vec<_>>())?;
        for mu in ideal.ring().multidegrees_of_total(scale.degree(2)) {
            let cb = ideal.degenerate_component(&a, &mu)?;
            t.check(cb.rref().rows().iter().all(|r| r.len() == 2), || {
                format!("n={n} mu={mu:?}: initial component not spanned by binomials")
            });
        }
    }
    Ok("interior systems give monomial coordinates and binomial ideals".into())
}

fn representation_dimensions(scale: &Scale, t: &mut Tally) -> Result<String> {
    for n in scale.ns(2, 4) {
        for (label, a) in canonical_weight_systems(n) {
            for l in DominantWeight::all_up_to(n, 2) {
                let patterns = enumerate_patterns(&l).len();
                let dim = cyclic_module_dim(&a, &l)?;
                t.check(dim == patterns, || format!("n={n} {label} {l}: cyclic dim {dim} vs {patterns}"));
                let basis = fflv_basis_check(&a, &l)?;
                t.check(basis, || format!("n={n} {label} {l}: pattern vectors are not a basis"));
            }
        }
    }
    Ok("cyclic modules have FFLV bases".into())
}

fn monomial_annihilator(_scale: &Scale, t: &mut Tally) -> Result<String> {
    let a = WeightSystem::toric(3);
    for c in [vec![1, 0], vec![0, 1], vec![1, 1]] {
        let l = DominantWeight::new(3, c)?;
        let ok = annihilator_monomial_check(&a, &l)?;
        t.check(ok, || format!("{l}: annihilator is not the pattern monomial ideal"));
    }
    Ok("annihilators are monomial".into())
}

fn tropical_cone(scale: &Scale, t: &mut Tally) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(scale.seed ^ 12);
    let ns: Vec<usize> = scale.ns(2, 5).collect();
    let mut members = Vec::new();
    for &n in &ns {
        members.extend(canonical_weight_systems(n).into_iter().map(|(_, a)| a));
    }
    for _ in 0..50 {
        let n = ns[rng.gen_range(0..ns.len())];
        members.push(WeightSystem::random_in_cone(n, -3, 3, &mut rng));
    }
    for a in &members {
        let report = cone_c_membership(&map_h(a)?);
        t.check(report.member, || format!("h({a}) violates {:?}", report.violations));
    }

    for n in scale.ns(2, 4) {
        let ideal = PlueckerIdeal::new(n, &(1..n).collect::<Vec<_>>())?;
        let mut points: Vec<WeightSystem> = canonical_weight_systems(n).into_iter().map(|(_, a)| a).collect();
        points.extend((0..3).map(|_| WeightSystem::random_in_cone(n, 0, 3, &mut rng)));
        for a in points {
            let check = trop_check_with(&ideal, &map_h(&a)?, scale.degree(3))?;
            t.check(check.passed, || format!("n={n} h({a}) has initial monomial {:?}", check.monomial));
        }
    }

    let mut violating = 0;
    for n in scale.ns(3, 5) {
        let ring = PlueckerRing::full_flag(n);
        let ideal = PlueckerIdeal::new(n, ring.d())?;
        let mut drawn = 0;
        while drawn < 10 {
            let a = WeightSystem::random(n, -3, 3, &mut rng);
            if a.check_cone_membership() {
                continue;
            }
            drawn += 1;
            violating += 1;
            let s = h_linear(&a);
            let witness = maximality_witness(&s)?;
            t.check(witness.is_some(), || format!("n={n} {a}: no witness for a point outside the cone"));
            if let Some(w) = witness {
                t.check(w.initial.is_monomial(), || format!("n={n} witness initial part {} is not a monomial", w.initial));
                let mu = ring.homogeneous_degree(&w.relation)?.expect("nonzero relation");
                let in_ideal = ideal.component(&mu)?.contains(&w.relation)?;
                t.check(in_ideal, || format!("witness {} is not a relation", w.relation));
            }
        }
    }

    for n in scale.ns(2, 6) {
        let r = h_rank(n);
        t.check(r == n * (n - 1) / 2, || format!("rank of h for n={n} is {r}"));
    }
    Ok(format!("{} images in the cone, {violating} violating points certified", members.len()))
}

fn psi_consistency(scale: &Scale, t: &mut Tally) -> Result<String> {
    let mut relations = 0;
    for n in scale.ns(2, 4) {
        let ideal = PlueckerIdeal::new(n, &(1..n).collect::<Vec<_>>())?;
        let mode = ActionMode::classical(n);
        for f in ideal.relations() {
            relations += 1;
            t.check(psi_substitution_check(f, &mode)?, || format!("n={n}: {f} does not vanish"));
        }
    }
    let ideal = PlueckerIdeal::new(3, &[1, 2])?;
    for (label, a) in canonical_weight_systems(3) {
        let mode = ActionMode::degenerate(a.clone())?;
        let g = crate::degrees::GradingVector::from_weights(&a, &[1, 2])?;
        let mut gens: Vec<_> = ideal.relations().iter().map(|f| initial_part(f, &g)).collect::<Result<_>>()?;
        for mu in ideal.ring().multidegrees_of_total(scale.degree(2)) {
            gens.extend(ideal.initial_component(&mu, &g)?.polynomials());
        }
        for f in gens {
            t.check(psi_substitution_check(&f, &mode)?, || format!("{label}: {f} does not vanish"));
        }
    }
    Ok(format!("{relations} relations and all degenerate generators vanish"))
}
