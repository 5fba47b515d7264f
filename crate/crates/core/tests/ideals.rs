use std::collections::BTreeMap;

use num_traits::{One, Zero};
use pbw_degen::degrees::{GradingVector, PlueckerIndex};
use pbw_degen::ideals::{
    component_basis, grad_of, initial_part, plucker_relations, quadratic_generation_check, GradedPolynomial,
    PlueckerIdeal, PlueckerRing,
};
use pbw_degen::poly::{rat, Monomial};
use pbw_degen::tropical::{square_relation, triangle_relation};
use pbw_degen::weights::{canonical_weight_systems, WeightSystem};
use pbw_degen::Rational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let size = m.len();
    let mut result = Rational::one();
    for c in 0..size {
        let Some(p) = (c..size).find(|&r| !m[r][c].is_zero()) else { return Rational::zero() };
        if p != c {
            m.swap(p, c);
            result = -result;
        }
        result *= m[c][c].clone();
        for r in c + 1..size {
            let f = &m[r][c] / &m[c][c];
            for cc in c..size {
                let v = &f * &m[c][cc];
                m[r][cc] -= v;
            }
        }
    }
    result
}

/// Plücker coordinates of the flag spanned by the leading columns of `g`.
fn minor(g: &[Vec<i64>], idx: &PlueckerIndex) -> Rational {
    let rows = idx.elems();
    det(rows.iter().map(|&r| (0..rows.len()).map(|c| rat(g[r - 1][c])).collect()).collect())
}

fn evaluate(f: &GradedPolynomial, g: &[Vec<i64>]) -> Rational {
    f.terms()
        .map(|(m, c)| m.vars().iter().fold(c.clone(), |acc, v| acc * minor(g, v)))
        .sum()
}

#[test]
fn relations_vanish_on_random_flags() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=5 {
        let d: Vec<usize> = (1..n).collect();
        let relations = plucker_relations(n, &d).unwrap();
        for _ in 0..4 {
            let g: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
            for f in &relations {
                assert!(evaluate(f, &g).is_zero(), "n={n}: {f}");
            }
        }
    }
}

#[test]
fn spec_component_ranks() {
    let cb = component_basis(3, &[1, 2], &plucker_relations(3, &[1, 2]).unwrap(), &[1, 1]).unwrap();
    assert_eq!((cb.dim(), cb.rank(), cb.codim()), (9, 1, 8));
    let cb = component_basis(4, &[1, 2, 3], &plucker_relations(4, &[1, 2, 3]).unwrap(), &[1, 1, 1]).unwrap();
    assert_eq!((cb.dim(), cb.rank()), (96, 32));
    let linear = component_basis(4, &[1, 2, 3], &plucker_relations(4, &[1, 2, 3]).unwrap(), &[0, 1, 0]).unwrap();
    assert_eq!(linear.rank(), 0);
}

#[test]
fn grades_and_initial_parts() {
    let x = |e: &[usize]| PlueckerIndex::new(3, e).unwrap();
    let g = GradingVector::from_weights(&WeightSystem::constant(3, 1), &[1, 2]).unwrap();
    assert_eq!(grad_of(&Monomial::from_vars(vec![x(&[2]), x(&[1, 3])]), &g).unwrap(), rat(2));
    assert_eq!(grad_of(&Monomial::from_vars(vec![x(&[3]), x(&[1, 2])]), &g).unwrap(), rat(1));
    let f = &plucker_relations(3, &[1, 2]).unwrap()[0];
    let expected = GradedPolynomial::from_terms([
        (Monomial::from_vars(vec![x(&[1]), x(&[2, 3])]), rat(1)),
        (Monomial::from_vars(vec![x(&[3]), x(&[1, 2])]), rat(1)),
    ]);
    assert_eq!(initial_part(f, &g).unwrap(), expected);
    assert!(initial_part(&GradedPolynomial::zero(), &g).is_err());
}

/// Initial ideal by repeated cancellation: while some combination of the
/// initial parts vanishes, replace one member by that combination of the
/// full polynomials, which has strictly larger initial grade.
fn saturated_initial(basis: Vec<GradedPolynomial>, g: &GradingVector) -> Vec<GradedPolynomial> {
    let mut polys = basis;
    'outer: loop {
        let initials: Vec<GradedPolynomial> = polys.iter().map(|f| initial_part(f, g).unwrap()).collect();
        let monomials: Vec<_> = {
            let mut all: Vec<_> = initials.iter().flat_map(|f| f.monomials().cloned()).collect();
            all.sort();
            all.dedup();
            all
        };
        // row-reduce the initial parts, tracking combinations
        let mut rows: Vec<(BTreeMap<usize, Rational>, BTreeMap<usize, Rational>)> = Vec::new();
        for (t, f) in initials.iter().enumerate() {
            let mut v: BTreeMap<usize, Rational> =
                f.terms().map(|(m, c)| (monomials.binary_search(m).unwrap(), c.clone())).collect();
            let mut comb = BTreeMap::from([(t, Rational::one())]);
            for (rv, rc) in &rows {
                let (&p, pv) = rv.iter().next().unwrap();
                if let Some(c) = v.get(&p).cloned() {
                    let f = c / pv;
                    for (k, x) in rv {
                        let e = v.entry(*k).or_insert_with(Rational::zero);
                        *e -= &f * x;
                    }
                    for (k, x) in rc {
                        let e = comb.entry(*k).or_insert_with(Rational::zero);
                        *e -= &f * x;
                    }
                    v.retain(|_, x| !x.is_zero());
                    comb.retain(|_, x| !x.is_zero());
                }
            }
            if v.is_empty() {
                let mut combined = GradedPolynomial::zero();
                for (k, c) in &comb {
                    combined.add_assign(&polys[*k].scale(c));
                }
                polys[t] = combined;
                continue 'outer;
            }
            rows.push((v, comb));
        }
        return initials;
    }
}

#[test]
fn graded_echelon_matches_saturation() {
    let mut cases = vec![(3usize, vec![1usize, 2], 3u32), (4, vec![2], 3), (4, vec![1, 2, 3], 2)];
    cases.push((5, vec![2], 2));
    for (n, d, bound) in cases {
        let ideal = PlueckerIdeal::new(n, &d).unwrap();
        for (label, a) in canonical_weight_systems(n) {
            let g = GradingVector::from_weights(&a, &d).unwrap();
            for mu in ideal.ring().multidegrees_up_to(bound) {
                let full = ideal.component(&mu).unwrap();
                let oracle = saturated_initial(full.polynomials(), &g);
                let fast = ideal.initial_component(&mu, &g).unwrap();
                let oracle_span = ideal.ring().component_of_span(&mu, oracle.iter()).unwrap();
                assert_eq!(fast, oracle_span, "n={n} d={d:?} {label} mu={mu:?}");
                assert_eq!(fast.rank(), full.rank());
            }
        }
    }
}

#[test]
fn initial_ideals_contain_no_monomials() {
    for n in 2..=4 {
        let ideal = PlueckerIdeal::new(n, &(1..n).collect::<Vec<_>>()).unwrap();
        for (label, a) in canonical_weight_systems(n) {
            for mu in ideal.ring().multidegrees_up_to(3) {
                let cb = ideal.degenerate_component(&a, &mu).unwrap();
                assert_eq!(cb.contains_monomial(), None, "n={n} {label} mu={mu:?}");
            }
        }
    }
}

#[test]
fn standard_monomials_are_bases() {
    let mut cases = vec![(2usize, vec![1usize]), (3, vec![1, 2])];
    cases.extend((1..4).map(|k| (4, vec![k])));
    for (n, d) in cases {
        let ideal = PlueckerIdeal::new(n, &d).unwrap();
        for (label, a) in canonical_weight_systems(n) {
            for mu in ideal.ring().multidegrees_up_to(3) {
                let cb = ideal.degenerate_component(&a, &mu).unwrap();
                assert!(cb.standard_monomials_form_basis().unwrap(), "n={n} d={d:?} {label} mu={mu:?}");
            }
        }
    }
}

#[test]
fn quadratic_generation_examples() {
    for (_, a) in canonical_weight_systems(3) {
        assert!(quadratic_generation_check(&a, &[1, 2], &[2, 1]).unwrap());
    }
    assert!(quadratic_generation_check(&WeightSystem::toric(4), &[1, 2, 3], &[1, 1, 1]).unwrap());
    assert!(quadratic_generation_check(&WeightSystem::constant(4, 1), &[1, 2, 3], &[1, 1, 0]).unwrap());
}

#[test]
fn witness_relations_lie_in_the_ideal() {
    let n = 4;
    let ring = PlueckerRing::full_flag(n);
    let ideal = PlueckerIdeal::new(n, ring.d()).unwrap();
    let member = |f: &GradedPolynomial| {
        let mu = ring.homogeneous_degree(f).unwrap().unwrap();
        ideal.component(&mu).unwrap().contains(f).unwrap()
    };
    assert!(member(&triangle_relation(n, 1)));
    assert!(member(&triangle_relation(n, 2)));
    let square = square_relation(n, 1, 3);
    assert!(member(&square));
    // flipping the sign of the last term leaves the ideal
    let x = |e: &[usize]| PlueckerIndex::new(n, e).unwrap();
    let last = Monomial::from_vars(vec![x(&[3, 4]), x(&[1, 2])]);
    let mut flipped = square.clone();
    flipped.add_term(last, rat(-2));
    assert!(!member(&flipped));
}
