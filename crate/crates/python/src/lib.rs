//! Python bindings for the degeneration toolkit.

use std::collections::BTreeMap;

use pbw_degen::battery::{self, Scale};
use pbw_degen::ideals::{GradedPolynomial, PlueckerIdeal as CoreIdeal, PlueckerMonomial};
use pbw_degen::poly::{format_rational, parse_rational};
use pbw_degen::{fflv, representations, tableaux, tropical, weights};
use pbw_degen::{DominantWeight, PBWTableau, PlueckerIndex, Rational, TrianglePattern};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: pbw_degen::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type Poly = Vec<(String, Vec<String>)>;

fn monomial_keys(m: &PlueckerMonomial) -> Vec<String> {
    m.vars().iter().map(PlueckerIndex::key).collect()
}

fn poly_out(f: &GradedPolynomial) -> Poly {
    f.terms().map(|(m, c)| (format_rational(c), monomial_keys(m))).collect()
}

fn poly_in(n: usize, terms: &[(String, Vec<String>)]) -> PyResult<GradedPolynomial> {
    let mut f = GradedPolynomial::zero();
    for (c, vars) in terms {
        let vars = vars.iter().map(|k| PlueckerIndex::parse_key(n, k)).collect::<pbw_degen::Result<Vec<_>>>().map_err(err)?;
        f.add_term(pbw_degen::Monomial::from_vars(vars), parse_rational(c).map_err(err)?);
    }
    Ok(f)
}

fn weight(n: usize, coeffs: Vec<u32>) -> PyResult<DominantWeight> {
    DominantWeight::new(n, coeffs).map_err(err)
}

fn lambda_of(coeffs: Vec<u32>) -> PyResult<DominantWeight> {
    weight(coeffs.len() + 1, coeffs)
}

fn sizes(n: usize, d: Option<Vec<usize>>) -> Vec<usize> {
    d.unwrap_or_else(|| (1..n).collect())
}

fn pattern_out(t: &TrianglePattern) -> BTreeMap<(usize, usize), u32> {
    t.support().into_iter().map(|(i, j)| ((i, j), t.get(i, j))).collect()
}

fn pattern_in(n: usize, t: BTreeMap<(usize, usize), u32>) -> PyResult<TrianglePattern> {
    let mut p = TrianglePattern::zero(n);
    for ((i, j), v) in t {
        if !(1 <= i && i < j && j <= n) {
            return Err(PyValueError::new_err(format!("({i}, {j}) is not a positive root for n = {n}")));
        }
        p.set(i, j, v);
    }
    Ok(p)
}

/// A weight system `a_{ij}`, `1 <= i < j <= n`.
#[pyclass(frozen, skip_from_py_object, module = "pbwdegen")]
#[derive(Clone)]
struct WeightSystem {
    inner: weights::WeightSystem,
}

#[pymethods]
impl WeightSystem {
    /// Builds a system from a `{(i, j): a_ij}` mapping; missing entries are zero.
    #[new]
    fn new(n: usize, entries: BTreeMap<(usize, usize), i64>) -> PyResult<Self> {
        if n < 2 {
            return Err(PyValueError::new_err("n must be at least 2"));
        }
        let mut inner = weights::WeightSystem::zero(n);
        for ((i, j), v) in entries {
            if !(1 <= i && i < j && j <= n) {
                return Err(PyValueError::new_err(format!("({i}, {j}) is not a positive root for n = {n}")));
            }
            inner.set(i, j, v);
        }
        Ok(Self { inner })
    }

    #[staticmethod]
    fn zero(n: usize) -> Self {
        Self { inner: weights::WeightSystem::zero(n) }
    }

    #[staticmethod]
    fn toric(n: usize) -> Self {
        Self { inner: weights::WeightSystem::toric(n) }
    }

    #[staticmethod]
    fn constant(n: usize, c: i64) -> Self {
        Self { inner: weights::WeightSystem::constant(n, c) }
    }

    /// Parses the whitespace triangle format, one row per `i`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        weights::WeightSystem::parse_triangle(text).map(|inner| Self { inner }).map_err(err)
    }

    /// Named reference systems: classical, abelian, toric and face representatives.
    #[staticmethod]
    fn canonical(n: usize) -> Vec<(String, WeightSystem)> {
        weights::canonical_weight_systems(n).into_iter().map(|(name, inner)| (name, Self { inner })).collect()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn get(&self, i: usize, j: usize) -> PyResult<i64> {
        let n = self.inner.n();
        if !(1 <= i && i < j && j <= n) {
            return Err(PyValueError::new_err(format!("({i}, {j}) is not a positive root for n = {n}")));
        }
        Ok(self.inner.get(i, j))
    }

    fn entries(&self) -> BTreeMap<(usize, usize), i64> {
        let n = self.inner.n();
        (1..n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).map(|(i, j)| ((i, j), self.inner.get(i, j))).collect()
    }

    fn in_cone(&self) -> bool {
        self.inner.check_cone_membership()
    }

    fn is_interior(&self) -> PyResult<bool> {
        self.inner.is_interior().map_err(err)
    }

    /// Tight (a) positions and tight (b) pairs of the minimal face.
    fn face_signature(&self) -> PyResult<(Vec<usize>, Vec<(usize, usize)>)> {
        let sig = self.inner.face_signature().map_err(err)?;
        Ok((sig.tight_a.into_iter().collect(), sig.tight_b.into_iter().collect()))
    }

    /// Whether the face of `self` contains the face of `inner`.
    fn face_contains(&self, inner: &WeightSystem) -> PyResult<bool> {
        let outer = self.inner.face_signature().map_err(err)?;
        outer.face_contains(&inner.inner.face_signature().map_err(err)?).map_err(err)
    }

    /// `s_I` for one index, given as a sequence of distinct elements.
    fn degree(&self, index: Vec<usize>) -> PyResult<i64> {
        let idx = PlueckerIndex::new(self.inner.n(), &index).map_err(err)?;
        pbw_degen::degree_s(&self.inner, &idx).map_err(err)
    }

    /// `s_I` for every proper nonempty index, keyed like `"1,3"`.
    fn degrees(&self) -> PyResult<BTreeMap<String, i64>> {
        PlueckerIndex::all_proper(self.inner.n())
            .into_iter()
            .map(|idx| Ok((idx.key(), pbw_degen::degree_s(&self.inner, &idx).map_err(err)?)))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!("WeightSystem(n={}, {:?})", self.inner.n(), self.entries())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &WeightSystem) -> bool {
        self.inner == other.inner
    }
}

/// Plücker ideal of a partial flag variety with memoized components.
#[pyclass(frozen, module = "pbwdegen")]
struct PlueckerIdeal {
    inner: CoreIdeal,
}

#[pymethods]
impl PlueckerIdeal {
    #[new]
    #[pyo3(signature = (n, d=None))]
    fn new(n: usize, d: Option<Vec<usize>>) -> PyResult<Self> {
        CoreIdeal::new(n, &sizes(n, d)).map(|inner| Self { inner }).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.ring().n()
    }

    #[getter]
    fn d(&self) -> Vec<usize> {
        self.inner.ring().d().to_vec()
    }

    /// The quadratic generators as `[(coeff, [keys...]), ...]` lists.
    fn relations(&self) -> Vec<Poly> {
        self.inner.relations().iter().map(poly_out).collect()
    }

    /// `(dim, rank)` of the multidegree-`mu` component.
    fn component(&self, py: Python<'_>, mu: Vec<u32>) -> PyResult<(usize, usize)> {
        let c = py.detach(|| self.inner.component(&mu)).map_err(err)?;
        Ok((c.dim(), c.rank()))
    }

    /// Reduced basis of the `a`-degenerate component in multidegree `mu`.
    fn initial_component(&self, py: Python<'_>, a: &WeightSystem, mu: Vec<u32>) -> PyResult<Vec<Poly>> {
        let c = py.detach(|| self.inner.degenerate_component(&a.inner, &mu)).map_err(err)?;
        Ok(c.polynomials().iter().map(poly_out).collect())
    }

    /// A monomial in the degenerate component, if there is one.
    fn find_monomial(&self, py: Python<'_>, a: &WeightSystem, mu: Vec<u32>) -> PyResult<Option<Vec<String>>> {
        let c = py.detach(|| self.inner.degenerate_component(&a.inner, &mu)).map_err(err)?;
        Ok(c.contains_monomial().as_ref().map(monomial_keys))
    }

    fn check_quadratic(&self, py: Python<'_>, a: &WeightSystem, mu: Vec<u32>) -> PyResult<bool> {
        py.detach(|| self.inner.quadratic_generation_check(&a.inner, &mu)).map_err(err)
    }

    fn check_face_degeneration(&self, py: Python<'_>, a: &WeightSystem, b: &WeightSystem, mu: Vec<u32>) -> PyResult<bool> {
        py.detach(|| self.inner.face_degeneration_check(&a.inner, &b.inner, &mu)).map_err(err)
    }
}

/// Quadratic Plücker relations for sizes `d` (full flag by default).
#[pyfunction]
#[pyo3(signature = (n, d=None))]
fn plucker_relations(n: usize, d: Option<Vec<usize>>) -> PyResult<Vec<Poly>> {
    Ok(pbw_degen::ideals::plucker_relations(n, &sizes(n, d)).map_err(err)?.iter().map(poly_out).collect())
}

/// Number of FFLV patterns for `lambda = (m_1, ..., m_{n-1})`.
#[pyfunction]
fn fflv_count(lambda: Vec<u32>) -> PyResult<usize> {
    Ok(fflv::enumerate_patterns(&lambda_of(lambda)?).len())
}

/// All FFLV patterns as sparse `{(i, j): t_ij}` maps.
#[pyfunction]
fn fflv_patterns(lambda: Vec<u32>) -> PyResult<Vec<BTreeMap<(usize, usize), u32>>> {
    Ok(fflv::enumerate_patterns(&lambda_of(lambda)?).iter().map(pattern_out).collect())
}

#[pyfunction]
fn weyl_dim(lambda: Vec<u32>) -> PyResult<num_bigint::BigUint> {
    Ok(fflv::weyl_dim(&lambda_of(lambda)?))
}

#[pyfunction]
fn minkowski_check(lambda: Vec<u32>, mu: Vec<u32>) -> PyResult<bool> {
    fflv::minkowski_check(&lambda_of(lambda)?, &lambda_of(mu)?).map_err(err)
}

/// Pattern of a PBW tableau given by its shape and columns.
#[pyfunction]
fn tau(lambda: Vec<u32>, columns: Vec<Vec<usize>>) -> PyResult<BTreeMap<(usize, usize), u32>> {
    let y = PBWTableau::new(lambda_of(lambda)?, columns).map_err(err)?;
    Ok(pattern_out(&tableaux::tau(&y).map_err(err)?))
}

/// Columns of the PBW tableau with pattern `t` and shape `lambda`.
#[pyfunction]
fn zeta(pattern: BTreeMap<(usize, usize), u32>, lambda: Vec<u32>) -> PyResult<Vec<Vec<usize>>> {
    let lambda = lambda_of(lambda)?;
    let t = pattern_in(lambda.n(), pattern)?;
    Ok(tableaux::zeta(&t, &lambda).map_err(err)?.columns().to_vec())
}

/// Dimension of the cyclic module generated by the highest weight vector.
#[pyfunction]
fn cyclic_module_dim(py: Python<'_>, a: &WeightSystem, lambda: Vec<u32>) -> PyResult<usize> {
    let lambda = lambda_of(lambda)?;
    py.detach(|| representations::cyclic_module_dim(&a.inner, &lambda)).map_err(err)
}

#[pyfunction]
fn fflv_basis_check(py: Python<'_>, a: &WeightSystem, lambda: Vec<u32>) -> PyResult<bool> {
    let lambda = lambda_of(lambda)?;
    py.detach(|| representations::fflv_basis_check(&a.inner, &lambda)).map_err(err)
}

/// Whether each relation vanishes after substituting exponential coordinates,
/// classical when `a` is omitted, degenerate otherwise.
#[pyfunction]
#[pyo3(signature = (n, relations, a=None))]
fn psi_check(py: Python<'_>, n: usize, relations: Vec<Poly>, a: Option<&WeightSystem>) -> PyResult<Vec<bool>> {
    let mode = match a {
        Some(a) => representations::ActionMode::degenerate(a.inner.clone()).map_err(err)?,
        None => representations::ActionMode::classical(n),
    };
    let polys = relations.iter().map(|f| poly_in(n, f)).collect::<PyResult<Vec<_>>>()?;
    py.detach(|| polys.iter().map(|f| representations::psi_substitution_check(f, &mode)).collect::<pbw_degen::Result<Vec<_>>>())
        .map_err(err)
}

fn point_in(n: usize, values: &Bound<'_, PyDict>) -> PyResult<tropical::TropicalPoint> {
    let mut s = BTreeMap::new();
    for (k, v) in values.iter() {
        let idx = PlueckerIndex::parse_key(n, &k.extract::<String>()?).map_err(err)?;
        let r: Rational = parse_rational(&v.str()?.to_cow()?).map_err(err)?;
        s.insert(idx, r);
    }
    tropical::TropicalPoint::from_values(n, s).map_err(err)
}

fn point_out(s: &tropical::TropicalPoint) -> BTreeMap<String, String> {
    s.values().iter().map(|(k, v)| (k.key(), format_rational(v))).collect()
}

/// The point `h(a)` with coordinates as rational strings.
#[pyfunction]
fn map_h(a: &WeightSystem) -> PyResult<BTreeMap<String, String>> {
    Ok(point_out(&tropical::map_h(&a.inner).map_err(err)?))
}

/// `(member, violations)` for a point `{key: value}` over all proper indices.
#[pyfunction]
fn cone_membership(n: usize, point: &Bound<'_, PyDict>) -> PyResult<(bool, Vec<String>)> {
    let report = tropical::cone_c_membership(&point_in(n, point)?);
    Ok((report.member, report.violations.iter().map(ToString::to_string).collect()))
}

/// Whether no initial-ideal component up to `degree_bound` holds a monomial.
#[pyfunction]
#[pyo3(signature = (n, point, degree_bound=2, d=None))]
fn trop_check(py: Python<'_>, n: usize, point: &Bound<'_, PyDict>, degree_bound: u32, d: Option<Vec<usize>>) -> PyResult<bool> {
    let s = point_in(n, point)?;
    let d = sizes(n, d);
    Ok(py.detach(|| tropical::in_trop_necessary_check(&s, &d, degree_bound)).map_err(err)?.passed)
}

/// `(violation, relation, initial)` for a point outside the cone, else `None`.
#[pyfunction]
fn maximality_witness(n: usize, point: &Bound<'_, PyDict>) -> PyResult<Option<(String, Poly, Poly)>> {
    let w = tropical::maximality_witness(&point_in(n, point)?).map_err(err)?;
    Ok(w.map(|w| (w.violation.to_string(), poly_out(&w.relation), poly_out(&w.initial))))
}

/// Runs the criterion battery, optionally capped at `max_n`.
/// Returns `(id, name, passed, detail, seconds)` per criterion.
#[pyfunction]
#[pyo3(signature = (max_n=None))]
fn run_suite(py: Python<'_>, max_n: Option<usize>) -> PyResult<Vec<(u8, String, bool, String, f64)>> {
    let scale = max_n.map_or_else(Scale::full, Scale::capped);
    let results = py.detach(|| battery::run_all(&scale)).map_err(err)?;
    Ok(results.into_iter().map(|r| (r.id, r.name.to_string(), r.ok(), r.detail, r.elapsed.as_secs_f64())).collect())
}

#[pymodule]
fn pbwdegen(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<WeightSystem>()?;
    m.add_class::<PlueckerIdeal>()?;
    m.add_function(wrap_pyfunction!(plucker_relations, m)?)?;
    m.add_function(wrap_pyfunction!(fflv_count, m)?)?;
    m.add_function(wrap_pyfunction!(fflv_patterns, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(minkowski_check, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_module_dim, m)?)?;
    m.add_function(wrap_pyfunction!(fflv_basis_check, m)?)?;
    m.add_function(wrap_pyfunction!(psi_check, m)?)?;
    m.add_function(wrap_pyfunction!(map_h, m)?)?;
    m.add_function(wrap_pyfunction!(cone_membership, m)?)?;
    m.add_function(wrap_pyfunction!(trop_check, m)?)?;
    m.add_function(wrap_pyfunction!(maximality_witness, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
