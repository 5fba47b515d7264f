//! Fundamental modules `L_{omega_k} = wedge^k C^n`, their degenerate versions,
//! tensor products and the exponential-orbit coordinates.
//!
//! `f_{i,j}` sends `e_i` to `e_j`. As matrices `f_{i,j} = E_{j,i}`, so
//! `[f_{i,j}, f_{j,l}] = -f_{i,l}`. The degenerate action keeps a matrix
//! entry exactly when it is homogeneous for the degrees `s^A`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::degrees::{degree_unchecked, fundamental_pattern, PlueckerIndex};
use crate::error::{Error, Result};
use crate::fflv::{cell_bound, enumerate_patterns, is_fflv_pattern, DominantWeight, TrianglePattern};
use crate::ideals::GradedPolynomial;
use crate::limits::check_dim;
use crate::linalg::{Echelon, SparseRow};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::triangle::pairs;
use crate::weights::WeightSystem;

/// Variables of the exponential coordinates: `z_{i,j}` for the root
/// generators and `z_k` scaling the size-`k` block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZVar {
    Root(usize, usize),
    Scale(usize),
}

impl fmt::Display for ZVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZVar::Root(i, j) => write!(f, "z_{{{i},{j}}}"),
            ZVar::Scale(k) => write!(f, "z_{k}"),
        }
    }
}

pub type ZPolynomial = Polynomial<ZVar>;

/// `f_{i,j} e_I`: zero unless `i` is in `I` and `j` is not; otherwise `I` with
/// `i` replaced by `j`, signed by the parity of the entries strictly between.
pub fn classical_action(i: usize, j: usize, index: &PlueckerIndex) -> Result<Option<(PlueckerIndex, i8)>> {
    if !(1 <= i && i < j && j <= index.n()) {
        return Err(Error::InvalidIndex(format!("generator f_{{{i},{j}}} for n = {}", index.n())));
    }
    if !index.contains(i) || index.contains(j) {
        return Ok(None);
    }
    let elems = index.elems();
    let between = elems.iter().filter(|&&l| i < l && l < j).count();
    let image: Vec<usize> = elems.iter().map(|&l| if l == i { j } else { l }).collect();
    let mut sorted = image;
    sorted.sort_unstable();
    let sign = if between % 2 == 0 { 1 } else { -1 };
    Ok(Some((PlueckerIndex::new(index.n(), &sorted)?, sign)))
}

/// The classical action restricted to degree-preserving matrix entries:
/// survives iff `s_I + a_{i,j} = s_{I'}`.
pub fn degenerate_action(a: &WeightSystem, i: usize, j: usize, index: &PlueckerIndex) -> Result<Option<(PlueckerIndex, i8)>> {
    a.require_cone()?;
    if a.n() != index.n() {
        return Err(Error::ShapeMismatch("weight system and index disagree on n".into()));
    }
    degenerate_unchecked(a, i, j, index)
}

fn degenerate_unchecked(a: &WeightSystem, i: usize, j: usize, index: &PlueckerIndex) -> Result<Option<(PlueckerIndex, i8)>> {
    Ok(classical_action(i, j, index)?
        .filter(|(target, _)| degree_unchecked(a, index) + a.get(i, j) == degree_unchecked(a, target)))
}

/// Which action to use: classical, or degenerate for a cone point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionMode {
    Classical { n: usize },
    Degenerate(WeightSystem),
}

impl ActionMode {
    pub fn classical(n: usize) -> Self {
        ActionMode::Classical { n }
    }

    pub fn degenerate(a: WeightSystem) -> Result<Self> {
        a.require_cone()?;
        Ok(ActionMode::Degenerate(a))
    }

    pub fn n(&self) -> usize {
        match self {
            ActionMode::Classical { n } => *n,
            ActionMode::Degenerate(a) => a.n(),
        }
    }

    pub fn weights(&self) -> Option<&WeightSystem> {
        match self {
            ActionMode::Classical { .. } => None,
            ActionMode::Degenerate(a) => Some(a),
        }
    }

    fn act(&self, i: usize, j: usize, index: &PlueckerIndex) -> Result<Option<(PlueckerIndex, i8)>> {
        match self {
            ActionMode::Classical { .. } => classical_action(i, j, index),
            ActionMode::Degenerate(a) => degenerate_unchecked(a, i, j, index),
        }
    }
}

/// `L_{omega_k}` or its degenerate version, with the action tabulated.
#[derive(Debug, Clone)]
pub struct FundamentalModule {
    n: usize,
    k: usize,
    basis: Vec<PlueckerIndex>,
    degree: Vec<i64>,
    /// `table[p][b]`: image of basis vector `b` under the `p`-th generator.
    table: Vec<Vec<Option<(usize, i8)>>>,
}

impl FundamentalModule {
    pub fn new(mode: &ActionMode, k: usize) -> Result<Self> {
        let n = mode.n();
        if k < 1 || k >= n {
            return Err(Error::InvalidIndex(format!("fundamental module of size {k} for n = {n}")));
        }
        let basis = PlueckerIndex::all_of_size(n, k);
        let position: HashMap<&PlueckerIndex, usize> = basis.iter().enumerate().map(|(p, b)| (b, p)).collect();
        let degree = basis.iter().map(|b| mode.weights().map_or(0, |a| degree_unchecked(a, b))).collect();
        let mut table = Vec::new();
        for (i, j) in pairs(n) {
            let row = basis
                .iter()
                .map(|b| Ok(mode.act(i, j, b)?.map(|(t, s)| (position[&t], s))))
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        Ok(FundamentalModule { n, k, basis, degree, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PlueckerIndex] {
        &self.basis
    }

    /// `s^A` of each basis vector (zero in classical mode).
    pub fn degrees(&self) -> &[i64] {
        &self.degree
    }

    /// Image of basis vector `b` under the generator with pair position `p`.
    pub fn apply(&self, p: usize, b: usize) -> Option<(usize, i8)> {
        self.table[p][b]
    }

    /// Dense matrix of a generator, `m[row][col]`.
    pub fn matrix(&self, p: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.dim()]; self.dim()];
        for (b, img) in self.table[p].iter().enumerate() {
            if let Some((t, s)) = img {
                m[*t][b] = i64::from(*s);
            }
        }
        m
    }
}

/// A vector in a tensor product of fundamental modules, keyed by the basis
/// position in each factor.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorState {
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

impl TensorState {
    pub fn basis_vector(key: Vec<usize>) -> Self {
        TensorState { coeffs: BTreeMap::from([(key, Rational::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.coeffs
    }

    fn add_term(&mut self, key: Vec<usize>, c: Rational) {
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// `U_lambda`: `a_k` copies of `L_{omega_k}` for each `k`, ascending.
#[derive(Debug, Clone)]
pub struct TensorModule {
    lambda: DominantWeight,
    factors: Vec<FundamentalModule>,
}

impl TensorModule {
    pub fn new(mode: &ActionMode, lambda: &DominantWeight) -> Result<Self> {
        if lambda.n() != mode.n() {
            return Err(Error::ShapeMismatch("weight and action disagree on n".into()));
        }
        let mut factors = Vec::new();
        let mut total = 1usize;
        for k in 1..lambda.n() {
            if lambda.coeff(k) == 0 {
                continue;
            }
            let module = FundamentalModule::new(mode, k)?;
            for _ in 0..lambda.coeff(k) {
                total = total.saturating_mul(module.dim());
                check_dim("tensor product dimension", total)?;
                factors.push(module.clone());
            }
        }
        Ok(TensorModule { lambda: lambda.clone(), factors })
    }

    pub fn lambda(&self) -> &DominantWeight {
        &self.lambda
    }

    pub fn factors(&self) -> &[FundamentalModule] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim()).product()
    }

    /// The tensor of highest weight vectors.
    pub fn highest_weight_vector(&self) -> TensorState {
        TensorState::basis_vector(vec![0; self.factors.len()])
    }

    /// Generator with pair position `p`, acting by the Leibniz rule.
    pub fn apply(&self, p: usize, v: &TensorState) -> TensorState {
        let mut out = TensorState::default();
        for (key, c) in &v.coeffs {
            for (slot, factor) in self.factors.iter().enumerate() {
                if let Some((t, s)) = factor.apply(p, key[slot]) {
                    let mut image = key.clone();
                    image[slot] = t;
                    out.add_term(image, c * Rational::from_integer(s.into()));
                }
            }
        }
        out
    }

    /// `prod f_{i,j}^{T_{i,j}}` applied to `v`, the product written in
    /// lexicographic order of `(i,j)` so the last pair acts first.
    pub fn apply_pattern(&self, t: &TrianglePattern, v: &TensorState) -> TensorState {
        let mut cur = v.clone();
        for (p, &e) in t.entries().iter().enumerate().rev() {
            for _ in 0..e {
                if cur.is_zero() {
                    return cur;
                }
                cur = self.apply(p, &cur);
            }
        }
        cur
    }

    fn column(&self, key: &[usize]) -> usize {
        key.iter().zip(&self.factors).fold(0, |acc, (&b, f)| acc * f.dim() + b)
    }

    pub fn to_row(&self, v: &TensorState) -> SparseRow {
        let mut row: SparseRow = v.coeffs.iter().map(|(k, c)| (self.column(k), c.clone())).collect();
        row.sort_by_key(|(c, _)| *c);
        row
    }

    /// Echelon basis of the cyclic submodule generated by `w_lambda`.
    pub fn cyclic_span(&self) -> Echelon {
        let mut ech = Echelon::new(self.dim());
        let w = self.highest_weight_vector();
        ech.insert(&self.to_row(&w));
        let npairs = self.lambda.n() * (self.lambda.n() - 1) / 2;
        let mut queue = vec![w];
        while let Some(v) = queue.pop() {
            for p in 0..npairs {
                let u = self.apply(p, &v);
                if !u.is_zero() && ech.insert(&self.to_row(&u)) {
                    queue.push(u);
                }
            }
        }
        ech
    }
}

/// Dimension of `U(n^-) w_lambda` inside `U_lambda` under the degenerate action.
pub fn cyclic_module_dim(a: &WeightSystem, lambda: &DominantWeight) -> Result<usize> {
    let module = TensorModule::new(&ActionMode::degenerate(a.clone())?, lambda)?;
    Ok(module.cyclic_span().rank())
}

/// Whether `{f^T w_lambda : T in Pi_lambda}` is a basis of the cyclic module.
pub fn fflv_basis_check(a: &WeightSystem, lambda: &DominantWeight) -> Result<bool> {
    let module = TensorModule::new(&ActionMode::degenerate(a.clone())?, lambda)?;
    let span = module.cyclic_span();
    let patterns = enumerate_patterns(lambda);
    if patterns.len() != span.rank() {
        return Ok(false);
    }
    let w = module.highest_weight_vector();
    let mut ech = Echelon::new(module.dim());
    for t in &patterns {
        let row = module.to_row(&module.apply_pattern(t, &w));
        if row.is_empty() || !span.contains(&row) || !ech.insert(&row) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For interior `a`: `f^S w_lambda` vanishes exactly for `S` outside
/// `Pi_lambda`, over all `S` with `S_{i,j}` at most one above the
/// single-cell bound.
pub fn annihilator_monomial_check(a: &WeightSystem, lambda: &DominantWeight) -> Result<bool> {
    if !a.is_interior()? {
        return Err(Error::NotInterior);
    }
    let module = TensorModule::new(&ActionMode::Degenerate(a.clone()), lambda)?;
    let n = lambda.n();
    let bounds: Vec<u32> = pairs(n).map(|(i, j)| cell_bound(lambda, i, j) + 1).collect();
    let w = module.highest_weight_vector();
    let mut entries = vec![0u32; bounds.len()];
    loop {
        let s = TrianglePattern::from_entries(n, entries.clone())?;
        let image = module.apply_pattern(&s, &w);
        if image.is_zero() == is_fflv_pattern(&s, lambda) {
            return Ok(false);
        }
        let mut p = 0;
        loop {
            if p == entries.len() {
                return Ok(true);
            }
            if entries[p] < bounds[p] {
                entries[p] += 1;
                break;
            }
            entries[p] = 0;
            p += 1;
        }
    }
}

/// Coordinates of `exp(sum z_{i,j} f_{i,j}) e_{1..k}` in the basis `e_I`.
pub fn exp_coordinates(mode: &ActionMode, k: usize) -> Result<BTreeMap<PlueckerIndex, ZPolynomial>> {
    let module = FundamentalModule::new(mode, k)?;
    let n = mode.n();
    let generators: Vec<(usize, usize)> = pairs(n).collect();
    let mut total: Vec<ZPolynomial> = vec![ZPolynomial::zero(); module.dim()];
    let mut term: Vec<ZPolynomial> = total.clone();
    term[0] = ZPolynomial::one();
    total[0] = ZPolynomial::one();
    let mut order = 0i64;
    loop {
        order += 1;
        let mut next = vec![ZPolynomial::zero(); module.dim()];
        for (b, coeff) in term.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (p, &(i, j)) in generators.iter().enumerate() {
                if let Some((t, s)) = module.apply(p, b) {
                    let scaled = coeff
                        .mul_monomial(&Monomial::var(ZVar::Root(i, j)))
                        .scale(&Rational::new(s.into(), order.into()));
                    next[t].add_assign(&scaled);
                }
            }
        }
        if next.iter().all(|c| c.is_zero()) {
            break;
        }
        for (acc, c) in total.iter_mut().zip(&next) {
            acc.add_assign(c);
        }
        term = next;
    }
    Ok(module.basis.into_iter().zip(total).collect())
}

/// Substitutes `X_I -> z_{|I|} C_I` into `f`.
pub fn psi_substitute(f: &GradedPolynomial, mode: &ActionMode) -> Result<ZPolynomial> {
    let mut coords: BTreeMap<usize, BTreeMap<PlueckerIndex, ZPolynomial>> = BTreeMap::new();
    for m in f.monomials() {
        for v in m.vars() {
            if v.n() != mode.n() {
                return Err(Error::ShapeMismatch(format!("{} is not an index for n = {}", v.key(), mode.n())));
            }
            if !coords.contains_key(&v.len()) {
                coords.insert(v.len(), exp_coordinates(mode, v.len())?);
            }
        }
    }
    Ok(f.substitute(|v| coords[&v.len()][v].mul_monomial(&Monomial::var(ZVar::Scale(v.len())))))
}

/// Whether `f` lies in the kernel of the substitution.
pub fn psi_substitution_check(f: &GradedPolynomial, mode: &ActionMode) -> Result<bool> {
    Ok(psi_substitute(f, mode)?.is_zero())
}

/// `prod z^{fundamental_pattern(I)}` as a polynomial.
pub fn pattern_monomial(index: &PlueckerIndex) -> ZPolynomial {
    let t = fundamental_pattern(index);
    let vars = pairs(index.n())
        .zip(t.entries())
        .flat_map(|((i, j), &e)| std::iter::repeat_n(ZVar::Root(i, j), e as usize))
        .collect();
    ZPolynomial::from_monomial(Monomial::from_vars(vars), Rational::one())
}

/// Whether `poly` is `±1` times the monomial of `fundamental_pattern(index)`.
/// Signs of the basis vectors are conventional, so both signs are accepted.
pub fn is_pattern_monomial(poly: &ZPolynomial, index: &PlueckerIndex) -> bool {
    let expected = pattern_monomial(index);
    *poly == expected || *poly == expected.scale(&-Rational::one())
}

/// Lie bracket of `f_{i,j}` and `f_{k,l}` in the degenerate algebra: the
/// classical bracket when degrees add up, zero otherwise.
pub fn bracket(a: &WeightSystem, x: (usize, usize), y: (usize, usize)) -> Option<((usize, usize), i64)> {
    let (i, j) = x;
    let (k, l) = y;
    if j == k && a.get(i, j) + a.get(j, l) == a.get(i, l) {
        Some(((i, l), -1))
    } else if l == i && a.get(k, i) + a.get(i, j) == a.get(k, j) {
        Some(((k, j), 1))
    } else {
        None
    }
}

type LieElement = BTreeMap<(usize, usize), i64>;

fn bracket_linear(a: &WeightSystem, x: &LieElement, y: &LieElement) -> LieElement {
    let mut out = LieElement::new();
    for (&p, &c) in x {
        for (&q, &d) in y {
            if let Some((r, e)) = bracket(a, p, q) {
                *out.entry(r).or_insert(0) += c * d * e;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Checks antisymmetry and the Jacobi identity of the degenerate bracket,
/// and that the degenerate action on every `L_{omega_k}` represents it.
pub fn verify_lie_structure(a: &WeightSystem) -> Result<bool> {
    a.require_cone()?;
    let n = a.n();
    let gens: Vec<(usize, usize)> = pairs(n).collect();
    let single = |p: (usize, usize)| LieElement::from([(p, 1)]);
    for &x in &gens {
        for &y in &gens {
            let xy = bracket_linear(a, &single(x), &single(y));
            let mut yx = bracket_linear(a, &single(y), &single(x));
            yx.values_mut().for_each(|v| *v = -*v);
            if xy != yx {
                return Ok(false);
            }
            for &z in &gens {
                let mut sum = LieElement::new();
                for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                    for (key, v) in bracket_linear(a, &single(p), &bracket_linear(a, &single(q), &single(r))) {
                        *sum.entry(key).or_insert(0) += v;
                    }
                }
                if sum.values().any(|v| *v != 0) {
                    return Ok(false);
                }
            }
        }
    }
    let mode = ActionMode::Degenerate(a.clone());
    for k in 1..n {
        let module = FundamentalModule::new(&mode, k)?;
        let mats: Vec<Vec<Vec<i64>>> = (0..gens.len()).map(|p| module.matrix(p)).collect();
        let dim = module.dim();
        for (px, &x) in gens.iter().enumerate() {
            for (py, &y) in gens.iter().enumerate() {
                let mut expected = vec![vec![0i64; dim]; dim];
                if let Some((r, e)) = bracket(a, x, y) {
                    let pr = gens.iter().position(|&g| g == r).unwrap();
                    for (row, src) in expected.iter_mut().zip(&mats[pr]) {
                        for (dst, v) in row.iter_mut().zip(src) {
                            *dst = e * v;
                        }
                    }
                }
                for r in 0..dim {
                    for c in 0..dim {
                        let comm: i64 = (0..dim).map(|m| mats[px][r][m] * mats[py][m][c] - mats[py][r][m] * mats[px][m][c]).sum();
                        if comm != expected[r][c] {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}
