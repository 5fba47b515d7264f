//! Sparse polynomials with exact rational coefficients.
//!
//! A [`Monomial`] is a sorted multiset of variables, so the derived ordering
//! is lexicographic on the sorted variable tuples. Both Plücker polynomials
//! (variables are index tuples) and exponential coordinates (variables are
//! root generators) use these types.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"p"` or `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial<V: Ord> {
    vars: Vec<V>,
}

impl<V: Ord + Clone> Monomial<V> {
    pub fn one() -> Self {
        Monomial { vars: Vec::new() }
    }

    pub fn var(v: V) -> Self {
        Monomial { vars: vec![v] }
    }

    pub fn from_vars(mut vars: Vec<V>) -> Self {
        vars.sort();
        Monomial { vars }
    }

    /// Variables with multiplicity, sorted.
    pub fn vars(&self) -> &[V] {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    /// `(variable, exponent)` pairs in ascending variable order.
    pub fn exponents(&self) -> Vec<(V, u32)> {
        let mut out: Vec<(V, u32)> = Vec::new();
        for v in &self.vars {
            match out.last_mut() {
                Some((last, e)) if last == v => *e += 1,
                _ => out.push((v.clone(), 1)),
            }
        }
        out
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.vars.iter().filter(|w| *w == v).count() as u32
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut a, mut b) = (self.vars.iter().peekable(), other.vars.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        vars.push(a.next().unwrap().clone());
                    } else {
                        vars.push(b.next().unwrap().clone());
                    }
                }
                (Some(_), None) => vars.push(a.next().unwrap().clone()),
                (None, Some(_)) => vars.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        Monomial { vars }
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "1");
        }
        for (idx, (v, e)) in self.exponents().into_iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial as a map from monomials to nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<V: Ord> {
    terms: BTreeMap<Monomial<V>, Rational>,
}

impl<V: Ord + Clone> Default for Polynomial<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Ord + Clone> Polynomial<V> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one(), Rational::one())
    }

    pub fn var(v: V) -> Self {
        Self::from_monomial(Monomial::var(v), Rational::one())
    }

    pub fn from_monomial(m: Monomial<V>, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial<V>, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial<V>> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial<V>) -> Self {
        Polynomial { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Coefficient of the smallest monomial in the term order.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// Scales so that the first coefficient in the term order is one.
    pub fn normalized(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) => self.scale(&(Rational::one() / c)),
            None => Self::zero(),
        }
    }

    /// Ring homomorphism induced by `image` on variables.
    pub fn substitute<W: Ord + Clone, F: FnMut(&V) -> Polynomial<W>>(&self, mut image: F) -> Polynomial<W> {
        let mut cache: BTreeMap<V, Polynomial<W>> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::from_monomial(Monomial::one(), c.clone());
            for v in m.vars() {
                let img = cache.entry(v.clone()).or_insert_with(|| image(v)).clone();
                term = term.mul(&img);
                if term.is_zero() {
                    break;
                }
            }
            out.add_assign(&term);
        }
        out
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

impl<V: Ord + Clone + fmt::Display> fmt::Display for Polynomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_product_merges_sorted() {
        let a = Monomial::from_vars(vec![3, 1]);
        let b = Monomial::from_vars(vec![2, 1]);
        assert_eq!(a.mul(&b).vars(), &[1, 1, 2, 3]);
        assert_eq!(a.mul(&b).exponents(), vec![(1, 2), (2, 1), (3, 1)]);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = Polynomial::var(1u8);
        let y = Polynomial::var(2u8);
        let p = x.add(&y).mul(&x.sub(&y));
        let q = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, q);
        assert!(p.sub(&q).is_zero());
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-3", "7/4", "-1/2"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        // x -> a + b, y -> a
        let p = Polynomial::var('x').mul(&Polynomial::var('y'));
        let img = p.substitute(|v| match v {
            'x' => Polynomial::var("a").add(&Polynomial::var("b")),
            _ => Polynomial::var("a"),
        });
        let expect = Polynomial::var("a").mul(&Polynomial::var("a")).add(&Polynomial::var("a").mul(&Polynomial::var("b")));
        assert_eq!(img, expect);
    }
}
