//! Plücker indices and the degrees `s^A_I` of Plücker coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fflv::TrianglePattern;
use crate::poly::{rat, Rational};
use crate::weights::WeightSystem;

/// A strictly increasing tuple `i_1 < ... < i_k` in `[1, n]` with `1 <= k < n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlueckerIndex {
    n: u8,
    elems: Vec<u8>,
}

impl PlueckerIndex {
    pub fn new(n: usize, elems: &[usize]) -> Result<Self> {
        let bad = |why: &str| Error::InvalidIndex(format!("{elems:?} for n = {n}: {why}"));
        if elems.is_empty() {
            return Err(bad("empty"));
        }
        if elems.len() >= n {
            return Err(bad("not proper"));
        }
        if elems.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad("not strictly increasing"));
        }
        if elems[0] < 1 || *elems.last().unwrap() > n {
            return Err(bad("out of range"));
        }
        Ok(PlueckerIndex { n: n as u8, elems: elems.iter().map(|&e| e as u8).collect() })
    }

    /// `(1, ..., k)`.
    pub fn initial(n: usize, k: usize) -> Self {
        assert!(1 <= k && k < n);
        PlueckerIndex { n: n as u8, elems: (1..=k as u8).collect() }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> Vec<usize> {
        self.elems.iter().map(|&e| e as usize).collect()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elems.binary_search(&(e as u8)).is_ok()
    }

    pub fn is_initial(&self) -> bool {
        self.elems.iter().enumerate().all(|(t, &e)| e as usize == t + 1)
    }

    /// Comma-joined key, e.g. `"1,3"`.
    pub fn key(&self) -> String {
        self.elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn parse_key(n: usize, key: &str) -> Result<Self> {
        let elems: Vec<usize> = key
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index key {key:?}"))))
            .collect::<Result<_>>()?;
        Self::new(n, &elems)
    }

    /// The pairs `(p_t, q_t)` with `p` ascending over `{1..k} \ I` and `q`
    /// descending over `I \ {1..k}`.
    pub fn complement_pairs(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let p: Vec<usize> = (1..=k).filter(|&x| !self.contains(x)).collect();
        let q: Vec<usize> = self.elems().into_iter().filter(|&x| x > k).rev().collect();
        debug_assert_eq!(p.len(), q.len());
        p.into_iter().zip(q).collect()
    }

    /// All size-`k` indices in lexicographic order.
    pub fn all_of_size(n: usize, k: usize) -> Vec<PlueckerIndex> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<PlueckerIndex>) {
            if cur.len() == k {
                out.push(PlueckerIndex { n: n as u8, elems: cur.clone() });
                return;
            }
            for e in start..=n {
                if n - e + 1 < k - cur.len() {
                    break;
                }
                cur.push(e as u8);
                rec(n, k, e + 1, cur, out);
                cur.pop();
            }
        }
        if k >= 1 && k < n {
            rec(n, k, 1, &mut cur, &mut out);
        }
        out
    }

    /// All proper nonempty subsets, grouped by size then lexicographic.
    pub fn all_proper(n: usize) -> Vec<PlueckerIndex> {
        (1..n).flat_map(|k| Self::all_of_size(n, k)).collect()
    }
}

impl fmt::Display for PlueckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{{{}}}", self.key())
    }
}

/// `s^A_I = sum_t a_{p_t, q_t}` over the complement pairs of `I`.
///
/// Only valid on `K`; other inputs are rejected.
pub fn degree_s(a: &WeightSystem, index: &PlueckerIndex) -> Result<i64> {
    a.require_cone()?;
    Ok(degree_unchecked(a, index))
}

pub(crate) fn degree_unchecked(a: &WeightSystem, index: &PlueckerIndex) -> i64 {
    index.complement_pairs().into_iter().map(|(p, q)| a.get(p, q)).sum()
}

/// The 0/1 pattern supported on the complement pairs of `I`.
pub fn fundamental_pattern(index: &PlueckerIndex) -> TrianglePattern {
    let mut t = TrianglePattern::zero(index.n());
    for (p, q) in index.complement_pairs() {
        t.set(p, q, 1);
    }
    t
}

/// Validates a tuple of column sizes: nonempty, strictly increasing, in `[1, n-1]`.
pub fn validate_sizes(n: usize, d: &[usize]) -> Result<()> {
    if d.is_empty() || d.windows(2).any(|w| w[0] >= w[1]) || d[0] < 1 || *d.last().unwrap() >= n {
        return Err(Error::ShapeMismatch(format!("invalid size tuple d = {d:?} for n = {n}")));
    }
    Ok(())
}

/// Degrees assigned to the Plücker variables of every size in `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingVector {
    n: usize,
    d: Vec<usize>,
    s: BTreeMap<PlueckerIndex, Rational>,
}

impl GradingVector {
    pub fn from_weights(a: &WeightSystem, d: &[usize]) -> Result<Self> {
        a.require_cone()?;
        let n = a.n();
        validate_sizes(n, d)?;
        let s = d
            .iter()
            .flat_map(|&k| PlueckerIndex::all_of_size(n, k))
            .map(|idx| {
                let v = degree_unchecked(a, &idx);
                (idx, rat(v))
            })
            .collect();
        Ok(GradingVector { n, d: d.to_vec(), s })
    }

    /// Builds from arbitrary values; every index of every size in `d` must be present.
    pub fn from_values(n: usize, d: &[usize], values: &BTreeMap<PlueckerIndex, Rational>) -> Result<Self> {
        validate_sizes(n, d)?;
        let mut s = BTreeMap::new();
        for &k in d {
            for idx in PlueckerIndex::all_of_size(n, k) {
                let v = values.get(&idx).ok_or_else(|| Error::MissingIndex(idx.key()))?;
                s.insert(idx, v.clone());
            }
        }
        Ok(GradingVector { n, d: d.to_vec(), s })
    }

    pub fn zero(n: usize, d: &[usize]) -> Result<Self> {
        Self::from_weights(&WeightSystem::zero(n), d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> &[usize] {
        &self.d
    }

    pub fn get(&self, index: &PlueckerIndex) -> Result<&Rational> {
        self.s.get(index).ok_or_else(|| Error::MissingIndex(index.key()))
    }

    pub fn values(&self) -> &BTreeMap<PlueckerIndex, Rational> {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.s.values().all(Zero::is_zero)
    }
}
