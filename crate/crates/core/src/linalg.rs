//! Exact row reduction over the rationals with sparse rows.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::Rational;

/// Sparse row: `(column, value)` pairs with strictly increasing columns and
/// nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

/// Incrementally built row echelon form. Every stored row has leading entry 1
/// at its pivot and the pivots are distinct.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Remainder of `row` after elimination against the stored pivots.
    pub fn reduce(&self, row: &[(usize, Rational)]) -> SparseRow {
        let mut work: BTreeMap<usize, Rational> = BTreeMap::new();
        for (c, v) in row {
            if !v.is_zero() {
                *work.entry(*c).or_insert_with(Rational::zero) += v;
            }
        }
        work.retain(|_, v| !v.is_zero());
        let mut cursor = 0;
        loop {
            let hit = work
                .range(cursor..)
                .find(|(c, _)| self.pivot_row[**c].is_some())
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, factor)) = hit else { break };
            let pivot = &self.rows[self.pivot_row[col].unwrap()];
            for (c, v) in pivot {
                let entry = work.entry(*c).or_insert_with(Rational::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    work.remove(c);
                }
            }
            cursor = col + 1;
        }
        work.into_iter().collect()
    }

    /// Adds `row` to the span; returns `true` if it was independent.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        if self.is_full() {
            return false;
        }
        let reduced = self.reduce(row);
        let Some((pivot, lead)) = reduced.first().cloned() else {
            return false;
        };
        let inv = Rational::one() / lead;
        let normalized: SparseRow = reduced.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivot_row[pivot] = Some(self.rows.len());
        self.rows.push(normalized);
        true
    }

    pub fn contains(&self, row: &[(usize, Rational)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced row echelon form of the span.
    pub fn into_rref(self) -> Rref {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let mut pivot_index: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, r) in rows.iter().enumerate() {
            pivot_index.insert(r[0].0, i);
        }
        for i in (0..rows.len()).rev() {
            let mut work: BTreeMap<usize, Rational> = rows[i].iter().cloned().collect();
            let pivots: Vec<(usize, usize)> = work
                .keys()
                .skip(1)
                .filter_map(|c| pivot_index.get(c).map(|&k| (*c, k)))
                .collect();
            for (col, k) in pivots {
                let Some(factor) = work.get(&col).cloned() else { continue };
                for (c, v) in &rows[k] {
                    let entry = work.entry(*c).or_insert_with(Rational::zero);
                    *entry -= &factor * v;
                    if entry.is_zero() {
                        work.remove(c);
                    }
                }
            }
            rows[i] = work.into_iter().collect();
        }
        Rref { ncols: self.ncols, rows }
    }
}

/// A subspace in canonical (fully reduced, pivot-sorted) form; two subspaces
/// are equal iff their `Rref` values are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl Rref {
    pub fn from_rows<'a, I: IntoIterator<Item = &'a SparseRow>>(ncols: usize, rows: I) -> Self {
        let mut ech = Echelon::new(ncols);
        for r in rows {
            ech.insert(r);
        }
        ech.into_rref()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn to_echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.ncols);
        for r in &self.rows {
            ech.pivot_row[r[0].0] = Some(ech.rows.len());
            ech.rows.push(r.clone());
        }
        ech
    }

    pub fn contains(&self, row: &[(usize, Rational)]) -> bool {
        self.to_echelon().contains(row)
    }

    pub fn is_subspace_of(&self, other: &Rref) -> bool {
        let ech = other.to_echelon();
        self.rows.iter().all(|r| ech.contains(r))
    }
}

/// Rank of an arbitrary list of sparse rows.
pub fn rank(ncols: usize, rows: &[SparseRow]) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn row(vals: &[i64]) -> SparseRow {
        vals.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, rat(*v))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(3, &rows), 2);
    }

    #[test]
    fn rref_is_canonical() {
        let a = Rref::from_rows(3, &[row(&[1, 2, 3]), row(&[0, 1, 1])]);
        let b = Rref::from_rows(3, &[row(&[1, 3, 4]), row(&[2, 5, 7])]);
        assert_eq!(a, b);
        assert_eq!(a.rows()[0], row(&[1, 0, 1]));
        assert_eq!(a.pivots(), vec![0, 1]);
    }

    #[test]
    fn membership_and_inclusion() {
        let a = Rref::from_rows(4, &[row(&[1, 0, 0, 1]), row(&[0, 1, 1, 0])]);
        assert!(a.contains(&row(&[2, 3, 3, 2])));
        assert!(!a.contains(&row(&[0, 0, 1, 0])));
        let b = Rref::from_rows(4, &[row(&[1, 1, 1, 1])]);
        assert!(b.is_subspace_of(&a));
        assert!(!a.is_subspace_of(&b));
    }
}
