//! Incremental row echelon form over a [`Field`].

use std::collections::BTreeMap;

use crate::field::{Field, SparseRow};

/// Rows in semi-echelon form, keyed by leading column.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Eliminates leading entries until the leading column is not a pivot column.
    /// The result is empty exactly when `row` lies in the span.
    pub fn reduce(&self, mut row: SparseRow<F>) -> SparseRow<F> {
        while let Some((col, val)) = row.first() {
            match self.pivots.get(col) {
                Some(p) => {
                    let factor = val.clone();
                    row = F::eliminate(&row, p, &factor);
                }
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, row: &SparseRow<F>) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow<F>) -> bool {
        debug_assert!(row.iter().all(|(c, _)| *c < self.ncols));
        let mut r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        F::normalize_pivot(&mut r);
        self.pivots.insert(r[0].0, r);
        true
    }

    /// A basis of `{x : row · x = 0 for every stored row}`, one vector per free column,
    /// each with a 1 in its free column.
    pub fn nullspace(&self) -> Vec<SparseRow<F>> {
        self.nullspace_in(0..self.ncols)
    }

    /// Nullspace vectors for the free columns among `cols`; columns outside `cols` are
    /// assumed to be constrained elsewhere.
    pub fn nullspace_in(&self, cols: impl IntoIterator<Item = usize>) -> Vec<SparseRow<F>> {
        // Reduced echelon form with unit pivots, built from the last pivot backwards.
        let mut reduced: BTreeMap<usize, SparseRow<F>> = BTreeMap::new();
        for (&lead, row) in self.pivots.iter().rev() {
            let mut r = row.clone();
            let inv = r[0].1.inv().expect("pivot entries are nonzero");
            r = r.into_iter().map(|(c, v)| (c, v.mul(&inv))).collect();
            // Clear entries at later pivot columns using already-reduced rows.
            loop {
                let hit = r
                    .iter()
                    .skip(1)
                    .find(|(c, _)| reduced.contains_key(c))
                    .map(|(c, v)| (*c, v.clone()));
                let Some((c, v)) = hit else { break };
                r = crate::field::axpy(&r, &v.neg(), &reduced[&c]);
            }
            reduced.insert(lead, r);
        }
        let mut basis = Vec::new();
        for free in cols.into_iter().filter(|c| !reduced.contains_key(c)) {
            let mut v: SparseRow<F> = vec![(free, F::one())];
            for (&lead, row) in &reduced {
                if let Ok(p) = row.binary_search_by_key(&free, |(c, _)| *c) {
                    v.push((lead, row[p].1.neg()));
                }
            }
            v.sort_by_key(|(c, _)| *c);
            basis.push(v);
        }
        basis
    }
}

/// Rank of a family of sparse rows.
pub fn rank_of<F: Field>(ncols: usize, rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}
