use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::{IndexTuple, TensorSpace};
use crate::error::{Error, Result};
use crate::field::{lincomb, Field, Fp, SparseRow};
use crate::ratfunc::{BigRat, RatFunc, RatFuncError};

/// A finitely supported linear combination of basis vectors `M_f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<F> {
    coords: BTreeMap<IndexTuple, F>,
}

impl<F: Field> Default for SparseVec<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> SparseVec<F> {
    pub fn zero() -> Self {
        Self {
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(f: IndexTuple) -> Self {
        Self::term(f, F::one())
    }

    pub fn term(f: IndexTuple, c: F) -> Self {
        let mut v = Self::zero();
        v.add_term(f, c);
        v
    }

    pub fn add_term(&mut self, f: IndexTuple, c: F) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry(f) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        for (f, v) in &other.coords {
            self.add_term(f.clone(), if c.is_one() { v.clone() } else { v.mul(c) });
        }
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, f: &IndexTuple) -> F {
        self.coords.get(f).cloned().unwrap_or_else(F::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexTuple, &F)> {
        self.coords.iter()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Applies a basis-level linear map termwise.
    pub fn map_linear(&self, mut action: impl FnMut(&IndexTuple) -> SparseVec<F>) -> Self {
        let mut out = Self::zero();
        for (f, c) in &self.coords {
            out.add_scaled(&action(f), c);
        }
        out
    }

    /// Coordinates as a sorted sparse row in the space's basis order.
    pub fn to_row(&self, space: &TensorSpace) -> SparseRow<F> {
        let mut row: SparseRow<F> = self
            .coords
            .iter()
            .map(|(f, c)| (space.index_of(f), c.clone()))
            .collect();
        row.sort_by_key(|(k, _)| *k);
        row
    }

    pub fn from_row(space: &TensorSpace, row: &SparseRow<F>) -> Self {
        let mut v = Self::zero();
        for (k, c) in row {
            v.add_term(space.tuple_at(*k), c.clone());
        }
        v
    }
}

/// A linear operator on a tensor space, stored by columns: `cols[j]` is the image of
/// the `j`-th basis vector as a sorted sparse column.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseOp<F> {
    space: TensorSpace,
    cols: Vec<SparseRow<F>>,
}

impl<F: Field> SparseOp<F> {
    /// Materializes the operator whose value on each basis vector is `action(f)`.
    pub fn from_action<A>(space: TensorSpace, action: A) -> Self
    where
        A: Fn(&IndexTuple) -> SparseVec<F> + Sync,
    {
        let cols = (0..space.dim())
            .into_par_iter()
            .map(|j| action(&space.tuple_at(j)).to_row(&space))
            .collect();
        Self { space, cols }
    }

    pub fn from_columns(space: TensorSpace, cols: Vec<SparseRow<F>>) -> Result<Self> {
        if cols.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                left: cols.len(),
                right: space.dim(),
            });
        }
        Ok(Self { space, cols })
    }

    pub fn identity(space: TensorSpace) -> Self {
        Self {
            space,
            cols: (0..space.dim()).map(|j| vec![(j, F::one())]).collect(),
        }
    }

    pub fn zero(space: TensorSpace) -> Self {
        Self {
            space,
            cols: vec![Vec::new(); space.dim()],
        }
    }

    /// Diagonal operator with the given entries.
    pub fn diagonal(space: TensorSpace, diag: impl Fn(&IndexTuple) -> F) -> Self {
        let cols = (0..space.dim())
            .map(|j| {
                let d = diag(&space.tuple_at(j));
                if d.is_zero() {
                    Vec::new()
                } else {
                    vec![(j, d)]
                }
            })
            .collect();
        Self { space, cols }
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseRow<F> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseRow<F>] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> F {
        self.cols[j]
            .binary_search_by_key(&i, |(k, _)| *k)
            .map(|p| self.cols[j][p].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, c)| c.iter().all(|(i, _)| *i == j))
    }

    /// First basis index whose image is nonzero, as a witness for a failing identity.
    pub fn first_nonzero_column(&self) -> Option<usize> {
        self.cols.iter().position(|c| !c.is_empty())
    }

    /// First basis index on which the two operators differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        if self.space != other.space {
            return Some(0);
        }
        self.cols.iter().zip(&other.cols).position(|(a, b)| a != b)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let cols = other.cols.par_iter().map(|col| self.apply_row(col)).collect();
        Ok(Self {
            space: self.space,
            cols,
        })
    }

    /// Applies the operator to a coordinate column.
    pub fn apply_row(&self, v: &SparseRow<F>) -> SparseRow<F> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (k, c) in v {
            for (i, a) in &self.cols[*k] {
                let t = a.mul(c);
                match acc.get_mut(i) {
                    Some(x) => *x = x.add(&t),
                    None => {
                        acc.insert(*i, t);
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        SparseVec::from_row(&self.space, &self.apply_row(&v.to_row(&self.space)))
    }

    pub fn lincomb(&self, a: &F, other: &Self, b: &F) -> Result<Self> {
        self.check_same(other)?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(x, y)| lincomb(x, a, y, b))
            .collect();
        Ok(Self {
            space: self.space,
            cols,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.lincomb(&F::one(), other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.lincomb(&F::one(), other, &F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.space);
        }
        Self {
            space: self.space,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v.mul(c))).collect())
                .collect(),
        }
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for j in 0..self.dim() {
            let e = self.entry(j, j);
            if !e.is_zero() {
                t = t.add(&e);
            }
        }
        t
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> F {
        // tr(AB) = sum_{i,k} A_{ik} B_{ki}
        let mut t = F::zero();
        for (k, col) in self.cols.iter().enumerate() {
            for (i, a) in col {
                let b = other.entry(k, *i);
                if !b.is_zero() {
                    t = t.add(&a.mul(&b));
                }
            }
        }
        t
    }

    /// Row-major flattening: entry `(i, j)` lands at coordinate `i * N + j`.
    pub fn flatten(&self) -> SparseRow<F> {
        let n = self.dim();
        let mut out: SparseRow<F> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (i * n + j, v.clone())))
            .collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// Inverse of [`SparseOp::flatten`].
    pub fn unflatten(space: TensorSpace, flat: &SparseRow<F>) -> Self {
        let n = space.dim();
        let mut cols = vec![Vec::new(); n];
        for (k, v) in flat {
            cols[k % n].push((k / n, v.clone()));
        }
        for c in cols.iter_mut() {
            c.sort_by_key(|(i, _)| *i);
        }
        Self { space, cols }
    }

    /// Restricts to the given basis indices: returns the images of those basis vectors.
    pub fn images_of(&self, basis_indices: &[usize]) -> Vec<SparseRow<F>> {
        basis_indices.iter().map(|&j| self.cols[j].clone()).collect()
    }

    /// Sparse-matrix dump: header `dim N basisOrder lex`, then `row col value` per
    /// nonzero entry (0-based indices, row-major order).
    pub fn dump(&self) -> String {
        let mut entries: Vec<(usize, usize, &F)> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
            .collect();
        entries.sort_by_key(|(i, j, _)| (*i, *j));
        let mut s = format!("dim {} basisOrder lex\n", self.dim());
        for (i, j, v) in entries {
            writeln!(s, "{i} {j} {}", v.to_text()).unwrap();
        }
        s
    }
}

impl SparseOp<RatFunc> {
    /// Specializes every entry at `q = point`.
    pub fn eval_at(&self, point: &BigRat) -> std::result::Result<SparseOp<BigRat>, RatFuncError> {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                let mut out = Vec::with_capacity(col.len());
                for (i, v) in col {
                    let x = v.eval(point)?;
                    if !num_traits::Zero::is_zero(&x) {
                        out.push((*i, x));
                    }
                }
                Ok(out)
            })
            .collect::<std::result::Result<Vec<_>, RatFuncError>>()?;
        Ok(SparseOp {
            space: self.space,
            cols,
        })
    }

    /// Specializes every entry at `q = point` and reduces mod `2^61 - 1`; `None` at a pole.
    pub fn eval_mod(&self, point: &BigRat) -> Option<SparseOp<Fp>> {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                let mut out = Vec::with_capacity(col.len());
                for (i, v) in col {
                    let x = Fp::eval(v, point)?;
                    if !x.is_zero() {
                        out.push((*i, x));
                    }
                }
                Some(out)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SparseOp {
            space: self.space,
            cols,
        })
    }

    /// Parses the output of [`SparseOp::dump`].
    pub fn parse_dump(space: TensorSpace, text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or_default();
        let n: usize = header
            .strip_prefix("dim ")
            .and_then(|h| h.strip_suffix(" basisOrder lex"))
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| Error::Invalid(format!("bad dump header: {header}")))?;
        if n != space.dim() {
            return Err(Error::DimensionMismatch {
                left: n,
                right: space.dim(),
            });
        }
        let mut cols = vec![Vec::new(); n];
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let mut parts = line.splitn(3, ' ');
            let bad = || Error::Invalid(format!("bad dump line: {line}"));
            let i: usize = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
            let j: usize = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
            let v: RatFunc = parts.next().ok_or_else(bad)?.parse()?;
            if i >= n || j >= n {
                return Err(bad());
            }
            cols[j].push((i, v));
        }
        for c in cols.iter_mut() {
            c.sort_by_key(|(i, _)| *i);
        }
        Ok(Self { space, cols })
    }
}
