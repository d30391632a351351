//! Basis indexing for `V`, the enhanced space `V̲`, and their tensor powers.
//!
//! Half-integer indices are stored doubled (`3/2` is `3`). The basis of the
//! `m`-fold tensor power is ordered lexicographically on the doubled entries,
//! first tensor position most significant; every matrix in the crate uses
//! this order.

mod sparse;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use sparse::{SparseOp, SparseVec};

/// Default cap on the number of basis vectors a space may have.
pub const DEFAULT_BASIS_CAP: u128 = 10_000;

/// A half-integer `j`, stored as the odd integer `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfIndex(i32);

impl HalfIndex {
    /// Panics unless `doubled` is odd.
    pub fn from_doubled(doubled: i32) -> Self {
        assert!(doubled % 2 != 0, "half-index must be odd when doubled, got {doubled}");
        Self(doubled)
    }

    pub fn doubled(self) -> i32 {
        self.0
    }

    /// `|j| + 1/2`, i.e. the `i` with `j = ±(i - 1/2)`.
    pub fn weight_slot(self) -> usize {
        self.0.unsigned_abs().div_ceil(2) as usize
    }

    pub fn negated(self) -> Self {
        Self(-self.0)
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl fmt::Display for HalfIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.0)
    }
}

/// An `m`-tuple `f` of half-integers naming the basis vector `M_f`.
/// Positions are 0-based in code; the mathematical position `k` is `k - 1` here.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexTuple(Vec<HalfIndex>);

impl IndexTuple {
    pub fn new(entries: Vec<HalfIndex>) -> Self {
        Self(entries)
    }

    pub fn from_doubled(entries: &[i32]) -> Self {
        Self(entries.iter().map(|&d| HalfIndex::from_doubled(d)).collect())
    }

    pub fn entries(&self) -> &[HalfIndex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, pos: usize) -> HalfIndex {
        self.0[pos]
    }

    /// Exchanges 0-based positions `a` and `b`.
    pub fn swapped(&self, a: usize, b: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(a, b);
        Self(v)
    }

    /// Replaces the entry at `pos`.
    pub fn with(&self, pos: usize, value: HalfIndex) -> Self {
        let mut v = self.0.clone();
        v[pos] = value;
        Self(v)
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// The tensor power `W^{⊗m}` where `W` has basis `η_j`, `j ∈ I_{2·half}`.
///
/// `V̲` for rank parameter `r` has `half = r + 2`; the inner space `V` has `half = r + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorSpace {
    half: usize,
    m: usize,
}

impl TensorSpace {
    /// `V̲^{⊗m}` of dimension `(2r + 4)^m`.
    pub fn enhanced(r: usize, m: usize) -> Self {
        Self { half: r + 2, m }
    }

    /// `V^{⊗m}` of dimension `(2r + 2)^m`.
    pub fn inner(r: usize, m: usize) -> Self {
        Self { half: r + 1, m }
    }

    /// Tensor power of an `n`-dimensional space with index set `I_n`, `n` even.
    pub fn with_ambient(n: usize, m: usize) -> Result<Self> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::Invalid(format!(
                "ambient dimension must be even and positive, got {n}"
            )));
        }
        Ok(Self { half: n / 2, m })
    }

    pub fn half(&self) -> usize {
        self.half
    }

    /// Number of tensor factors.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension of a single factor.
    pub fn factor_dim(&self) -> usize {
        2 * self.half
    }

    /// The rank parameter `r` when this is an enhanced space `V̲^{⊗m}`.
    pub fn enhanced_r(&self) -> usize {
        self.half.saturating_sub(2)
    }

    /// Doubled value of the outermost index `r + 3/2` when enhanced.
    pub fn outer_doubled(&self) -> i32 {
        2 * self.half as i32 - 1
    }

    pub fn dim_u128(&self) -> u128 {
        (self.factor_dim() as u128).pow(self.m as u32)
    }

    pub fn dim(&self) -> usize {
        self.dim_u128() as usize
    }

    pub fn check_cap(&self, cap: u128) -> Result<()> {
        let requested = self.dim_u128();
        if requested > cap {
            return Err(Error::SizeCap { requested, cap });
        }
        Ok(())
    }

    /// All single-factor indices in ascending order.
    pub fn factor_indices(&self) -> Vec<HalfIndex> {
        let top = self.outer_doubled();
        (-top..=top).step_by(2).map(HalfIndex).collect()
    }

    pub fn contains_index(&self, h: HalfIndex) -> bool {
        h.0.abs() <= self.outer_doubled()
    }

    fn digit(&self, h: HalfIndex) -> usize {
        ((h.0 + self.outer_doubled()) / 2) as usize
    }

    /// Position of `M_f` in the global lexicographic basis order.
    pub fn index_of(&self, f: &IndexTuple) -> usize {
        let n = self.factor_dim();
        f.0.iter().fold(0, |acc, &h| acc * n + self.digit(h))
    }

    pub fn tuple_at(&self, mut idx: usize) -> IndexTuple {
        let n = self.factor_dim();
        let mut v = vec![HalfIndex(0); self.m];
        for k in (0..self.m).rev() {
            v[k] = HalfIndex((idx % n) as i32 * 2 - self.outer_doubled());
            idx /= n;
        }
        IndexTuple(v)
    }

    pub fn is_valid(&self, f: &IndexTuple) -> bool {
        f.len() == self.m && f.0.iter().all(|&h| h.0 % 2 != 0 && self.contains_index(h))
    }

    pub fn basis(&self) -> impl Iterator<Item = IndexTuple> + '_ {
        (0..self.dim()).map(move |k| self.tuple_at(k))
    }
}

/// Which tensor positions carry inner indices, the low outer index `-(r + 3/2)`,
/// or the high outer index `r + 3/2`. Positions are 1-based, as in `V̲_{I,J}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LevelData {
    pub inner: BTreeSet<usize>,
    pub low: BTreeSet<usize>,
    pub high: BTreeSet<usize>,
}

impl LevelData {
    pub fn level(&self) -> usize {
        self.inner.len()
    }

    /// The standard summand `V̲_{l̲, ∅}`: inner positions `1..=l`, everything else high.
    pub fn standard(l: usize, m: usize) -> Self {
        Self {
            inner: (1..=l).collect(),
            low: BTreeSet::new(),
            high: (l + 1..=m).collect(),
        }
    }

    /// Completes a disjoint `(I, J)` pair to a partition of `1..=m`.
    pub fn from_sets(inner: &BTreeSet<usize>, low: &BTreeSet<usize>, m: usize) -> Result<Self> {
        if let Some(&k) = inner.intersection(low).next() {
            return Err(Error::Overlap(k));
        }
        if let Some(&k) = inner.iter().chain(low.iter()).find(|&&k| k == 0 || k > m) {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                context: format!("positions 1..={m}"),
            });
        }
        Ok(Self {
            inner: inner.clone(),
            low: low.clone(),
            high: (1..=m).filter(|k| !inner.contains(k) && !low.contains(k)).collect(),
        })
    }
}

/// The unique `(I, J, rest)` partition of positions for a basis vector of `V̲^{⊗m}`.
pub fn classify(f: &IndexTuple, space: &TensorSpace) -> LevelData {
    let top = space.outer_doubled();
    let mut d = LevelData {
        inner: BTreeSet::new(),
        low: BTreeSet::new(),
        high: BTreeSet::new(),
    };
    for (k, h) in f.entries().iter().enumerate() {
        let set = match h.doubled() {
            x if x == top => &mut d.high,
            x if x == -top => &mut d.low,
            _ => &mut d.inner,
        };
        set.insert(k + 1);
    }
    d
}

/// Basis vectors of `V̲^{⊗m}`, optionally restricted to one summand `V̲_{I,J}`,
/// in lexicographic order. Fails if the full space would exceed `cap`.
pub fn enumerate_basis(space: &TensorSpace, filter: Option<&LevelData>, cap: u128) -> Result<Vec<IndexTuple>> {
    space.check_cap(cap)?;
    let Some(pattern) = filter else {
        return Ok(space.basis().collect());
    };
    // Build the summand directly instead of filtering the whole space.
    let top = space.outer_doubled();
    let inner: Vec<HalfIndex> = space
        .factor_indices()
        .into_iter()
        .filter(|h| h.doubled().abs() < top)
        .collect();
    let mut out = vec![Vec::with_capacity(space.m())];
    for k in 1..=space.m() {
        let choices: Vec<HalfIndex> = if pattern.inner.contains(&k) {
            inner.clone()
        } else if pattern.low.contains(&k) {
            vec![HalfIndex(-top)]
        } else {
            vec![HalfIndex(top)]
        };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<HalfIndex>| {
                choices.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(IndexTuple).collect())
}

/// `(λ_1, …, λ_{n/2})` where `λ_i` counts entries equal to `±(i - 1/2)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn weight_of(f: &IndexTuple, n: usize) -> Weight {
    let mut parts = vec![0; n.div_ceil(2)];
    for h in f.entries() {
        parts[h.weight_slot() - 1] += 1;
    }
    Weight(parts)
}

/// `Λ_B(n, m)`: all compositions of `m` into `⌈n/2⌉` nonnegative parts, lexicographically descending.
pub fn weights(n: usize, m: usize) -> Vec<Weight> {
    fn go(slots: usize, remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Weight>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(Weight(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            prefix.push(first);
            go(slots - 1, remaining - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n.div_ceil(2), m, &mut Vec::new(), &mut out);
    out
}

/// `dim V̲_l^{⊗m} = C(m, l) (2r + 2)^l 2^{m - l}`.
pub fn level_dim(r: usize, m: usize, l: usize) -> u128 {
    binomial(m, l) * ((2 * r + 2) as u128).pow(l as u32) * 2u128.pow((m - l) as u32)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}
