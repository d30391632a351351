//! The Hecke algebra `H(B_m)` and its right action `Ψ` on `V̲^{⊗m}`.
//!
//! Elements of `W(B_m)` are signed permutations in window notation. The product
//! `uv` is composition of functions, so the word `i_1 … i_k` names
//! `s_{i_1} ∘ … ∘ s_{i_k}` and `w s_i` swaps window entries `i, i+1`
//! (`w s_0` negates the first entry).
//!
//! `Ψ` is a right action: the operator of `H_{i_1} ⋯ H_{i_k}` applies
//! `Ψ(H_{i_1})` first. Hence `Ψ(uv) = Ψ(v) ∘ Ψ(u)` as matrices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::ratfunc::{q_minus_qinv, RatFunc};
use crate::report::{CheckReport, SubCheck, Witness};
use crate::tensorspace::{IndexTuple, SparseOp, SparseVec, TensorSpace, Weight};

/// A word in the simple reflections `s_0, …, s_{m-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BWord(pub Vec<usize>);

impl BWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i >= m) {
            Some(&i) => Err(Error::IndexOutOfRange {
                index: i as i64,
                context: format!("generator index for H(B_{m})"),
            }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("H_{i}")).collect();
        write!(f, "{}", parts.join(""))
    }
}

/// An element of `W(B_m)`: the window `(w(1), …, w(m))` with `w(-k) = -w(k)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPerm(Vec<i32>);

impl SignedPerm {
    pub fn identity(m: usize) -> Self {
        Self((1..=m as i32).collect())
    }

    /// Validates that `window` is a signed permutation of `1..=m`.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let m = window.len() as i32;
        let abs: BTreeSet<i32> = window.iter().map(|x| x.abs()).collect();
        if abs.len() != window.len() || abs.iter().any(|&a| a < 1 || a > m) {
            return Err(Error::Invalid(format!("not a signed permutation: {window:?}")));
        }
        Ok(Self(window))
    }

    /// `s_{i_1} ⋯ s_{i_k}`.
    pub fn from_word(m: usize, word: &BWord) -> Result<Self> {
        word.validate(m)?;
        let mut w = Self::identity(m);
        for &i in word.letters() {
            w = w.times_simple(i);
        }
        Ok(w)
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.0
    }

    /// `w(k)` for `1 ≤ |k| ≤ m`.
    pub fn apply(&self, k: i32) -> i32 {
        let v = self.0[k.unsigned_abs() as usize - 1];
        if k < 0 {
            -v
        } else {
            v
        }
    }

    /// `w s_i`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut w = self.0.clone();
        if i == 0 {
            w[0] = -w[0];
        } else {
            w.swap(i - 1, i);
        }
        Self(w)
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&k| self.apply(k)).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.m()];
        for (k, &v) in self.0.iter().enumerate() {
            let pos = k as i32 + 1;
            inv[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k as i32 + 1)
    }

    /// True when no entry is negated, i.e. `w ∈ 𝔖_m`.
    pub fn is_unsigned(&self) -> bool {
        self.0.iter().all(|&v| v > 0)
    }

    /// Coxeter length: inversions, plus pairs with negative sum, plus negative entries.
    pub fn length(&self) -> usize {
        let w = &self.0;
        let mut len = w.iter().filter(|&&v| v < 0).count();
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    len += 1;
                }
                if w[a] + w[b] < 0 {
                    len += 1;
                }
            }
        }
        len
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        if i == 0 {
            self.0[0] < 0
        } else {
            self.0[i - 1] > self.0[i]
        }
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.m()).filter(|&i| self.is_right_descent(i)).collect()
    }

    /// A reduced word, found by repeatedly stripping the right descent with the
    /// smallest index.
    pub fn reduced_word(&self) -> BWord {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(i) = (0..w.m()).find(|&i| w.is_right_descent(i)) {
            rev.push(i);
            w = w.times_simple(i);
        }
        rev.reverse();
        BWord(rev)
    }

    /// Every reduced word of `w`.
    pub fn all_reduced_words(&self) -> Vec<BWord> {
        if self.is_identity() {
            return vec![BWord::default()];
        }
        let mut out = Vec::new();
        for i in self.right_descents() {
            for mut word in self.times_simple(i).all_reduced_words() {
                word.0.push(i);
                out.push(word);
            }
        }
        out.sort();
        out
    }

    /// All of `W(B_m)`, sorted.
    pub fn all(m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for perm in permutations(m) {
            for signs in 0u32..(1 << m) {
                let w = perm
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| if signs >> k & 1 == 1 { -v } else { v })
                    .collect();
                out.push(Self(w));
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All permutations of `1..=m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<i32>> {
    let mut cur: Vec<i32> = (1..=m as i32).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(k) = (1..cur.len()).rev().find(|&k| cur[k - 1] < cur[k]).map(|k| k - 1) else {
            return out;
        };
        let l = (k + 1..cur.len()).rev().find(|&l| cur[k] < cur[l]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
        out.push(cur.clone());
    }
}

/// `q^{-1} - q`.
fn correction() -> RatFunc {
    -q_minus_qinv()
}

/// The right action of one generator on one basis vector. With `drop_correction`
/// the `(q^{-1} - q) M_f` term is omitted; that variant exists only as a negative control.
fn act_basis(i: usize, f: &IndexTuple, drop_correction: bool) -> SparseVec<RatFunc> {
    let (swapped, descending) = if i == 0 {
        let a = f.get(0);
        (f.with(0, a.negated()), !a.is_positive())
    } else {
        let (a, b) = (f.get(i - 1), f.get(i));
        if a == b {
            return SparseVec::term(f.clone(), RatFunc::q_pow(-1));
        }
        (f.swapped(i - 1, i), a > b)
    };
    let mut v = SparseVec::basis(swapped);
    if descending && !drop_correction {
        v.add_term(f.clone(), correction());
    }
    v
}

fn check_index(i: usize, m: usize) -> Result<()> {
    if i >= m {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            context: format!("generator index for H(B_{m})"),
        });
    }
    Ok(())
}

/// `v · H_i`.
pub fn act_hi(i: usize, v: &SparseVec<RatFunc>, m: usize) -> Result<SparseVec<RatFunc>> {
    check_index(i, m)?;
    Ok(v.map_linear(|f| act_basis(i, f, false)))
}

/// `v · H_i^{-1}`, using `H_i^{-1} = H_i + (q - q^{-1})`.
pub fn act_hi_inverse(i: usize, v: &SparseVec<RatFunc>, m: usize) -> Result<SparseVec<RatFunc>> {
    let mut out = act_hi(i, v, m)?;
    out.add_scaled(v, &q_minus_qinv());
    Ok(out)
}

/// `v · H_{i_1} ⋯ H_{i_k}`, letters applied left to right.
pub fn act_word(word: &BWord, v: &SparseVec<RatFunc>, m: usize) -> Result<SparseVec<RatFunc>> {
    word.validate(m)?;
    let mut cur = v.clone();
    for &i in word.letters() {
        cur = cur.map_linear(|f| act_basis(i, f, false));
    }
    Ok(cur)
}

/// `Ψ(H_i)` on any tensor power (the enhanced `V̲^{⊗m}` or the inner `V^{⊗l}`).
pub fn generator_op(space: TensorSpace, i: usize) -> Result<SparseOp<RatFunc>> {
    check_index(i, space.m())?;
    Ok(SparseOp::from_action(space, |f| act_basis(i, f, false)))
}

pub fn generator_inverse_op(space: TensorSpace, i: usize) -> Result<SparseOp<RatFunc>> {
    check_index(i, space.m())?;
    Ok(SparseOp::from_action(space, |f| {
        let mut v = act_basis(i, f, false);
        v.add_term(f.clone(), q_minus_qinv());
        v
    }))
}

/// `Ψ(H_i)` with the `(q^{-1} - q)` term removed. Not a representation; used to
/// show that the relation audit detects a broken action.
pub fn mutated_generator_op(space: TensorSpace, i: usize) -> Result<SparseOp<RatFunc>> {
    check_index(i, space.m())?;
    Ok(SparseOp::from_action(space, |f| act_basis(i, f, true)))
}

/// `Ψ(H_{i_1} ⋯ H_{i_k})`.
pub fn word_op(space: TensorSpace, word: &BWord) -> Result<SparseOp<RatFunc>> {
    word.validate(space.m())?;
    Ok(SparseOp::from_action(space, |f| {
        let mut cur = SparseVec::basis(f.clone());
        for &i in word.letters() {
            cur = cur.map_linear(|g| act_basis(i, g, false));
        }
        cur
    }))
}

/// `Ψ(H_σ)` through the canonical reduced word of `σ`.
pub fn element_op(space: TensorSpace, sigma: &SignedPerm) -> Result<SparseOp<RatFunc>> {
    if sigma.m() != space.m() {
        return Err(Error::DimensionMismatch {
            left: sigma.m(),
            right: space.m(),
        });
    }
    word_op(space, &sigma.reduced_word())
}

/// All `Ψ(H_0), …, Ψ(H_{m-1})`.
pub fn generator_ops(space: TensorSpace) -> Vec<SparseOp<RatFunc>> {
    (0..space.m()).map(|i| generator_op(space, i).unwrap()).collect()
}

/// `𝔐_λ`: `λ_i` copies of `i - 1/2` for each `i`, in ascending order.
pub fn m_lambda(weight: &Weight) -> IndexTuple {
    let doubled: Vec<i32> = weight
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat_n(2 * k as i32 + 1, c))
        .collect();
    IndexTuple::from_doubled(&doubled)
}

/// The parabolic subgroup `P_λ ⊂ 𝔖_m` and its generating reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicSubgroup {
    pub weight: Weight,
    /// Indices `i ≥ 1` with equal `i`-th and `(i+1)`-th entries of `𝔐_λ`.
    pub generators: Vec<usize>,
}

impl ParabolicSubgroup {
    pub fn new(weight: &Weight) -> Self {
        let f = m_lambda(weight);
        let generators = (1..f.len()).filter(|&i| f.get(i - 1) == f.get(i)).collect();
        Self {
            weight: weight.clone(),
            generators,
        }
    }

    pub fn m(&self) -> usize {
        self.weight.total()
    }

    /// The elements of `P_λ`, by closure of the identity under the generators.
    pub fn elements(&self) -> Vec<SignedPerm> {
        let start = SignedPerm::identity(self.m());
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            for &i in &self.generators {
                let next = w.times_simple(i);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// `x_λ = Σ_{w ∈ P_λ} H_w`, as the list of reduced words of the summands.
pub fn x_lambda(weight: &Weight) -> Vec<BWord> {
    ParabolicSubgroup::new(weight)
        .elements()
        .iter()
        .map(SignedPerm::reduced_word)
        .collect()
}

fn compose_word(gens: &[SparseOp<RatFunc>], letters: &[usize]) -> SparseOp<RatFunc> {
    let mut acc = SparseOp::identity(*gens[0].space());
    for &i in letters {
        acc = gens[i].compose(&acc).unwrap();
    }
    acc
}

fn compare(sub: &mut SubCheck, space: &TensorSpace, label: String, lhs: &SparseOp<RatFunc>, rhs: &SparseOp<RatFunc>) {
    let diff = lhs.first_difference(rhs);
    sub.record(diff.is_none(), || {
        let j = diff.unwrap();
        Witness::at_basis(label, j, space.tuple_at(j))
    });
}

fn word_label(letters: &[usize]) -> String {
    BWord(letters.to_vec()).to_string()
}

/// Audits the defining relations of `H(B_m)` for the operators `gens[i] = H_i`.
///
/// The three-term braid relation is imposed for `1 ≤ i ≤ m - 2` only; at `i = 0`
/// the type-B relation is the four-term one, and the three-term version is
/// reported as an observation.
pub fn audit_hecke_relations(gens: &[SparseOp<RatFunc>]) -> Vec<SubCheck> {
    let m = gens.len();
    let space = *gens[0].space();
    let id = SparseOp::identity(space);

    let mut quad = SubCheck::new("quadratic");
    for (i, h) in gens.iter().enumerate() {
        // H^2 + (q - q^{-1}) H - 1
        let lhs = h
            .compose(h)
            .unwrap()
            .lincomb(&RatFunc::one(), h, &q_minus_qinv())
            .unwrap();
        compare(&mut quad, &space, format!("(H_{i} - q^-1)(H_{i} + q)"), &lhs, &id);
    }

    let mut braid3 = SubCheck::new("braid3");
    for i in 1..m.saturating_sub(1) {
        let lhs = compose_word(gens, &[i, i + 1, i]);
        let rhs = compose_word(gens, &[i + 1, i, i + 1]);
        compare(
            &mut braid3,
            &space,
            format!("{} = {}", word_label(&[i, i + 1, i]), word_label(&[i + 1, i, i + 1])),
            &lhs,
            &rhs,
        );
    }

    let mut commute = SubCheck::new("commute");
    for i in 0..m {
        for j in i + 2..m {
            let lhs = compose_word(gens, &[i, j]);
            let rhs = compose_word(gens, &[j, i]);
            compare(&mut commute, &space, format!("H_{i}H_{j} = H_{j}H_{i}"), &lhs, &rhs);
        }
    }

    let mut braid4 = SubCheck::new("braid4");
    if m >= 2 {
        let lhs = compose_word(gens, &[0, 1, 0, 1]);
        let rhs = compose_word(gens, &[1, 0, 1, 0]);
        compare(&mut braid4, &space, "H_0H_1H_0H_1 = H_1H_0H_1H_0".into(), &lhs, &rhs);
    }

    let mut out = vec![quad, braid3, commute, braid4];
    if m >= 2 {
        let holds = compose_word(gens, &[0, 1, 0]) == compose_word(gens, &[1, 0, 1]);
        out.push(SubCheck::skipped(
            "braid3-at-0",
            format!(
                "H_0H_1H_0 = H_1H_0H_1 is not a relation of H(B_m); observed {}",
                if holds { "equal" } else { "unequal" }
            ),
        ));
    }
    out
}

/// Every reduced word of every `σ ∈ W(B_m)` gives the same operator.
pub fn audit_matsumoto(space: TensorSpace) -> SubCheck {
    let gens = generator_ops(space);
    let mut sub = SubCheck::new("matsumoto");
    for sigma in SignedPerm::all(space.m()) {
        let words = sigma.all_reduced_words();
        let reference = compose_word(&gens, words[0].letters());
        for w in &words[1..] {
            let op = compose_word(&gens, w.letters());
            compare(
                &mut sub,
                &space,
                format!("{sigma}: {} vs {}", words[0], w),
                &op,
                &reference,
            );
        }
    }
    sub
}

/// Relation audit for `Ψ` on `V̲^{⊗m}`; Matsumoto consistency is included for `m ≤ 3`.
pub fn check_hecke_relations(r: usize, m: usize, cap: u128) -> CheckReport {
    let report = CheckReport::new("relations-heckeB").param("r", r).param("m", m);
    let space = TensorSpace::enhanced(r, m);
    if let Err(e) = space.check_cap(cap) {
        return CheckReport::skipped("relations-heckeB", e.to_string())
            .param("r", r)
            .param("m", m);
    }
    let mut report = report;
    report.dim("space", space.dim());
    for sub in audit_hecke_relations(&generator_ops(space)) {
        report.push(sub);
    }
    if m <= 3 {
        report.push(audit_matsumoto(space));
    }
    report.finish()
}

/// The same audit run against [`mutated_generator_op`]; expected to fail.
pub fn check_mutated_relations(r: usize, m: usize) -> CheckReport {
    let space = TensorSpace::enhanced(r, m);
    let gens: Vec<_> = (0..m).map(|i| mutated_generator_op(space, i).unwrap()).collect();
    let mut report = CheckReport::new("relations-heckeB-mutated").param("r", r).param("m", m);
    for sub in audit_hecke_relations(&gens) {
        report.push(sub);
    }
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use std::collections::BTreeMap;

    fn t(d: &[i32]) -> IndexTuple {
        IndexTuple::from_doubled(d)
    }

    fn basis(d: &[i32]) -> SparseVec<RatFunc> {
        SparseVec::basis(t(d))
    }

    #[test]
    fn five_cases() {
        let qi = RatFunc::q_pow(-1);
        assert_eq!(act_hi(1, &basis(&[1, 1]), 2).unwrap(), SparseVec::term(t(&[1, 1]), qi));
        assert_eq!(act_hi(1, &basis(&[1, 3]), 2).unwrap(), basis(&[3, 1]));
        assert_eq!(act_hi(0, &basis(&[1, 3]), 2).unwrap(), basis(&[-1, 3]));
        let mut third = basis(&[1, 5]);
        third.add_term(t(&[5, 1]), correction());
        assert_eq!(act_hi(1, &basis(&[5, 1]), 2).unwrap(), third);
        let mut fifth = basis(&[5, 1]);
        fifth.add_term(t(&[-5, 1]), correction());
        assert_eq!(act_hi(0, &basis(&[-5, 1]), 2).unwrap(), fifth);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(act_hi_inverse(1, &basis(&[3, 1]), 2).unwrap(), basis(&[1, 3]));
        assert_eq!(
            act_hi_inverse(1, &basis(&[1, 1]), 2).unwrap(),
            SparseVec::term(t(&[1, 1]), RatFunc::q())
        );
        assert!(act_hi(2, &basis(&[1, 1]), 2).is_err());
    }

    #[test]
    fn words_and_quadratic() {
        let space = TensorSpace::enhanced(1, 2);
        assert_eq!(word_op(space, &BWord::default()).unwrap(), SparseOp::identity(space));
        let a = word_op(space, &BWord(vec![0, 1, 0, 1])).unwrap();
        let b = word_op(space, &BWord(vec![1, 0, 1, 0])).unwrap();
        assert_eq!(a, b);
        for i in 0..2 {
            let hh = word_op(space, &BWord(vec![i, i])).unwrap();
            let h = generator_op(space, i).unwrap();
            let rhs = SparseOp::identity(space)
                .lincomb(&RatFunc::one(), &h, &correction())
                .unwrap();
            assert_eq!(hh, rhs);
            let hinv = generator_inverse_op(space, i).unwrap();
            assert_eq!(h.compose(&hinv).unwrap(), SparseOp::identity(space));
        }
    }

    #[test]
    fn anti_homomorphism() {
        let space = TensorSpace::enhanced(1, 2);
        let u = BWord(vec![0, 1]);
        let v = BWord(vec![1, 1, 0]);
        let uv = word_op(space, &u.concat(&v)).unwrap();
        let composed = word_op(space, &v)
            .unwrap()
            .compose(&word_op(space, &u).unwrap())
            .unwrap();
        assert_eq!(uv, composed);
    }

    /// Lengths by breadth-first search on the Cayley graph.
    fn bfs_lengths(m: usize) -> BTreeMap<SignedPerm, usize> {
        let start = SignedPerm::identity(m);
        let mut dist = BTreeMap::from([(start.clone(), 0)]);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for i in 0..m {
                let n = w.times_simple(i);
                if !dist.contains_key(&n) {
                    dist.insert(n.clone(), d + 1);
                    queue.push_back(n);
                }
            }
        }
        dist
    }

    #[test]
    fn lengths_match_cayley_graph() {
        for m in 1..=4 {
            let bfs = bfs_lengths(m);
            let all = SignedPerm::all(m);
            assert_eq!(all.len(), bfs.len());
            for w in &all {
                assert_eq!(w.length(), bfs[w], "{w}");
                let word = w.reduced_word();
                assert_eq!(word.len(), bfs[w]);
                assert_eq!(&SignedPerm::from_word(m, &word).unwrap(), w);
            }
        }
        let b2 = bfs_lengths(2);
        assert_eq!(b2.len(), 8);
        assert_eq!(b2.values().max(), Some(&4));
    }

    #[test]
    fn reduced_word_examples() {
        assert!(SignedPerm::identity(3).reduced_word().is_empty());
        assert_eq!(SignedPerm::identity(2).times_simple(0).reduced_word(), BWord(vec![0]));
        let w0 = SignedPerm::from_window(vec![-1, -2]).unwrap();
        assert_eq!(w0.reduced_word().len(), 4);
        let words = w0.all_reduced_words();
        assert_eq!(words, vec![BWord(vec![0, 1, 0, 1]), BWord(vec![1, 0, 1, 0])]);
    }

    #[test]
    fn group_operations() {
        let a = SignedPerm::from_window(vec![-2, 3, 1]).unwrap();
        let b = SignedPerm::from_window(vec![3, -1, 2]).unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        let ab = SignedPerm::from_word(3, &a.reduced_word().concat(&b.reduced_word())).unwrap();
        assert_eq!(ab, a.compose(&b));
        assert!(SignedPerm::from_window(vec![1, 1]).is_err());
        assert_eq!(permutations(3).len(), 6);
    }

    #[test]
    fn parabolic_examples() {
        assert_eq!(x_lambda(&Weight(vec![1, 1])), vec![BWord::default()]);
        let x = x_lambda(&Weight(vec![2, 0]));
        assert_eq!(x, vec![BWord::default(), BWord(vec![1])]);
        let sub = ParabolicSubgroup::new(&Weight(vec![2, 0, 2]));
        assert_eq!(sub.generators, vec![1, 3]);
        assert_eq!(sub.elements().len(), 4);
        assert_eq!(ParabolicSubgroup::new(&Weight(vec![3, 1])).elements().len(), 6);
        assert_eq!(m_lambda(&Weight(vec![1, 2])), t(&[1, 3, 3]));
    }

    #[test]
    fn relations_pass_and_negative_control_fails() {
        let rep = check_hecke_relations(1, 2, 10_000);
        assert_eq!(rep.status, Status::Pass, "{rep:?}");
        let bad = check_mutated_relations(1, 2);
        assert_eq!(bad.status, Status::Fail);
        let quad = bad.subchecks.iter().find(|s| s.name == "quadratic").unwrap();
        assert_eq!(quad.status, Status::Fail);
        assert!(!quad.witnesses.is_empty());
        let skipped = check_hecke_relations(9, 9, 10_000);
        assert_eq!(skipped.status, Status::Skipped);
    }

    #[test]
    fn three_term_braid_at_zero_is_not_a_relation() {
        let rep = check_hecke_relations(1, 2, 10_000);
        let obs = rep.subchecks.iter().find(|s| s.name == "braid3-at-0").unwrap();
        assert_eq!(obs.status, Status::Skipped);
        assert!(obs.note.as_ref().unwrap().ends_with("unequal"));
    }
}
