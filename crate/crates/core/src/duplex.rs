//! The duplex Hecke algebra `𝔇_m` through its representation `Ξ` on `V̲^{⊗m}`.
//!
//! Elements are formal words; they are only ever evaluated through `Ξ`, which is an
//! anti-homomorphism: the operator of `g_1 ⋯ g_k` applies `Ξ(g_1)` first.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::heckeb::{self, permutations, BWord, SignedPerm};
use crate::linalg::Echelon;
use crate::ratfunc::{q_minus_qinv, RatFunc};
use crate::report::{CheckReport, SubCheck, Witness};
use crate::tensorspace::{classify, enumerate_basis, IndexTuple, LevelData, SparseOp, SparseVec, TensorSpace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DuplexGenerator {
    /// `T_i` or `T_i^{-1}`.
    T { i: usize, inverse: bool },
    /// `x_σ^{(l)}` for `σ ∈ 𝔖_l`.
    X { sigma: SignedPerm, l: usize },
}

impl DuplexGenerator {
    pub fn t(i: usize) -> Self {
        Self::T { i, inverse: false }
    }

    pub fn t_inv(i: usize) -> Self {
        Self::T { i, inverse: true }
    }

    pub fn x(sigma: SignedPerm, l: usize) -> Result<Self> {
        if sigma.m() != l || !sigma.is_unsigned() {
            return Err(Error::Invalid(format!("{sigma} is not a permutation of 1..={l}")));
        }
        Ok(Self::X { sigma, l })
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        match self {
            Self::T { i, .. } if *i >= m => Err(Error::IndexOutOfRange {
                index: *i as i64,
                context: format!("T_i with m = {m}"),
            }),
            Self::X { l, .. } if *l > m => Err(Error::IndexOutOfRange {
                index: *l as i64,
                context: format!("x^(l) with m = {m}"),
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DuplexGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::T { i, inverse: false } => write!(f, "T_{i}"),
            Self::T { i, inverse: true } => write!(f, "T_{i}^-1"),
            Self::X { sigma, l } => write!(f, "x_{sigma}^({l})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DuplexWord(pub Vec<DuplexGenerator>);

impl DuplexWord {
    pub fn factors(&self) -> &[DuplexGenerator] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().cloned().collect())
    }
}

impl fmt::Display for DuplexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `Ξ(T_i) v`, identical to the Hecke action.
pub fn xi_t(i: usize, v: &SparseVec<RatFunc>, m: usize) -> Result<SparseVec<RatFunc>> {
    heckeb::act_hi(i, v, m)
}

/// Splits `M_f` as `α ⊗ η_{r+3/2}^{⊗(m-l)}` with `α ∈ V^{⊗l}` when `M_f ∈ V̲_{l̲,∅}`.
fn standard_prefix(f: &IndexTuple, l: usize, space: &TensorSpace) -> Option<IndexTuple> {
    let top = space.outer_doubled();
    let e = f.entries();
    let inner_ok = e[..l].iter().all(|h| h.doubled().abs() < top);
    let high_ok = e[l..].iter().all(|h| h.doubled() == top);
    (inner_ok && high_ok).then(|| IndexTuple::new(e[..l].to_vec()))
}

fn xi_x_basis(word: &BWord, l: usize, f: &IndexTuple, space: &TensorSpace) -> SparseVec<RatFunc> {
    let Some(prefix) = standard_prefix(f, l, space) else {
        return SparseVec::zero();
    };
    let tail = &f.entries()[l..];
    let image = heckeb::act_word(word, &SparseVec::basis(prefix), l).expect("type-A word within 1..l");
    let mut out = SparseVec::zero();
    for (g, c) in image.iter() {
        let mut e = g.entries().to_vec();
        e.extend_from_slice(tail);
        out.add_term(IndexTuple::new(e), c.clone());
    }
    out
}

/// `Ξ(x_σ^{(l)}) v`: `Ψ_l^V(H_σ) ⊗ id` on `V̲_{l̲,∅}`, zero on every other basis vector.
pub fn xi_x(sigma: &SignedPerm, l: usize, v: &SparseVec<RatFunc>, space: &TensorSpace) -> Result<SparseVec<RatFunc>> {
    DuplexGenerator::x(sigma.clone(), l)?.validate(space.m())?;
    let word = sigma.reduced_word();
    Ok(v.map_linear(|f| xi_x_basis(&word, l, f, space)))
}

/// `Ξ(g)` as a matrix.
pub fn generator_op(space: TensorSpace, g: &DuplexGenerator) -> Result<SparseOp<RatFunc>> {
    g.validate(space.m())?;
    match g {
        DuplexGenerator::T { i, inverse: false } => heckeb::generator_op(space, *i),
        DuplexGenerator::T { i, inverse: true } => heckeb::generator_inverse_op(space, *i),
        DuplexGenerator::X { sigma, l } => {
            let word = sigma.reduced_word();
            Ok(SparseOp::from_action(space, |f| xi_x_basis(&word, *l, f, &space)))
        }
    }
}

/// `Ξ(g_1 ⋯ g_k) = Ξ(g_k) ∘ ⋯ ∘ Ξ(g_1)`.
pub fn word_op(space: TensorSpace, word: &DuplexWord) -> Result<SparseOp<RatFunc>> {
    let mut acc = SparseOp::identity(space);
    for g in word.factors() {
        acc = generator_op(space, g)?.compose(&acc)?;
    }
    Ok(acc)
}

/// All of `𝔖_l` as unsigned signed permutations, sorted.
pub fn symmetric_group(l: usize) -> Vec<SignedPerm> {
    permutations(l)
        .into_iter()
        .map(|w| SignedPerm::from_window(w).unwrap())
        .collect()
}

/// Every generator `T_0, …, T_{m-1}` and `x_σ^{(l)}` for `0 ≤ l ≤ m`, `σ ∈ 𝔖_l`.
pub fn all_generators(m: usize) -> Vec<DuplexGenerator> {
    let mut out: Vec<DuplexGenerator> = (0..m).map(DuplexGenerator::t).collect();
    for l in 0..=m {
        for sigma in symmetric_group(l) {
            out.push(DuplexGenerator::X { sigma, l });
        }
    }
    out
}

pub fn generator_ops(space: TensorSpace) -> Vec<(DuplexGenerator, SparseOp<RatFunc>)> {
    all_generators(space.m())
        .into_iter()
        .map(|g| {
            let op = generator_op(space, &g).unwrap();
            (g, op)
        })
        .collect()
}

/// A word `ω_{I,J}` in the `T_i^{±1}` with `Ξ(ω_{I,J})(V̲_{I,J}) = V̲_{l̲,∅}`.
///
/// Each low index is carried to position 1 by `T_{j-1}^{-1} ⋯ T_1^{-1}` and then
/// flipped by `T_0^{-1}`; the inner positions are then packed to the front.
/// Positions are 1-based.
pub fn omega_word(inner: &BTreeSet<usize>, low: &BTreeSet<usize>, m: usize) -> Result<DuplexWord> {
    LevelData::from_sets(inner, low, m)?;
    let mut word = Vec::new();
    let mut inner = inner.clone();
    let mut low = low.clone();
    while let Some(&j) = low.iter().next() {
        for k in (1..j).rev() {
            word.push(DuplexGenerator::t_inv(k));
        }
        word.push(DuplexGenerator::t_inv(0));
        inner = inner.iter().map(|&p| if p < j { p + 1 } else { p }).collect();
        low.remove(&j);
    }
    loop {
        let Some(gap) = (1..=m).find(|p| !inner.contains(p)) else {
            break;
        };
        let Some(&i) = inner.iter().find(|&&p| p > gap) else {
            break;
        };
        for k in (gap..i).rev() {
            word.push(DuplexGenerator::t_inv(k));
        }
        inner.remove(&i);
        inner.insert(gap);
    }
    Ok(DuplexWord(word))
}

/// Checks that `op` maps `V̲_{I,J}` injectively onto `V̲_{l̲,∅}`: every image lies in the
/// target summand and the images have rank `(2r+2)^l`.
pub fn transport_check(space: TensorSpace, op: &SparseOp<RatFunc>, data: &LevelData, sub: &mut SubCheck) -> usize {
    let source = enumerate_basis(&space, Some(data), u128::MAX).unwrap();
    let l = data.level();
    let target = LevelData::standard(l, space.m());
    let mut ech = Echelon::new(space.dim());
    let mut stray = None;
    for f in &source {
        let j = space.index_of(f);
        let col = op.column(j);
        if stray.is_none() {
            if let Some((i, _)) = col
                .iter()
                .find(|(i, _)| classify(&space.tuple_at(*i), &space) != target)
            {
                stray = Some((j, *i));
            }
        }
        ech.insert(col.clone());
    }
    let expected = (2 * space.half() - 2).pow(l as u32);
    let label = format!("I={:?} J={:?}", data.inner, data.low);
    sub.record(stray.is_none(), || {
        let (j, i) = stray.unwrap();
        Witness::at_basis(label.clone(), j, space.tuple_at(j)).with_detail(format!(
            "image has a component on {} outside the standard summand",
            space.tuple_at(i)
        ))
    });
    let rank = ech.rank();
    sub.record(rank == expected && source.len() == expected, || {
        Witness::labelled(label.clone()).with_detail(format!("rank {rank}, expected {expected}"))
    });
    rank
}

/// `ω`-transport for one `(I, J)`.
pub fn check_omega(
    inner: &BTreeSet<usize>,
    low: &BTreeSet<usize>,
    r: usize,
    m: usize,
    cap: u128,
) -> Result<CheckReport> {
    let data = LevelData::from_sets(inner, low, m)?;
    let space = TensorSpace::enhanced(r, m);
    let name = "omega";
    let fmt_set = |s: &BTreeSet<usize>| s.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
    let head = |rep: CheckReport| {
        rep.param("r", r)
            .param("m", m)
            .param("I", fmt_set(inner))
            .param("J", fmt_set(low))
    };
    if let Err(e) = space.check_cap(cap) {
        return Ok(head(CheckReport::skipped(name, e.to_string())));
    }
    let word = omega_word(inner, low, m)?;
    let op = word_op(space, &word)?;
    let mut rep = head(CheckReport::new(name));
    let mut sub = SubCheck::new("transport");
    let rank = transport_check(space, &op, &data, &mut sub);
    rep.note(format!("word: {word}"));
    rep.dim("rank", rank);
    rep.dim("target", (2 * r + 2).pow(data.level() as u32));
    rep.push(sub);
    Ok(rep.finish())
}

/// All disjoint pairs `(I, J)` of subsets of `1..=m`.
pub fn all_level_pairs(m: usize) -> Vec<(BTreeSet<usize>, BTreeSet<usize>)> {
    let mut out = Vec::new();
    let mut codes = vec![0u8; m];
    loop {
        let inner = (1..=m).filter(|&k| codes[k - 1] == 1).collect();
        let low = (1..=m).filter(|&k| codes[k - 1] == 2).collect();
        out.push((inner, low));
        let mut k = 0;
        loop {
            if k == m {
                return out;
            }
            codes[k] += 1;
            if codes[k] < 3 {
                break;
            }
            codes[k] = 0;
            k += 1;
        }
    }
}

/// `ω`-transport over every `(I, J)`.
pub fn check_omega_all(r: usize, m: usize, cap: u128) -> CheckReport {
    let space = TensorSpace::enhanced(r, m);
    let base = CheckReport::new("omega-all").param("r", r).param("m", m);
    if let Err(e) = space.check_cap(cap) {
        return CheckReport::skipped("omega-all", e.to_string())
            .param("r", r)
            .param("m", m);
    }
    let mut rep = base;
    let mut sub = SubCheck::new("transport");
    let pairs = all_level_pairs(m);
    for (inner, low) in &pairs {
        let data = LevelData::from_sets(inner, low, m).unwrap();
        let op = word_op(space, &omega_word(inner, low, m).unwrap()).unwrap();
        transport_check(space, &op, &data, &mut sub);
    }
    let mut proj = SubCheck::new("projection-after-transport");
    for (inner, low) in &pairs {
        let data = LevelData::from_sets(inner, low, m).unwrap();
        let l = data.level();
        let x = generator_op(
            space,
            &DuplexGenerator::X {
                sigma: SignedPerm::identity(l),
                l,
            },
        )
        .unwrap();
        let op = x
            .compose(&word_op(space, &omega_word(inner, low, m).unwrap()).unwrap())
            .unwrap();
        transport_check(space, &op, &data, &mut proj);
    }
    rep.dim("pairs", pairs.len());
    rep.push(sub);
    rep.push(proj);
    rep.finish()
}

fn compare(
    sub: &mut SubCheck,
    space: &TensorSpace,
    label: impl FnOnce() -> String,
    lhs: &SparseOp<RatFunc>,
    rhs: &SparseOp<RatFunc>,
) {
    let diff = lhs.first_difference(rhs);
    sub.record(diff.is_none(), || {
        let j = diff.unwrap();
        Witness::at_basis(label(), j, space.tuple_at(j))
    });
}

/// Audits (dha def1)–(dha def3) under `Ξ`, honoring the order reversal.
pub fn check_duplex_relations(r: usize, m: usize, cap: u128) -> CheckReport {
    let space = TensorSpace::enhanced(r, m);
    if let Err(e) = space.check_cap(cap) {
        return CheckReport::skipped("relations-duplex", e.to_string())
            .param("r", r)
            .param("m", m);
    }
    let mut rep = CheckReport::new("relations-duplex").param("r", r).param("m", m);
    rep.dim("space", space.dim());

    let t: Vec<SparseOp<RatFunc>> = heckeb::generator_ops(space);
    for mut sub in heckeb::audit_hecke_relations(&t) {
        sub.name = format!("def1-{}", sub.name);
        rep.push(sub);
    }

    // Ξ(x_σ^{(l)}) for every l and σ.
    let x: Vec<Vec<(SignedPerm, SparseOp<RatFunc>)>> = (0..=m)
        .map(|l| {
            symmetric_group(l)
                .into_iter()
                .map(|s| {
                    let op = generator_op(space, &DuplexGenerator::X { sigma: s.clone(), l }).unwrap();
                    (s, op)
                })
                .collect()
        })
        .collect();
    let xop = |l: usize, s: &SignedPerm| -> &SparseOp<RatFunc> {
        &x[l].iter().find(|(w, _)| w == s).expect("σ ∈ 𝔖_l").1
    };
    let simple = |l: usize, i: usize| SignedPerm::identity(l).times_simple(i);
    let corr = -q_minus_qinv();
    let qinv = RatFunc::q_pow(-1);

    let mut right = SubCheck::new("def2-right");
    let mut left = SubCheck::new("def2-left");
    for l in 2..=m {
        for (sigma, xs) in &x[l] {
            for i in 1..l {
                let si = simple(l, i);
                let xsi = xop(l, &si);
                // x_σ x_{s_i}
                let lhs = xsi.compose(xs).unwrap();
                let ss = sigma.times_simple(i);
                let mut rhs = xop(l, &ss).clone();
                if ss.length() < sigma.length() {
                    rhs = rhs.lincomb(&RatFunc::one(), xs, &corr).unwrap();
                }
                compare(
                    &mut right,
                    &space,
                    || format!("x_{sigma}^({l}) x_s{i}^({l})"),
                    &lhs,
                    &rhs,
                );
                // x_{s_i} x_σ
                let lhs = xs.compose(xsi).unwrap();
                let ss = si.compose(sigma);
                let mut rhs = xop(l, &ss).clone();
                if ss.length() < sigma.length() {
                    rhs = rhs.lincomb(&RatFunc::one(), xs, &corr).unwrap();
                }
                compare(
                    &mut left,
                    &space,
                    || format!("x_s{i}^({l}) x_{sigma}^({l})"),
                    &lhs,
                    &rhs,
                );
            }
        }
    }
    rep.push(right);
    rep.push(left);

    let mut orth = SubCheck::new("def2-orthogonal");
    for l in 0..=m {
        for k in (0..=m).filter(|&k| k != l) {
            for (sigma, xs) in &x[l] {
                for (gamma, xg) in &x[k] {
                    let prod = xg.compose(xs).unwrap();
                    let wit = prod.first_nonzero_column();
                    orth.record(wit.is_none(), || {
                        let j = wit.unwrap();
                        Witness::at_basis(format!("x_{sigma}^({l}) x_{gamma}^({k})"), j, space.tuple_at(j))
                    });
                }
            }
        }
    }
    rep.push(orth);

    let mut inside = SubCheck::new("def3-inside");
    let mut beyond = SubCheck::new("def3-beyond");
    let mut boundary = 0;
    for l in 0..=m {
        for (sigma, xs) in &x[l] {
            for (i, ti) in t.iter().enumerate().skip(1) {
                if i < l {
                    let xsi = xop(l, &simple(l, i));
                    // T_i x_σ = x_{s_i} x_σ
                    compare(
                        &mut inside,
                        &space,
                        || format!("T_{i} x_{sigma}^({l})"),
                        &xs.compose(ti).unwrap(),
                        &xs.compose(xsi).unwrap(),
                    );
                    // x_σ T_i = x_σ x_{s_i}
                    compare(
                        &mut inside,
                        &space,
                        || format!("x_{sigma}^({l}) T_{i}"),
                        &ti.compose(xs).unwrap(),
                        &xsi.compose(xs).unwrap(),
                    );
                } else if i > l {
                    let scaled = xs.scale(&qinv);
                    compare(
                        &mut beyond,
                        &space,
                        || format!("T_{i} x_{sigma}^({l})"),
                        &xs.compose(ti).unwrap(),
                        &scaled,
                    );
                    compare(
                        &mut beyond,
                        &space,
                        || format!("x_{sigma}^({l}) T_{i}"),
                        &ti.compose(xs).unwrap(),
                        &scaled,
                    );
                } else {
                    boundary += 1;
                }
            }
        }
    }
    rep.push(inside);
    rep.push(beyond);
    rep.push(SubCheck::skipped(
        "def3-boundary",
        format!("{boundary} instances with i = l are not constrained by the relations"),
    ));

    // Ξ(T_0) restricted to V̲_{l̲,∅} is Ψ_l^V(H_0) ⊗ id.
    let mut t0 = SubCheck::new("t0-restriction").with_note("informational identity, not a defining relation");
    for l in 1..=m {
        let inner = TensorSpace::inner(r, l);
        let psi = heckeb::generator_op(inner, 0).unwrap();
        let tail = vec![space.outer_doubled(); m - l];
        let embed = |g: &IndexTuple| {
            let mut d: Vec<i32> = g.entries().iter().map(|h| h.doubled()).collect();
            d.extend_from_slice(&tail);
            space.index_of(&IndexTuple::from_doubled(&d))
        };
        for (k, g) in inner.basis().enumerate() {
            let j = embed(&g);
            let expected: Vec<(usize, RatFunc)> = {
                let mut v: Vec<_> = psi
                    .column(k)
                    .iter()
                    .map(|(i, c)| (embed(&inner.tuple_at(*i)), c.clone()))
                    .collect();
                v.sort_by_key(|e| e.0);
                v
            };
            let ok = t[0].column(j) == &expected[..];
            t0.record(ok, || {
                Witness::at_basis(format!("T_0 on level {l}"), j, space.tuple_at(j))
            });
        }
    }
    rep.push(t0);

    // Ξ(x_id^{(l)}) is an idempotent of rank (2r+2)^l.
    let mut proj = SubCheck::new("projection");
    for l in 0..=m {
        let p = xop(l, &SignedPerm::identity(l));
        compare(
            &mut proj,
            &space,
            || format!("x_id^({l}) idempotent"),
            &p.compose(p).unwrap(),
            p,
        );
        let data = LevelData::standard(l, m);
        transport_check(space, p, &data, &mut proj);
    }
    rep.push(proj);
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    fn basis(d: &[i32]) -> SparseVec<RatFunc> {
        SparseVec::basis(IndexTuple::from_doubled(d))
    }

    #[test]
    fn xi_x_examples() {
        let space = TensorSpace::enhanced(1, 2);
        let id2 = SignedPerm::identity(2);
        let v = basis(&[1, -3]);
        assert_eq!(xi_x(&id2, 2, &v, &space).unwrap(), v);
        assert!(xi_x(&id2, 2, &basis(&[-5, 1]), &space).unwrap().is_zero());
        let s1 = id2.times_simple(1);
        assert_eq!(xi_x(&s1, 2, &basis(&[1, 3]), &space).unwrap(), basis(&[3, 1]));
        let id1 = SignedPerm::identity(1);
        assert_eq!(xi_x(&id1, 1, &basis(&[3, 5]), &space).unwrap(), basis(&[3, 5]));
        assert!(xi_x(&id1, 1, &basis(&[3, 1]), &space).unwrap().is_zero());
        assert!(xi_x(&s1, 1, &v, &space).is_err());
    }

    #[test]
    fn xi_t_matches_hecke() {
        let v = basis(&[5, 1]);
        let mut expected = basis(&[1, 5]);
        expected.add_term(IndexTuple::from_doubled(&[5, 1]), -q_minus_qinv());
        assert_eq!(xi_t(1, &v, 2).unwrap(), expected);
    }

    #[test]
    fn omega_examples() {
        assert!(omega_word(&set(&[1, 2]), &set(&[]), 3).unwrap().is_empty());
        assert_eq!(
            omega_word(&set(&[2]), &set(&[]), 2).unwrap(),
            DuplexWord(vec![DuplexGenerator::t_inv(1)])
        );
        assert_eq!(
            omega_word(&set(&[]), &set(&[1]), 2).unwrap(),
            DuplexWord(vec![DuplexGenerator::t_inv(0)])
        );
        assert!(matches!(omega_word(&set(&[1]), &set(&[1]), 2), Err(Error::Overlap(1))));
    }

    #[test]
    fn omega_transport_m3() {
        let pairs = all_level_pairs(3);
        assert_eq!(pairs.len(), 27);
        let rep = check_omega_all(1, 3, 10_000);
        assert_eq!(rep.status, Status::Pass, "{rep:?}");
    }

    #[test]
    fn literal_t0_flip_does_not_transport() {
        // T_0 instead of T_0^{-1} leaves a (q^{-1} - q) component in the source summand.
        let space = TensorSpace::enhanced(1, 2);
        let word = DuplexWord(vec![DuplexGenerator::t(0)]);
        let op = word_op(space, &word).unwrap();
        let data = LevelData::from_sets(&set(&[]), &set(&[1]), 2).unwrap();
        let mut sub = SubCheck::new("literal");
        transport_check(space, &op, &data, &mut sub);
        assert_eq!(sub.status, Status::Fail);
    }

    #[test]
    fn reversed_omega_words_fail() {
        let space = TensorSpace::enhanced(1, 3);
        let mut failures = 0;
        for (inner, low) in all_level_pairs(3) {
            let word = omega_word(&inner, &low, 3).unwrap().reversed();
            let op = word_op(space, &word).unwrap();
            let data = LevelData::from_sets(&inner, &low, 3).unwrap();
            let mut sub = SubCheck::new("reversed");
            transport_check(space, &op, &data, &mut sub);
            if sub.status == Status::Fail {
                assert!(!sub.witnesses.is_empty());
                failures += 1;
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn anti_homomorphism_on_words() {
        let space = TensorSpace::enhanced(1, 2);
        let s1 = SignedPerm::identity(2).times_simple(1);
        let u = DuplexWord(vec![DuplexGenerator::t(0), DuplexGenerator::x(s1.clone(), 2).unwrap()]);
        let v = DuplexWord(vec![DuplexGenerator::t_inv(1), DuplexGenerator::t(0)]);
        let lhs = word_op(space, &u.concat(&v)).unwrap();
        let rhs = word_op(space, &v)
            .unwrap()
            .compose(&word_op(space, &u).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn relations_r1_m2() {
        let rep = check_duplex_relations(1, 2, 10_000);
        assert_eq!(rep.status, Status::Pass, "{rep:#?}");
        let b = rep.subchecks.iter().find(|s| s.name == "def3-boundary").unwrap();
        assert_eq!(b.status, Status::Skipped);
    }
}
