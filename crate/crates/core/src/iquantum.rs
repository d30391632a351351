//! Actions of `U_q(sl_{2r+4})`, the iquantum group and its Levi-type subalgebra on
//! `V̲^{⊗m}` through iterated coproducts.
//!
//! Generator indices are integers `i` with `|i| ≤ r + 1`. On a single factor,
//! `E_i` sends `η_{i+1/2}` to `η_{i-1/2}`, `F_i` goes the other way, and `K_i`
//! scales `η_{i-1/2}` by `q` and `η_{i+1/2}` by `q^{-1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratfunc::{q_minus_qinv, RatFunc};
use crate::report::{CheckReport, SubCheck, Witness};
use crate::tensorspace::{classify, HalfIndex, IndexTuple, SparseOp, SparseVec, TensorSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QGGenerator {
    E(i32),
    F(i32),
    /// `K_i^p`.
    K(i32, i32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IotaGenerator {
    /// `B_i = E_i + F_{-i} K_i^{-1}`, `i ≠ 0`.
    B(i32),
    /// `B_0 = E_0 + q F_0 K_0^{-1} + K_0^{-1}`.
    B0,
    /// `k_i^p` with `k_i = K_i K_{-i}^{-1}`.
    K(i32, i32),
}

fn pow_suffix(p: i32) -> String {
    if p == 1 {
        String::new()
    } else {
        format!("^{p}")
    }
}

impl fmt::Display for QGGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::E(i) => write!(f, "E{i}"),
            Self::F(i) => write!(f, "F{i}"),
            Self::K(i, p) => write!(f, "K{i}{}", pow_suffix(*p)),
        }
    }
}

impl fmt::Display for IotaGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::B(i) => write!(f, "B{i}"),
            Self::B0 => write!(f, "B0"),
            Self::K(i, p) => write!(f, "k{i}{}", pow_suffix(*p)),
        }
    }
}

/// Either kind of generator, as named on the command line (`E1`, `K-2^-1`, `B0`, `k2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AnyGenerator {
    Quantum(QGGenerator),
    Iota(IotaGenerator),
}

impl FromStr for AnyGenerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown generator '{s}'"));
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let (idx, pow) = match rest.split_once('^') {
            Some((a, b)) => (a, Some(b.parse::<i32>().map_err(|_| bad())?)),
            None => (rest, None),
        };
        let i: i32 = idx.parse().map_err(|_| bad())?;
        let p = pow.unwrap_or(1);
        if pow.is_some() && !matches!(kind, 'K' | 'k') {
            return Err(bad());
        }
        Ok(match kind {
            'E' => Self::Quantum(QGGenerator::E(i)),
            'F' => Self::Quantum(QGGenerator::F(i)),
            'K' => Self::Quantum(QGGenerator::K(i, p)),
            'B' if i == 0 => Self::Iota(IotaGenerator::B0),
            'B' => Self::Iota(IotaGenerator::B(i)),
            'k' => Self::Iota(IotaGenerator::K(i, p)),
            _ => return Err(bad()),
        })
    }
}

/// Eigenvalue exponent of `K_i` on `η_{d/2}`.
fn k_exponent(i: i32, d: i32) -> i32 {
    if d == 2 * i - 1 {
        1
    } else if d == 2 * i + 1 {
        -1
    } else {
        0
    }
}

fn check_raising_index(i: i32, space: &TensorSpace) -> Result<()> {
    if i.unsigned_abs() as usize + 1 > space.half() {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            context: format!("E/F index on a {}-dimensional factor", space.factor_dim()),
        });
    }
    Ok(())
}

/// `Δ^m(g)` applied to one basis vector.
fn coproduct_basis(g: QGGenerator, f: &IndexTuple) -> SparseVec<RatFunc> {
    let d: Vec<i32> = f.entries().iter().map(|h| h.doubled()).collect();
    match g {
        QGGenerator::K(i, p) => {
            let e: i32 = d.iter().map(|&x| k_exponent(i, x)).sum();
            SparseVec::term(f.clone(), RatFunc::q_pow((p * e) as i64))
        }
        QGGenerator::E(i) => {
            // Σ_j id^{j-1} ⊗ E_i ⊗ (K_i^{-1})^{m-j}
            let mut out = SparseVec::zero();
            for j in 0..d.len() {
                if d[j] == 2 * i + 1 {
                    let e: i32 = d[j + 1..].iter().map(|&x| -k_exponent(i, x)).sum();
                    out.add_term(f.with(j, HalfIndex::from_doubled(2 * i - 1)), RatFunc::q_pow(e as i64));
                }
            }
            out
        }
        QGGenerator::F(i) => {
            // Σ_j K_i^{j-1} ⊗ F_i ⊗ id^{m-j}
            let mut out = SparseVec::zero();
            for j in 0..d.len() {
                if d[j] == 2 * i - 1 {
                    let e: i32 = d[..j].iter().map(|&x| k_exponent(i, x)).sum();
                    out.add_term(f.with(j, HalfIndex::from_doubled(2 * i + 1)), RatFunc::q_pow(e as i64));
                }
            }
            out
        }
    }
}

/// `Δ^m(g)` as a matrix on `space` (any tensor power, including `m = 0` and `m = 1`).
pub fn coproduct_act(g: QGGenerator, space: TensorSpace) -> Result<SparseOp<RatFunc>> {
    if let QGGenerator::E(i) | QGGenerator::F(i) = g {
        check_raising_index(i, &space)?;
    }
    Ok(SparseOp::from_action(space, |f| coproduct_basis(g, f)))
}

/// The action on a single factor `V̲`.
pub fn act_on_v(g: QGGenerator, r: usize) -> Result<SparseOp<RatFunc>> {
    coproduct_act(g, TensorSpace::enhanced(r, 1))
}

fn iota_basis(g: IotaGenerator, f: &IndexTuple) -> SparseVec<RatFunc> {
    let then = |first: QGGenerator, second: QGGenerator| first_then(first, second, f);
    match g {
        IotaGenerator::B(i) => {
            let mut v = coproduct_basis(QGGenerator::E(i), f);
            let t = then(QGGenerator::K(i, -1), QGGenerator::F(-i));
            v.add_scaled(&t, &RatFunc::one());
            v
        }
        IotaGenerator::B0 => {
            let mut v = coproduct_basis(QGGenerator::E(0), f);
            let kinv = coproduct_basis(QGGenerator::K(0, -1), f);
            let fk = kinv.map_linear(|h| coproduct_basis(QGGenerator::F(0), h));
            v.add_scaled(&fk, &RatFunc::q());
            v.add_scaled(&kinv, &RatFunc::one());
            v
        }
        IotaGenerator::K(i, p) => then(QGGenerator::K(-i, -p), QGGenerator::K(i, p)),
    }
}

/// `(second ∘ first)(M_f)`.
fn first_then(first: QGGenerator, second: QGGenerator, f: &IndexTuple) -> SparseVec<RatFunc> {
    coproduct_basis(first, f).map_linear(|h| coproduct_basis(second, h))
}

/// `Φ(g)` on `space`.
pub fn act_iota(g: IotaGenerator, space: TensorSpace) -> Result<SparseOp<RatFunc>> {
    match g {
        IotaGenerator::B(0) => return Err(Error::Invalid("B_i requires i ≠ 0; use B0".into())),
        IotaGenerator::B(i) => check_raising_index(i, &space)?,
        IotaGenerator::B0 => check_raising_index(0, &space)?,
        IotaGenerator::K(..) => {}
    }
    Ok(SparseOp::from_action(space, |f| iota_basis(g, f)))
}

/// Either kind of generator on `space`.
pub fn act_any(g: AnyGenerator, space: TensorSpace) -> Result<SparseOp<RatFunc>> {
    match g {
        AnyGenerator::Quantum(g) => coproduct_act(g, space),
        AnyGenerator::Iota(g) => act_iota(g, space),
    }
}

/// Levi-type generators: `B_i` for `0 < |i| ≤ r`, `B_0`, and `k_i^{±1}` for `0 < |i| ≤ r + 1`.
pub fn levi_generator_list(r: usize) -> Vec<IotaGenerator> {
    with_k(generator_list(r as i32), r)
}

/// Generators of the full iquantum group: as for the Levi type, with `B_{±(r+1)}` added.
pub fn full_generator_list(r: usize) -> Vec<IotaGenerator> {
    with_k(generator_list(r as i32 + 1), r)
}

fn generator_list(b_bound: i32) -> Vec<IotaGenerator> {
    let mut out: Vec<IotaGenerator> = (-b_bound..=b_bound).filter(|&i| i != 0).map(IotaGenerator::B).collect();
    out.push(IotaGenerator::B0);
    out
}

pub fn levi_generators(space: TensorSpace) -> Vec<(IotaGenerator, SparseOp<RatFunc>)> {
    let r = space.enhanced_r();
    levi_generator_list(r)
        .into_iter()
        .map(|g| (g, act_iota(g, space).unwrap()))
        .collect()
}

pub fn full_iota_generators(space: TensorSpace) -> Vec<(IotaGenerator, SparseOp<RatFunc>)> {
    let r = space.enhanced_r();
    full_generator_list(r)
        .into_iter()
        .map(|g| (g, act_iota(g, space).unwrap()))
        .collect()
}

fn with_k(mut gens: Vec<IotaGenerator>, r: usize) -> Vec<IotaGenerator> {
    let top = r as i32 + 1;
    for i in (-top..=top).filter(|&i| i != 0) {
        gens.push(IotaGenerator::K(i, 1));
        gens.push(IotaGenerator::K(i, -1));
    }
    gens
}

/// `Φ(X)` for `X = k_{r+1}^{r+1} k_r^r ⋯ k_1`.
pub fn element_x(space: TensorSpace) -> SparseOp<RatFunc> {
    let r = space.enhanced_r() as i32;
    let mut acc = SparseOp::identity(space);
    for i in 1..=r + 1 {
        let k = act_iota(IotaGenerator::K(i, i), space).unwrap();
        acc = k.compose(&acc).unwrap();
    }
    acc
}

/// `F(l) = q^{l(r+2) - m(r+1)}`.
pub fn f_scalar(l: usize, r: usize, m: usize) -> RatFunc {
    RatFunc::q_pow((l * (r + 2)) as i64 - (m * (r + 1)) as i64)
}

/// `G_l = Π_{k ∈ {0..m} \ {l}} (X - F(k)) / (F(l) - F(k))`.
pub fn projector_g(l: usize, space: TensorSpace) -> SparseOp<RatFunc> {
    let (r, m) = (space.enhanced_r(), space.m());
    let x = element_x(space);
    let id = SparseOp::identity(space);
    let fl = f_scalar(l, r, m);
    let mut acc = id.clone();
    for k in (0..=m).filter(|&k| k != l) {
        let fk = f_scalar(k, r, m);
        let denom = (&fl - &fk).inv().expect("F is injective");
        let factor = x.lincomb(&denom, &id, &-(&fk * &denom)).unwrap();
        acc = factor.compose(&acc).unwrap();
    }
    acc
}

fn level_of(space: &TensorSpace, j: usize) -> usize {
    classify(&space.tuple_at(j), space).level()
}

/// Basis indices `(i, j)` of an entry that moves `V̲_l` to another level, if any.
pub fn level_violation(op: &SparseOp<RatFunc>) -> Option<(usize, usize)> {
    let space = op.space();
    op.columns().iter().enumerate().find_map(|(j, col)| {
        let lj = level_of(space, j);
        col.iter()
            .find(|(i, _)| level_of(space, *i) != lj)
            .map(|(i, _)| (*i, j))
    })
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

/// Quantum group relations on `V̲^{⊗m}`: `K E K^{-1}`, `K F K^{-1}`, `[E_i, F_j]`, and Serre.
pub fn audit_quantum_relations(space: TensorSpace) -> Vec<SubCheck> {
    let r = space.enhanced_r() as i32;
    let idx: Vec<i32> = (-(r + 1)..=r + 1).collect();
    let e: Vec<_> = idx
        .iter()
        .map(|&i| coproduct_act(QGGenerator::E(i), space).unwrap())
        .collect();
    let f: Vec<_> = idx
        .iter()
        .map(|&i| coproduct_act(QGGenerator::F(i), space).unwrap())
        .collect();
    let k: Vec<_> = idx
        .iter()
        .map(|&i| coproduct_act(QGGenerator::K(i, 1), space).unwrap())
        .collect();
    let kinv: Vec<_> = idx
        .iter()
        .map(|&i| coproduct_act(QGGenerator::K(i, -1), space).unwrap())
        .collect();
    let cartan = |a: usize, b: usize| -> i64 {
        match a.abs_diff(b) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    };
    let one = RatFunc::one();
    let two_q = RatFunc::q() + RatFunc::q_pow(-1);
    let denom = q_minus_qinv().inv().unwrap();
    let zero = SparseOp::zero(space);

    let mut conj = SubCheck::new("k-conjugation");
    let mut comm = SubCheck::new("commutator");
    let mut serre = SubCheck::new("serre");
    let mut kinv_ok = SubCheck::new("k-inverse");
    for a in 0..idx.len() {
        compare(
            &mut kinv_ok,
            &space,
            || format!("K{} K{}^-1", idx[a], idx[a]),
            &k[a].compose(&kinv[a]).unwrap(),
            &SparseOp::identity(space),
        );
        for b in 0..idx.len() {
            let c = RatFunc::q_pow(cartan(a, b));
            let cinv = RatFunc::q_pow(-cartan(a, b));
            let lhs = k[a].compose(&e[b]).unwrap().compose(&kinv[a]).unwrap();
            compare(
                &mut conj,
                &space,
                || format!("K{} E{} K{}^-1", idx[a], idx[b], idx[a]),
                &lhs,
                &e[b].scale(&c),
            );
            let lhs = k[a].compose(&f[b]).unwrap().compose(&kinv[a]).unwrap();
            compare(
                &mut conj,
                &space,
                || format!("K{} F{} K{}^-1", idx[a], idx[b], idx[a]),
                &lhs,
                &f[b].scale(&cinv),
            );

            let lhs = e[a].compose(&f[b]).unwrap().sub(&f[b].compose(&e[a]).unwrap()).unwrap();
            let rhs = if a == b {
                k[a].lincomb(&denom, &kinv[a], &-&denom).unwrap()
            } else {
                zero.clone()
            };
            compare(
                &mut comm,
                &space,
                || format!("E{} F{} - F{} E{}", idx[a], idx[b], idx[b], idx[a]),
                &lhs,
                &rhs,
            );

            match a.abs_diff(b) {
                1 => {
                    for (x, name) in [(&e, "E"), (&f, "F")] {
                        // x_a^2 x_b - [2] x_a x_b x_a + x_b x_a^2
                        let aab = x[b].compose(&x[a]).unwrap().compose(&x[a]).unwrap();
                        let aba = x[a].compose(&x[b]).unwrap().compose(&x[a]).unwrap();
                        let baa = x[a].compose(&x[a]).unwrap().compose(&x[b]).unwrap();
                        let lhs = aab.lincomb(&one, &aba, &-&two_q).unwrap().add(&baa).unwrap();
                        compare(
                            &mut serre,
                            &space,
                            || format!("Serre {name}{} {name}{}", idx[a], idx[b]),
                            &lhs,
                            &zero,
                        );
                    }
                }
                d if d > 1 => {
                    for (x, name) in [(&e, "E"), (&f, "F")] {
                        let lhs = x[a].commutator(&x[b]).unwrap();
                        compare(
                            &mut serre,
                            &space,
                            || format!("{name}{} {name}{} commute", idx[a], idx[b]),
                            &lhs,
                            &zero,
                        );
                    }
                }
                _ => {}
            }
        }
    }
    vec![kinv_ok, conj, comm, serre]
}

/// Levi generators preserve every level; `B_{±(r+1)}` do not.
pub fn audit_levels(space: TensorSpace) -> Vec<SubCheck> {
    let mut pres = SubCheck::new("level-preservation");
    for (g, op) in levi_generators(space) {
        let v = level_violation(&op);
        pres.record(v.is_none(), || {
            let (i, j) = v.unwrap();
            Witness::at_basis(g.to_string(), j, space.tuple_at(j))
                .with_detail(format!("image meets {}", space.tuple_at(i)))
        });
    }
    let r = space.enhanced_r() as i32;
    let mut moves = SubCheck::new("outer-generators-move-levels").with_note("B_{±(r+1)} are expected to leave levels");
    for i in [-(r + 1), r + 1] {
        let op = act_iota(IotaGenerator::B(i), space).unwrap();
        moves.record(level_violation(&op).is_some(), || {
            Witness::labelled(format!("B{i}")).with_detail("no level change observed")
        });
    }
    vec![pres, moves]
}

/// `Φ(g)(α ⊗ η_{r+3/2}^{⊗(m-l)}) = c · (Φ_l^V(g) α) ⊗ η_{r+3/2}^{⊗(m-l)}` for every Levi
/// generator. The scalar `c` is 1 except for `k_{±(r+1)}`, which see the tail.
pub fn audit_restriction(space: TensorSpace) -> SubCheck {
    let (r, m) = (space.enhanced_r(), space.m());
    let top = space.outer_doubled();
    let mut sub = SubCheck::new("restriction")
        .with_note("k_{±(r+1)} carry the tail eigenvalue q^{∓p(m-l)}; all other generators restrict exactly");
    let gens = levi_generators(space);
    for l in 0..=m {
        let inner = TensorSpace::inner(r, l);
        let tail = vec![top; m - l];
        let embed = |g: &IndexTuple| {
            let mut d: Vec<i32> = g.entries().iter().map(|h| h.doubled()).collect();
            d.extend_from_slice(&tail);
            space.index_of(&IndexTuple::from_doubled(&d))
        };
        for (g, op) in &gens {
            let scalar = match g {
                IotaGenerator::K(i, p) => {
                    let e = k_exponent(*i, top) - k_exponent(-*i, top);
                    RatFunc::q_pow((p * e) as i64 * (m - l) as i64)
                }
                _ => RatFunc::one(),
            };
            let small = act_iota(*g, inner).unwrap();
            let mut bad = None;
            for (k, alpha) in inner.basis().enumerate() {
                let mut expected: Vec<(usize, RatFunc)> = small
                    .column(k)
                    .iter()
                    .map(|(i, c)| (embed(&inner.tuple_at(*i)), c * &scalar))
                    .collect();
                expected.sort_by_key(|e| e.0);
                let j = embed(&alpha);
                if op.column(j) != &expected[..] {
                    bad = Some(j);
                    break;
                }
            }
            sub.record(bad.is_none(), || {
                let j = bad.unwrap();
                Witness::at_basis(format!("{g} at level {l}"), j, space.tuple_at(j))
            });
        }
    }
    sub
}

/// Eigenvalue law for `Φ(X)`, partition of unity and orthogonality of the `G_l`.
pub fn check_projectors(r: usize, m: usize, cap: u128) -> CheckReport {
    let space = TensorSpace::enhanced(r, m);
    if let Err(e) = space.check_cap(cap) {
        return CheckReport::skipped("projectors", e.to_string())
            .param("r", r)
            .param("m", m);
    }
    let mut rep = CheckReport::new("projectors").param("r", r).param("m", m);
    let x = element_x(space);
    let mut eig = SubCheck::new("x-eigenvalues");
    for j in 0..space.dim() {
        let l = level_of(&space, j);
        let ok = x.column(j)[..] == [(j, f_scalar(l, r, m))];
        eig.record(ok, || {
            Witness::at_basis(format!("X on level {l}"), j, space.tuple_at(j))
        });
    }
    let g: Vec<_> = (0..=m).map(|l| projector_g(l, space)).collect();
    let mut unity = SubCheck::new("partition-of-unity");
    let mut sum = SparseOp::zero(space);
    for p in &g {
        sum = sum.add(p).unwrap();
    }
    compare(
        &mut unity,
        &space,
        || "Σ G_l = id".into(),
        &sum,
        &SparseOp::identity(space),
    );
    let mut orth = SubCheck::new("orthogonal-idempotents");
    for (l, gl) in g.iter().enumerate() {
        for (k, gk) in g.iter().enumerate() {
            let expected = if l == k { gl.clone() } else { SparseOp::zero(space) };
            compare(
                &mut orth,
                &space,
                || format!("G_{l} G_{k}"),
                &gl.compose(gk).unwrap(),
                &expected,
            );
        }
    }
    let mut support = SubCheck::new("level-support");
    for (l, gl) in g.iter().enumerate() {
        let expected = SparseOp::diagonal(space, |f| {
            if classify(f, &space).level() == l {
                RatFunc::one()
            } else {
                RatFunc::zero()
            }
        });
        compare(
            &mut support,
            &space,
            || format!("G_{l} is the level-{l} projection"),
            gl,
            &expected,
        );
        rep.dim(&format!("rank_G{l}"), gl.nnz());
    }
    rep.push(eig);
    rep.push(unity);
    rep.push(orth);
    rep.push(support);
    for l in 0..=m {
        rep.note(format!("F({l}) = {}", f_scalar(l, r, m)));
    }
    rep.finish()
}

/// Quantum-group sanity, level preservation and restriction compatibility.
pub fn check_qaction(r: usize, m: usize, cap: u128) -> CheckReport {
    let space = TensorSpace::enhanced(r, m);
    if let Err(e) = space.check_cap(cap) {
        return CheckReport::skipped("qaction", e.to_string())
            .param("r", r)
            .param("m", m);
    }
    let mut rep = CheckReport::new("qaction").param("r", r).param("m", m);
    rep.dim("space", space.dim());
    for sub in audit_quantum_relations(space) {
        rep.push(sub);
    }
    for sub in audit_levels(space) {
        rep.push(sub);
    }
    rep.push(audit_restriction(space));
    let mut kinv = SubCheck::new("k-minus-is-inverse");
    for i in 1..=r as i32 + 1 {
        let a = act_iota(IotaGenerator::K(-i, 1), space).unwrap();
        let b = act_iota(IotaGenerator::K(i, -1), space).unwrap();
        compare(&mut kinv, &space, || format!("k{} = k{}^-1", -i, i), &a, &b);
    }
    rep.push(kinv);
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn v(d: &[i32]) -> SparseVec<RatFunc> {
        SparseVec::basis(IndexTuple::from_doubled(d))
    }

    fn apply(op: &SparseOp<RatFunc>, d: &[i32]) -> SparseVec<RatFunc> {
        op.apply(&v(d))
    }

    #[test]
    fn single_factor_table() {
        let f1 = act_on_v(QGGenerator::F(1), 1).unwrap();
        assert_eq!(apply(&f1, &[1]), v(&[3]));
        for d in [-5, -3, -1, 3, 5] {
            assert!(apply(&f1, &[d]).is_zero());
        }
        let k1 = act_on_v(QGGenerator::K(1, 1), 1).unwrap();
        assert_eq!(apply(&k1, &[3]), v(&[3]).scaled(&RatFunc::q_pow(-1)));
        assert_eq!(apply(&k1, &[-5]), v(&[-5]));
        assert!(act_on_v(QGGenerator::E(3), 1).is_err());
    }

    #[test]
    fn coproduct_examples() {
        let space = TensorSpace::enhanced(1, 2);
        let k1 = coproduct_act(QGGenerator::K(1, 1), space).unwrap();
        assert_eq!(apply(&k1, &[1, 3]), v(&[1, 3]));
        let e1 = coproduct_act(QGGenerator::E(1), space).unwrap();
        let mut expected = v(&[1, 3]).scaled(&RatFunc::q());
        expected.add_term(IndexTuple::from_doubled(&[3, 1]), RatFunc::one());
        assert_eq!(apply(&e1, &[3, 3]), expected);
        let one = TensorSpace::enhanced(1, 1);
        assert_eq!(
            coproduct_act(QGGenerator::E(1), one).unwrap(),
            act_on_v(QGGenerator::E(1), 1).unwrap()
        );
    }

    #[test]
    fn iota_examples() {
        let one = TensorSpace::enhanced(1, 1);
        let b1 = act_iota(IotaGenerator::B(1), one).unwrap();
        assert_eq!(apply(&b1, &[3]), v(&[1]));
        let b0 = act_iota(IotaGenerator::B0, one).unwrap();
        let mut expected = v(&[-1]);
        expected.add_term(IndexTuple::from_doubled(&[1]), RatFunc::q());
        assert_eq!(apply(&b0, &[1]), expected);
        let k1 = act_iota(IotaGenerator::K(1, 1), one).unwrap();
        assert_eq!(apply(&k1, &[1]), v(&[1]).scaled(&RatFunc::q()));
        assert_eq!(apply(&k1, &[-1]), v(&[-1]).scaled(&RatFunc::q()));
        assert!(act_iota(IotaGenerator::B(0), one).is_err());
    }

    #[test]
    fn generator_sets() {
        let levi: Vec<String> = levi_generator_list(1).iter().map(|g| g.to_string()).collect();
        assert_eq!(
            levi,
            ["B-1", "B1", "B0", "k-2", "k-2^-1", "k-1", "k-1^-1", "k1", "k1^-1", "k2", "k2^-1"]
        );
        let full: Vec<String> = full_generator_list(1).iter().take(5).map(|g| g.to_string()).collect();
        assert_eq!(full, ["B-2", "B-1", "B1", "B2", "B0"]);
        assert_eq!(full_generator_list(1).len(), levi_generator_list(1).len() + 2);
    }

    #[test]
    fn parse_generators() {
        assert_eq!(
            "B1".parse::<AnyGenerator>().unwrap(),
            AnyGenerator::Iota(IotaGenerator::B(1))
        );
        assert_eq!(
            "B0".parse::<AnyGenerator>().unwrap(),
            AnyGenerator::Iota(IotaGenerator::B0)
        );
        assert_eq!(
            "k-2^-1".parse::<AnyGenerator>().unwrap(),
            AnyGenerator::Iota(IotaGenerator::K(-2, -1))
        );
        assert_eq!(
            "E0".parse::<AnyGenerator>().unwrap(),
            AnyGenerator::Quantum(QGGenerator::E(0))
        );
        assert!("E1^2".parse::<AnyGenerator>().is_err());
        assert!("Z1".parse::<AnyGenerator>().is_err());
    }

    #[test]
    fn f_scalar_and_x() {
        assert_eq!(f_scalar(0, 1, 2), RatFunc::q_pow(-4));
        assert_eq!(f_scalar(1, 1, 2), RatFunc::q_pow(-1));
        assert_eq!(f_scalar(2, 1, 2), RatFunc::q_pow(2));
        let x = element_x(TensorSpace::enhanced(1, 1));
        assert_eq!(apply(&x, &[5]), v(&[5]).scaled(&RatFunc::q_pow(-2)));
    }

    #[test]
    fn projector_g1() {
        let space = TensorSpace::enhanced(1, 2);
        let g1 = projector_g(1, space);
        assert!(g1.is_diagonal());
        assert_eq!(g1.nnz(), 16);
        for (j, col) in g1.columns().iter().enumerate() {
            if let Some((_, c)) = col.first() {
                assert!(c.is_one());
                assert_eq!(level_of(&space, j), 1);
            }
        }
        assert_eq!(check_projectors(1, 2, 10_000).status, Status::Pass);
    }

    #[test]
    fn qaction_sanity() {
        let rep = check_qaction(1, 2, 10_000);
        assert_eq!(rep.status, Status::Pass, "{rep:#?}");
    }

    #[test]
    fn outer_k_sees_the_tail() {
        let space = TensorSpace::enhanced(1, 2);
        let k2 = act_iota(IotaGenerator::K(2, 1), space).unwrap();
        // k_2 on η_{1/2} ⊗ η_{5/2}: trivial on the first factor, q^{-1} on the tail.
        assert_eq!(apply(&k2, &[1, 5]), v(&[1, 5]).scaled(&RatFunc::q_pow(-1)));
        let k1 = act_iota(IotaGenerator::K(1, 1), space).unwrap();
        assert_eq!(apply(&k1, &[1, 5]), v(&[1, 5]).scaled(&RatFunc::q()));
    }
}
