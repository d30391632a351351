//! Spans, generated algebras and centralizers of operator families, and the
//! double-centralizer, semisimplicity and permutation-module checks built on them.
//!
//! Operators are flattened row-major on the global lexicographic basis: entry
//! `(i, j)` of an `N × N` matrix sits at coordinate `i·N + j`.
//!
//! Two modes are offered. `Exact` eliminates over `Q(q)`. `Evaluated` specializes
//! every operator at random rational points, reduces mod `2^61 - 1`, and accepts a
//! dimension only when two independent points agree; a disagreement falls back to
//! the exact computation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::duplex;
use crate::error::{Error, Result};
use crate::field::{Field, Fp, SparseRow};
use crate::heckeb::{self, SignedPerm};
use crate::iquantum::{self, IotaGenerator};
use crate::linalg::{rank_of, Echelon};
use crate::ratfunc::{BigRat, RatFunc};
use crate::report::{CheckReport, SubCheck, Witness};
use crate::tensorspace::{classify, weights, SparseOp, SparseVec, TensorSpace, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    Exact,
    Evaluated { seed: u64 },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Evaluated { .. } => "eval",
        }
    }
}

/// A dimension together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimCertificate {
    pub dimension: usize,
    pub method: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<String>,
    pub pivot_digest: String,
}

fn digest(pivots: &[usize]) -> String {
    let mut h = Sha256::new();
    for p in pivots {
        h.update((*p as u64).to_le_bytes());
    }
    hex::encode(h.finalize().as_slice())
}

fn exact_cert(dimension: usize, pivots: &[usize]) -> DimCertificate {
    DimCertificate {
        dimension,
        method: "exact".into(),
        points: Vec::new(),
        pivot_digest: digest(pivots),
    }
}

/// Random rationals `a/b` with `0 < |a| ≤ 1000`, `1 ≤ b ≤ 1000`, avoiding `0` and `±1`.
pub struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn sample(&mut self) -> BigRat {
        loop {
            let a: i64 = self.rng.gen_range(-1000..=1000);
            let b: i64 = self.rng.gen_range(1..=1000);
            if a == 0 || a.abs() == b {
                continue;
            }
            return BigRat::new(a.into(), b.into());
        }
    }
}

/// Specializes every operator at `point` and reduces mod `2^61 - 1`; `None` at a pole.
pub fn eval_ops(ops: &[SparseOp<RatFunc>], point: &BigRat) -> Option<Vec<SparseOp<Fp>>> {
    ops.par_iter().map(|op| op.eval_mod(point)).collect()
}

/// Runs `compute` at two sampled points; accepts when they agree, otherwise
/// returns `None` so the caller can fall back to exact arithmetic.
fn at_two_points<T>(
    ops: &[SparseOp<RatFunc>],
    seed: u64,
    compute: impl Fn(&[SparseOp<Fp>]) -> (usize, Vec<usize>, T),
) -> Option<(DimCertificate, T)> {
    let mut sampler = PointSampler::new(seed);
    let mut results = Vec::new();
    let mut points = Vec::new();
    let mut attempts = 0;
    while results.len() < 2 {
        attempts += 1;
        if attempts > 16 {
            return None;
        }
        let p = sampler.sample();
        let Some(evaluated) = eval_ops(ops, &p) else { continue };
        results.push(compute(&evaluated));
        points.push(p.to_string());
    }
    let second = results.pop().unwrap();
    let (dim, pivots, extra) = results.pop().unwrap();
    if dim != second.0 {
        return None;
    }
    Some((
        DimCertificate {
            dimension: dim,
            method: "evaluated mod 2^61-1".into(),
            points,
            pivot_digest: digest(&pivots),
        },
        extra,
    ))
}

fn check_family<F: Field>(ops: &[SparseOp<F>]) -> Result<Option<TensorSpace>> {
    let Some(first) = ops.first() else { return Ok(None) };
    let space = *first.space();
    if let Some(bad) = ops.iter().find(|o| *o.space() != space) {
        return Err(Error::DimensionMismatch {
            left: bad.dim(),
            right: first.dim(),
        });
    }
    Ok(Some(space))
}

fn span_rank<F: Field>(ops: &[SparseOp<F>]) -> (usize, Vec<usize>) {
    let Some(first) = ops.first() else {
        return (0, Vec::new());
    };
    let n = first.dim();
    let mut e = Echelon::new(n * n);
    for op in ops {
        e.insert(op.flatten());
    }
    (e.rank(), e.pivot_columns())
}

/// Rank of the flattened family.
pub fn span_dimension(ops: &[SparseOp<RatFunc>], mode: Mode) -> Result<DimCertificate> {
    check_family(ops)?;
    if let Mode::Evaluated { seed } = mode {
        if let Some((cert, ())) = at_two_points(ops, seed, |e| {
            let (d, p) = span_rank(e);
            (d, p, ())
        }) {
            return Ok(cert);
        }
    }
    let (d, p) = span_rank(ops);
    Ok(exact_cert(d, &p))
}

/// How a closure basis element arose, so it can be rebuilt in another field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    Identity,
    /// `gen ∘ basis[parent]`.
    Left {
        parent: usize,
        gen: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Closure<F> {
    pub basis: Vec<SparseOp<F>>,
    pub steps: Vec<Step>,
    pub pivots: Vec<usize>,
    /// False when `max_dim` stopped the iteration early.
    pub complete: bool,
}

/// Linear basis of the unital algebra generated by `gens`: start from the identity and
/// left-multiply every new element by every generator until nothing new appears. Every
/// word is `g ∘ (shorter word)`, so left products reach the whole algebra.
pub fn closure<F: Field>(space: TensorSpace, gens: &[SparseOp<F>], max_dim: usize) -> Closure<F> {
    let n2 = space.dim() * space.dim();
    let mut ech = Echelon::new(n2);
    let id = SparseOp::identity(space);
    ech.insert(id.flatten());
    let mut basis = vec![id];
    let mut steps = vec![Step::Identity];
    let mut frontier = vec![0usize];
    let mut complete = true;
    while !frontier.is_empty() {
        let candidates: Vec<(Step, SparseOp<F>)> = frontier
            .par_iter()
            .flat_map_iter(|&p| {
                let b = &basis[p];
                gens.iter()
                    .enumerate()
                    .map(move |(g, op)| (Step::Left { parent: p, gen: g }, op.compose(b).unwrap()))
            })
            .collect();
        let mut next = Vec::new();
        for (step, op) in candidates {
            if ech.insert(op.flatten()) {
                next.push(basis.len());
                basis.push(op);
                steps.push(step);
                if basis.len() > max_dim {
                    complete = false;
                    break;
                }
            }
        }
        if !complete {
            break;
        }
        frontier = next;
    }
    Closure {
        pivots: ech.pivot_columns(),
        basis,
        steps,
        complete,
    }
}

/// Rebuilds closure basis elements from their recorded steps over another field.
pub fn rebuild<F: Field>(space: TensorSpace, gens: &[SparseOp<F>], steps: &[Step]) -> Vec<SparseOp<F>> {
    let mut out: Vec<SparseOp<F>> = Vec::with_capacity(steps.len());
    for s in steps {
        let op = match *s {
            Step::Identity => SparseOp::identity(space),
            Step::Left { parent, gen } => gens[gen].compose(&out[parent]).unwrap(),
        };
        out.push(op);
    }
    out
}

/// Default bound on closure dimension: the full matrix algebra.
pub fn closure_cap(space: &TensorSpace) -> usize {
    space.dim() * space.dim()
}

pub struct ClosureOutcome {
    pub certificate: DimCertificate,
    pub steps: Vec<Step>,
    pub complete: bool,
}

/// Dimension of the unital algebra generated by `gens` (identity only when empty).
pub fn algebra_closure(space: TensorSpace, gens: &[SparseOp<RatFunc>], mode: Mode) -> Result<ClosureOutcome> {
    check_family(gens)?;
    let cap = closure_cap(&space);
    if let Mode::Evaluated { seed } = mode {
        if !gens.is_empty() {
            let res = at_two_points(gens, seed, |e| {
                let c = closure(space, e, cap);
                (c.basis.len(), c.pivots, (c.steps, c.complete))
            });
            if let Some((certificate, (steps, complete))) = res {
                return Ok(ClosureOutcome {
                    certificate,
                    steps,
                    complete,
                });
            }
        }
    }
    let c = closure(space, gens, cap);
    Ok(ClosureOutcome {
        certificate: exact_cert(c.basis.len(), &c.pivots),
        steps: c.steps,
        complete: c.complete,
    })
}

/// Row-wise view: `rows[i]` lists `(k, A_{ik})`.
fn rows_of<F: Field>(op: &SparseOp<F>) -> Vec<SparseRow<F>> {
    let mut rows = vec![Vec::new(); op.dim()];
    for (j, col) in op.columns().iter().enumerate() {
        for (i, v) in col {
            rows[*i].push((j, v.clone()));
        }
    }
    rows
}

/// The linear conditions `(ZA - AZ)_{ij} = 0` on the row-major unknowns `Z`.
fn sylvester_rows<F: Field>(op: &SparseOp<F>) -> Vec<SparseRow<F>> {
    let n = op.dim();
    let rows = rows_of(op);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut row: Vec<(usize, F)> = Vec::new();
            // (ZA)_{ij} = Σ_k Z_{ik} A_{kj}
            for (k, a) in op.column(j) {
                row.push((i * n + k, a.clone()));
            }
            // (AZ)_{ij} = Σ_k A_{ik} Z_{kj}
            for (k, a) in &rows[i] {
                row.push((k * n + j, a.neg()));
            }
            row.sort_by_key(|e| e.0);
            let mut merged: SparseRow<F> = Vec::with_capacity(row.len());
            for (c, v) in row {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv = lv.add(&v),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            if !merged.is_empty() {
                out.push(merged);
            }
        }
    }
    out
}

/// The commutation conditions against every operator, split into independent pieces.
///
/// Singleton conditions force an unknown to vanish; those unknowns are removed until
/// none remain, and the surviving conditions are grouped by connected unknowns.
pub struct CentralizerSystem<F> {
    unknowns: usize,
    forced_zero: Vec<usize>,
    blocks: Vec<(Vec<usize>, Echelon<F>)>,
}

impl<F: Field> CentralizerSystem<F> {
    pub fn new(ops: &[SparseOp<F>]) -> Self {
        let n = ops[0].dim();
        let unknowns = n * n;
        let mut rows: Vec<SparseRow<F>> = ops.par_iter().flat_map_iter(sylvester_rows).collect();
        let mut zero = vec![false; unknowns];
        let mut forced_zero = Vec::new();
        loop {
            let mut fresh = false;
            for r in &rows {
                if r.len() == 1 && !zero[r[0].0] {
                    zero[r[0].0] = true;
                    forced_zero.push(r[0].0);
                    fresh = true;
                }
            }
            if !fresh {
                break;
            }
            for r in rows.iter_mut() {
                r.retain(|(c, _)| !zero[*c]);
            }
            rows.retain(|r| !r.is_empty());
        }
        forced_zero.sort_unstable();

        let mut parent: Vec<usize> = (0..unknowns).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for r in &rows {
            let a = find(&mut parent, r[0].0);
            for (c, _) in &r[1..] {
                let b = find(&mut parent, *c);
                if a != b {
                    parent[b] = a;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<SparseRow<F>>)> = Default::default();
        for c in (0..unknowns).filter(|c| !zero[*c]) {
            let root = find(&mut parent, c);
            groups.entry(root).or_default().0.push(c);
        }
        for r in rows {
            let root = find(&mut parent, r[0].0);
            groups.get_mut(&root).unwrap().1.push(r);
        }
        let blocks = groups
            .into_values()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(cols, mut rows)| {
                rows.sort_by(|a, b| (a.len(), a[0].0).cmp(&(b.len(), b[0].0)));
                rows.dedup();
                let mut e = Echelon::new(unknowns);
                for r in rows {
                    e.insert(r);
                }
                (cols, e)
            })
            .collect();
        Self {
            unknowns,
            forced_zero,
            blocks,
        }
    }

    pub fn rank(&self) -> usize {
        self.forced_zero.len() + self.blocks.iter().map(|(_, e)| e.rank()).sum::<usize>()
    }

    pub fn nullity(&self) -> usize {
        self.unknowns - self.rank()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.forced_zero.clone();
        for (_, e) in &self.blocks {
            p.extend(e.pivot_columns());
        }
        p.sort_unstable();
        p
    }

    pub fn nullspace(&self) -> Vec<SparseRow<F>> {
        let mut out: Vec<SparseRow<F>> = self
            .blocks
            .iter()
            .flat_map(|(cols, e)| e.nullspace_in(cols.iter().copied()))
            .collect();
        out.sort_by_key(|v| v.iter().map(|(c, _)| *c).max());
        out
    }
}

/// `dim {Z : ZA = AZ for all A ∈ ops}`.
pub fn centralizer_dimension(ops: &[SparseOp<RatFunc>], mode: Mode) -> Result<DimCertificate> {
    if check_family(ops)?.is_none() {
        return Err(Error::Invalid("centralizer of an empty family needs a space".into()));
    }
    if let Mode::Evaluated { seed } = mode {
        if let Some((cert, ())) = at_two_points(ops, seed, |e| {
            let s = CentralizerSystem::new(e);
            (s.nullity(), s.pivot_columns(), ())
        }) {
            return Ok(cert);
        }
    }
    let s = CentralizerSystem::new(ops);
    Ok(exact_cert(s.nullity(), &s.pivot_columns()))
}

/// A basis of the centralizer, as operators.
pub fn centralizer_basis<F: Field>(ops: &[SparseOp<F>]) -> Vec<SparseOp<F>> {
    let space = *ops[0].space();
    CentralizerSystem::new(ops)
        .nullspace()
        .into_iter()
        .map(|v| SparseOp::unflatten(space, &v))
        .collect()
}

/// Every generator pair commutes exactly.
pub fn commutation_subcheck(left: &[(String, SparseOp<RatFunc>)], right: &[(String, SparseOp<RatFunc>)]) -> SubCheck {
    let mut sub = SubCheck::new("commutation");
    let pairs: Vec<(usize, usize)> = (0..left.len())
        .flat_map(|a| (0..right.len()).map(move |b| (a, b)))
        .collect();
    let results: Vec<Option<usize>> = pairs
        .par_iter()
        .map(|&(a, b)| left[a].1.commutator(&right[b].1).unwrap().first_nonzero_column())
        .collect();
    for (&(a, b), wit) in pairs.iter().zip(results) {
        sub.record(wit.is_none(), || {
            let j = wit.unwrap();
            let space = left[a].1.space();
            Witness::at_basis(format!("[{}, {}]", left[a].0, right[b].0), j, space.tuple_at(j))
        });
    }
    sub
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// Levi-type iquantum group against the duplex Hecke algebra.
    Levi,
    /// Full iquantum group against the Hecke algebra of type B.
    Full,
}

impl Side {
    pub fn name(&self) -> &'static str {
        match self {
            Side::Levi => "levi",
            Side::Full => "full",
        }
    }
}

type Named = Vec<(String, SparseOp<RatFunc>)>;

fn named_iota(list: Vec<(IotaGenerator, SparseOp<RatFunc>)>) -> Named {
    list.into_iter().map(|(g, op)| (g.to_string(), op)).collect()
}

pub fn left_generators(space: TensorSpace, side: Side) -> Named {
    match side {
        Side::Levi => named_iota(iquantum::levi_generators(space)),
        Side::Full => named_iota(iquantum::full_iota_generators(space)),
    }
}

pub fn right_generators(space: TensorSpace, side: Side) -> Named {
    match side {
        Side::Levi => duplex::generator_ops(space)
            .into_iter()
            .map(|(g, op)| (g.to_string(), op))
            .collect(),
        Side::Full => heckeb::generator_ops(space)
            .into_iter()
            .enumerate()
            .map(|(i, op)| (format!("H_{i}"), op))
            .collect(),
    }
}

fn ops_of(named: &Named) -> Vec<SparseOp<RatFunc>> {
    named.iter().map(|(_, o)| o.clone()).collect()
}

/// Dimension comparison `closure(a) = centralizer(b)`, recorded as one subcheck.
fn dimension_subcheck(
    name: &str,
    space: TensorSpace,
    a: &Named,
    b: &Named,
    mode: Mode,
    rep: &mut CheckReport,
    labels: (&str, &str),
) -> Result<(SubCheck, ClosureOutcome, DimCertificate)> {
    let clo = algebra_closure(space, &ops_of(a), mode)?;
    let cen = centralizer_dimension(&ops_of(b), mode)?;
    let mut sub = SubCheck::new(name);
    let (dc, dz) = (clo.certificate.dimension, cen.dimension);
    rep.dim(labels.0, dc);
    rep.dim(labels.1, dz);
    sub.record(clo.complete, || {
        Witness::labelled("closure").with_detail("iteration cap reached")
    });
    sub.record(dc == dz, || {
        Witness::labelled(format!("{} vs {}", labels.0, labels.1)).with_detail(format!("dimension gap: {dc} ≠ {dz}"))
    });
    sub.note = Some(format!(
        "closure {} [{}], centralizer {} [{}]",
        dc, clo.certificate.method, dz, cen.method
    ));
    Ok((sub, clo, cen))
}

/// Rebuilds the evaluated closure basis exactly and confirms its rank over `Q(q)`.
fn exact_spot_check(name: &str, space: TensorSpace, gens: &Named, steps: &[Step], expected: usize) -> SubCheck {
    let exact = rebuild(space, &ops_of(gens), steps);
    let rank = rank_of(space.dim() * space.dim(), exact.iter().map(SparseOp::flatten));
    let mut sub = SubCheck::new(name);
    sub.record(rank == expected, || {
        Witness::labelled("exact rank").with_detail(format!("exact rank {rank}, evaluated {expected}"))
    });
    sub.note = Some(format!(
        "exact rank of the {} recorded closure words over Q(q): {rank}",
        steps.len()
    ));
    sub
}

/// Generator families for a double-centralizer comparison.
pub struct DualityInput {
    pub left: Named,
    pub right: Named,
}

impl DualityInput {
    pub fn standard(space: TensorSpace, side: Side) -> Self {
        Self {
            left: left_generators(space, side),
            right: right_generators(space, side),
        }
    }
}

/// (a) generator families commute, (b) `dim closure(left) = dim centralizer(right)`,
/// (c) `dim closure(right) = dim centralizer(left)`.
pub fn double_centralizer_with(
    name: &str,
    space: TensorSpace,
    input: &DualityInput,
    mode: Mode,
    spot_check: bool,
) -> Result<CheckReport> {
    let mut rep = CheckReport::new(name);
    rep.dim("space", space.dim());
    rep.push(commutation_subcheck(&input.left, &input.right));
    let (b, clo_l, _) = dimension_subcheck(
        "closure-left-vs-centralizer-right",
        space,
        &input.left,
        &input.right,
        mode,
        &mut rep,
        ("closure_left", "centralizer_right"),
    )?;
    rep.push(b);
    let (c, clo_r, _) = dimension_subcheck(
        "closure-right-vs-centralizer-left",
        space,
        &input.right,
        &input.left,
        mode,
        &mut rep,
        ("closure_right", "centralizer_left"),
    )?;
    rep.push(c);
    if spot_check && matches!(mode, Mode::Evaluated { .. }) {
        rep.push(exact_spot_check(
            "exact-rank-left",
            space,
            &input.left,
            &clo_l.steps,
            clo_l.certificate.dimension,
        ));
        rep.push(exact_spot_check(
            "exact-rank-right",
            space,
            &input.right,
            &clo_r.steps,
            clo_r.certificate.dimension,
        ));
        rep.note(
            "an evaluated rank is a lower bound for the rank over Q(q) and an evaluated nullity an upper bound; \
             with exact commutation, equal evaluated dimensions pin the exact ones",
        );
    }
    for (label, cert) in [
        ("closure_left", &clo_l.certificate),
        ("closure_right", &clo_r.certificate),
    ] {
        if !cert.points.is_empty() {
            rep.note(format!("{label} evaluated at q ∈ {{{}}}", cert.points.join(", ")));
        }
        rep.note(format!("{label} pivot digest {}", cert.pivot_digest));
    }
    Ok(rep.finish())
}

pub fn double_centralizer_check(r: usize, m: usize, side: Side, mode: Mode, cap: u128) -> CheckReport {
    let name = format!("duality-{}", side.name());
    let head = |rep: CheckReport| {
        rep.param("r", r)
            .param("m", m)
            .param("side", side.name())
            .param("mode", mode.name())
    };
    let space = TensorSpace::enhanced(r, m);
    if let Err(e) = space.check_cap(cap) {
        return head(CheckReport::skipped(name, e.to_string()));
    }
    let input = DualityInput::standard(space, side);
    match double_centralizer_with(&name, space, &input, mode, true) {
        Ok(rep) => head(rep),
        Err(e) => head(CheckReport::skipped(name, e.to_string())),
    }
}

/// The Levi comparison with `B_0` removed from the generating set; expected to show a gap.
pub fn double_centralizer_without_b0(r: usize, m: usize, mode: Mode) -> Result<CheckReport> {
    let space = TensorSpace::enhanced(r, m);
    let mut input = DualityInput::standard(space, Side::Levi);
    input.left.retain(|(name, _)| name != "B0");
    let rep = double_centralizer_with("duality-levi-without-B0", space, &input, mode, false)?;
    Ok(rep.param("r", r).param("m", m).param("mode", mode.name()))
}

/// Commutation of Levi (or full) generators with duplex (or Hecke) generators alone.
pub fn check_commutation(r: usize, m: usize, side: Side, cap: u128) -> CheckReport {
    let name = format!("commutation-{}", side.name());
    let space = TensorSpace::enhanced(r, m);
    if let Err(e) = space.check_cap(cap) {
        return CheckReport::skipped(name, e.to_string()).param("r", r).param("m", m);
    }
    let input = DualityInput::standard(space, side);
    let mut rep = CheckReport::new(name)
        .param("r", r)
        .param("m", m)
        .param("side", side.name());
    rep.dim("left_generators", input.left.len());
    rep.dim("right_generators", input.right.len());
    rep.push(commutation_subcheck(&input.left, &input.right));
    rep.finish()
}

fn gram_rank<F: Field>(basis: &[SparseOp<F>]) -> usize {
    let d = basis.len();
    let rows: Vec<SparseRow<F>> = (0..d)
        .into_par_iter()
        .map(|i| {
            (0..d)
                .filter_map(|j| {
                    let t = basis[i].trace_product(&basis[j]);
                    (!t.is_zero()).then_some((j, t))
                })
                .collect()
        })
        .collect();
    rank_of(d, rows)
}

/// Trace-form test: the algebra generated by `gens` is semisimple iff the Gram matrix
/// `tr(b_i b_j)` on a basis is nonsingular.
pub fn semisimplicity_with(name: &str, space: TensorSpace, gens: &[SparseOp<RatFunc>], mode: Mode) -> CheckReport {
    let mut rep = CheckReport::new(name).param("mode", mode.name());
    let cap = closure_cap(&space);
    let (dim, rank, method, points) = match mode {
        Mode::Evaluated { seed } => {
            let res = at_two_points(gens, seed, |e| {
                let c = closure(space, e, cap);
                let g = gram_rank(&c.basis);
                (c.basis.len(), c.pivots, g)
            });
            match res {
                Some((cert, g)) => (cert.dimension, g, "evaluated mod 2^61-1", cert.points),
                None => exact_semisimple(space, gens, cap),
            }
        }
        Mode::Exact => exact_semisimple(space, gens, cap),
    };
    rep.dim("algebra", dim);
    rep.dim("gram_rank", rank);
    let mut sub = SubCheck::new("trace-form");
    sub.record(rank == dim, || {
        Witness::labelled("Gram matrix").with_detail(format!("rank {rank} < dimension {dim}: trace form degenerate"))
    });
    sub.note = Some(format!("method {method}"));
    rep.push(sub);
    if !points.is_empty() {
        rep.note(format!(
            "a nonsingular Gram matrix at a point is nonsingular over Q(q); points {}",
            points.join(", ")
        ));
    }
    rep.finish()
}

fn exact_semisimple(
    space: TensorSpace,
    gens: &[SparseOp<RatFunc>],
    cap: usize,
) -> (usize, usize, &'static str, Vec<String>) {
    let c = closure(space, gens, cap);
    (c.basis.len(), exact_gram_rank(&c.basis), "exact", Vec::new())
}

/// Rank of the exact Gram matrix. A specialization that is nonsingular settles full rank
/// (the determinant is nonzero at that point); otherwise eliminate over `Q(q)`.
fn exact_gram_rank(basis: &[SparseOp<RatFunc>]) -> usize {
    let d = basis.len();
    let rows: Vec<SparseRow<RatFunc>> = (0..d)
        .into_par_iter()
        .map(|i| {
            (0..d)
                .filter_map(|j| {
                    let t = basis[i].trace_product(&basis[j]);
                    (!t.is_zero()).then_some((j, t))
                })
                .collect()
        })
        .collect();
    let mut sampler = PointSampler::new(0);
    for _ in 0..4 {
        let p = sampler.sample();
        let specialized: Option<Vec<SparseRow<Fp>>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(c, v)| Fp::eval(v, &p).map(|x| (*c, x)))
                    .filter(|e| e.as_ref().is_none_or(|(_, x)| !x.is_zero()))
                    .collect()
            })
            .collect();
        if let Some(rows_p) = specialized {
            if rank_of(d, rows_p) == d {
                return d;
            }
        }
    }
    rank_of(d, rows)
}

/// Semisimplicity of the `Ξ`-image of the duplex Hecke algebra.
pub fn semisimplicity_check(r: usize, m: usize, mode: Mode, cap: u128) -> CheckReport {
    let space = TensorSpace::enhanced(r, m);
    if let Err(e) = space.check_cap(cap) {
        return CheckReport::skipped("semisimple", e.to_string())
            .param("r", r)
            .param("m", m);
    }
    let gens: Vec<_> = duplex::generator_ops(space).into_iter().map(|(_, op)| op).collect();
    semisimplicity_with("semisimple", space, &gens, mode)
        .param("r", r)
        .param("m", m)
}

/// `m! / Π λ_i! · 2^m`, the number of basis vectors of weight `λ`.
pub fn weight_space_dim(weight: &Weight) -> u128 {
    let m = weight.total();
    let mut d: u128 = (1..=m as u128).product();
    for &p in weight.parts() {
        d /= (1..=p as u128).product::<u128>();
    }
    d << m
}

/// Permutation modules `𝔐_λ · Ψ(H(B_m))` on the `n`-dimensional ambient space, and the
/// level gradation of the centralizer of `Ξ(𝔇_m)` on `V̲^{⊗m}`.
pub fn permutation_module_check(r: usize, m: usize, n: usize, mode: Mode, cap: u128) -> CheckReport {
    let name = "schur";
    let head = |rep: CheckReport| {
        rep.param("r", r)
            .param("m", m)
            .param("ambient", n)
            .param("mode", mode.name())
    };
    let ambient = match TensorSpace::with_ambient(n, m) {
        Ok(s) => s,
        Err(e) => return head(CheckReport::skipped(name, e.to_string())),
    };
    let enhanced = TensorSpace::enhanced(r, m);
    if let Err(e) = ambient.check_cap(cap).and(enhanced.check_cap(cap)) {
        return head(CheckReport::skipped(name, e.to_string()));
    }
    let mut rep = head(CheckReport::new(name));
    let ws = weights(n, m);
    rep.dim("weights", ws.len());

    let elements = SignedPerm::all(m);
    let mut orbit = SubCheck::new("orbit-span");
    for w in &ws {
        let start = SparseVec::basis(heckeb::m_lambda(w));
        let rows: Vec<SparseRow<RatFunc>> = elements
            .par_iter()
            .map(|s| heckeb::act_word(&s.reduced_word(), &start, m).unwrap().to_row(&ambient))
            .collect();
        let d = match mode {
            Mode::Exact => rank_of(ambient.dim(), rows),
            Mode::Evaluated { seed } => {
                let mut sampler = PointSampler::new(seed);
                let p = sampler.sample();
                let evaluated: Option<Vec<SparseRow<Fp>>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|(c, v)| Fp::eval(v, &p).map(|x| (*c, x)))
                            .filter(|e| e.as_ref().is_none_or(|(_, x)| !x.is_zero()))
                            .collect()
                    })
                    .collect();
                let d = evaluated.map_or(0, |e| rank_of(ambient.dim(), e));
                // A full-rank specialization is conclusive; otherwise confirm exactly.
                if d as u128 == weight_space_dim(w) {
                    d
                } else {
                    rank_of(ambient.dim(), rows)
                }
            }
        };
        let expected = weight_space_dim(w);
        rep.dim(&format!("orbit_{w}"), d);
        orbit.record(d as u128 == expected, || {
            Witness::labelled(format!("λ = {w}")).with_detail(format!("orbit span {d}, dim V_λ {expected}"))
        });
    }
    rep.push(orbit);

    // Gradation: the centralizer of Ξ(𝔇_m) preserves every level.
    let gens: Vec<_> = duplex::generator_ops(enhanced).into_iter().map(|(_, op)| op).collect();
    let basis_levels: Vec<Option<(usize, usize, usize)>> = match mode {
        Mode::Exact => level_breaks(&centralizer_basis(&gens)),
        Mode::Evaluated { seed } => {
            let mut sampler = PointSampler::new(seed);
            let evaluated = loop {
                if let Some(e) = eval_ops(&gens, &sampler.sample()) {
                    break e;
                }
            };
            level_breaks(&centralizer_basis(&evaluated))
        }
    };
    rep.dim("centralizer_basis", basis_levels.len());
    let mut grad = SubCheck::new("level-gradation");
    for (k, v) in basis_levels.iter().enumerate() {
        grad.record(v.is_none(), || {
            let (i, j, _) = v.unwrap();
            Witness::at_basis(format!("centralizer basis element {k}"), j, enhanced.tuple_at(j))
                .with_detail(format!("maps into {}", enhanced.tuple_at(i)))
        });
    }
    rep.push(grad);
    rep.finish()
}

fn level_breaks<F: Field>(basis: &[SparseOp<F>]) -> Vec<Option<(usize, usize, usize)>> {
    basis
        .iter()
        .map(|op| {
            let space = op.space();
            op.columns().iter().enumerate().find_map(|(j, col)| {
                let lj = classify(&space.tuple_at(j), space).level();
                col.iter()
                    .find(|(i, _)| classify(&space.tuple_at(*i), space).level() != lj)
                    .map(|(i, _)| (*i, j, lj))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn small() -> TensorSpace {
        TensorSpace::with_ambient(3 * 2, 1).unwrap()
    }

    fn unit(space: TensorSpace, i: usize, j: usize) -> SparseOp<RatFunc> {
        let mut cols = vec![Vec::new(); space.dim()];
        cols[j] = vec![(i, RatFunc::one())];
        SparseOp::from_columns(space, cols).unwrap()
    }

    #[test]
    fn span_examples() {
        let s = small();
        let id = SparseOp::<RatFunc>::identity(s);
        assert_eq!(
            span_dimension(std::slice::from_ref(&id), Mode::Exact)
                .unwrap()
                .dimension,
            1
        );
        assert_eq!(
            span_dimension(&[id.clone(), id], Mode::Evaluated { seed: 3 })
                .unwrap()
                .dimension,
            1
        );
    }

    #[test]
    fn closure_examples() {
        let s = small();
        assert_eq!(algebra_closure(s, &[], Mode::Exact).unwrap().certificate.dimension, 1);
        let p = unit(s, 0, 0);
        assert_eq!(algebra_closure(s, &[p], Mode::Exact).unwrap().certificate.dimension, 2);
        let units: Vec<_> = (0..s.dim())
            .map(|i| unit(s, i, (i + 1) % s.dim()))
            .chain([unit(s, 0, 0)])
            .collect();
        let full = algebra_closure(s, &units, Mode::Evaluated { seed: 1 }).unwrap();
        assert_eq!(full.certificate.dimension, 36);
        assert_eq!(full.certificate.points.len(), 2);
    }

    #[test]
    fn centralizer_examples() {
        let s = small();
        let id = SparseOp::<RatFunc>::identity(s);
        assert_eq!(centralizer_dimension(&[id], Mode::Exact).unwrap().dimension, 36);
        let units: Vec<_> = (0..6)
            .flat_map(|i| (0..6).map(move |j| (i, j)))
            .map(|(i, j)| unit(s, i, j))
            .collect();
        assert_eq!(centralizer_dimension(&units, Mode::Exact).unwrap().dimension, 1);
        assert_eq!(
            centralizer_dimension(&units, Mode::Evaluated { seed: 9 })
                .unwrap()
                .dimension,
            1
        );
    }

    #[test]
    fn centralizer_basis_commutes() {
        let space = TensorSpace::enhanced(1, 1);
        let gens: Vec<_> = iquantum::levi_generators(space).into_iter().map(|(_, o)| o).collect();
        let basis = centralizer_basis(&gens);
        assert_eq!(
            basis.len(),
            centralizer_dimension(&gens, Mode::Exact).unwrap().dimension
        );
        for z in &basis {
            for g in &gens {
                assert!(z.commutator(g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn hecke_span_bounded_by_group_order() {
        let space = TensorSpace::enhanced(1, 2);
        let ops: Vec<_> = SignedPerm::all(2)
            .iter()
            .map(|w| heckeb::element_op(space, w).unwrap())
            .collect();
        let exact = span_dimension(&ops, Mode::Exact).unwrap();
        let eval = span_dimension(&ops, Mode::Evaluated { seed: 0 }).unwrap();
        assert!(exact.dimension <= 8);
        assert_eq!(exact.dimension, eval.dimension);
    }

    #[test]
    fn semisimplicity_examples() {
        let s = small();
        let units: Vec<_> = (0..6).map(|i| unit(s, i, (i + 1) % 6)).chain([unit(s, 0, 0)]).collect();
        let rep = semisimplicity_with("full", s, &units, Mode::Exact);
        assert_eq!(rep.status, Status::Pass);
        let nil = unit(s, 0, 1);
        let rep = semisimplicity_with("nilpotent", s, &[nil], Mode::Exact);
        assert_eq!(rep.status, Status::Fail);
        assert_eq!(rep.dimensions["algebra"], 2);
        assert_eq!(rep.dimensions["gram_rank"], 1);
    }

    #[test]
    fn weight_dims() {
        assert_eq!(weight_space_dim(&Weight(vec![2, 0])), 4);
        assert_eq!(weight_space_dim(&Weight(vec![1, 1])), 8);
        assert_eq!(weight_space_dim(&Weight(vec![1, 1, 1])), 6 * 8);
    }

    #[test]
    fn sampler_is_reproducible() {
        let a: Vec<_> = (0..5)
            .map({
                let mut s = PointSampler::new(42);
                move |_| s.sample()
            })
            .collect();
        let b: Vec<_> = (0..5)
            .map({
                let mut s = PointSampler::new(42);
                move |_| s.sample()
            })
            .collect();
        assert_eq!(a, b);
        for p in a {
            assert!(p != BigRat::from_integer(1.into()) && p != BigRat::from_integer((-1).into()));
        }
    }
}
