//! One line per acceptance criterion. Every comparison is exact; only the time
//! budgets are tolerances.

use std::process::Command;
use std::time::{Duration, Instant};

use bduplex_core::commutant::{self, Mode, Side};
use bduplex_core::report::{CheckReport, Status};
use bduplex_core::tensorspace::DEFAULT_BASIS_CAP;
use bduplex_core::{duplex, heckeb, iquantum};

const CAP: u128 = DEFAULT_BASIS_CAP;
const SEED: u64 = 0;
const RELATION_BUDGET: Duration = Duration::from_secs(60);
const DUALITY_BUDGET: Duration = Duration::from_secs(600);
const INSTANCES: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 2)];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn all_pass(reports: &[CheckReport]) -> Outcome {
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(CheckReport::summary)
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} reports pass", reports.len())
        } else {
            bad.join(" | ")
        },
    }
}

fn timed_instances(f: impl Fn(usize, usize) -> CheckReport, budget: Duration) -> Outcome {
    let mut reports = Vec::new();
    let mut slow = Vec::new();
    for (r, m) in INSTANCES {
        let t = Instant::now();
        reports.push(f(r, m));
        let dt = t.elapsed();
        if dt > budget {
            slow.push(format!("(r,m)=({r},{m}) took {dt:?}"));
        }
    }
    let mut out = all_pass(&reports);
    if !slow.is_empty() {
        out.ok = false;
        out.detail
            .push_str(&format!("; over budget {budget:?}: {}", slow.join(", ")));
    }
    out
}

fn criterion_1() -> Outcome {
    timed_instances(|r, m| heckeb::check_hecke_relations(r, m, CAP), RELATION_BUDGET)
}

fn criterion_2() -> Outcome {
    let mut out = timed_instances(|r, m| duplex::check_duplex_relations(r, m, CAP), RELATION_BUDGET);
    let rep = duplex::check_duplex_relations(1, 2, CAP);
    let boundary = rep.subchecks.iter().find(|s| s.name == "def3-boundary");
    if !matches!(boundary, Some(s) if s.status == Status::Skipped) {
        out.ok = false;
        out.detail.push_str("; i = l boundary not reported as unconstrained");
    }
    out
}

fn criterion_3() -> Outcome {
    let reports: Vec<_> = (1..=4).map(|m| duplex::check_omega_all(1, m, CAP)).collect();
    let pairs: u64 = reports
        .iter()
        .map(|r| r.dimensions.get("pairs").copied().unwrap_or(0))
        .sum();
    let mut out = all_pass(&reports);
    out.detail = format!("{} ({pairs} pairs, m = 1..4)", out.detail);
    if pairs != 3 + 9 + 27 + 81 {
        out.ok = false;
    }
    out
}

fn criterion_4() -> Outcome {
    all_pass(&[
        iquantum::check_projectors(1, 2, CAP),
        iquantum::check_projectors(1, 3, CAP),
    ])
}

fn criterion_5() -> Outcome {
    all_pass(&[
        commutant::check_commutation(1, 2, Side::Levi, CAP),
        commutant::check_commutation(1, 3, Side::Levi, CAP),
    ])
}

fn duality(side: Side) -> Outcome {
    let t = Instant::now();
    let rep = commutant::double_centralizer_check(1, 2, side, Mode::Evaluated { seed: SEED }, CAP);
    let dt = t.elapsed();
    let spot = ["exact-rank-left", "exact-rank-right"]
        .iter()
        .all(|n| rep.subchecks.iter().any(|s| s.name == *n && s.status == Status::Pass));
    let d = &rep.dimensions;
    Outcome {
        ok: rep.status == Status::Pass && spot && dt <= DUALITY_BUDGET,
        detail: format!(
            "closure_left={} centralizer_right={} closure_right={} centralizer_left={} spot-check={} in {dt:?}",
            d.get("closure_left").unwrap_or(&0),
            d.get("centralizer_right").unwrap_or(&0),
            d.get("closure_right").unwrap_or(&0),
            d.get("centralizer_left").unwrap_or(&0),
            if spot { "pass" } else { "missing or failed" },
        ),
    }
}

fn criterion_6() -> Outcome {
    duality(Side::Levi)
}

fn criterion_7() -> Outcome {
    duality(Side::Full)
}

fn criterion_8() -> Outcome {
    let rep = commutant::permutation_module_check(1, 2, 4, Mode::Exact, CAP);
    let mut out = all_pass(std::slice::from_ref(&rep));
    let weights = rep.dimensions.get("weights").copied().unwrap_or(0);
    out.ok &= weights == 3;
    out.detail = format!("{} (|Λ_B(4,2)| = {weights})", out.detail);
    out
}

fn criterion_9() -> Outcome {
    let rep = commutant::semisimplicity_check(1, 2, Mode::Exact, CAP);
    let d = &rep.dimensions;
    Outcome {
        ok: rep.status == Status::Pass,
        detail: format!(
            "algebra={} gram_rank={}",
            d.get("algebra").unwrap_or(&0),
            d.get("gram_rank").unwrap_or(&0)
        ),
    }
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_bduplex"))
            .args(["report-all", "--seed", "7", "--out"])
            .arg(&path)
            .env_remove("BDUPLEX_CAP")
            .output()
            .unwrap()
            .status;
        (status.code(), std::fs::read(&path).unwrap_or_default())
    };
    let (c1, a) = run("a.json");
    let (c2, b) = run("b.json");
    Outcome {
        ok: c1 == Some(0) && c2 == Some(0) && !a.is_empty() && a == b,
        detail: format!("exit codes {c1:?}/{c2:?}, {} bytes, identical: {}", a.len(), a == b),
    }
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "Hecke relations, (r,m) in {(1,2),(1,3),(2,2)}, exact, < 60 s each",
            criterion_1,
        ),
        ("duplex relations, same instances, boundary unconstrained", criterion_2),
        (
            "omega transport, r = 1, every disjoint (I,J), m <= 4, rank exact",
            criterion_3,
        ),
        ("projector laws and X eigenvalues, (1,2) and (1,3), exact", criterion_4),
        ("Levi/duplex commutation, (1,2) and (1,3), exact", criterion_5),
        (
            "Levi double centralizer, (1,2), eval + exact spot-check, < 10 min",
            criterion_6,
        ),
        (
            "full iota double centralizer, (1,2), eval + exact spot-check",
            criterion_7,
        ),
        ("q-Schur orbit spans and gradation, n = 4, m = 2", criterion_8),
        (
            "trace form nondegenerate on the duplex image, (1,2), exact",
            criterion_9,
        ),
        ("report-all byte-identical across two runs", criterion_10),
    ];
    let mut failed = Vec::new();
    for (k, (label, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = f();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {tag}: {label}: {} [{:.1?}]",
            k + 1,
            out.detail,
            t.elapsed()
        );
        if !out.ok {
            failed.push(k + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
