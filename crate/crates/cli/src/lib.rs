//! Command-line front end for the verification suites.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bduplex_core::commutant::{self, Mode, Side};
use bduplex_core::duplex::{self, DuplexGenerator};
use bduplex_core::heckeb;
use bduplex_core::iquantum::{self, AnyGenerator};
use bduplex_core::report::{CheckReport, ReportFile};
use bduplex_core::tensorspace::{TensorSpace, DEFAULT_BASIS_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

/// Environment variable overriding the basis-size cap.
pub const CAP_ENV: &str = "BDUPLEX_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ModeName {
    Exact,
    Eval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "heckeB")]
    HeckeB,
    Duplex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideName {
    Levi,
    Full,
}

impl From<SideName> for Side {
    fn from(s: SideName) -> Self {
        match s {
            SideName::Levi => Side::Levi,
            SideName::Full => Side::Full,
        }
    }
}

/// Resolved run parameters. Unset fields in a config file take the defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub r: usize,
    pub m: usize,
    pub mode: ModeName,
    pub seed: u64,
    pub cap: u128,
    pub out: Option<PathBuf>,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            r: 1,
            m: 2,
            mode: ModeName::Eval,
            seed: 0,
            cap: DEFAULT_BASIS_CAP,
            out: None,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    pub fn mode(&self) -> Mode {
        match self.mode {
            ModeName::Exact => Mode::Exact,
            ModeName::Eval => Mode::Evaluated { seed: self.seed },
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bduplex",
    version,
    about = "Exact checks for type-B Hecke, duplex Hecke and iquantum actions on V̲^{⊗m}"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// TOML run configuration; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub r: Option<usize>,
    #[arg(long, global = true)]
    pub m: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeName>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// JSON report path; `-` or absent writes the report to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Maximum basis size `(2r+4)^m`.
    #[arg(long, global = true)]
    pub cap: Option<u128>,
    /// Record wall times (makes reports run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Defining relations of the Hecke or duplex Hecke action.
    Relations {
        #[arg(long, value_enum)]
        family: Family,
        /// Directory receiving one sparse dump per generator.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// ω-transport for one `(I, J)`, or for every pair when both are omitted.
    Omega {
        #[arg(long = "I", value_delimiter = ',', num_args = 0..)]
        inner: Option<Vec<usize>>,
        #[arg(long = "J", value_delimiter = ',', num_args = 0..)]
        low: Option<Vec<usize>>,
    },
    /// Quantum-group sanity, level preservation, restriction and projector laws.
    Qaction {
        /// Generator to dump, e.g. `B1`, `B0`, `k2^-1`, `E0`, `K1`.
        #[arg(long)]
        gen: Option<String>,
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Double-centralizer dimension comparison.
    Duality {
        #[arg(long, value_enum, default_value = "levi")]
        side: SideName,
    },
    /// Trace-form test on the duplex image algebra.
    Semisimple,
    /// Permutation-module spans and centralizer gradation.
    Schur {
        /// Ambient dimension, default `2r + 4`.
        #[arg(long)]
        ambient: Option<usize>,
    },
    /// The whole suite in fixed order.
    ReportAll,
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    2
}

/// Merges defaults, the config file, the cap environment variable and flags, in that order.
pub fn resolve(common: &CommonArgs) -> Result<RunConfig, String> {
    let mut cfg = match &common.config {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            RunConfig::from_toml(&text).map_err(|e| format!("{}: {e}", p.display()))?
        }
        None => RunConfig::default(),
    };
    if let Ok(v) = std::env::var(CAP_ENV) {
        cfg.cap = v
            .trim()
            .parse()
            .map_err(|_| format!("{CAP_ENV}: not an integer: {v}"))?;
    }
    if let Some(v) = common.r {
        cfg.r = v;
    }
    if let Some(v) = common.m {
        cfg.m = v;
    }
    if let Some(v) = common.mode {
        cfg.mode = v;
    }
    if let Some(v) = common.seed {
        cfg.seed = v;
    }
    if let Some(v) = &common.out {
        cfg.out = Some(v.clone());
    }
    if let Some(v) = common.cap {
        cfg.cap = v;
    }
    cfg.timings |= common.timings;
    if cfg.m == 0 {
        return Err("m must be at least 1".into());
    }
    Ok(cfg)
}

fn timed(cfg: &RunConfig, f: impl FnOnce() -> CheckReport) -> CheckReport {
    let start = Instant::now();
    let mut rep = f();
    if cfg.timings {
        rep.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    rep
}

fn seeded(cfg: &RunConfig, mut rep: CheckReport) -> CheckReport {
    if cfg.mode == ModeName::Eval {
        rep.seed = Some(cfg.seed);
    }
    rep
}

pub fn relations(cfg: &RunConfig, family: Family) -> CheckReport {
    timed(cfg, || match family {
        Family::HeckeB => heckeb::check_hecke_relations(cfg.r, cfg.m, cfg.cap),
        Family::Duplex => duplex::check_duplex_relations(cfg.r, cfg.m, cfg.cap),
    })
}

pub fn omega_all(cfg: &RunConfig) -> CheckReport {
    timed(cfg, || duplex::check_omega_all(cfg.r, cfg.m, cfg.cap))
}

pub fn qaction(cfg: &RunConfig) -> Vec<CheckReport> {
    vec![
        timed(cfg, || iquantum::check_qaction(cfg.r, cfg.m, cfg.cap)),
        timed(cfg, || iquantum::check_projectors(cfg.r, cfg.m, cfg.cap)),
        timed(cfg, || commutant::check_commutation(cfg.r, cfg.m, Side::Levi, cfg.cap)),
    ]
}

pub fn duality(cfg: &RunConfig, side: Side) -> CheckReport {
    seeded(
        cfg,
        timed(cfg, || {
            commutant::double_centralizer_check(cfg.r, cfg.m, side, cfg.mode(), cfg.cap)
        }),
    )
}

pub fn semisimple(cfg: &RunConfig) -> CheckReport {
    seeded(
        cfg,
        timed(cfg, || {
            commutant::semisimplicity_check(cfg.r, cfg.m, cfg.mode(), cfg.cap)
        }),
    )
}

pub fn schur(cfg: &RunConfig, ambient: Option<usize>) -> CheckReport {
    let n = ambient.unwrap_or(2 * cfg.r + 4);
    seeded(
        cfg,
        timed(cfg, || {
            commutant::permutation_module_check(cfg.r, cfg.m, n, cfg.mode(), cfg.cap)
        }),
    )
}

/// relations → omega → qaction sanity → schur → duality levi → duality full → semisimple.
pub fn report_all(cfg: &RunConfig) -> Vec<CheckReport> {
    let mut out = vec![
        relations(cfg, Family::HeckeB),
        relations(cfg, Family::Duplex),
        omega_all(cfg),
    ];
    out.extend(qaction(cfg));
    out.push(schur(cfg, None));
    out.push(duality(cfg, Side::Levi));
    out.push(duality(cfg, Side::Full));
    out.push(semisimple(cfg));
    out
}

fn write_dump(dir: &Path, name: &str, text: &str) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let safe: String = name
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    let path = dir.join(format!("{safe}.txt"));
    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn dump_relations(cfg: &RunConfig, family: Family, dir: &Path) -> Result<(), String> {
    let space = TensorSpace::enhanced(cfg.r, cfg.m);
    space.check_cap(cfg.cap).map_err(|e| e.to_string())?;
    match family {
        Family::HeckeB => {
            for (i, op) in heckeb::generator_ops(space).iter().enumerate() {
                write_dump(dir, &format!("H{i}"), &op.dump())?;
            }
        }
        Family::Duplex => {
            for (g, op) in duplex::generator_ops(space) {
                let name = match &g {
                    DuplexGenerator::T { i, .. } => format!("T{i}"),
                    DuplexGenerator::X { sigma, l } => {
                        let w: Vec<String> = sigma.window().iter().map(|k| k.to_string()).collect();
                        format!("x{l}_{}", w.join("-"))
                    }
                };
                write_dump(dir, &name, &op.dump())?;
            }
        }
    }
    Ok(())
}

fn omega_one(cfg: &RunConfig, inner: &[usize], low: &[usize]) -> Result<CheckReport, String> {
    let i: BTreeSet<usize> = inner.iter().copied().collect();
    let j: BTreeSet<usize> = low.iter().copied().collect();
    let start = Instant::now();
    let mut rep = duplex::check_omega(&i, &j, cfg.r, cfg.m, cfg.cap).map_err(|e| e.to_string())?;
    if cfg.timings {
        rep.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(rep)
}

fn gen_dump(cfg: &RunConfig, name: &str, dir: Option<&Path>) -> Result<(), String> {
    let g: AnyGenerator = name.parse().map_err(|e: bduplex_core::Error| e.to_string())?;
    let space = TensorSpace::enhanced(cfg.r, cfg.m);
    space.check_cap(cfg.cap).map_err(|e| e.to_string())?;
    let op = iquantum::act_any(g, space).map_err(|e| e.to_string())?;
    match dir {
        Some(d) => write_dump(d, name, &op.dump()),
        None => Ok(()),
    }
}

fn emit(cfg: &RunConfig, reports: Vec<CheckReport>) -> Result<i32, String> {
    let seed = (cfg.mode == ModeName::Eval).then_some(cfg.seed);
    let file = ReportFile::new(reports, seed);
    let json = serde_json::to_string_pretty(&file).map_err(|e| e.to_string())? + "\n";
    let to_stdout = cfg.out.as_deref().is_none_or(|p| p == Path::new("-"));
    let mut lines = String::new();
    for rep in &file.reports {
        lines.push_str(&rep.summary());
        lines.push('\n');
        if rep.check == "omega" {
            for note in &rep.notes {
                lines.push_str(&format!("        {note}\n"));
            }
        }
    }
    if to_stdout {
        eprint!("{lines}");
        std::io::stdout()
            .write_all(json.as_bytes())
            .map_err(|e| e.to_string())?;
    } else {
        let path = cfg.out.as_ref().unwrap();
        fs::write(path, &json).map_err(|e| format!("{}: {e}", path.display()))?;
        print!("{lines}");
    }
    Ok(if file.failed_count() == 0 { 0 } else { 1 })
}

/// Parses `argv` (including the program name), runs the requested suite and
/// returns the process exit code: 0 when no check failed, 1 on failures, 2 on usage errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let cfg = match resolve(&cli.common) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let result = match &cli.command {
        Command::Relations { family, dump } => {
            let rep = relations(&cfg, *family);
            match dump {
                Some(dir) if rep.status != bduplex_core::report::Status::Skipped => {
                    dump_relations(&cfg, *family, dir).and_then(|_| emit(&cfg, vec![rep]))
                }
                _ => emit(&cfg, vec![rep]),
            }
        }
        Command::Omega { inner, low } => match (inner, low) {
            (None, None) => emit(&cfg, vec![omega_all(&cfg)]),
            (i, j) => {
                let i = i.clone().unwrap_or_default();
                let j = j.clone().unwrap_or_default();
                omega_one(&cfg, &i, &j).and_then(|rep| emit(&cfg, vec![rep]))
            }
        },
        Command::Qaction { gen, dump } => {
            let dumped = match gen {
                Some(g) => gen_dump(&cfg, g, dump.as_deref()),
                None if dump.is_some() => Err("--dump needs --gen".into()),
                None => Ok(()),
            };
            dumped.and_then(|_| emit(&cfg, qaction(&cfg)))
        }
        Command::Duality { side } => emit(&cfg, vec![duality(&cfg, (*side).into())]),
        Command::Semisimple => emit(&cfg, vec![semisimple(&cfg)]),
        Command::Schur { ambient } => emit(&cfg, vec![schur(&cfg, *ambient)]),
        Command::ReportAll => emit(&cfg, report_all(&cfg)),
    };
    match result {
        Ok(code) => code,
        Err(e) => usage(e),
    }
}
