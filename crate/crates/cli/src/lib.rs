//! Command-line front end for `bbw-core`.
//!
//! Every subcommand renders either ASCII text or JSON with sorted keys, and
//! output does not depend on the number of worker threads.

use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use bbw_core::bbw::{BundleExpr, Carrier, Space};
use bbw_core::resolution::build_resolution;
use bbw_core::tensor::{lr_product, wedge_sym2};
use bbw_core::verify::{bondal_orlov_report, sweep, Lemma, SweepOutcome};
use bbw_core::{Error, Sign, SpaceParams, Status, YoungDiagram};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

/// `EX_USAGE` from `sysexits.h`.
pub const EXIT_USAGE: i32 = 64;
/// `EX_SOFTWARE`: arithmetic overflow and other internal failures.
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bbw",
    version,
    about = "Borel-Bott-Weil computations on (orthogonal) Grassmannians"
)]
pub struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "BBW_JOBS", default_value_t = 0)]
    pub jobs: usize,

    /// Write output here instead of standard output.
    #[arg(long, global = true, env = "BBW_OUT")]
    pub out: Option<PathBuf>,

    /// Output format; `lr` and `plethysm` default to json, the rest to text.
    #[arg(long, global = true, env = "BBW_FORMAT", value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology of an irreducible equivariant bundle.
    Cohomology(CohomologyArgs),
    /// Littlewood-Richardson product of two Schur functors.
    Lr(LrArgs),
    /// Decomposition of the m-th exterior power of Sym^2 U, rank U = k.
    Plethysm(PlethysmArgs),
    /// Resolution of the pushed-forward spinor bundle on Gr(k, N).
    Resolution(ResolutionArgs),
    /// Sweep a lemma over ranges of N and k.
    Verify(VerifyArgs),
    /// Cohomological inputs of the Bondal-Orlov criterion for genus g.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceArg {
    Gr,
    Ogr,
}

#[derive(Debug, Args)]
pub struct CohomologyArgs {
    #[arg(long, value_enum)]
    pub space: SpaceArg,
    #[arg(long = "N")]
    pub dim: u32,
    #[arg(long)]
    pub k: u32,
    /// Rows of the diagram, e.g. `3,1` (`0` for the empty diagram). On `gr`
    /// the Schur functor is applied to U^perp, on `ogr` to U.
    #[arg(long, allow_hyphen_values = true)]
    pub shape: YoungDiagram,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub twist: i64,
    /// Tensor with the spinor bundle of this sign.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "hom_spinors")]
    pub spinor: Option<Sign>,
    /// Tensor with `S_a^v (x) S_b`, written `a,b`.
    #[arg(long, allow_hyphen_values = true)]
    pub hom_spinors: Option<SignPair>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignPair(pub Sign, pub Sign);

impl FromStr for SignPair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected two signs 'a,b', got '{s}'"))?;
        let parse = |x: &str| x.trim().parse::<Sign>().map_err(|e| e.to_string());
        Ok(SignPair(parse(a)?, parse(b)?))
    }
}

#[derive(Debug, Args)]
pub struct LrArgs {
    #[arg(long)]
    pub mu: YoungDiagram,
    #[arg(long)]
    pub nu: YoungDiagram,
    /// Drop summands with more rows than this.
    #[arg(long)]
    pub max_height: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PlethysmArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub k: u32,
}

#[derive(Debug, Args)]
pub struct ResolutionArgs {
    #[arg(long = "N")]
    pub dim: u32,
    #[arg(long)]
    pub k: u32,
    #[arg(long, allow_hyphen_values = true, default_value = "+")]
    pub sign: Sign,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub lemma: Lemma,
    /// `6`, `6..=10`, `6-10` or `6,8,10`.
    #[arg(long = "N", env = "BBW_N", default_value = "6,8,10")]
    pub dims: Range,
    #[arg(long, env = "BBW_K", default_value = "1-3")]
    pub k: Range,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub k: u32,
    /// Same as `--format json`.
    #[arg(long)]
    pub json: bool,
}

/// A nonempty, sorted, duplicate-free list of integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range(pub Vec<u32>);

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |x: &str| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad integer '{x}' in range '{s}'"))
        };
        let mut out = Vec::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            let bounds = part.split_once("..=").or_else(|| part.split_once('-'));
            match bounds {
                Some((a, b)) => {
                    let (a, b) = (num(a)?, num(b)?);
                    if a > b {
                        return Err(format!("empty range '{part}'"));
                    }
                    out.extend(a..=b);
                }
                None => out.push(num(part)?),
            }
        }
        out.sort_unstable();
        out.dedup();
        if out.is_empty() {
            return Err(format!("empty range '{s}'"));
        }
        Ok(Range(out))
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Everything a `verify` run depends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub lemma: Lemma,
    pub dims: Vec<u32>,
    pub ks: Vec<u32>,
    pub format: Format,
    pub jobs: usize,
    pub out: Option<PathBuf>,
}

/// A rendered result and the exit code it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rendered {
    pub body: String,
    pub code: i32,
}

impl Rendered {
    fn ok(body: String) -> Self {
        Self { body, code: 0 }
    }
}

fn json_text(v: &impl Serialize) -> String {
    // Round-trip through `Value` so object keys come out sorted.
    let value: Value = serde_json::to_value(v).expect("output types serialize");
    let mut s = serde_json::to_string(&value).expect("values serialize");
    s.push('\n');
    s
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Counterexample(_) | Error::Mismatch(_) => 1,
        Error::Indeterminate(_) => 2,
        Error::Overflow(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// its output to `out` or to `--out`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            if code == 0 {
                let _ = write!(out, "{e}");
            } else {
                eprint!("{}", e.render());
            }
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start {} worker threads: {e}", cli.jobs);
            return EXIT_INTERNAL;
        }
    };
    let rendered = match pool.install(|| execute(&cli)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &cli.out {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(rendered.body.as_bytes())),
        None => out.write_all(rendered.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_INTERNAL;
    }
    rendered.code
}

/// `run` on the process arguments, writing to standard output.
pub fn main_with_std_args() -> i32 {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    run(std::env::args_os(), &mut lock)
}

fn execute(cli: &Cli) -> bbw_core::Result<Rendered> {
    let fmt_or = |default| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Cohomology(a) => cohomology(a, fmt_or(Format::Text)),
        Command::Lr(a) => {
            let sum = lr_product(&a.mu, &a.nu, a.max_height.unwrap_or(usize::MAX));
            Ok(Rendered::ok(match fmt_or(Format::Json) {
                Format::Json => json_text(&sum),
                Format::Text => format!("{sum}\n"),
            }))
        }
        Command::Plethysm(a) => {
            let sum = wedge_sym2(a.m, a.k)?;
            Ok(Rendered::ok(match fmt_or(Format::Json) {
                Format::Json => json_text(&sum),
                Format::Text => format!("{sum}\n"),
            }))
        }
        Command::Resolution(a) => {
            let r = build_resolution(SpaceParams::new(a.dim, a.k)?, a.sign)?;
            Ok(Rendered::ok(match fmt_or(Format::Text) {
                Format::Json => json_text(&r.terms),
                Format::Text => format!("{r}\n"),
            }))
        }
        Command::Verify(a) => {
            let config = SweepConfig {
                lemma: a.lemma,
                dims: a.dims.0.clone(),
                ks: a.k.0.clone(),
                format: fmt_or(Format::Text),
                jobs: cli.jobs,
                out: cli.out.clone(),
            };
            verify(&config)
        }
        Command::Report(a) => {
            let report = bondal_orlov_report(a.genus, a.k)?;
            let format = if a.json {
                Format::Json
            } else {
                fmt_or(Format::Text)
            };
            let body = match format {
                Format::Json => json_text(&report),
                Format::Text => report.to_string(),
            };
            Ok(Rendered {
                body,
                code: report.verdict.exit_code(),
            })
        }
    }
}

fn cohomology(a: &CohomologyArgs, format: Format) -> bbw_core::Result<Rendered> {
    let sp = SpaceParams::new(a.dim, a.k)?;
    let (space, bundle) = match a.space {
        SpaceArg::Gr => {
            if a.spinor.is_some() || a.hom_spinors.is_some() {
                return Err(Error::Precondition(
                    "spinor factors need --space ogr".into(),
                ));
            }
            (
                Space::Gr,
                BundleExpr::schur(Carrier::UPerp, a.shape.clone()).twisted(a.twist),
            )
        }
        SpaceArg::Ogr => {
            let b = BundleExpr::schur(Carrier::U, a.shape.clone()).twisted(a.twist);
            let b = match (a.spinor, a.hom_spinors) {
                (Some(s), _) => b.with_spinor(s),
                (None, Some(SignPair(l, r))) => b.with_dual_spinor(l).with_spinor(r),
                (None, None) => {
                    return Err(Error::Precondition(
                        "--space ogr needs --spinor or --hom-spinors".into(),
                    ))
                }
            };
            (Space::Ogr, b)
        }
    };
    let h = bundle.cohomology(space, sp)?;
    Ok(Rendered::ok(match format {
        Format::Json => json_text(&h),
        Format::Text => h.to_string(),
    }))
}

/// Runs a sweep and renders it; the exit code is the sweep's status.
pub fn verify(config: &SweepConfig) -> bbw_core::Result<Rendered> {
    let outcome = sweep(config.lemma, &config.dims, &config.ks)?;
    let status = outcome.status();
    let body = match config.format {
        Format::Json => json_text(&json!({
            "lemma": config.lemma,
            "N": config.dims,
            "k": config.ks,
            "instances": outcome.instances,
            "counterexamples": outcome.counterexamples,
            "indeterminate": outcome.indeterminate,
            "status": status,
        })),
        Format::Text => render_sweep_text(config, &outcome, status),
    };
    Ok(Rendered {
        body,
        code: status.exit_code(),
    })
}

fn render_sweep_text(config: &SweepConfig, outcome: &SweepOutcome, status: Status) -> String {
    let mut s = format!(
        "lemma {}  N {}  k {}\ninstances: {}\ncounterexamples: {}\nindeterminate: {}\n",
        config.lemma,
        Range(config.dims.clone()),
        Range(config.ks.clone()),
        outcome.instances,
        outcome.counterexamples.len(),
        outcome.indeterminate.len()
    );
    for c in &outcome.counterexamples {
        s.push_str(&format!("  counterexample: {c}\n"));
    }
    for c in &outcome.indeterminate {
        s.push_str(&format!("  indeterminate: {c}\n"));
    }
    s.push_str(&format!("status: {status}\n"));
    s
}
