//! Command-line front end. Exit codes: 0 success, 1 internal defect or a
//! failed theorem check, 2 user input or hypothesis error.

pub mod render;
pub mod report;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::decomp::DecideOptions;
use crate::error::{Error, Result};
use crate::hom::InnerIdeal;
use crate::lab::{self, LabOptions};
use crate::local::{LocalRing, ParameterSystem};
use crate::monomial::{Monomial, MonomialIdeal};

pub use render::{ascii_grid, render_grid_svg};
pub use report::{analyze, AnalysisReport};
pub use spec::RingSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USER: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "monohom", version, about = "Hom modules between monomial quotients by parameter ideals")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze Hom(R/a, R/b) for one pair of ideals.
    Analyze(AnalyzeArgs),
    /// Classify Hom(R/a, R/(a_1^t_1, ..)) over a lattice of exponents.
    Grid(GridArgs),
    /// Print the stabilization index and the generators of Γ_m.
    Stabilize(StabilizeArgs),
    /// Run one of the theorem checks.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Args, Debug)]
struct Common {
    /// Ring-spec file.
    spec: PathBuf,
    /// Starting prime for the decomposition engine.
    #[arg(long)]
    prime: Option<u64>,
    /// Seed for randomized witness searches and suites.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    common: Common,
    /// The ideal a, e.g. "(y)"; defaults to the spec's sop.
    #[arg(long)]
    a: Option<String>,
    /// The ideal b, e.g. "(y^2)".
    #[arg(long, conflicts_with = "powers")]
    b: Option<String>,
    /// Exponents t_1,..,t_d: b is generated by the generators of a raised
    /// to these powers.
    #[arg(long)]
    powers: Option<String>,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct GridArgs {
    #[command(flatten)]
    common: Common,
    /// Largest exponent on each axis.
    #[arg(long)]
    max: u32,
    /// Write an SVG figure (two-parameter grids only).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

#[derive(Args, Debug)]
struct StabilizeArgs {
    spec: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Rees,
    Colon,
    RadicalTransfer,
    NonCmPower,
    DimOne,
    NonFree,
    Decomposable,
    NonfreePowers,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    theorem: Theorem,
    /// Parameter(s) a; for radical-transfer the larger ideal I.
    #[arg(long)]
    a: Option<String>,
    /// Target ideal (rees: explicit b; radical-transfer: N = R/b).
    #[arg(long)]
    b: Option<String>,
    /// Multiplier c for dim-one and non-free.
    #[arg(long)]
    c: Option<String>,
    /// Smaller ideal J for radical-transfer.
    #[arg(long)]
    j: Option<String>,
    /// Exponent n for dim-one (at least the stabilization index).
    #[arg(long)]
    n: Option<u32>,
    /// Exponents for rees.
    #[arg(long)]
    powers: Option<String>,
    /// Number of random instances for colon.
    #[arg(long, default_value_t = 100)]
    count: usize,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_internal() {
        EXIT_INTERNAL
    } else {
        EXIT_USER
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Internal(format!("serialization failed: {e}")))
}

struct Context {
    spec: RingSpec,
    ring: LocalRing,
    opts: LabOptions,
}

impl Context {
    fn load(common: &Common) -> Result<Self> {
        let spec = RingSpec::read(&common.spec)?;
        let ring = spec.ring()?;
        let seed = common.seed.or(spec.seed).unwrap_or(0);
        let opts = LabOptions {
            prime: common.prime.or(spec.prime),
            decide: DecideOptions { seed, ..DecideOptions::default() },
        };
        Ok(Context { spec, ring, opts })
    }

    fn sop(&self) -> Result<Option<ParameterSystem>> {
        self.spec.sop(&self.ring)
    }

    fn require_sop(&self) -> Result<ParameterSystem> {
        self.sop()?.ok_or_else(|| Error::Precondition("the spec has no `sop` line".into()))
    }

    /// Monomials of `(m1, m2, ...)` in the order written.
    fn monomial_list(&self, text: &str) -> Result<Vec<Monomial>> {
        let t = text.trim();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        self.ring.names().parse_monomial_list(inner)
    }

    fn ideal(&self, text: &str) -> Result<MonomialIdeal> {
        self.ring.ideal(text)
    }

    /// Parameters from `--a` if given, else the spec's sop.
    fn params(&self, a: Option<&str>) -> Result<ParameterSystem> {
        match a {
            Some(t) => self.ring.validate_sop(self.monomial_list(t)?),
            None => self.require_sop(),
        }
    }
}

fn parse_powers(text: &str) -> Result<Vec<u32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Parse(format!("`{s}` is not a positive integer"))))
        .collect()
}

fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32> {
    let start = Instant::now();
    let ctx = Context::load(&args.common)?;
    let sop = ctx.sop()?;
    let a_list = match (&args.a, &sop) {
        (Some(t), _) => ctx.monomial_list(t)?,
        (None, Some(ps)) => ps.params().to_vec(),
        (None, None) => return Err(Error::Precondition("give --a or a `sop` line".into())),
    };
    let nv = ctx.ring.nvars();
    let a = MonomialIdeal::minimalize(nv, a_list.clone())?;
    let b = match (&args.b, &args.powers) {
        (Some(t), _) => ctx.ideal(t)?,
        (None, Some(p)) => {
            let t = parse_powers(p)?;
            if t.len() != a_list.len() || t.contains(&0) {
                return Err(Error::Precondition(format!(
                    "--powers needs {} positive exponents, one per generator of a",
                    a_list.len()
                )));
            }
            let gens = a_list.iter().zip(&t).map(|(g, &e)| g.pow(e)).collect::<Result<Vec<_>>>()?;
            MonomialIdeal::minimalize(nv, gens)?
        }
        (None, None) => return Err(Error::Precondition("give --b or --powers".into())),
    };
    let mut report = analyze(&ctx.ring, &a, &b, sop.as_ref(), ctx.opts)?;
    if args.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    match args.format {
        Format::Json => writeln!(out, "{}", to_json(&report)?),
        Format::Ascii => writeln!(
            out,
            "{}\nHom(R/{}, R/{}): length {}, mu {}, cyclic {}, free {}, {}",
            report.ring,
            report.a,
            report.b,
            report.hom.length,
            report.hom.mu,
            report.hom.cyclic,
            report.hom.free,
            if report.decomposable { "decomposable" } else { "indecomposable" }
        ),
    }
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Precondition(format!("output failed: {e}"))
}

fn cmd_grid(args: &GridArgs, out: &mut dyn Write) -> Result<i32> {
    let ctx = Context::load(&args.common)?;
    let ps = ctx.require_sop()?;
    let grid = lab::classify_grid(&ps, args.max, ctx.opts)?;
    if let Some(path) = &args.out {
        let svg = render_grid_svg(&grid)?;
        std::fs::write(path, svg).map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
    }
    match args.format {
        Format::Json => writeln!(out, "{}", to_json(&grid)?),
        Format::Ascii => write!(out, "{}", ascii_grid(&grid)),
    }
    .map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_stabilize(args: &StabilizeArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = RingSpec::read(&args.spec)?;
    let ring = spec.ring()?;
    let gamma = ring.gamma_m()?;
    let gens = if gamma == *ring.defining() { Vec::new() } else { ring.names().format_monomials(gamma.gens()) };
    let v = json!({
        "ring": lab::ring_text(&ring),
        "stabilization_index": ring.stabilization_index()?,
        "gamma_generators": gens,
        "depth_zero": ring.depth_is_zero()?,
    });
    writeln!(out, "{}", to_json(&v)?).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let ctx = Context::load(&args.common)?;
    let one = Monomial::one(ctx.ring.nvars());
    let c = args.c.as_deref().map(|t| ctx.ring.monomial(t)).transpose()?.unwrap_or(one);
    let single = |what: &str| -> Result<Monomial> {
        let ps = ctx.params(args.a.as_deref())?;
        match ps.params() {
            [a] => Ok(a.clone()),
            _ => Err(Error::Precondition(format!("{what} needs a single parameter"))),
        }
    };
    let report = match args.theorem {
        Theorem::Rees => {
            let ps = ctx.params(args.a.as_deref())?;
            let inner = match (&args.b, &args.powers) {
                (Some(t), _) => InnerIdeal::Monomials(ctx.monomial_list(t)?),
                (None, Some(p)) => InnerIdeal::Powers(parse_powers(p)?),
                (None, None) => InnerIdeal::Powers(vec![2; ps.len()]),
            };
            lab::verify_rees(&ps, &inner)?
        }
        Theorem::Colon => lab::colon_identity_suite(ctx.opts.decide.seed, args.count)?,
        Theorem::RadicalTransfer => {
            let need = |o: &Option<String>, flag: &str| {
                o.as_deref().ok_or_else(|| Error::Precondition(format!("radical-transfer needs {flag}"))).and_then(|t| ctx.ideal(t))
            };
            let i = need(&args.a, "--a (the ideal I)")?;
            let j = need(&args.j, "--j (the ideal J)")?;
            let n = need(&args.b, "--b (N = R/b)")?;
            lab::check_radical_transfer(&ctx.ring, &j, &i, &n, ctx.opts)?
        }
        Theorem::NonCmPower => lab::verify_non_cm_power(&ctx.params(args.a.as_deref())?)?,
        Theorem::DimOne => lab::verify_thm_dim1(&ctx.ring, &single("dim-one")?, &c, args.n, ctx.opts)?,
        Theorem::NonFree => match &args.a {
            Some(t) => lab::verify_thm_nonfree_with(&ctx.ring, &ctx.ring.monomial(t)?, &c, ctx.opts)?,
            None => lab::verify_thm_nonfree(&ctx.ring, &c, ctx.opts)?,
        },
        Theorem::Decomposable => lab::search_decomposable_powers(&ctx.params(args.a.as_deref())?, ctx.opts)?,
        Theorem::NonfreePowers => lab::search_nonfree_powers(&ctx.params(args.a.as_deref())?, ctx.opts)?,
    };
    writeln!(out, "{}", to_json(&report)?).map_err(io_err)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_INTERNAL })
}

/// Parse arguments and run, writing reports to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, out),
        Command::Grid(a) => cmd_grid(a, out),
        Command::Stabilize(a) => cmd_stabilize(a, out),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
