//! Command-line front end.
//!
//! Exit codes: 0 success, 1 counterexample found, 2 usage error, 3 I/O or
//! malformed input, 4 dimension or shape mismatch, 5 an instance that is not
//! a valid weight/operator pair (A not positive semidefinite, T without an
//! A-adjoint, rank-zero A where a range is needed).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{commutator_bounds, commutator_compare, single_operator_bounds};
use crate::error::{Error, Result};
use crate::instance::{gen_instance, Construction, Instance, InstanceSpec};
use crate::linalg::TolerancePolicy;
use crate::radius::{radius_theta_scan, range_cloud, DEFAULT_DISK_N_THETA, DEFAULT_GRID_N, DEFAULT_SAMPLES};
use crate::semi_hilbert::Sign;
use crate::suite::{run_suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_DIMENSION: i32 = 4;
pub const EXIT_INVALID_INSTANCE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "semihilbert", version, about = "A-numerical radius bounds on semi-Hilbertian spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Certified enclosure of w_A(T) for an instance file.
    Radius(RadiusArgs),
    /// Every inequality report for an instance file.
    Bounds(BoundsArgs),
    /// Points of the A-numerical range as CSV (theta,re,im).
    Range(RangeArgs),
    /// Run the verification suite over a random ensemble.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct TolArgs {
    /// Relative tolerance for inequality checks.
    #[arg(long, default_value_t = TolerancePolicy::default().check_rel_tol)]
    tol: f64,
    /// Relative tolerance for equality (tightness) checks.
    #[arg(long = "equality-tol", default_value_t = TolerancePolicy::default().equality_rel_tol)]
    equality_tol: f64,
}

impl TolArgs {
    fn policy(&self) -> Result<TolerancePolicy> {
        let tol =
            TolerancePolicy { check_rel_tol: self.tol, equality_rel_tol: self.equality_tol, ..Default::default() };
        tol.validate()?;
        Ok(tol)
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    dim: usize,
    /// Rank of A; defaults to dim (dim − 1 for nonadjointable_probe).
    #[arg(long = "rank-a")]
    rank_a: Option<usize>,
    #[arg(long, default_value = "random", value_parser = parse_construction)]
    construction: Construction,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RadiusArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "grid-n", default_value_t = DEFAULT_GRID_N)]
    grid_n: usize,
    /// Skip the local refinement around the best grid angle.
    #[arg(long = "no-refine")]
    no_refine: bool,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "grid-n", default_value_t = DEFAULT_GRID_N)]
    grid_n: usize,
    #[command(flatten)]
    tol: TolArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "n-theta", default_value_t = DEFAULT_DISK_N_THETA)]
    n_theta: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    tol: TolArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Number of instances.
    #[arg(long, default_value_t = 200)]
    n: usize,
    /// Inclusive dimension range `a..b`, or a single dimension.
    #[arg(long, default_value = "2..8", value_parser = parse_dims)]
    dims: (usize, usize),
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long = "grid-n", default_value_t = DEFAULT_GRID_N)]
    grid_n: usize,
    /// Sampling-oracle draws per instance (0 disables).
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, default_value = "random", value_parser = parse_construction)]
    construction: Construction,
    #[arg(long = "n-theta", default_value_t = DEFAULT_DISK_N_THETA)]
    n_theta: usize,
    #[command(flatten)]
    tol: TolArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_construction(s: &str) -> std::result::Result<Construction, String> {
    Construction::parse(s).map_err(|e| e.to_string())
}

/// `a..b` (inclusive) or `a`.
pub fn parse_dims(s: &str) -> std::result::Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid dimension `{t}`"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let d = num(s)?;
            (d, d)
        }
    };
    if a > b {
        return Err(format!("empty dimension range `{s}`"));
    }
    Ok((a, b))
}

/// Maps an error to its exit code.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Csv(_) | Error::Format(_) | Error::NonFinite { .. } => EXIT_IO,
        Error::DimensionMismatch { .. } | Error::NotSquare { .. } | Error::Shape(_) => EXIT_DIMENSION,
        Error::NotHermitian(_)
        | Error::NotPositiveSemidefinite { .. }
        | Error::NotAdjointable { .. }
        | Error::ContextMismatch
        | Error::DegenerateContext
        | Error::RetryBudgetExhausted(_) => EXIT_INVALID_INSTANCE,
        Error::Tolerance(_) | Error::InvalidArgument(_) | Error::InvalidSpec(_) => EXIT_USAGE,
    }
}

/// Runs the CLI on `args` (including the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Gen(a) => {
            let rank_a = a.rank_a.unwrap_or(match a.construction {
                Construction::NonadjointableProbe => a.dim.saturating_sub(1),
                _ => a.dim,
            });
            let spec = InstanceSpec { dim: a.dim, rank_a, construction: a.construction, seed: a.seed, scale: a.scale };
            emit(&gen_instance(&spec)?.to_json(), a.out.as_deref(), out)?;
        }
        Command::Radius(a) => {
            let inst = Instance::read(&a.input)?.bind(a.tol.policy()?)?;
            let rad = radius_theta_scan(&inst.t, a.grid_n, !a.no_refine)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&rad)?)?;
        }
        Command::Bounds(a) => {
            let inst = Instance::read(&a.input)?.bind(a.tol.policy()?)?;
            let rad = radius_theta_scan(&inst.t, a.grid_n, true)?;
            let mut reports = single_operator_bounds(&inst.t, &rad);
            if let (Some(x), Some(y)) = (&inst.x, &inst.y) {
                for sign in Sign::BOTH {
                    let c = commutator_bounds(&inst.t, x, y, sign, &rad, a.grid_n)?;
                    reports.extend(c.reports().into_iter().cloned());
                }
            }
            if let Some(s) = &inst.s {
                let rad_s = radius_theta_scan(s, a.grid_n, true)?;
                reports.extend(commutator_compare(&inst.t, s, &rad, &rad_s, a.grid_n)?.reports);
            }
            let mut text = serde_json::to_string_pretty(&reports)?;
            text.push('\n');
            emit(&text, a.out.as_deref(), out)?;
            if reports.iter().any(|r| !r.holds) {
                writeln!(err, "counterexample: at least one inequality fails")?;
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
        Command::Range(a) => {
            let inst = Instance::read(&a.input)?.bind(a.tol.policy()?)?;
            let cloud = range_cloud(&inst.t, a.n_theta, a.seed)?;
            let mut buf = Vec::new();
            {
                let mut w = csv::Writer::from_writer(&mut buf);
                w.write_record(["theta", "re", "im"])?;
                for (z, theta) in cloud.points.iter().zip(&cloud.thetas) {
                    let theta = theta.map(|t| format!("{t:.17e}")).unwrap_or_default();
                    w.write_record([theta, format!("{:.17e}", z.re), format!("{:.17e}", z.im)])?;
                }
                w.flush()?;
            }
            emit(&String::from_utf8(buf).expect("csv output is UTF-8"), a.out.as_deref(), out)?;
        }
        Command::Verify(a) => {
            let config = SuiteConfig {
                n: a.n,
                dim_min: a.dims.0,
                dim_max: a.dims.1,
                seed: a.seed,
                construction: a.construction,
                grid_n: a.grid_n,
                samples: a.samples,
                disk_n_theta: a.n_theta,
                tol: a.tol.policy()?,
            };
            let report = run_suite(&config)?;
            let mut text = report.to_json()?;
            text.push('\n');
            emit(&text, a.out.as_deref(), out)?;
            writeln!(
                err,
                "{} instances, {} counterexamples, {:.2} s",
                report.instances.len(),
                report.counterexamples.len(),
                report.wall_time
            )?;
            if !report.passed() {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
    }
    Ok(EXIT_OK)
}
