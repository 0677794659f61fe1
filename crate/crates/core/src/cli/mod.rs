//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 for usage and domain errors, 3 when a numerical
//! tolerance (quadrature convergence, eigensolver sweeps) is not met.

pub mod config;
pub mod sweep;

use std::f64::consts::FRAC_PI_4;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::domain::{boost_from_beta, Scenario};
use crate::error::Error;
use crate::quadrature::MAX_ORDER;
use crate::wigner::half_angle_perp;
use config::ConfigFile;
use sweep::{evaluate, run_sweep, write_csv, Figure, Method, Point, SweepSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Lib(e) => match e {
                Error::Domain(_) | Error::Validity(_) | Error::Overflow(_) => EXIT_USAGE,
                Error::ToleranceNotMet { .. }
                | Error::Convergence { .. }
                | Error::Degenerate(_)
                | Error::Invariant(_) => EXIT_NUMERICAL,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "spin-coherence",
    version,
    about = "Spin coherence of boosted entangled wave packets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Wigner rotation half-angle data for one momentum.
    Wigner(WignerArgs),
    /// Coherence of the boosted pair at one parameter point.
    Coherence(CoherenceArgs),
    /// CSV sweep over packet width and boost speeds.
    Sweep(SweepArgs),
    /// CSV data for one of the preset figures.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScenarioArg {
    Single,
    Dual,
}

impl From<ScenarioArg> for Scenario {
    fn from(s: ScenarioArg) -> Self {
        match s {
            ScenarioArg::Single => Scenario::Single,
            ScenarioArg::Dual => Scenario::Dual,
        }
    }
}

#[derive(Debug, Args)]
struct WignerArgs {
    /// Boost speed v/c, 0 <= beta < 1 (default 0).
    #[arg(long)]
    beta: Option<f64>,
    /// Particle momentum in units of its mass; may be negative.
    #[arg(long, allow_negative_numbers = true)]
    p_over_m: Option<f64>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CoherenceArgs {
    #[arg(long, value_enum)]
    scenario: Option<ScenarioArg>,
    /// Entanglement angle in radians (default π/4).
    #[arg(long)]
    theta: Option<f64>,
    /// Boost speed; in the dual scenario it sets both particles.
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    beta1: Option<f64>,
    #[arg(long)]
    beta2: Option<f64>,
    /// Packet width in MeV.
    #[arg(long)]
    sigma: Option<f64>,
    /// Rest mass in MeV (default 939.36).
    #[arg(long)]
    mass: Option<f64>,
    /// Packet exponent (default 2).
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Gauss–Hermite order cap for the quadrature method (default 256).
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    scenario: Option<ScenarioArg>,
    #[arg(long)]
    theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long)]
    mass: Option<f64>,
    #[arg(long)]
    sigma_min: Option<f64>,
    #[arg(long)]
    sigma_max: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    /// Comma-separated speeds; dual entries are `b1:b2` or one value for both.
    #[arg(long)]
    betas: Option<String>,
    /// Comma-separated subset of perturbative, exact-eig, quadrature.
    #[arg(long)]
    methods: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(value_enum)]
    name: Figure,
    #[arg(long)]
    out: PathBuf,
    /// Overrides the preset angle π/4.
    #[arg(long)]
    theta: Option<f64>,
    /// Overrides the preset σ range end, 0.3 m.
    #[arg(long)]
    sigma_max: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    methods: Option<String>,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Wigner(a) => cmd_wigner(a, out),
        Command::Coherence(a) => cmd_coherence(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Figure(a) => cmd_figure(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<ConfigFile, CliError> {
    path.map_or_else(|| Ok(ConfigFile::default()), ConfigFile::load)
}

fn pick_enum<E: ValueEnum>(cfg: &ConfigFile, flag: Option<E>, key: &str) -> Result<Option<E>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    cfg.raw(key)
        .map(|text| E::from_str(text, true).map_err(|e| CliError::Usage(format!("config key `{key}`: {e}"))))
        .transpose()
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("missing required --{flag}")))
}

fn io_err(e: impl std::fmt::Display) -> CliError {
    CliError::Io(e.to_string())
}

fn cmd_wigner(a: WignerArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = load_config(a.config.as_deref())?;
    let beta = cfg.pick(a.beta, "beta")?.unwrap_or(0.0);
    let x = require(cfg.pick(a.p_over_m, "p-over-m")?, "p-over-m")?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("p/m must be finite, got {x}")).into());
    }
    let trig = half_angle_perp(&boost_from_beta(beta)?, x);
    writeln!(out, "cos^2(phi/2)        {}", trig.cos2_half).map_err(io_err)?;
    writeln!(out, "sin^2(phi/2)        {}", trig.sin2_half).map_err(io_err)?;
    writeln!(out, "sin(phi/2)cos(phi/2) {}", trig.sincos_half).map_err(io_err)?;
    writeln!(out, "phi                 {}", trig.angle()).map_err(io_err)?;
    Ok(())
}

fn cmd_coherence(a: CoherenceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = load_config(a.config.as_deref())?;
    let scenario: Scenario = pick_enum(&cfg, a.scenario, "scenario")?
        .unwrap_or(ScenarioArg::Single)
        .into();
    let method = pick_enum(&cfg, a.method, "method")?.unwrap_or(Method::Perturbative);
    let theta = cfg.pick(a.theta, "theta")?.unwrap_or(FRAC_PI_4);
    let mass = cfg.pick(a.mass, "mass")?.unwrap_or(sweep::FIGURE_MASS);
    let n = cfg.pick(a.n, "n")?.unwrap_or(sweep::FIGURE_N as i64);
    let sigma = require(cfg.pick(a.sigma, "sigma")?, "sigma")?;
    let beta = cfg.pick(a.beta, "beta")?;
    let beta1 = cfg.pick(a.beta1, "beta1")?.or(beta);
    let beta1 = require(beta1, "beta (or --beta1)")?;
    let beta2 = match scenario {
        Scenario::Single => {
            if cfg.pick(a.beta2, "beta2")?.is_some() {
                return Err(CliError::Usage("--beta2 needs --scenario dual".into()));
            }
            None
        }
        Scenario::Dual => Some(require(cfg.pick(a.beta2, "beta2")?.or(beta), "beta2 (or --beta)")?),
    };
    if !(sigma.is_finite() && mass.is_finite() && sigma > 0.0 && mass > 0.0) {
        return Err(Error::Domain(format!("sigma and mass must be positive, got {sigma} and {mass}")).into());
    }
    let n = crate::integrals::check_n(n, sigma / mass, scenario)?;
    let point = Point {
        theta,
        n,
        mass,
        sigma,
        beta1,
        beta2,
        max_order: cfg.pick(a.max_order, "max-order")?.unwrap_or(MAX_ORDER),
    };
    let eval = evaluate(&point, method)?;
    let r = &eval.report;
    let spectrum: Vec<String> = r.spectrum.eigenvalues().iter().map(|&l| fmt_value(l)).collect();
    let mut lines = vec![
        format!("scenario  {}", scenario.name()),
        format!("method    {method}"),
        format!("F1        {}", fmt_value(eval.f1)),
    ];
    if let Some(f2) = eval.f2 {
        lines.push(format!("F2        {}", fmt_value(f2)));
    }
    lines.push(format!("spectrum  {}", spectrum.join(" ")));
    lines.push(format!("c_l1      {}", fmt_value(r.c_l1)));
    lines.push(format!("c_F       {}", fmt_value(r.c_frobenius)));
    for line in lines {
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(())
}

/// Shortest round-trip text, in exponent form for tiny magnitudes.
fn fmt_value(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-4 {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

fn parse_methods(text: &str) -> Result<Vec<Method>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| s.parse::<Method>().map_err(CliError::Usage))
        .collect()
}

fn parse_betas(text: &str, scenario: Scenario) -> Result<Vec<(f64, Option<f64>)>, CliError> {
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| CliError::Usage(format!("bad beta `{s}`: {e}")))
    };
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| match (scenario, item.split_once(':')) {
            (Scenario::Single, None) => Ok((num(item)?, None)),
            (Scenario::Single, Some(_)) => Err(CliError::Usage(format!("beta pair `{item}` needs --scenario dual"))),
            (Scenario::Dual, None) => {
                let b = num(item)?;
                Ok((b, Some(b)))
            }
            (Scenario::Dual, Some((b1, b2))) => Ok((num(b1)?, Some(num(b2)?))),
        })
        .collect()
}

fn write_sweep(spec: &SweepSpec, path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let rows = run_sweep(spec)?;
    write_csv(&rows, path).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
    writeln!(out, "wrote {} rows to {}", rows.len(), path.display()).map_err(io_err)?;
    Ok(())
}

fn cmd_sweep(a: SweepArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = load_config(a.config.as_deref())?;
    let scenario: Scenario = pick_enum(&cfg, a.scenario, "scenario")?
        .unwrap_or(ScenarioArg::Single)
        .into();
    let n = cfg.pick(a.n, "n")?.unwrap_or(sweep::FIGURE_N as i64);
    if n < 0 {
        return Err(Error::Domain(format!("n = {n} violates the lower bound n > -1/2")).into());
    }
    let methods = match cfg.pick(a.methods, "methods")? {
        Some(text) => parse_methods(&text)?,
        None => Method::ALL.to_vec(),
    };
    let betas = require(cfg.pick(a.betas, "betas")?, "betas")?;
    let spec = SweepSpec {
        scenario,
        theta: cfg.pick(a.theta, "theta")?.unwrap_or(FRAC_PI_4),
        n: u32::try_from(n).map_err(|_| Error::Domain(format!("n = {n} is out of range")))?,
        mass: cfg.pick(a.mass, "mass")?.unwrap_or(sweep::FIGURE_MASS),
        sigma_min: require(cfg.pick(a.sigma_min, "sigma-min")?, "sigma-min")?,
        sigma_max: require(cfg.pick(a.sigma_max, "sigma-max")?, "sigma-max")?,
        steps: require(cfg.pick(a.steps, "steps")?, "steps")?,
        betas: parse_betas(&betas, scenario)?,
        methods,
    };
    let path = require(cfg.pick(a.out, "out")?, "out")?;
    write_sweep(&spec, &path, out)
}

fn cmd_figure(a: FigureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let mut spec = SweepSpec::figure(a.name);
    if let Some(theta) = a.theta {
        spec.theta = theta;
    }
    if let Some(steps) = a.steps {
        spec.steps = steps;
    }
    if let Some(sigma_max) = a.sigma_max {
        spec.sigma_max = sigma_max;
    }
    // The range starts one step above zero.
    spec.sigma_min = spec.sigma_max / spec.steps.max(1) as f64;
    if let Some(text) = a.methods {
        spec.methods = parse_methods(&text)?;
    }
    write_sweep(&spec, &a.out, out)
}
