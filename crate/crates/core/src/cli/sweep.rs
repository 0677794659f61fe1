//! Parameter sweeps over packet width and boost speed, written as CSV.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coherence::{
    c_frobenius_perturbative, report_dual_boost, report_matrix, report_single_boost, Boosts, CoherenceReport,
    ReportMethod,
};
use crate::density::{rho_dual_boost_general, rho_single_boost_general};
use crate::domain::{boost_from_beta, EntangledPair, Scenario, WavePacket};
use crate::error::{Error, Result};
use crate::integrals::{check_n, f_factor, moments_quadrature};
use crate::quadrature::MAX_ORDER;

/// Proton mass in MeV used by the figure presets.
pub const FIGURE_MASS: f64 = 939.36;
pub const FIGURE_N: u32 = 2;
pub const FIGURE_BETAS: [f64; 4] = [0.95, 0.8, 0.3, 0.0];
/// Figure σ axis runs to this fraction of the mass.
pub const FIGURE_SIGMA_MAX_OVER_M: f64 = 0.3;
pub const FIGURE_STEPS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, clap::ValueEnum)]
pub enum Method {
    /// Closed-form small-width Frobenius coherence.
    Perturbative,
    /// Eigensolver spectrum of the small-width matrix.
    ExactEig,
    /// Eigensolver spectrum of the matrix built from quadrature moments.
    Quadrature,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Perturbative, Method::ExactEig, Method::Quadrature];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Perturbative => "perturbative",
            Method::ExactEig => "exact-eig",
            Method::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| format!("unknown method `{s}` (expected perturbative, exact-eig or quadrature)"))
    }
}

/// One evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub theta: f64,
    pub n: u32,
    pub mass: f64,
    pub sigma: f64,
    pub beta1: f64,
    /// Second particle's speed; `None` leaves it inertial.
    pub beta2: Option<f64>,
    /// Gauss–Hermite order cap for the quadrature method.
    pub max_order: usize,
}

impl Point {
    pub fn scenario(&self) -> Scenario {
        if self.beta2.is_some() {
            Scenario::Dual
        } else {
            Scenario::Single
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub report: CoherenceReport,
    pub f1: f64,
    pub f2: Option<f64>,
}

/// Coherence of the boosted pair at `point` by `method`.
pub fn evaluate(point: &Point, method: Method) -> Result<Evaluation> {
    let pair = EntangledPair::new(point.theta)?;
    let pkt = WavePacket::new(point.n, point.sigma, point.mass)?;
    let som = pkt.sigma_over_m();
    check_n(point.n as i64, som, point.scenario())?;
    let b1 = boost_from_beta(point.beta1)?;
    let b2 = point.beta2.map(boost_from_beta).transpose()?;
    let f1 = f_factor(point.n, &b1, som)?;
    let f2 = b2.map(|b| f_factor(point.n, &b, som)).transpose()?;

    let report = match method {
        Method::Perturbative | Method::ExactEig => {
            let how = if method == Method::Perturbative {
                ReportMethod::Analytic
            } else {
                ReportMethod::Eigensolver
            };
            let mut report = match f2 {
                None => report_single_boost(&pair, f1, how)?,
                Some(f2) => report_dual_boost(&pair, f1, f2, how)?,
            };
            if method == Method::Perturbative {
                let boosts = match b2 {
                    None => Boosts::Single(b1),
                    Some(b2) => Boosts::Dual(b1, b2),
                };
                report.c_frobenius = c_frobenius_perturbative(point.n as i64, boosts, som)?;
                report.method = ReportMethod::Perturbative;
            }
            report
        }
        Method::Quadrature => {
            let m1 = moments_quadrature(&pkt, &b1, point.max_order)?;
            let rho = match b2 {
                None => rho_single_boost_general(&pair, &m1)?,
                Some(b2) => {
                    let m2 = moments_quadrature(&pkt, &b2, point.max_order)?;
                    rho_dual_boost_general(&pair, &m1, &m2)?
                }
            };
            report_matrix(&rho)?
        }
    };
    Ok(Evaluation {
        report,
        f1: f1.value(),
        f2: f2.map(|f| f.value()),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub scenario: Scenario,
    pub theta: f64,
    pub n: u32,
    pub mass: f64,
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub steps: usize,
    /// (β₁, β₂); β₂ is `None` exactly in the single scenario.
    pub betas: Vec<(f64, Option<f64>)>,
    pub methods: Vec<Method>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Figure {
    /// One boosted particle.
    Fig1,
    /// Both particles boosted at the same speed.
    Fig2,
}

impl SweepSpec {
    /// Figure presets: n = 2, θ = π/4, σ from 0.3m/256 to 0.3m in 256 steps.
    pub fn figure(fig: Figure) -> Self {
        let (scenario, betas) = match fig {
            Figure::Fig1 => (Scenario::Single, FIGURE_BETAS.iter().map(|&b| (b, None)).collect()),
            Figure::Fig2 => (Scenario::Dual, FIGURE_BETAS.iter().map(|&b| (b, Some(b))).collect()),
        };
        let sigma_max = FIGURE_SIGMA_MAX_OVER_M * FIGURE_MASS;
        SweepSpec {
            scenario,
            theta: FRAC_PI_4,
            n: FIGURE_N,
            mass: FIGURE_MASS,
            sigma_min: sigma_max / FIGURE_STEPS as f64,
            sigma_max,
            steps: FIGURE_STEPS,
            betas,
            methods: Method::ALL.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.sigma_min.is_finite() && self.sigma_min > 0.0) {
            return Err(Error::domain(format!(
                "sigma-min must be positive, got {}",
                self.sigma_min
            )));
        }
        if !(self.sigma_max.is_finite() && self.sigma_max >= self.sigma_min) {
            return Err(Error::domain(format!(
                "sigma-max ({}) must be at least sigma-min ({})",
                self.sigma_max, self.sigma_min
            )));
        }
        if self.steps < 2 {
            return Err(Error::domain(format!("steps must be at least 2, got {}", self.steps)));
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::domain(format!("mass must be positive, got {}", self.mass)));
        }
        if self.betas.is_empty() {
            return Err(Error::domain("at least one beta is required"));
        }
        if self.methods.is_empty() {
            return Err(Error::domain("at least one method is required"));
        }
        for &(b1, b2) in &self.betas {
            if b2.is_some() != (self.scenario == Scenario::Dual) {
                return Err(Error::domain(format!(
                    "beta entries must be pairs exactly in the dual scenario ({} given)",
                    self.scenario.name()
                )));
            }
            boost_from_beta(b1)?;
            b2.map(boost_from_beta).transpose()?;
        }
        EntangledPair::new(self.theta)?;
        // The widest packet sets the tightest bound on n.
        check_n(self.n as i64, self.sigma_max / self.mass, self.scenario)?;
        Ok(())
    }

    pub fn sigmas(&self) -> Vec<f64> {
        let last = self.steps - 1;
        (0..self.steps)
            .map(|k| {
                if k == last {
                    self.sigma_max
                } else {
                    self.sigma_min + (self.sigma_max - self.sigma_min) * k as f64 / last as f64
                }
            })
            .collect()
    }
}

/// One CSV line. Methods that were not requested are left empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub sigma_mev: f64,
    pub beta1: f64,
    pub beta2: Option<f64>,
    pub n: u32,
    pub theta: f64,
    pub c_l1: f64,
    pub c_f_perturbative: Option<f64>,
    pub c_f_exact_eig: Option<f64>,
    pub c_f_quadrature: Option<f64>,
    pub f1: f64,
    pub f2: Option<f64>,
}

fn sweep_row(spec: &SweepSpec, sigma: f64, (beta1, beta2): (f64, Option<f64>)) -> Result<SweepRow> {
    let point = Point {
        theta: spec.theta,
        n: spec.n,
        mass: spec.mass,
        sigma,
        beta1,
        beta2,
        max_order: MAX_ORDER,
    };
    let mut row = SweepRow {
        sigma_mev: sigma,
        beta1,
        beta2,
        n: spec.n,
        theta: spec.theta,
        c_l1: f64::NAN,
        c_f_perturbative: None,
        c_f_exact_eig: None,
        c_f_quadrature: None,
        f1: f64::NAN,
        f2: None,
    };
    // Methods are visited in a fixed order so c_l1 always comes from the
    // first one requested.
    let mut methods = spec.methods.clone();
    methods.sort();
    methods.dedup();
    for (i, method) in methods.into_iter().enumerate() {
        let eval = evaluate(&point, method)?;
        if i == 0 {
            row.c_l1 = eval.report.c_l1;
            row.f1 = eval.f1;
            row.f2 = eval.f2;
        }
        let slot = match method {
            Method::Perturbative => &mut row.c_f_perturbative,
            Method::ExactEig => &mut row.c_f_exact_eig,
            Method::Quadrature => &mut row.c_f_quadrature,
        };
        *slot = Some(eval.report.c_frobenius);
    }
    Ok(row)
}

/// All rows, sorted by σ and then by (β₁, β₂). Points run in parallel.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let mut betas = spec.betas.clone();
    betas.sort_by(|a, b| {
        a.0.total_cmp(&b.0)
            .then(a.1.unwrap_or(0.0).total_cmp(&b.1.unwrap_or(0.0)))
    });
    let points: Vec<(f64, (f64, Option<f64>))> = spec
        .sigmas()
        .into_iter()
        .flat_map(|s| betas.iter().map(move |&b| (s, b)))
        .collect();
    points.par_iter().map(|&(s, b)| sweep_row(spec, s, b)).collect()
}

/// Writes `rows` with a header line; a partially written file is removed.
pub fn write_csv(rows: &[SweepRow], path: &Path) -> std::io::Result<()> {
    let result = (|| {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(path)?;
        for row in rows {
            w.serialize(row)?;
        }
        w.flush()?;
        Ok::<_, csv::Error>(())
    })();
    result.map_err(|e| {
        let _ = std::fs::remove_file(path);
        std::io::Error::other(e)
    })
}

pub fn read_csv(path: &Path) -> std::io::Result<Vec<SweepRow>> {
    let mut r = csv::Reader::from_path(path).map_err(std::io::Error::other)?;
    r.deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(std::io::Error::other)
}
