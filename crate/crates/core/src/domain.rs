//! Shared domain values: boosts, wave packets, geometry and the entangled pair.
//!
//! All momenta, masses and widths are in MeV with c = 1. Every type here is an
//! immutable value validated at construction.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::special::{gamma_half_integer, ln_gamma_half_integer};

/// Rapidity data for one boosted frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParams {
    beta: f64,
    alpha: f64,
    sinh_alpha: f64,
    cosh_alpha: f64,
}

impl BoostParams {
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Rapidity, `atanh(beta)`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn sinh_alpha(&self) -> f64 {
        self.sinh_alpha
    }

    /// Lorentz factor γ.
    pub fn cosh_alpha(&self) -> f64 {
        self.cosh_alpha
    }

    /// cosh α − 1, free of cancellation for small boosts.
    pub fn cosh_alpha_minus_one(&self) -> f64 {
        self.sinh_alpha * self.sinh_alpha / (self.cosh_alpha + 1.0)
    }

    /// (cosh α − 1)/(cosh α + 1) = tanh²(α/2).
    pub fn half_rapidity_tanh_sq(&self) -> f64 {
        let t = self.sinh_alpha / (self.cosh_alpha + 1.0);
        t * t
    }

    pub fn identity() -> Self {
        BoostParams {
            beta: 0.0,
            alpha: 0.0,
            sinh_alpha: 0.0,
            cosh_alpha: 1.0,
        }
    }
}

/// Builds the boost for a frame moving at `beta = v/c`.
pub fn boost_from_beta(beta: f64) -> Result<BoostParams> {
    if !(0.0..1.0).contains(&beta) {
        return Err(Error::domain(format!(
            "boost speed beta must satisfy 0 <= beta < 1, got {beta}"
        )));
    }
    let cosh_alpha = 1.0 / ((1.0 - beta) * (1.0 + beta)).sqrt();
    let params = BoostParams {
        beta,
        alpha: beta.atanh(),
        sinh_alpha: beta * cosh_alpha,
        cosh_alpha,
    };
    let c = params.cosh_alpha;
    let s = params.sinh_alpha;
    // Relative check; cosh² itself is ~1e12 as beta → 1.
    if !c.is_finite() || ((c - s) * (c + s) - 1.0).abs() > 1e-12 * c * c.max(1.0) {
        return Err(Error::invariant(format!(
            "hyperbolic identity failed for beta = {beta}"
        )));
    }
    Ok(params)
}

/// Generalized Gaussian momentum profile ψ(p) ∝ pⁿ exp(−p²/2σ²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePacket {
    n: u32,
    sigma: f64,
    mass: f64,
}

impl WavePacket {
    pub fn new(n: u32, sigma: f64, mass: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::domain(format!("sigma must be positive, got {sigma}")));
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::domain(format!("mass must be positive, got {mass}")));
        }
        Ok(WavePacket { n, sigma, mass })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn sigma_over_m(&self) -> f64 {
        self.sigma / self.mass
    }

    /// True when σ/m < 1, the regime where the small-width expansion is used.
    pub fn is_perturbative(&self) -> bool {
        self.sigma_over_m() < 1.0
    }
}

/// ψ(p) = pⁿ e^(−p²/2σ²) / √(σ^(2n+1) Γ(n+½)), in MeV^(−1/2).
pub fn psi_amplitude(pkt: &WavePacket, p: f64) -> f64 {
    let kappa = p / pkt.sigma;
    let n = pkt.n;
    if n == 0 {
        let g = gamma_half_integer(0).expect("Gamma(1/2) is finite");
        return (-0.5 * kappa * kappa).exp() / (pkt.sigma * g).sqrt();
    }
    if kappa == 0.0 {
        return 0.0;
    }
    // Written in κ = p/σ so that σ^(2n+1) never appears on its own.
    if let Ok(g) = gamma_half_integer(n) {
        let direct = kappa.powi(n as i32) * (-0.5 * kappa * kappa).exp() / (pkt.sigma * g).sqrt();
        if direct.is_finite() && direct != 0.0 {
            return direct;
        }
    }
    let ln_mag = n as f64 * kappa.abs().ln() - 0.5 * kappa * kappa - 0.5 * (pkt.sigma.ln() + ln_gamma_half_integer(n));
    let sign = if kappa < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
    sign * ln_mag.exp()
}

/// Boost direction `e_hat` and particle momentum direction `f_hat`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryConfig {
    e_hat: [f64; 3],
    f_hat: [f64; 3],
}

impl GeometryConfig {
    pub fn new(e_hat: [f64; 3], f_hat: [f64; 3]) -> Result<Self> {
        for (name, v) in [("e_hat", e_hat), ("f_hat", f_hat)] {
            let norm = dot(v, v).sqrt();
            if (norm - 1.0).abs() > 1e-12 {
                return Err(Error::domain(format!("{name} must be a unit vector, |v| = {norm}")));
            }
        }
        Ok(GeometryConfig { e_hat, f_hat })
    }

    /// Boost along ẑ, momentum along x̂.
    pub fn perpendicular() -> Self {
        GeometryConfig {
            e_hat: [0.0, 0.0, 1.0],
            f_hat: [1.0, 0.0, 0.0],
        }
    }

    pub fn e_hat(&self) -> [f64; 3] {
        self.e_hat
    }

    pub fn f_hat(&self) -> [f64; 3] {
        self.f_hat
    }
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Which particles of the pair see a boost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scenario {
    /// Particle 1 boosted, particle 2 inertial.
    Single,
    /// Both particles boosted, possibly at different speeds.
    Dual,
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Single => "single",
            Scenario::Dual => "dual",
        }
    }
}

/// Entanglement angle θ of sin θ |01⟩ + cos θ |10⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntangledPair {
    theta: f64,
}

impl EntangledPair {
    pub fn new(theta: f64) -> Result<Self> {
        if !(theta.is_finite() && (0.0..=FRAC_PI_2 + 1e-12).contains(&theta)) {
            return Err(Error::domain(format!(
                "entanglement angle must satisfy 0 <= theta <= pi/2, got {theta}"
            )));
        }
        Ok(EntangledPair {
            theta: theta.min(FRAC_PI_2),
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// (sin θ, cos θ)
    pub fn sin_cos(&self) -> (f64, f64) {
        self.theta.sin_cos()
    }
}
