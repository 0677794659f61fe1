//! Momentum moments of the Wigner half-angle functions.
//!
//! For a packet with |ψ(p)|² ∝ p^(2n) e^(−p²/σ²) the spin density matrices only
//! need three numbers per boosted particle:
//!
//! ```text
//! I₁ = ∫ |ψ|² cos²(φ/2),   I₂ = ∫ |ψ|² sin(φ/2)cos(φ/2),   I₃ = ∫ |ψ|² sin²(φ/2)
//! ```
//!
//! After κ = p/σ each becomes (1/Γ(n+½)) ∫ κ^(2n) e^(−κ²) g(σκ/m) dκ, which is
//! evaluated exactly with adaptive Gauss–Hermite quadrature. The small-width
//! closed forms I₁ = 1 − ℱ, I₂ = 0, I₃ = ℱ with
//! ℱ = ((2n+1)/8)·((cosh α − 1)/(cosh α + 1))·(σ/m)² are provided alongside.

use crate::domain::{BoostParams, Scenario, WavePacket};
use crate::error::{Error, Result};
use crate::quadrature::{GaussHermite, MAX_ORDER};
use crate::special::{gamma_half_integer, gamma_ratio_integer_over_half, ln_gamma_half_integer};
use crate::wigner::half_angle_perp;

/// Relative tolerance between successive orders in [`moments_quadrature`].
pub const QUAD_REL_TOL: f64 = 1e-12;
pub const QUAD_START_ORDER: usize = 16;

const SUM_TOL_QUADRATURE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MomentMethod {
    Quadrature,
    Perturbative,
}

/// (I₁, I₂, I₃) for one boosted particle; (𝒥ᵢ, 𝒦ᵢ, ℒᵢ) in the two-boost case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentIntegrals {
    pub i1: f64,
    pub i2: f64,
    pub i3: f64,
    pub method: MomentMethod,
}

impl MomentIntegrals {
    pub fn new(i1: f64, i2: f64, i3: f64, method: MomentMethod) -> Result<Self> {
        let m = MomentIntegrals { i1, i2, i3, method };
        m.validate()?;
        Ok(m)
    }

    /// Moments of a particle that sees no rotation.
    pub fn unrotated(method: MomentMethod) -> Self {
        MomentIntegrals {
            i1: 1.0,
            i2: 0.0,
            i3: 0.0,
            method,
        }
    }

    fn validate(&self) -> Result<()> {
        let (i1, i2, i3) = (self.i1, self.i2, self.i3);
        if ![i1, i2, i3].iter().all(|v| v.is_finite()) {
            return Err(Error::invariant("moment integrals must be finite"));
        }
        let sum_tol = match self.method {
            MomentMethod::Quadrature => SUM_TOL_QUADRATURE,
            MomentMethod::Perturbative => 4.0 * f64::EPSILON,
        };
        if (i1 + i3 - 1.0).abs() > sum_tol {
            return Err(Error::invariant(format!("I1 + I3 = {} differs from 1", i1 + i3)));
        }
        let tol = 4.0 * f64::EPSILON;
        if !(-tol..=1.0 + tol).contains(&i1) || !(-tol..=1.0 + tol).contains(&i3) {
            return Err(Error::invariant(format!("I1 = {i1}, I3 = {i3} must lie in [0, 1]")));
        }
        if i2.abs() > 0.5 {
            return Err(Error::invariant(format!("|I2| = {} exceeds 1/2", i2.abs())));
        }
        Ok(())
    }

    /// The 2×2 second-moment matrix [[I₁, I₂], [I₂, I₃]] of (cos, sin).
    pub fn as_matrix(&self) -> [[f64; 2]; 2] {
        [[self.i1, self.i2], [self.i2, self.i3]]
    }
}

/// The O((σ/m)²) spin-mixing factor ℱ.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PerturbativeFactor(f64);

impl PerturbativeFactor {
    pub fn new(f: f64) -> Result<Self> {
        if !(f.is_finite() && f >= 0.0) {
            return Err(Error::domain(format!(
                "perturbative factor must be nonnegative, got {f}"
            )));
        }
        Ok(PerturbativeFactor(f))
    }

    pub const ZERO: PerturbativeFactor = PerturbativeFactor(0.0);

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// κ^(2n)/Γ(n+½), switching to log space once the direct form would overflow.
fn packet_weight(n: u32, kappa: f64, inv_gamma: Option<f64>, ln_gamma: f64) -> f64 {
    if n == 0 {
        return inv_gamma.expect("Gamma(1/2) is finite");
    }
    if kappa == 0.0 {
        return 0.0;
    }
    if let Some(inv) = inv_gamma {
        if n <= 60 {
            let direct = (kappa * kappa).powi(n as i32) * inv;
            if direct.is_finite() {
                return direct;
            }
        }
    }
    (2.0 * n as f64 * kappa.abs().ln() - ln_gamma).exp()
}

/// Evaluates the three moments with a fixed `order`-point Gauss–Hermite rule.
pub fn moments_at_order(pkt: &WavePacket, boost: &BoostParams, order: usize) -> Result<MomentIntegrals> {
    let m = raw_moments(pkt, boost, order)?;
    m.validate()?;
    Ok(m)
}

/// Quadrature sums without the invariant check; low orders may not have
/// converged far enough for I₁ + I₃ = 1 to hold.
fn raw_moments(pkt: &WavePacket, boost: &BoostParams, order: usize) -> Result<MomentIntegrals> {
    if pkt.n() > SHIFTED_RULE_MIN_N {
        raw_moments_shifted(pkt, boost, order)
    } else {
        raw_moments_centred(pkt, boost, order)
    }
}

fn raw_moments_centred(pkt: &WavePacket, boost: &BoostParams, order: usize) -> Result<MomentIntegrals> {
    let rule = GaussHermite::cached(order)?;
    let n = pkt.n();
    let inv_gamma = gamma_half_integer(n).ok().map(|g| 1.0 / g);
    let ln_gamma = ln_gamma_half_integer(n);
    let som = pkt.sigma_over_m();

    let (mut i1, mut i2, mut i3) = (0.0, 0.0, 0.0);
    for (&kappa, &w) in rule.nodes().iter().zip(rule.weights()) {
        let weight = w * packet_weight(n, kappa, inv_gamma, ln_gamma);
        if weight == 0.0 {
            continue;
        }
        let trig = half_angle_perp(boost, som * kappa);
        i1 += weight * trig.cos2_half;
        i2 += weight * trig.sincos_half;
        i3 += weight * trig.sin2_half;
    }
    Ok(MomentIntegrals {
        i1,
        i2,
        i3,
        method: MomentMethod::Quadrature,
    })
}

/// Above this n the weight κ^(2n) e^(−κ²) peaks at κ = √n, beyond the
/// nodes of low-order rules, and [`raw_moments_shifted`] takes over.
const SHIFTED_RULE_MIN_N: u32 = 20;

/// Gauss–Hermite rule recentred on the peak of the weight.
///
/// With κ = √n + t/√2 the weight is exp(−t² + O(t³/√n)), so the ratio to
/// e^(−t²) is smooth. The integrands of I₁ and I₃ are even, so only κ > 0 is
/// summed and doubled; I₂ is odd and vanishes identically.
fn raw_moments_shifted(pkt: &WavePacket, boost: &BoostParams, order: usize) -> Result<MomentIntegrals> {
    let rule = GaussHermite::cached(order)?;
    let n = pkt.n() as f64;
    let peak = n.sqrt();
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let ln_norm = ln_gamma_half_integer(pkt.n()) - (2.0 * scale).ln();
    let som = pkt.sigma_over_m();

    let (mut i1, mut i3) = (0.0, 0.0);
    for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
        let kappa = peak + scale * t;
        if kappa <= 0.0 {
            continue;
        }
        let weight = w * (t * t + 2.0 * n * kappa.ln() - kappa * kappa - ln_norm).exp();
        let trig = half_angle_perp(boost, som * kappa);
        i1 += weight * trig.cos2_half;
        i3 += weight * trig.sin2_half;
    }
    Ok(MomentIntegrals {
        i1,
        i2: 0.0,
        i3,
        method: MomentMethod::Quadrature,
    })
}

/// Largest relative change between two estimates. I₂ is measured against
/// √(I₁ I₃), its Cauchy–Schwarz bound, since its exact value is zero.
fn moment_delta(prev: &MomentIntegrals, next: &MomentIntegrals) -> f64 {
    let rel = |a: f64, b: f64, scale: f64| {
        let d = (a - b).abs();
        if d == 0.0 {
            0.0
        } else {
            d / scale
        }
    };
    let d1 = rel(prev.i1, next.i1, next.i1.abs());
    let d3 = rel(prev.i3, next.i3, next.i3.abs());
    let d2 = rel(prev.i2, next.i2, (next.i1 * next.i3).abs().sqrt());
    d1.max(d2).max(d3)
}

/// Exact moments by Gauss–Hermite quadrature, doubling the order from 16
/// until successive estimates agree to [`QUAD_REL_TOL`] or `max_order`
/// (at most 256) is reached.
pub fn moments_quadrature(pkt: &WavePacket, boost: &BoostParams, max_order: usize) -> Result<MomentIntegrals> {
    let cap = max_order.clamp(2, MAX_ORDER);
    let mut order = QUAD_START_ORDER.min(cap);
    let mut prev = raw_moments(pkt, boost, order)?;
    let mut delta = f64::INFINITY;
    while order < cap {
        order = (order * 2).min(cap);
        let next = raw_moments(pkt, boost, order)?;
        delta = moment_delta(&prev, &next);
        prev = next;
        if delta <= QUAD_REL_TOL {
            prev.validate()?;
            return Ok(prev);
        }
    }
    Err(Error::ToleranceNotMet {
        best: prev,
        delta,
        tolerance: QUAD_REL_TOL,
        order,
    })
}

fn check_sigma_over_m(sigma_over_m: f64) -> Result<()> {
    if !(sigma_over_m.is_finite() && sigma_over_m > 0.0 && sigma_over_m < 1.0) {
        return Err(Error::domain(format!(
            "sigma/m must satisfy 0 < sigma/m < 1 for the small-width expansion, got {sigma_over_m}"
        )));
    }
    Ok(())
}

/// ℱ = ((2n+1)/8)·((cosh α − 1)/(cosh α + 1))·(σ/m)².
pub fn f_factor(n: u32, boost: &BoostParams, sigma_over_m: f64) -> Result<PerturbativeFactor> {
    check_sigma_over_m(sigma_over_m)?;
    let f = (2.0 * n as f64 + 1.0) / 8.0 * boost.half_rapidity_tanh_sq() * sigma_over_m * sigma_over_m;
    if f > 1.0 {
        return Err(Error::Validity(format!(
            "F = {f} puts the perturbative I1 = 1 - F outside [0, 1]"
        )));
    }
    PerturbativeFactor::new(f)
}

/// (1 − ℱ, 0, ℱ), the small-width moments for integer n.
pub fn moments_perturbative(n: u32, boost: &BoostParams, sigma_over_m: f64) -> Result<MomentIntegrals> {
    let f = f_factor(n, boost, sigma_over_m)?.value();
    MomentIntegrals::new(1.0 - f, 0.0, f, MomentMethod::Perturbative)
}

/// The small-width I₂ as a parity factor times a magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct I2ParityTerm {
    /// (1 − (−1)^(2n))/2, zero for every integer n.
    pub parity: f64,
    /// Γ(n+1)/Γ(n+½) · sinh α/(2(cosh α + 1)) · (σ/m)
    pub bracket: f64,
}

impl I2ParityTerm {
    pub fn value(&self) -> f64 {
        self.parity * self.bracket
    }
}

pub fn i2_parity_term(n: u32, boost: &BoostParams, sigma_over_m: f64) -> I2ParityTerm {
    // (−1)^(2n) = 1 for integer n
    let parity = 0.0;
    let bracket =
        gamma_ratio_integer_over_half(n) * boost.sinh_alpha() / (2.0 * (boost.cosh_alpha() + 1.0)) * sigma_over_m;
    I2ParityTerm { parity, bracket }
}

/// Range (lower, upper) for n: −½ < n ≤ 3(m/σ)² − ½ for one boost and
/// n ≤ (3/2)(m/σ)² − ½ for two. The lower bound is exclusive.
pub fn n_bounds(sigma_over_m: f64, scenario: Scenario) -> Result<(f64, f64)> {
    check_sigma_over_m(sigma_over_m)?;
    let inv_sq = 1.0 / (sigma_over_m * sigma_over_m);
    let upper = match scenario {
        Scenario::Single => 3.0 * inv_sq - 0.5,
        Scenario::Dual => 1.5 * inv_sq - 0.5,
    };
    Ok((-0.5, upper))
}

/// Fails with a domain error naming the violated bound.
pub fn check_n(n: i64, sigma_over_m: f64, scenario: Scenario) -> Result<u32> {
    let (lower, upper) = n_bounds(sigma_over_m, scenario)?;
    if (n as f64) <= lower {
        return Err(Error::domain(format!(
            "n = {n} violates the lower bound n > -1/2 (n must be a nonnegative integer)"
        )));
    }
    if (n as f64) > upper {
        return Err(Error::domain(format!(
            "n = {n} exceeds the {} upper bound n <= {upper} at sigma/m = {sigma_over_m}",
            scenario.name()
        )));
    }
    u32::try_from(n).map_err(|_| Error::domain(format!("n = {n} is out of range")))
}
