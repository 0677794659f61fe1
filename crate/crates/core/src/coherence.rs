//! l₁-norm and Frobenius-norm coherence.
//!
//! The boosted two-qubit states are X-shaped, so their spectra follow from two
//! 2×2 blocks. The Jacobi solver in [`hermitian_eigenvalues`] serves as the
//! independent check on those closed forms.

use crate::density::{rho_dual_boost_perturbative, rho_single_boost_perturbative};
use crate::domain::{BoostParams, EntangledPair, Scenario};
use crate::error::{Error, Result};
use crate::integrals::{check_n, f_factor, PerturbativeFactor};
use crate::linalg::hermitian_jacobi_eigenvalues;
use crate::matrix::DensityMatrix;

const SUM_TOL: f64 = 1e-10;
const RANGE_TOL: f64 = 1e-10;

/// Eigenvalues of a density matrix, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>) -> Result<Self> {
        if eigenvalues.len() < 2 {
            return Err(Error::domain("a spectrum needs at least two eigenvalues"));
        }
        if eigenvalues
            .iter()
            .any(|l| !l.is_finite() || *l < -RANGE_TOL || *l > 1.0 + RANGE_TOL)
        {
            return Err(Error::invariant(format!("eigenvalues {eigenvalues:?} leave [0, 1]")));
        }
        let sum: f64 = eigenvalues.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::invariant(format!("eigenvalues sum to {sum}")));
        }
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Ok(Spectrum { eigenvalues })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMethod {
    Analytic,
    Eigensolver,
    Perturbative,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoherenceReport {
    pub c_l1: f64,
    pub c_frobenius: f64,
    pub spectrum: Spectrum,
    pub method: ReportMethod,
    pub dim: usize,
}

/// Σ_{i≠j} |ρᵢⱼ|
pub fn c_l1(rho: &DensityMatrix) -> f64 {
    let d = rho.dim();
    let mut total = 0.0;
    for r in 0..d {
        for c in 0..d {
            if r != c {
                total += rho.get(r, c).norm();
            }
        }
    }
    total
}

/// √( d/(d−1) · Σ (λᵢ − 1/d)² ), with d the spectrum length.
pub fn c_frobenius(spec: &Spectrum) -> f64 {
    let d = spec.dim() as f64;
    let s: f64 = spec.eigenvalues.iter().map(|l| (l - 1.0 / d).powi(2)).sum();
    (d * s / (d - 1.0)).sqrt()
}

/// {1 − ℱ, ℱ, 0, 0}; the same for every θ.
pub fn spectrum_single_boost(f: PerturbativeFactor) -> Result<Spectrum> {
    let f = f.value();
    if f >= 0.5 {
        return Err(Error::domain(format!("single-boost spectrum needs F < 1/2, got {f}")));
    }
    Spectrum::new(vec![1.0 - f, f, 0.0, 0.0])
}

/// {1 − ℱ₁ − ℱ₂, ξ₁, ξ₂, 0} with ξ₁,₂ = (ℱ₁+ℱ₂)/2 ± ½√(ℱ₁² + ℱ₂² − 2ℱ₁ℱ₂ cos 4θ).
pub fn spectrum_dual_boost(pair: &EntangledPair, f1: PerturbativeFactor, f2: PerturbativeFactor) -> Result<Spectrum> {
    let (f1, f2) = (f1.value(), f2.value());
    if f1 + f2 >= 0.5 {
        return Err(Error::domain(format!(
            "dual-boost spectrum needs F1 + F2 < 1/2, got {}",
            f1 + f2
        )));
    }
    let cos4 = (4.0 * pair.theta()).cos();
    // Rounding can push the radicand of a double root just below zero.
    let disc = (f1 * f1 + f2 * f2 - 2.0 * f1 * f2 * cos4).max(0.0).sqrt();
    let xi1 = 0.5 * (f1 + f2) + 0.5 * disc;
    let xi2 = (0.5 * (f1 + f2) - 0.5 * disc).max(0.0);
    Spectrum::new(vec![1.0 - (f1 + f2), xi1, xi2, 0.0])
}

/// Spectrum by cyclic Jacobi rotations.
pub fn hermitian_eigenvalues(rho: &DensityMatrix) -> Result<Spectrum> {
    Spectrum::new(hermitian_jacobi_eigenvalues(rho.entries(), rho.dim())?)
}

/// Eigenvalues of a 4×4 X-shaped matrix from its {|00⟩,|11⟩} and {|01⟩,|10⟩}
/// blocks.
pub fn x_state_spectrum(rho: &DensityMatrix) -> Result<Spectrum> {
    if rho.dim() != 4 || !rho.is_x_shaped(0.0) {
        return Err(Error::domain("closed-form spectrum needs a 4x4 X-shaped matrix"));
    }
    let block = |i: usize, j: usize| {
        let (a, d) = (rho.get(i, i).re, rho.get(j, j).re);
        let b = rho.get(i, j).norm();
        let half_gap = (0.25 * (a - d) * (a - d) + b * b).sqrt();
        let mean = 0.5 * (a + d);
        [mean + half_gap, mean - half_gap]
    };
    let [o1, o2] = block(0, 3);
    let [i1, i2] = block(1, 2);
    Spectrum::new(vec![o1, o2, i1, i2])
}

/// Boost configuration for [`c_frobenius_perturbative`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Boosts {
    Single(BoostParams),
    Dual(BoostParams, BoostParams),
}

impl Boosts {
    pub fn scenario(&self) -> Scenario {
        match self {
            Boosts::Single(_) => Scenario::Single,
            Boosts::Dual(..) => Scenario::Dual,
        }
    }
}

/// 1 − ((2n+1)/6)·tanh²(α/2)·(σ/m)², summed over boosted particles.
///
/// Equals 1 − (4/3)ℱ for one boost and 1 − (4/3)(ℱ₁ + ℱ₂) for two.
pub fn c_frobenius_perturbative(n: i64, boosts: Boosts, sigma_over_m: f64) -> Result<f64> {
    let n = check_n(n, sigma_over_m, boosts.scenario())?;
    let deficit = match boosts {
        Boosts::Single(b) => f_factor(n, &b, sigma_over_m)?.value(),
        Boosts::Dual(b1, b2) => f_factor(n, &b1, sigma_over_m)?.value() + f_factor(n, &b2, sigma_over_m)?.value(),
    };
    Ok(1.0 - 4.0 / 3.0 * deficit)
}

fn report(rho: &DensityMatrix, spectrum: Spectrum, method: ReportMethod) -> CoherenceReport {
    CoherenceReport {
        c_l1: c_l1(rho),
        c_frobenius: c_frobenius(&spectrum),
        dim: spectrum.dim(),
        spectrum,
        method,
    }
}

/// Coherence of the one-boost state; `Analytic` uses the closed-form
/// spectrum, anything else runs the eigensolver on the matrix.
pub fn report_single_boost(
    pair: &EntangledPair,
    f: PerturbativeFactor,
    method: ReportMethod,
) -> Result<CoherenceReport> {
    let rho = rho_single_boost_perturbative(pair, f)?;
    let spectrum = match method {
        ReportMethod::Analytic => spectrum_single_boost(f)?,
        _ => hermitian_eigenvalues(&rho)?,
    };
    Ok(report(&rho, spectrum, method))
}

pub fn report_dual_boost(
    pair: &EntangledPair,
    f1: PerturbativeFactor,
    f2: PerturbativeFactor,
    method: ReportMethod,
) -> Result<CoherenceReport> {
    let rho = rho_dual_boost_perturbative(pair, f1, f2)?;
    let spectrum = match method {
        ReportMethod::Analytic => spectrum_dual_boost(pair, f1, f2)?,
        _ => hermitian_eigenvalues(&rho)?,
    };
    Ok(report(&rho, spectrum, method))
}

/// Coherence of any valid matrix through the eigensolver.
pub fn report_matrix(rho: &DensityMatrix) -> Result<CoherenceReport> {
    let spectrum = hermitian_eigenvalues(rho)?;
    Ok(report(rho, spectrum, ReportMethod::Eigensolver))
}
