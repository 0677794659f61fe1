//! Spin reduced density matrices and coherence measures for entangled spin-½
//! pairs whose wave packets are seen from Lorentz-boosted frames.
//!
//! The pipeline runs from a boost and a generalized Gaussian packet through the
//! Wigner half-angle ([`wigner`]), its momentum moments ([`integrals`]), the
//! boosted two-qubit state ([`density`]) and finally the l₁ and Frobenius
//! coherence measures ([`coherence`]).
//!
//! ```
//! use spin_coherence::{boost_from_beta, c_frobenius_perturbative, Boosts};
//!
//! let boost = boost_from_beta(0.95).unwrap();
//! let c = c_frobenius_perturbative(2, Boosts::Single(boost), 100.0 / 939.36).unwrap();
//! assert!((c - 0.995051).abs() < 1e-6);
//! ```

#![cfg_attr(test, allow(clippy::excessive_precision))]

pub mod cli;
pub mod coherence;
pub mod density;
pub mod domain;
pub mod error;
pub mod integrals;
pub mod linalg;
pub mod matrix;
pub mod quadrature;
pub mod special;
pub mod wigner;

pub use coherence::{
    c_frobenius, c_frobenius_perturbative, c_l1, hermitian_eigenvalues, spectrum_dual_boost, spectrum_single_boost,
    Boosts, CoherenceReport, ReportMethod, Spectrum,
};
pub use density::{
    amplitudes_dual, amplitudes_single, partial_trace, rho_dual_boost_general, rho_dual_boost_perturbative,
    rho_single_boost_general, rho_single_boost_perturbative, HalfAngle, Keep,
};
pub use domain::{boost_from_beta, psi_amplitude, BoostParams, EntangledPair, GeometryConfig, Scenario, WavePacket};
pub use error::{Error, Result};
pub use integrals::{
    check_n, f_factor, moments_perturbative, moments_quadrature, n_bounds, MomentIntegrals, MomentMethod,
    PerturbativeFactor,
};
pub use matrix::DensityMatrix;
pub use quadrature::GaussHermite;
pub use wigner::{half_angle_general, half_angle_perp, little_group_matrix, WignerHalfAngle, WignerTrig};
