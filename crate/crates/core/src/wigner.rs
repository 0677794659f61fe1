//! Wigner rotation half-angle data for a massive particle seen from a boosted frame.
//!
//! The particle has four-momentum m(cosh χ, sinh χ f̂) and the frame moves with
//! velocity tanh α ê. [`half_angle_general`] handles any geometry;
//! [`half_angle_perp`] is the ê = ẑ, f̂ = x̂ case written in terms of
//! a = sinh α, b = cosh α and x = p/m, which is what the density-matrix
//! pipeline integrates over.

use crate::domain::{cross, dot, BoostParams, GeometryConfig};
use crate::error::{Error, Result};

/// cos(φ/2) and sin(φ/2) n̂ of the Wigner rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerHalfAngle {
    pub cos_half: f64,
    pub sin_half_axis: [f64; 3],
}

impl WignerHalfAngle {
    pub fn sin_half_norm(&self) -> f64 {
        dot(self.sin_half_axis, self.sin_half_axis).sqrt()
    }
}

/// The three quadratic combinations cos²(φ/2), sin²(φ/2), sin(φ/2)cos(φ/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerTrig {
    pub cos2_half: f64,
    pub sin2_half: f64,
    pub sincos_half: f64,
}

impl WignerTrig {
    pub const IDENTITY: WignerTrig = WignerTrig {
        cos2_half: 1.0,
        sin2_half: 0.0,
        sincos_half: 0.0,
    };

    /// Recovers (cos(φ/2), sin(φ/2)) with cos(φ/2) ≥ 0 and the sign of
    /// sin(φ/2) taken from `sincos_half`.
    pub fn half_angle(&self) -> Result<(f64, f64)> {
        if self.cos2_half < 1e-14 {
            return Err(Error::Degenerate(format!(
                "cos^2(phi/2) = {:e} is too small to recover the sign of sin(phi/2)",
                self.cos2_half
            )));
        }
        let c = self.cos2_half.sqrt();
        Ok((c, self.sincos_half / c))
    }

    /// Rotation angle φ in (−π, π).
    pub fn angle(&self) -> f64 {
        2.0 * self.sincos_half.signum() * self.sin2_half.max(0.0).sqrt().atan2(self.cos2_half.max(0.0).sqrt())
    }
}

/// cos(φ/2) and sin(φ/2) n̂ for rapidity `chi` and an arbitrary geometry.
pub fn half_angle_general(boost: &BoostParams, chi: f64, geom: &GeometryConfig) -> WignerHalfAngle {
    let (e, f) = (geom.e_hat(), geom.f_hat());
    let ef = dot(e, f);
    let half_alpha = 0.5 * boost.alpha();
    let half_chi = 0.5 * chi;
    let denom = (0.5 + 0.5 * boost.cosh_alpha() * chi.cosh() + 0.5 * boost.sinh_alpha() * chi.sinh() * ef).sqrt();
    let cos_half = (half_alpha.cosh() * half_chi.cosh() + half_alpha.sinh() * half_chi.sinh() * ef) / denom;
    let k = half_alpha.sinh() * half_chi.sinh() / denom;
    let axis = cross(e, f);
    WignerHalfAngle {
        cos_half,
        sin_half_axis: [k * axis[0], k * axis[1], k * axis[2]],
    }
}

/// Perpendicular geometry (ê = ẑ, f̂ = x̂) with `p_over_m` = sinh χ.
///
/// `p_over_m` may be negative; cos² and sin² are even in it and the mixed
/// term is odd.
pub fn half_angle_perp(boost: &BoostParams, p_over_m: f64) -> WignerTrig {
    let a = boost.sinh_alpha();
    let b = boost.cosh_alpha();
    let x = p_over_m;
    let root = (1.0 + x * x).sqrt();
    // √(1+x²) − 1 without cancellation
    let root_minus_one = x * x / (1.0 + root);
    let denom = 2.0 * (1.0 + b * root);
    let cos2_half = (1.0 + b) * (1.0 + root) / denom;
    // (1 − b)(1 − √(1+x²)) with both factors taken in their stable form.
    let sin2_half = boost.cosh_alpha_minus_one() * root_minus_one / denom;
    let sincos_half = a * x / denom;
    debug_assert!(sin2_half >= 0.0);
    WignerTrig {
        cos2_half,
        sin2_half,
        sincos_half,
    }
}

/// The spin-½ little-group matrix in the computational basis.
///
/// Acts as D|0⟩ = c|0⟩ − s|1⟩ and D|1⟩ = s|0⟩ + c|1⟩, so columns are the
/// images of the basis vectors: [[c, s], [−s, c]].
pub fn little_group_matrix(trig: &WignerTrig) -> Result<[[f64; 2]; 2]> {
    let (c, s) = trig.half_angle()?;
    Ok([[c, s], [-s, c]])
}
