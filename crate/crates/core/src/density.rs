//! Boosted two-qubit spin density matrices and their single-qubit reductions.
//!
//! The initial state is sin θ |01⟩ + cos θ |10⟩. A boosted particle's spin is
//! rotated by its momentum-dependent little-group element, and tracing over
//! momentum leaves only the second moments of (cos(φ/2), sin(φ/2)). Basis
//! order is |00⟩, |01⟩, |10⟩, |11⟩ with particle 1 as the high bit.

use num_complex::Complex64;

use crate::domain::EntangledPair;
use crate::error::{Error, Result};
use crate::integrals::{MomentIntegrals, PerturbativeFactor};
use crate::matrix::DensityMatrix;
use crate::wigner::WignerTrig;

/// (cos(φ/2), sin(φ/2)) for one particle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfAngle {
    cos: f64,
    sin: f64,
}

impl HalfAngle {
    pub fn new(cos: f64, sin: f64) -> Result<Self> {
        let closure = cos * cos + sin * sin - 1.0;
        if !closure.is_finite() || closure.abs() > 1e-10 {
            return Err(Error::domain(format!(
                "half-angle pair ({cos}, {sin}) is not on the unit circle"
            )));
        }
        Ok(HalfAngle { cos, sin })
    }

    /// Half-angle pair of the rotation angle `phi`.
    pub fn from_angle(phi: f64) -> Self {
        let (sin, cos) = (0.5 * phi).sin_cos();
        HalfAngle { cos, sin }
    }

    pub fn identity() -> Self {
        HalfAngle { cos: 1.0, sin: 0.0 }
    }

    pub fn cos(&self) -> f64 {
        self.cos
    }

    pub fn sin(&self) -> f64 {
        self.sin
    }
}

impl TryFrom<WignerTrig> for HalfAngle {
    type Error = Error;

    fn try_from(trig: WignerTrig) -> Result<Self> {
        let (c, s) = trig.half_angle()?;
        HalfAngle::new(c, s)
    }
}

/// Amplitudes after boosting particle 1: 𝒞|00⟩ + 𝒜|01⟩ + 𝒟|10⟩ + 𝒝|11⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinAmplitudesSingle {
    pub a_coef: f64,
    pub b_coef: f64,
    pub c_coef: f64,
    pub d_coef: f64,
}

impl SpinAmplitudesSingle {
    /// State vector in basis order.
    pub fn state(&self) -> [f64; 4] {
        [self.c_coef, self.a_coef, self.d_coef, self.b_coef]
    }
}

/// Amplitudes after boosting both particles: 𝒫|00⟩ + 𝒬|01⟩ + ℛ|10⟩ + 𝒮|11⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinAmplitudesDual {
    pub p_coef: f64,
    pub q_coef: f64,
    pub r_coef: f64,
    pub s_coef: f64,
}

impl SpinAmplitudesDual {
    pub fn state(&self) -> [f64; 4] {
        [self.p_coef, self.q_coef, self.r_coef, self.s_coef]
    }
}

pub fn amplitudes_single(pair: &EntangledPair, phi_half: HalfAngle) -> SpinAmplitudesSingle {
    let (st, ct) = pair.sin_cos();
    let (c, s) = (phi_half.cos, phi_half.sin);
    SpinAmplitudesSingle {
        a_coef: st * c,
        b_coef: -st * s,
        c_coef: ct * s,
        d_coef: ct * c,
    }
}

pub fn amplitudes_dual(pair: &EntangledPair, phi1_half: HalfAngle, phi2_half: HalfAngle) -> SpinAmplitudesDual {
    let (st, ct) = pair.sin_cos();
    let (c1, s1) = (phi1_half.cos, phi1_half.sin);
    let (c2, s2) = (phi2_half.cos, phi2_half.sin);
    SpinAmplitudesDual {
        p_coef: st * c1 * s2 + ct * s1 * c2,
        q_coef: st * c1 * c2 - ct * s1 * s2,
        r_coef: ct * c1 * c2 - st * s1 * s2,
        s_coef: -(st * s1 * c2 + ct * c1 * s2),
    }
}

fn real_matrix(rows: [[f64; 4]; 4]) -> Result<DensityMatrix> {
    let flat: Vec<f64> = rows.iter().flatten().copied().collect();
    DensityMatrix::from_real(4, &flat)
}

/// Momentum-averaged state with particle 1 boosted, for arbitrary moments.
///
/// Nonzero I₂ is kept; it fills the entries that vanish for symmetric packets.
pub fn rho_single_boost_general(pair: &EntangledPair, m: &MomentIntegrals) -> Result<DensityMatrix> {
    let (st, ct) = pair.sin_cos();
    let (i1, i2, i3) = (m.i1, m.i2, m.i3);
    let (ss, cc, sc) = (st * st, ct * ct, st * ct);
    real_matrix([
        [cc * i3, sc * i2, cc * i2, -sc * i3],
        [sc * i2, ss * i1, sc * i1, -ss * i2],
        [cc * i2, sc * i1, cc * i1, -sc * i2],
        [-sc * i3, -ss * i2, -sc * i2, ss * i3],
    ])
}

/// The small-width state for one boost: ℱ on the outer block, 1 − ℱ inside.
pub fn rho_single_boost_perturbative(pair: &EntangledPair, f: PerturbativeFactor) -> Result<DensityMatrix> {
    let f = f.value();
    if f >= 0.5 {
        return Err(Error::domain(format!("single-boost matrix needs F < 1/2, got {f}")));
    }
    let (st, ct) = pair.sin_cos();
    let (ss, cc, sc) = (st * st, ct * ct, st * ct);
    let g = 1.0 - f;
    real_matrix([
        [cc * f, 0.0, 0.0, -sc * f],
        [0.0, ss * g, sc * g, 0.0],
        [0.0, sc * g, cc * g, 0.0],
        [-sc * f, 0.0, 0.0, ss * f],
    ])
}

/// The small-width state for two boosts.
///
/// The |00⟩ corner carries sin²θ ℱ₁ + cos²θ ℱ₂ and the |11⟩ corner the mirror
/// combination, so particle 1's reduced state depends on ℱ₂ and particle 2's
/// on ℱ₁. With ℱ₁ = 0 this is exactly the one-boost matrix in ℱ₂.
pub fn rho_dual_boost_perturbative(
    pair: &EntangledPair,
    f1: PerturbativeFactor,
    f2: PerturbativeFactor,
) -> Result<DensityMatrix> {
    let (f1, f2) = (f1.value(), f2.value());
    if f1 + f2 >= 0.5 {
        return Err(Error::domain(format!(
            "dual-boost matrix needs F1 + F2 < 1/2, got {}",
            f1 + f2
        )));
    }
    let (st, ct) = pair.sin_cos();
    let (ss, cc, sc) = (st * st, ct * ct, st * ct);
    let g = 1.0 - f1 - f2;
    let anti = -sc * (f1 + f2);
    real_matrix([
        [ss * f1 + cc * f2, 0.0, 0.0, anti],
        [0.0, ss * g, sc * g, 0.0],
        [0.0, sc * g, cc * g, 0.0],
        [anti, 0.0, 0.0, ss * f2 + cc * f1],
    ])
}

/// Momentum-averaged state with both particles boosted, for arbitrary moments.
///
/// Built as E[v vᵀ] where v = (𝒫, 𝒬, ℛ, 𝒮) is bilinear in the two particles'
/// (cos, sin) pairs, which are independent. Each amplitude is a tensor
/// T[a][b] contracted with particle 1's component a and particle 2's
/// component b.
pub fn rho_dual_boost_general(
    pair: &EntangledPair,
    m1: &MomentIntegrals,
    m2: &MomentIntegrals,
) -> Result<DensityMatrix> {
    let (st, ct) = pair.sin_cos();
    // index 0 = cos, 1 = sin
    let t: [[[f64; 2]; 2]; 4] = [
        [[0.0, st], [ct, 0.0]],
        [[st, 0.0], [0.0, -ct]],
        [[ct, 0.0], [0.0, -st]],
        [[0.0, -ct], [-st, 0.0]],
    ];
    let (a1, a2) = (m1.as_matrix(), m2.as_matrix());
    let mut rows = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let mut acc = 0.0;
            for a in 0..2 {
                for ap in 0..2 {
                    for b in 0..2 {
                        for bp in 0..2 {
                            acc += t[i][a][b] * t[j][ap][bp] * a1[a][ap] * a2[b][bp];
                        }
                    }
                }
            }
            rows[i][j] = acc;
            rows[j][i] = acc;
        }
    }
    real_matrix(rows)
}

/// Which qubit survives [`partial_trace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keep {
    First,
    Second,
}

pub fn partial_trace(rho: &DensityMatrix, keep: Keep) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::domain(format!(
            "partial trace needs a 4x4 matrix, got {0}x{0}",
            rho.dim()
        )));
    }
    let mut out = vec![Complex64::new(0.0, 0.0); 4];
    for r in 0..2 {
        for c in 0..2 {
            out[r * 2 + c] = (0..2)
                .map(|k| match keep {
                    Keep::First => rho.get(2 * r + k, 2 * c + k),
                    Keep::Second => rho.get(2 * k + r, 2 * k + c),
                })
                .sum();
        }
    }
    DensityMatrix::new(2, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{boost_from_beta, BoostParams, WavePacket};
    use crate::integrals::{moments_quadrature, MomentMethod};
    use crate::linalg::hermitian_jacobi_eigenvalues;
    use crate::quadrature::MAX_ORDER;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

    fn pair(theta: f64) -> EntangledPair {
        EntangledPair::new(theta).unwrap()
    }

    fn pf(f: f64) -> PerturbativeFactor {
        PerturbativeFactor::new(f).unwrap()
    }

    fn pert_moments(f: f64) -> MomentIntegrals {
        MomentIntegrals::new(1.0 - f, 0.0, f, MomentMethod::Perturbative).unwrap()
    }

    fn assert_close(a: &DensityMatrix, b: &DensityMatrix, tol: f64) {
        let d = a.max_abs_diff(b);
        assert!(d <= tol, "matrices differ by {d:e}\n{a}\n{b}");
    }

    fn diag2(rho: &DensityMatrix) -> (f64, f64) {
        assert_abs_diff_eq!(rho.get(0, 1).norm(), 0.0, epsilon = 1e-15);
        (rho.get(0, 0).re, rho.get(1, 1).re)
    }

    #[test]
    fn single_amplitudes() {
        let a = amplitudes_single(&pair(FRAC_PI_4), HalfAngle::identity());
        assert_abs_diff_eq!(a.a_coef, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_eq!(a.b_coef, 0.0);
        assert_eq!(a.c_coef, 0.0);
        assert_abs_diff_eq!(a.d_coef, FRAC_1_SQRT_2, epsilon = 1e-15);

        let a = amplitudes_single(&pair(0.0), HalfAngle::from_angle(FRAC_PI_2));
        assert_eq!(a.a_coef, 0.0);
        assert_eq!(a.b_coef, 0.0);
        assert_abs_diff_eq!(a.c_coef, FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(a.d_coef, FRAC_1_SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn dual_amplitudes_unrotated() {
        let d = amplitudes_dual(&pair(FRAC_PI_6), HalfAngle::identity(), HalfAngle::identity());
        assert_eq!(d.p_coef, 0.0);
        assert_abs_diff_eq!(d.q_coef, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(d.r_coef, 0.75f64.sqrt(), epsilon = 1e-15);
        assert_eq!(d.s_coef, 0.0);
    }

    #[test]
    fn half_angle_validation() {
        assert!(HalfAngle::new(1.0, 0.1).is_err());
        assert!(HalfAngle::new(0.6, 0.8).is_ok());
        let b = boost_from_beta(0.95).unwrap();
        let h = HalfAngle::try_from(crate::wigner::half_angle_perp(&b, 1.0)).unwrap();
        assert_abs_diff_eq!(h.cos() * h.sin(), 0.27512890389763900, epsilon = 1e-14);
    }

    #[test]
    fn unboosted_general_is_pure() {
        let rho =
            rho_single_boost_general(&pair(FRAC_PI_4), &MomentIntegrals::unrotated(MomentMethod::Quadrature)).unwrap();
        for (r, c) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            assert_abs_diff_eq!(rho.get(r, c).re, 0.5, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(rho.purity(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn general_at_theta_zero() {
        let m = MomentIntegrals::new(0.9, 0.0, 0.1, MomentMethod::Quadrature).unwrap();
        let rho = rho_single_boost_general(&pair(0.0), &m).unwrap();
        assert_abs_diff_eq!(rho.get(0, 0).re, 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.get(2, 2).re, 0.9, epsilon = 1e-15);
        assert_eq!(rho.get(0, 3).re, 0.0);
        assert_eq!(rho.get(1, 2).re, 0.0);
    }

    #[test]
    fn quadrature_fed_general_at_rest_is_projector() {
        let pkt = WavePacket::new(2, 100.0, 939.36).unwrap();
        let m = moments_quadrature(&pkt, &BoostParams::identity(), MAX_ORDER).unwrap();
        for theta in [0.0, 0.3, FRAC_PI_4, 1.2, FRAC_PI_2] {
            let p = pair(theta);
            let (st, ct) = p.sin_cos();
            let want = DensityMatrix::pure_real(&[0.0, st, ct, 0.0]).unwrap();
            assert_close(&rho_single_boost_general(&p, &m).unwrap(), &want, 1e-12);
        }
    }

    #[test]
    fn general_matches_amplitude_outer_product() {
        // A single sharp momentum: the moments are products of one (cos, sin) pair.
        let h = HalfAngle::from_angle(0.7);
        let m = MomentIntegrals::new(
            h.cos() * h.cos(),
            h.cos() * h.sin(),
            h.sin() * h.sin(),
            MomentMethod::Quadrature,
        )
        .unwrap();
        let p = pair(0.4);
        let want = DensityMatrix::pure_real(&amplitudes_single(&p, h).state()).unwrap();
        assert_close(&rho_single_boost_general(&p, &m).unwrap(), &want, 1e-15);

        let h2 = HalfAngle::from_angle(-0.3);
        let m2 = MomentIntegrals::new(
            h2.cos() * h2.cos(),
            h2.cos() * h2.sin(),
            h2.sin() * h2.sin(),
            MomentMethod::Quadrature,
        )
        .unwrap();
        let want = DensityMatrix::pure_real(&amplitudes_dual(&p, h, h2).state()).unwrap();
        assert_close(&rho_dual_boost_general(&p, &m, &m2).unwrap(), &want, 1e-15);
    }

    #[test]
    fn perturbative_spectrum_example() {
        let rho = rho_single_boost_perturbative(&pair(FRAC_PI_4), pf(0.00327564)).unwrap();
        let eig = hermitian_jacobi_eigenvalues(rho.entries(), 4).unwrap();
        assert_abs_diff_eq!(eig[0], 0.99672436, epsilon = 1e-14);
        assert_abs_diff_eq!(eig[1], 0.00327564, epsilon = 1e-14);
        assert_abs_diff_eq!(eig[2], 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(eig[3], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn perturbative_rejects_large_f() {
        assert!(rho_single_boost_perturbative(&pair(0.3), pf(0.5)).is_err());
        assert!(matches!(
            rho_dual_boost_perturbative(&pair(0.3), pf(0.2), pf(0.3)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn dual_examples() {
        let p = pair(FRAC_PI_4);
        let rho = rho_dual_boost_perturbative(&p, PerturbativeFactor::ZERO, PerturbativeFactor::ZERO).unwrap();
        assert_abs_diff_eq!(rho.purity(), 1.0, epsilon = 1e-14);

        let rho = rho_dual_boost_perturbative(&p, pf(0.002), pf(0.003)).unwrap();
        assert_abs_diff_eq!(rho.get(0, 0).re, 0.0025, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.get(3, 3).re, 0.0025, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.get(0, 3).re, -0.0025, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn dual_with_first_factor_zero_is_single() {
        for k in 0..=12 {
            let p = pair(k as f64 * FRAC_PI_2 / 12.0);
            for f in [0.0, 0.001, 0.05, 0.3] {
                let dual = rho_dual_boost_perturbative(&p, PerturbativeFactor::ZERO, pf(f)).unwrap();
                let single = rho_single_boost_perturbative(&p, pf(f)).unwrap();
                assert_close(&dual, &single, 1e-15);
            }
        }
        // Both factors collapse to one boost only at θ = π/4.
        let p = pair(FRAC_PI_4);
        let dual = rho_dual_boost_perturbative(&p, pf(0.01), PerturbativeFactor::ZERO).unwrap();
        assert_close(&dual, &rho_single_boost_perturbative(&p, pf(0.01)).unwrap(), 1e-15);
    }

    #[test]
    fn general_constructors_reduce_to_perturbative() {
        for theta in [0.0, 0.2, FRAC_PI_4, 1.3] {
            let p = pair(theta);
            let f = 0.0123;
            assert_close(
                &rho_single_boost_general(&p, &pert_moments(f)).unwrap(),
                &rho_single_boost_perturbative(&p, pf(f)).unwrap(),
                1e-15,
            );
            let (f1, f2) = (0.004, 0.007);
            let general = rho_dual_boost_general(&p, &pert_moments(f1), &pert_moments(f2)).unwrap();
            // particle 1's factor sits where the closed form places ℱ₂
            let closed = rho_dual_boost_perturbative(&p, pf(f2), pf(f1)).unwrap();
            assert!(general.max_abs_diff(&closed) <= 2.0 * f1 * f2);
            let unboosted_second = rho_dual_boost_general(&p, &pert_moments(f1), &pert_moments(0.0)).unwrap();
            assert_close(
                &unboosted_second,
                &rho_single_boost_perturbative(&p, pf(f1)).unwrap(),
                1e-15,
            );
        }
    }

    #[test]
    fn reductions() {
        for k in 0..=12 {
            let theta = k as f64 * FRAC_PI_2 / 12.0;
            let p = pair(theta);
            let (st, ct) = p.sin_cos();
            let c2 = (2.0 * theta).cos();
            for f in [0.0, 0.003, 0.05, 0.2] {
                let rho = rho_single_boost_perturbative(&p, pf(f)).unwrap();
                let (d0, d1) = diag2(&partial_trace(&rho, Keep::First).unwrap());
                assert_abs_diff_eq!(d0, st * st + c2 * f, epsilon = 1e-12);
                assert_abs_diff_eq!(d1, ct * ct - c2 * f, epsilon = 1e-12);

                let f2 = 0.5 * f;
                let rho = rho_dual_boost_perturbative(&p, pf(0.5 * f), pf(f2)).unwrap();
                let (d0, d1) = diag2(&partial_trace(&rho, Keep::First).unwrap());
                assert_abs_diff_eq!(d0, st * st + c2 * f2, epsilon = 1e-12);
                assert_abs_diff_eq!(d1, ct * ct - c2 * f2, epsilon = 1e-12);
                let (d0, d1) = diag2(&partial_trace(&rho, Keep::Second).unwrap());
                assert_abs_diff_eq!(d0, ct * ct - c2 * 0.5 * f, epsilon = 1e-12);
                assert_abs_diff_eq!(d1, st * st + c2 * 0.5 * f, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn balanced_pair_reduction_ignores_boost() {
        for f in [0.0, 0.01, 0.2, 0.45] {
            let rho = rho_single_boost_perturbative(&pair(FRAC_PI_4), pf(f)).unwrap();
            for keep in [Keep::First, Keep::Second] {
                let (d0, d1) = diag2(&partial_trace(&rho, keep).unwrap());
                assert_abs_diff_eq!(d0, 0.5, epsilon = 1e-15);
                assert_abs_diff_eq!(d1, 0.5, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn unboosted_reductions() {
        let p = pair(0.5);
        let (st, ct) = p.sin_cos();
        let rho = DensityMatrix::pure_real(&[0.0, st, ct, 0.0]).unwrap();
        let (d0, d1) = diag2(&partial_trace(&rho, Keep::First).unwrap());
        assert_abs_diff_eq!(d0, st * st, epsilon = 1e-15);
        assert_abs_diff_eq!(d1, ct * ct, epsilon = 1e-15);
        let (d0, d1) = diag2(&partial_trace(&rho, Keep::Second).unwrap());
        assert_abs_diff_eq!(d0, ct * ct, epsilon = 1e-15);
        assert_abs_diff_eq!(d1, st * st, epsilon = 1e-15);
        assert!(partial_trace(&partial_trace(&rho, Keep::First).unwrap(), Keep::First).is_err());
    }

    #[test]
    fn quadrature_moments_give_valid_states() {
        let b = boost_from_beta(0.95).unwrap();
        let pkt = WavePacket::new(2, 250.0, 939.36).unwrap();
        let m = moments_quadrature(&pkt, &b, MAX_ORDER).unwrap();
        let p = pair(0.6);
        let single = rho_single_boost_general(&p, &m).unwrap();
        assert!(single.is_x_shaped(1e-15));
        let dual = rho_dual_boost_general(&p, &m, &m).unwrap();
        assert!(dual.is_x_shaped(1e-15));
        assert_abs_diff_eq!(dual.trace(), 1.0, epsilon = 1e-12);
    }

    proptest! {
        #[test]
        fn amplitude_norms(theta in 0.0f64..FRAC_PI_2, phi1 in -3.0f64..3.0, phi2 in -3.0f64..3.0) {
            let p = pair(theta);
            let (h1, h2) = (HalfAngle::from_angle(phi1), HalfAngle::from_angle(phi2));
            let s = amplitudes_single(&p, h1).state();
            prop_assert!((s.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() <= 1e-12);
            let d = amplitudes_dual(&p, h1, h2);
            prop_assert!((d.state().iter().map(|x| x * x).sum::<f64>() - 1.0).abs() <= 1e-12);

            let one = amplitudes_dual(&p, h1, HalfAngle::identity());
            let single = amplitudes_single(&p, h1);
            prop_assert!((one.p_coef - single.c_coef).abs() <= 1e-15);
            prop_assert!((one.q_coef - single.a_coef).abs() <= 1e-15);
            prop_assert!((one.r_coef - single.d_coef).abs() <= 1e-15);
            prop_assert!((one.s_coef - single.b_coef).abs() <= 1e-15);
        }

        #[test]
        fn single_purity(theta in 0.0f64..FRAC_PI_2, f in 0.0f64..0.4999) {
            let rho = rho_single_boost_perturbative(&pair(theta), pf(f)).unwrap();
            prop_assert!((rho.purity() - (f * f + (1.0 - f) * (1.0 - f))).abs() <= 1e-12);
            prop_assert!(rho.is_x_shaped(0.0));
        }

        #[test]
        fn dual_swap_symmetry(theta in 0.0f64..FRAC_PI_2, f1 in 0.0f64..0.25, f2 in 0.0f64..0.2499) {
            let rho = rho_dual_boost_perturbative(&pair(theta), pf(f1), pf(f2)).unwrap();
            let mirror = rho_dual_boost_perturbative(&pair(FRAC_PI_2 - theta), pf(f2), pf(f1)).unwrap();
            let perm = [0, 2, 1, 3];
            for r in 0..4 {
                for c in 0..4 {
                    prop_assert!((rho.get(r, c) - mirror.get(perm[r], perm[c])).norm() <= 1e-12);
                }
            }
            let swapped = rho_dual_boost_perturbative(&pair(theta), pf(f2), pf(f1)).unwrap();
            let a = hermitian_jacobi_eigenvalues(rho.entries(), 4).unwrap();
            let b = hermitian_jacobi_eigenvalues(swapped.entries(), 4).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() <= 1e-12);
            }
        }

        #[test]
        fn reductions_have_unit_trace(theta in 0.0f64..FRAC_PI_2, f1 in 0.0f64..0.25, f2 in 0.0f64..0.2499) {
            let rho = rho_dual_boost_perturbative(&pair(theta), pf(f1), pf(f2)).unwrap();
            for keep in [Keep::First, Keep::Second] {
                prop_assert!((partial_trace(&rho, keep).unwrap().trace() - 1.0).abs() <= 1e-12);
            }
        }
    }
}
