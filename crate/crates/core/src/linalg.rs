//! Small dense eigenvalue solvers.
//!
//! The Hermitian solver works on the 2×2 and 4×4 density matrices and serves
//! as the oracle for the closed-form spectra. The tridiagonal solver drives the
//! Gauss–Hermite node construction.

use num_complex::Complex64;

use crate::error::{Error, Result};

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_OFF_TOL: f64 = 1e-13;
const QL_MAX_ITERATIONS: usize = 60;

/// Eigenvalues of a Hermitian matrix (row-major, `dim × dim`) by cyclic
/// complex Jacobi rotations, sorted in descending order.
///
/// Only the Hermitian part of `a` is used; the caller is responsible for
/// checking Hermiticity first.
pub fn hermitian_jacobi_eigenvalues(a: &[Complex64], dim: usize) -> Result<Vec<f64>> {
    assert_eq!(a.len(), dim * dim, "matrix storage does not match dimension");
    let mut m = a.to_vec();
    let idx = |r: usize, c: usize| r * dim + c;

    let off_norm = |m: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for r in 0..dim {
            for c in 0..dim {
                if r != c {
                    s += m[idx(r, c)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&m) >= JACOBI_OFF_TOL {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::Convergence {
                what: "Hermitian Jacobi eigensolver",
                iterations: sweeps,
            });
        }
        sweeps += 1;
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = m[idx(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                // Phase-rotate q so the pivot becomes real, then do a real rotation.
                let phase = apq / mag;
                let app = m[idx(p, p)].re;
                let aqq = m[idx(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta.is_finite() {
                    theta.signum() / (theta.abs() + theta.hypot(1.0))
                } else {
                    0.0
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                // U = diag(1, conj(phase)) · [[c, s], [-s, c]]
                let u00 = Complex64::new(c, 0.0);
                let u01 = Complex64::new(s, 0.0);
                let u10 = -phase.conj() * s;
                let u11 = phase.conj() * c;

                for k in 0..dim {
                    let kp = m[idx(k, p)];
                    let kq = m[idx(k, q)];
                    m[idx(k, p)] = kp * u00 + kq * u10;
                    m[idx(k, q)] = kp * u01 + kq * u11;
                }
                for k in 0..dim {
                    let pk = m[idx(p, k)];
                    let qk = m[idx(q, k)];
                    m[idx(p, k)] = u00.conj() * pk + u10.conj() * qk;
                    m[idx(q, k)] = u01.conj() * pk + u11.conj() * qk;
                }
                m[idx(p, q)] = Complex64::new(0.0, 0.0);
                m[idx(q, p)] = Complex64::new(0.0, 0.0);
            }
        }
    }

    let mut eig: Vec<f64> = (0..dim).map(|i| m[idx(i, i)].re).collect();
    eig.sort_by(|a, b| b.total_cmp(a));
    Ok(eig)
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `diag` and
/// sub-diagonal `off` (`off[i]` couples rows `i` and `i + 1`), by implicit QL
/// with Wilkinson-style shifts. Returned in ascending order.
pub fn symmetric_tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    assert!(n >= 1 && off.len() + 1 == n, "sub-diagonal must have n - 1 entries");
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > QL_MAX_ITERATIONS {
                return Err(Error::Convergence {
                    what: "tridiagonal QL iteration",
                    iterations: iter,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| a.total_cmp(b));
    Ok(d)
}
