//! Validated spin density matrices.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::hermitian_jacobi_eigenvalues;

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-10;
pub const PSD_TOL: f64 = 1e-10;

/// A Hermitian, unit-trace, positive semidefinite matrix of dimension 2 or 4.
///
/// Two-qubit matrices use the basis order |00⟩, |01⟩, |10⟩, |11⟩ with the
/// first qubit as the high bit.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl DensityMatrix {
    /// Validates and wraps row-major `entries`.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(Error::domain(format!(
                "density matrix dimension must be 2 or 4, got {dim}"
            )));
        }
        if entries.len() != dim * dim {
            return Err(Error::domain(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::invariant("density matrix has non-finite entries"));
        }
        for r in 0..dim {
            for c in r..dim {
                let diff = (entries[r * dim + c] - entries[c * dim + r].conj()).norm();
                if diff > HERMITIAN_TOL {
                    return Err(Error::invariant(format!(
                        "matrix is not Hermitian at ({r}, {c}): deviation {diff:e}"
                    )));
                }
            }
        }
        let trace: f64 = (0..dim).map(|i| entries[i * dim + i].re).sum();
        if (trace - 1.0).abs() > TRACE_TOL {
            return Err(Error::invariant(format!("trace is {trace}, expected 1")));
        }
        let eig = hermitian_jacobi_eigenvalues(&entries, dim)?;
        if let Some(&min) = eig.last() {
            if min < -PSD_TOL {
                return Err(Error::invariant(format!(
                    "matrix is not positive semidefinite: eigenvalue {min:e}"
                )));
            }
        }
        Ok(DensityMatrix { dim, entries })
    }

    /// Real symmetric convenience constructor.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::new(dim, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Projector |v⟩⟨v| onto a normalized real state vector.
    pub fn pure_real(amplitudes: &[f64]) -> Result<Self> {
        let dim = amplitudes.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for &a in amplitudes {
            for &b in amplitudes {
                entries.push(Complex64::new(a * b, 0.0));
            }
        }
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i).re).sum()
    }

    /// tr ρ²
    pub fn purity(&self) -> f64 {
        // For Hermitian ρ, tr ρ² = Σ |ρ_ij|².
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// True when only the diagonal and anti-diagonal can be nonzero.
    pub fn is_x_shaped(&self, tol: f64) -> bool {
        let d = self.dim;
        (0..d).all(|r| (0..d).all(|c| r == c || r + c == d - 1 || self.get(r, c).norm() <= tol))
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|c| {
                    let z = self.get(r, c);
                    if z.im == 0.0 {
                        format!("{:>12.8}", z.re)
                    } else {
                        format!("{:.8}{:+.8}i", z.re, z.im)
                    }
                })
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
