//! Gamma function at half-integer and integer arguments.
//!
//! Only the values needed by the wave-packet normalization are provided, and
//! they are computed from the exact recurrence rather than a general
//! approximation such as Lanczos.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Γ(k + ½) from Γ(½) = √π and Γ(x + 1) = x Γ(x).
pub fn gamma_half_integer(k: u32) -> Result<f64> {
    let mut value = PI.sqrt();
    for j in 0..k {
        value *= j as f64 + 0.5;
        if !value.is_finite() {
            return Err(Error::Overflow(format!(
                "Gamma({k} + 1/2) exceeds the double-precision range"
            )));
        }
    }
    Ok(value)
}

/// ln Γ(k + ½), finite for every `k`.
pub fn ln_gamma_half_integer(k: u32) -> f64 {
    let mut acc = 0.5 * PI.ln();
    for j in 0..k {
        acc += (j as f64 + 0.5).ln();
    }
    acc
}

/// ln Γ(k + 1) = ln k!.
pub fn ln_factorial(k: u32) -> f64 {
    (2..=k).map(|j| (j as f64).ln()).sum()
}

/// Γ(n + 1) / Γ(n + ½), evaluated in log space so large `n` stays finite.
pub fn gamma_ratio_integer_over_half(n: u32) -> f64 {
    (ln_factorial(n) - ln_gamma_half_integer(n)).exp()
}
