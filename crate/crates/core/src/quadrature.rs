//! Gauss–Hermite rules for ∫ f(κ) e^(−κ²) dκ over the real line.
//!
//! Nodes are eigenvalues of the symmetric Jacobi matrix of the Hermite
//! recurrence (zero diagonal, off-diagonal √(k/2)). They are then polished by
//! Newton steps on the orthonormal Hermite polynomial, mirrored so the rule is
//! exactly symmetric, and weighted by the Christoffel formula
//! w = 1 / (N h_{N−1}(κ)²).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::linalg::symmetric_tridiagonal_eigenvalues;

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 256;

#[derive(Debug, Clone, PartialEq)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermite {
    pub fn new(order: usize) -> Result<Self> {
        let (nodes, weights) = gauss_hermite_nodes(order)?;
        Ok(GaussHermite { nodes, weights })
    }

    /// Shared rule for `order`, built once per process.
    pub fn cached(order: usize) -> Result<Arc<GaussHermite>> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<GaussHermite>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(rule) = cache.read().expect("rule cache poisoned").get(&order) {
            return Ok(Arc::clone(rule));
        }
        let rule = Arc::new(GaussHermite::new(order)?);
        cache
            .write()
            .expect("rule cache poisoned")
            .entry(order)
            .or_insert_with(|| Arc::clone(&rule));
        Ok(rule)
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

/// Orthonormal Hermite values (h_{N−1}(x), h_N(x)) for the weight e^(−x²).
fn hermite_pair(order: usize, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    for k in 0..order {
        let next = x * (2.0 / (k as f64 + 1.0)).sqrt() * cur - (k as f64 / (k as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    (prev, cur)
}

/// Nodes (ascending) and weights of the `order`-point rule.
pub fn gauss_hermite_nodes(order: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
        return Err(Error::domain(format!(
            "Gauss-Hermite order must be in {MIN_ORDER}..={MAX_ORDER}, got {order}"
        )));
    }
    let diag = vec![0.0; order];
    let off: Vec<f64> = (1..order).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let mut nodes = symmetric_tridiagonal_eigenvalues(&diag, &off)?;

    let n = order as f64;
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let (h_prev, h) = hermite_pair(order, *x);
            // h_N' = √(2N) h_{N−1}
            let step = h / ((2.0 * n).sqrt() * h_prev);
            if !step.is_finite() {
                break;
            }
            *x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
    }

    nodes.sort_by(|a, b| a.total_cmp(b));
    for i in 0..order / 2 {
        let j = order - 1 - i;
        let r = 0.5 * (nodes[j] - nodes[i]);
        nodes[i] = -r;
        nodes[j] = r;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }

    let weights = nodes
        .iter()
        .map(|&x| {
            let (h_prev, _) = hermite_pair(order, x);
            1.0 / (n * h_prev * h_prev)
        })
        .collect();
    Ok((nodes, weights))
}
