//! Perron-Frobenius eigendata and the invariant measure on cylinders.
//!
//! For a primitive adjacency matrix the power iteration converges
//! geometrically to the dominant eigenvalue and its right eigenvector.
//! Normalizing the eigenvector to sum 1 gives letter frequencies, and
//! `μ[γ] = ν_{r(γ)} Λ^{1-|γ|}` is the unique extension-additive,
//! level-stationary probability measure on cylinders (additivity is
//! exactly the eigen-equation `Aν = Λν`).

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::StationaryDiagram;
use crate::error::{Error, Result};
use crate::math;
use crate::path::FinitePath;

/// Dominant eigenvalue and normalized right eigenvector of the adjacency
/// matrix, with the final iteration residual `max_v |(Aν)_v - Λ ν_v|`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronData {
    pub lambda: f64,
    pub nu: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Power iteration on a primitive adjacency matrix. The start vector is
/// uniform; `nu` is normalized to sum 1 and the residual is guaranteed
/// `<= tol * lambda` on success.
pub fn perron(d: &StationaryDiagram, tol: f64, max_iter: usize) -> Result<PerronData> {
    if !d.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    if !(tol > 0.0) {
        return Err(Error::BadParameter { what: "tol must be positive" });
    }
    let q = d.vertex_count();
    let a = d.adjacency();
    let mut x = vec![1.0 / q as f64; q];
    for iterations in 1..=max_iter {
        let mut y = vec![0.0; q];
        for v in 0..q {
            let mut acc = 0.0;
            for w in 0..q {
                acc += a[v * q + w] as f64 * x[w];
            }
            y[v] = acc;
        }
        // x sums to 1, so sum(Ax) estimates the eigenvalue
        let lambda: f64 = y.iter().sum();
        let residual = y
            .iter()
            .zip(&x)
            .map(|(&yv, &xv)| math::abs(yv - lambda * xv))
            .fold(0.0, f64::max);
        if residual <= tol * lambda {
            return Ok(PerronData { lambda, nu: x, residual, iterations });
        }
        for (xv, &yv) in x.iter_mut().zip(&y) {
            *xv = yv / lambda;
        }
    }
    Err(Error::NoConvergence { iterations: max_iter })
}

/// The invariant probability measure on cylinders induced by the Perron
/// eigendata, normalized so the whole space has mass 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Measure {
    perron: PerronData,
}

impl Measure {
    pub fn new(perron: PerronData) -> Self {
        Measure { perron }
    }

    pub fn perron(&self) -> &PerronData {
        &self.perron
    }

    /// `μ[γ] = ν_{r(γ)} Λ^{1-|γ|}`; the empty path gets the whole space,
    /// mass 1.
    pub fn cylinder(&self, d: &StationaryDiagram, path: &FinitePath) -> Result<f64> {
        d.validate_path(path)?;
        match d.range_of(path) {
            None => Ok(1.0),
            Some(v) => {
                let depth = path.depth() as i32;
                Ok(self.perron.nu[v as usize] * math::powi(self.perron.lambda, 1 - depth))
            }
        }
    }
}
