//! Shared numerical kernels: double-exponential quadrature tolerant of
//! integrable endpoint singularities, and safeguarded root-finding.

pub(crate) mod invert;
mod quad;

pub use invert::invert_monotone;
pub use quad::integrate;

use crate::error::{Error, Result};
use serde::Serialize;

/// Tolerances and iteration caps governing every evaluation.
///
/// The same config threads through quadrature, inversion, and the scan
/// engine, so a single struct pins down the determinism contract: identical
/// inputs and config produce bit-identical outputs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalConfig {
    /// Relative tolerance on computed values.
    pub rel_tol: f64,
    /// Absolute tolerance floor (used when values are near zero).
    pub abs_tol: f64,
    /// Quadrature refinement cap. Effective depth is additionally bounded by
    /// the precomputed node tables (12 levels, ~18k nodes), which already
    /// reach beyond f64 resolution.
    pub max_quad_levels: u32,
    /// Root-finding iteration cap.
    pub max_iters: u32,
}

impl EvalConfig {
    /// Validated constructor.
    pub fn new(rel_tol: f64, abs_tol: f64, max_quad_levels: u32, max_iters: u32) -> Result<Self> {
        if !(rel_tol > 0.0) || !rel_tol.is_finite() {
            return Err(Error::InvalidParameter {
                name: "rel_tol",
                value: rel_tol,
                constraint: "finite and > 0",
            });
        }
        if !(abs_tol > 0.0) || !abs_tol.is_finite() {
            return Err(Error::InvalidParameter {
                name: "abs_tol",
                value: abs_tol,
                constraint: "finite and > 0",
            });
        }
        if max_quad_levels < 1 {
            return Err(Error::InvalidParameter {
                name: "max_quad_levels",
                value: max_quad_levels as f64,
                constraint: ">= 1",
            });
        }
        if max_iters < 1 {
            return Err(Error::InvalidParameter {
                name: "max_iters",
                value: max_iters as f64,
                constraint: ">= 1",
            });
        }
        Ok(EvalConfig { rel_tol, abs_tol, max_quad_levels, max_iters })
    }

    /// Convergence threshold for a value of magnitude `|v|`.
    #[inline]
    pub(crate) fn threshold(&self, v: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * v.abs())
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            rel_tol: 1e-13,
            abs_tol: 1e-14,
            max_quad_levels: 12,
            max_iters: 100,
        }
    }
}

/// A computed value paired with an a-posteriori error estimate.
///
/// `err_est` is an estimate (difference of successive refinements plus a
/// truncation-tail term), not a rigorous bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FuncValue {
    pub value: f64,
    pub err_est: f64,
}

impl FuncValue {
    #[inline]
    pub(crate) fn new(value: f64, err_est: f64) -> Self {
        FuncValue { value, err_est }
    }
}
