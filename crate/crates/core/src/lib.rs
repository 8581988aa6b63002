//! Numerics for the generalized trigonometric and hyperbolic functions
//! (the one-parameter `p`-deformations of sin, cos, tan and their
//! hyperbolic/inverse companions), plus a certification engine that scans
//! a fixed catalog of inequality, monotonicity, range, and shape claims
//! about them on deterministic grids.
//!
//! # Layout
//!
//! * [`numerics`] — tanh-sinh quadrature over finite intervals and bracketed
//!   monotone inversion; shared [`EvalConfig`]/[`FuncValue`] types.
//! * [`ptrig`] — π_p and the trigonometric family: `arcsin_p`, `sin_p`,
//!   `cos_p`, `tan_p`, `arctan_p`, and closed-form derivatives.
//! * [`phyp`] — the hyperbolic family: `arcsinh_p`, `sinh_p`, `cosh_p`,
//!   `tanh_p`, `arctanh_p`, and derivatives.
//! * [`inequalities`] — the claim catalog ([`inequalities::registry`]) and
//!   scan engine ([`inequalities::scan_case`]).
//!
//! # Conventions
//!
//! Every evaluation takes the exponent as a validated [`PParam`] (`p > 1`)
//! and an [`EvalConfig`], and returns a [`FuncValue`] carrying the value and
//! an error estimate. Evaluations are deterministic: identical inputs give
//! bit-identical outputs.
//!
//! ```
//! use ptfun::{sin_p, EvalConfig, PParam};
//!
//! let cfg = EvalConfig::default();
//! let p = PParam::new(3.0).unwrap();
//! let s = sin_p(0.8, p, &cfg).unwrap();
//! assert!((s.value - 0.7649191996115039).abs() < 1e-12);
//! ```

pub mod error;
pub mod inequalities;
pub mod numerics;
pub mod phyp;
pub mod ptrig;
mod series;

pub use error::{Error, Result};
pub use numerics::{integrate, invert_monotone, EvalConfig, FuncValue};
pub use phyp::{arcsinh_p, arctanh_p, cosh_p, d_cosh_p, d_tanh_p, sinh_p, tanh_p};
pub use ptrig::{arcsin_p, arctan_p, cos_p, d_cos_p, d_tan_p, pi_p, sin_p, tan_p, PParam, PiP};
