//! Safeguarded inversion of strictly monotone functions.
//!
//! Newton steps (when a derivative is supplied) accelerated inside a
//! maintained bracket: every iterate stays in `[lo, hi]`, and any Newton
//! step that would leave the current bracket falls back to bisection. The
//! function is never evaluated outside the caller's interval.

use super::{EvalConfig, FuncValue};
use crate::error::{Error, Result};

/// Outcome of the core loop, with enough residual information for an error
/// estimate.
pub(crate) struct RootResult {
    pub y: f64,
    pub residual: f64,
    pub width: f64,
}

/// Core loop for f strictly increasing on `[lo, hi]` with
/// f(lo) ≤ target ≤ f(hi) already established by the caller.
///
/// Convergence: residual within `cfg` tolerances of the target, or bracket
/// width at f64 resolution. The residual test uses the target's own scale,
/// so inverting near a zero of f still terminates on the absolute floor.
pub(crate) fn newton_bracket(
    f: &dyn Fn(f64) -> Result<f64>,
    df: Option<&dyn Fn(f64) -> f64>,
    target: f64,
    mut lo: f64,
    mut hi: f64,
    y0: f64,
    cfg: &EvalConfig,
) -> Result<RootResult> {
    let mut y = y0.clamp(lo, hi);
    let tol = cfg.threshold(target);
    for _ in 0..cfg.max_iters {
        let r = f(y)? - target;
        if r.abs() <= tol {
            return Ok(RootResult { y, residual: r, width: hi - lo });
        }
        if r > 0.0 {
            hi = y;
        } else {
            lo = y;
        }
        let newton = df.and_then(|d| {
            let slope = d(y);
            if slope > 0.0 && slope.is_finite() {
                Some(y - r / slope)
            } else {
                None
            }
        });
        y = match newton {
            Some(yn) if lo < yn && yn < hi => yn,
            _ => 0.5 * (lo + hi),
        };
        if hi - lo <= 1e-16 * y.abs().max(1.0) {
            return Ok(RootResult { y, residual: r, width: hi - lo });
        }
    }
    Err(Error::NonConvergence {
        what: "invert_monotone",
        value: y,
        err_est: hi - lo,
        tol,
    })
}

/// Solve f(y) = target for f strictly monotone (either direction) on
/// `[lo, hi]`.
///
/// The endpoints are evaluated first to orient the function and reject
/// out-of-range targets; a derivative, when supplied, accelerates the
/// safeguarded iteration. `err_est` reports the terminal bracket width
/// (or the residual mapped through the derivative when that is sharper).
pub fn invert_monotone<F, D>(
    f: F,
    target: f64,
    lo: f64,
    hi: f64,
    dfdx: Option<D>,
    cfg: &EvalConfig,
) -> Result<FuncValue>
where
    F: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> f64,
{
    if !lo.is_finite() || !hi.is_finite() || lo > hi {
        return Err(Error::InvalidInterval { a: lo, b: hi });
    }
    let f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if lo == hi {
        return if (f_lo - target).abs() <= cfg.threshold(target) {
            Ok(FuncValue::new(lo, 0.0))
        } else {
            Err(Error::TargetOutOfRange { target, f_lo, f_hi })
        };
    }
    let increasing = f_hi >= f_lo;
    let (t_min, t_max) = if increasing { (f_lo, f_hi) } else { (f_hi, f_lo) };
    if target < t_min || target > t_max {
        return Err(Error::TargetOutOfRange { target, f_lo, f_hi });
    }

    // Warm start by linear interpolation between the endpoint values.
    let span = f_hi - f_lo;
    let y0 = if span != 0.0 {
        lo + (hi - lo) * ((target - f_lo) / span).clamp(0.0, 1.0)
    } else {
        0.5 * (lo + hi)
    };

    let root = if increasing {
        newton_bracket(&|y| f(y), dfdx.as_ref().map(|d| d as &dyn Fn(f64) -> f64), target, lo, hi, y0, cfg)?
    } else {
        let neg_f = |y: f64| f(y).map(|v| -v);
        let neg_df = dfdx.as_ref().map(|d| move |y: f64| -d(y));
        newton_bracket(
            &neg_f,
            neg_df.as_ref().map(|d| d as &dyn Fn(f64) -> f64),
            -target,
            lo,
            hi,
            y0,
            cfg,
        )?
    };

    let mut err = root.width.abs();
    if let Some(d) = dfdx {
        let slope = d(root.y).abs();
        if slope > 0.0 && slope.is_finite() {
            err = err.min((root.residual / slope).abs());
        }
    }
    Ok(FuncValue::new(root.y, err))
}
