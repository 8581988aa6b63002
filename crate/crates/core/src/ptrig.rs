//! Generalized trigonometric functions.
//!
//! For p > 1, arcsin_p(x) = ∫₀ˣ (1−t^p)^{−1/p} dt on [0,1]; its value at 1
//! is π_p/2. sin_p is the inverse on [0, π_p/2], extended to ℝ like the
//! classical sine: odd around 0, reflection-symmetric about π_p/2
//! (sin_p(π_p − x) = sin_p(x)), periodic with period 2π_p. cos_p is the
//! derivative of the extended sin_p, with magnitude (1 − |sin_p|^p)^{1/p};
//! tan_p = sin_p/cos_p has poles at π_p/2 + kπ_p, and arctan_p(x) =
//! ∫₀ˣ dt/(1+t^p).
//!
//! Numerical strategy, in one place:
//!
//! * The defining integrand is endpoint-singular at t = 1 with exponent 1/p.
//!   Substituting t = 1 − u^q, q = p/(p−1), gives the smooth equivalent
//!   g(u) = q·p^{−1/p}·r(u)^{−1/p} with r(u) = −expm1(p·log1p(−u^q))/(p·u^q)
//!   (the exponent of the leading u-power vanishes identically because
//!   q − 1 − q/p = 0, so only the slowly-varying factor r remains, and
//!   r → 1 as u → 0). Quadrature of g reaches machine accuracy for every
//!   p > 1, where the raw integrand stalls near 1e-8 in f64.
//! * Inversion tracks both s = sin_p and its complement d = 1 − s. On
//!   [0, π_p/2] the half nearer the right endpoint inverts the *tail*
//!   integral T(v) = ∫₀ᵛ g = π_p/2 − x, whose unknown v gives d = v^q with
//!   full relative accuracy. cos_p = (−expm1(p·log1p(−d)))^{1/p} then keeps
//!   relative accuracy all the way into the corner where sin_p ≈ 1, which is
//!   what makes tan_p usable near its poles.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::invert::newton_bracket;
use crate::numerics::{integrate, EvalConfig, FuncValue};

/// Validated family exponent, p > 1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct PParam(f64);

impl PParam {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_finite() && p > 1.0 {
            Ok(PParam(p))
        } else {
            Err(Error::InvalidParameter {
                name: "p",
                value: p,
                constraint: "finite and > 1",
            })
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// The generalized half-period constant π_p/2 = arcsin_p(1), with the error
/// estimate of the quadrature that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PiP {
    pub p: PParam,
    pub half_pi_p: f64,
    pub err_est: f64,
}

impl PiP {
    /// The full period constant π_p = 2·arcsin_p(1).
    #[inline]
    pub fn pi(&self) -> f64 {
        2.0 * self.half_pi_p
    }
}

/// Substituted arcsine integrand: smooth on [0,1], value q·p^{−1/p} at 0.
/// ∫₀¹ g = π_p/2 and ∫₀ᵛ g = π_p/2 − arcsin_p(1 − v^q).
fn tail_integrand(p: f64) -> impl Fn(f64) -> f64 {
    let q = p / (p - 1.0);
    let prefactor = q * p.powf(-1.0 / p);
    move |u: f64| {
        let w = u.powf(q);
        // r = (1 − (1−w)^p·…)/(p·w) in cancellation-free form; below the
        // underflow threshold of w the limit value 1 is exact.
        let r = if w < 1e-250 {
            1.0
        } else {
            -f64::exp_m1(p * f64::ln_1p(-w)) / (p * w)
        };
        prefactor * r.powf(-1.0 / p)
    }
}

fn tail_integrand_at_zero(p: f64) -> f64 {
    let q = p / (p - 1.0);
    q * p.powf(-1.0 / p)
}

type MemoKey = (u64, u64, u64, u32, u32);

fn memo_key(p: f64, cfg: &EvalConfig) -> MemoKey {
    (
        p.to_bits(),
        cfg.rel_tol.to_bits(),
        cfg.abs_tol.to_bits(),
        cfg.max_quad_levels,
        cfg.max_iters,
    )
}

/// π_p/2 by quadrature of the substituted integrand, memoized per (p, cfg).
///
/// Memoization is transparent: the cached value is exactly the one a fresh
/// quadrature would produce, so determinism and the concurrency contract
/// (many readers, occasional writer) are preserved.
pub fn pi_p(p: PParam, cfg: &EvalConfig) -> Result<PiP> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, (f64, f64)>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    let key = memo_key(p.get(), cfg);
    if let Some(&(half, err)) = memo.read().expect("pi_p memo poisoned").get(&key) {
        return Ok(PiP { p, half_pi_p: half, err_est: err });
    }
    let fv = integrate(tail_integrand(p.get()), 0.0, 1.0, cfg)?;
    memo.write()
        .expect("pi_p memo poisoned")
        .insert(key, (fv.value, fv.err_est));
    Ok(PiP { p, half_pi_p: fv.value, err_est: fv.err_est })
}

/// Convenience accessor for π_p/2 used throughout the crate.
pub(crate) fn half_pi(p: PParam, cfg: &EvalConfig) -> Result<f64> {
    pi_p(p, cfg).map(|v| v.half_pi_p)
}

fn require_finite(func: &'static str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::DomainError { func, arg: x, reason: "finite argument required" })
    }
}

/// arcsin_p on [0,1]: direct quadrature away from the singular corner,
/// π_p/2 minus the substituted tail integral near it.
fn arcsin_inner(p: f64, y: f64, cfg: &EvalConfig) -> Result<FuncValue> {
    debug_assert!((0.0..=1.0).contains(&y));
    if y <= 0.9 {
        return integrate(|t| (1.0 - t.powf(p)).powf(-1.0 / p), 0.0, y, cfg);
    }
    let q = p / (p - 1.0);
    let v = (1.0 - y).powf(1.0 / q);
    let hp = pi_p(PParam(p), cfg)?;
    let tail = integrate(tail_integrand(p), 0.0, v, cfg)?;
    Ok(FuncValue::new(hp.half_pi_p - tail.value, hp.err_est + tail.err_est))
}

/// arcsin_p(x) = ∫₀ˣ (1−t^p)^{−1/p} dt, extended oddly to [−1, 0).
pub fn arcsin_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("arcsin_p", x)?;
    if x.abs() > 1.0 {
        return Err(Error::DomainError { func: "arcsin_p", arg: x, reason: "|x| <= 1" });
    }
    let inner = arcsin_inner(p.get(), x.abs(), cfg)?;
    Ok(FuncValue::new(x.signum() * inner.value, inner.err_est))
}

/// Primary-branch core: for x ∈ [0, π_p/2] return (s, d) with s = sin_p(x)
/// and d = 1 − s, each accurate in its own relative scale.
fn sin_core(p: f64, x: f64, hp: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    debug_assert!(x >= 0.0 && x <= hp * (1.0 + 1e-12));
    if x == 0.0 {
        return Ok((0.0, 1.0));
    }
    if x <= 0.5 * hp {
        // Invert arcsin_p directly; the classical sine of the rescaled
        // argument is an excellent warm start for every p.
        let y0 = (x * std::f64::consts::FRAC_PI_2 / hp).sin().min(0.9);
        let root = newton_bracket(
            &|y| arcsin_inner(p, y, cfg).map(|fv| fv.value),
            Some(&|y: f64| (1.0 - y.powf(p)).powf(-1.0 / p)),
            x,
            0.0,
            1.0,
            y0,
            cfg,
        )?;
        return Ok((root.y, 1.0 - root.y));
    }
    // Near the right endpoint, solve the tail equation T(v) = π_p/2 − x for
    // v; then d = v^q is known with full relative accuracy however small.
    let q = p / (p - 1.0);
    let target = hp - x;
    let g = tail_integrand(p);
    let g0 = tail_integrand_at_zero(p);
    let root = newton_bracket(
        &|v| integrate(&g, 0.0, v, cfg).map(|fv| fv.value),
        Some(&g),
        target.max(0.0),
        0.0,
        1.0,
        (target / g0).clamp(0.0, 1.0),
        cfg,
    )?;
    let d = root.y.powf(q);
    Ok((1.0 - d, d))
}

/// |cos_p| from the complement d = 1 − |sin_p|, in a form whose relative
/// error stays bounded as d → 0: (1 − (1−d)^p)^{1/p} = (−expm1(p·log1p(−d)))^{1/p}.
fn cos_from_complement(p: f64, d: f64) -> f64 {
    if d <= 0.0 {
        0.0
    } else {
        (-f64::exp_m1(p * f64::ln_1p(-d))).powf(1.0 / p)
    }
}

/// Signed (sin_p, cos_p) for arbitrary real x via quadrant reduction:
/// reduce modulo the period 2π_p = 4·(π_p/2), split into quarter-period
/// quadrants, evaluate the primary-branch core, and apply the reflection
/// signs of the classical extension.
pub(crate) fn sin_cos_signed(p: PParam, x: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    let hp = half_pi(p, cfg)?;
    let period = 4.0 * hp;
    let r = x.rem_euclid(period);
    let quadrant = ((r / hp) as i32).min(3);
    let u = r - quadrant as f64 * hp;
    let (s, c) = match quadrant {
        0 => {
            let (s, d) = sin_core(p.get(), u, hp, cfg)?;
            (s, cos_from_complement(p.get(), d))
        }
        1 => {
            let (s, d) = sin_core(p.get(), hp - u, hp, cfg)?;
            (s, -cos_from_complement(p.get(), d))
        }
        2 => {
            let (s, d) = sin_core(p.get(), u, hp, cfg)?;
            (-s, -cos_from_complement(p.get(), d))
        }
        _ => {
            let (s, d) = sin_core(p.get(), hp - u, hp, cfg)?;
            (-s, cos_from_complement(p.get(), d))
        }
    };
    // Normalize signed zeros so e.g. cos_p(π_p/2) compares equal to 0.0.
    Ok((s + 0.0, c + 0.0))
}

/// sin_p(x) for any real x (odd, reflection-symmetric about π_p/2,
/// 2π_p-periodic); values in [−1, 1].
pub fn sin_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("sin_p", x)?;
    let (s, c) = sin_cos_signed(p, x, cfg)?;
    // Residual tolerance of the inversion, mapped through the slope.
    Ok(FuncValue::new(s, cfg.threshold(x) * c.abs() + f64::EPSILON * s.abs()))
}

/// cos_p(x) = d/dx sin_p(x); magnitude (1 − |sin_p|^p)^{1/p}, sign that of
/// the derivative of the extended sine.
pub fn cos_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("cos_p", x)?;
    let (_, c) = sin_cos_signed(p, x, cfg)?;
    Ok(FuncValue::new(c, cfg.rel_tol * c.abs() + cfg.abs_tol))
}

/// Relative pole-exclusion radius for tan_p, in units of π_p.
const POLE_TOL_REL: f64 = 1e-8;

/// tan_p(x) = sin_p(x)/cos_p(x). Arguments within 1e-8·π_p of a pole
/// (π_p/2 + kπ_p) are rejected: closer than that, no meaningful finite
/// value survives f64 evaluation.
pub fn tan_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("tan_p", x)?;
    let hp = half_pi(p, cfg)?;
    let pole_tol = POLE_TOL_REL * 2.0 * hp;
    let m = (x - hp).rem_euclid(2.0 * hp);
    let (dist, pole) = if m <= hp { (m, x - m) } else { (2.0 * hp - m, x + (2.0 * hp - m)) };
    if dist < pole_tol {
        return Err(Error::PoleError { func: "tan_p", x, pole });
    }
    let (s, c) = sin_cos_signed(p, x, cfg)?;
    let t = s / c;
    Ok(FuncValue::new(t, cfg.rel_tol * t.abs() + cfg.abs_tol))
}

fn arctan_inner(p: f64, x: f64, cfg: &EvalConfig) -> Result<FuncValue> {
    debug_assert!(x >= 0.0);
    if x <= 1.0 {
        return integrate(|t| 1.0 / (1.0 + t.powf(p)), 0.0, x, cfg);
    }
    // Beyond 1, substitute t = 1/s so the unbounded range folds into (1/x, 1):
    // ∫₁ˣ dt/(1+t^p) = ∫_{1/x}^1 s^{p−2}/(1+s^p) ds.
    let base = integrate(|t| 1.0 / (1.0 + t.powf(p)), 0.0, 1.0, cfg)?;
    let tail = integrate(|s| s.powf(p - 2.0) / (1.0 + s.powf(p)), 1.0 / x, 1.0, cfg)?;
    Ok(FuncValue::new(base.value + tail.value, base.err_est + tail.err_est))
}

/// arctan_p(x) = ∫₀ˣ dt/(1+t^p), odd, increasing, with supremum π_p/2.
pub fn arctan_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("arctan_p", x)?;
    let inner = arctan_inner(p.get(), x.abs(), cfg)?;
    Ok(FuncValue::new(x.signum() * inner.value, inner.err_est))
}

/// d/dx cos_p(x) = −cos_p(x)^{2−p}·sin_p(x)^{p−1} on (0, π_p/2).
pub fn d_cos_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("d_cos_p", x)?;
    let hp = half_pi(p, cfg)?;
    if x <= 0.0 || x >= hp {
        return Err(Error::DomainError { func: "d_cos_p", arg: x, reason: "0 < x < pi_p/2" });
    }
    let (s, c) = sin_cos_signed(p, x, cfg)?;
    let v = -c.powf(2.0 - p.get()) * s.powf(p.get() - 1.0);
    Ok(FuncValue::new(v, cfg.rel_tol * v.abs() + cfg.abs_tol))
}

/// d/dx tan_p(x) = 1 + |tan_p(x)|^p on (−π_p/2, π_p/2).
pub fn d_tan_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("d_tan_p", x)?;
    let hp = half_pi(p, cfg)?;
    if x.abs() >= hp {
        return Err(Error::DomainError {
            func: "d_tan_p",
            arg: x,
            reason: "-pi_p/2 < x < pi_p/2",
        });
    }
    let t = tan_p(x, p, cfg)?;
    let v = 1.0 + t.value.abs().powf(p.get());
    Ok(FuncValue::new(v, cfg.rel_tol * v.abs() + cfg.abs_tol))
}
