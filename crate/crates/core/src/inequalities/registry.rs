//! The fixed catalog of certified claims.
//!
//! Every case id, domain, and evaluator here is stable across runs and
//! releases: reports are diffed in CI, so ids are part of the public
//! interface. Margins are oriented so that **positive ⟺ the strict claim
//! holds** at the point.
//!
//! Evaluator conventions: all take `(p, x, &EvalConfig)`; `x` is the scan
//! abscissa (for the t-parametrized families the abscissa is `t` and `x` is
//! fixed by the scan). Characteristic ratios that become 0/0-degenerate as
//! x → 0 switch to their leading series below w = x^p = 1e-3, keeping scans
//! and limit probes accurate where direct evaluation would cancel.

use crate::error::Result;
use crate::numerics::EvalConfig;
use crate::phyp;
use crate::ptrig::{self, PParam};
use crate::series;

use super::{
    CaseKind, Component, Curve, InequalityCase, LimitSide, LimitSpec, LogShapeSpec, MonotoneSpec,
    PDomain, RangeSpec, TLower, Upper, XWindow,
};

// Default exponent grids per admissible p-domain. Endpoint exponents are
// included exactly when the domain is closed there.
const P_ALL: &[f64] = &[1.1, 1.5, 2.0, 3.0, 5.0, 10.0]; // (1, ∞)
const P_LE2: &[f64] = &[1.1, 1.5, 2.0]; // (1, 2]
const P_GE2: &[f64] = &[2.0, 3.0, 5.0, 10.0]; // [2, ∞)
const P_GT2: &[f64] = &[2.5, 3.0, 5.0, 10.0]; // (2, ∞)

/// Anchor of the two-sided arc-function bounds in the tangent case:
/// k = 0.9·(π_p/2), safely inside (0, π_p/2) for every p.
const TAN_K_FRAC: f64 = 0.9;
/// Anchor k = 2 for the sinh/tanh two-sided arc-function bounds.
const HYP_K: f64 = 2.0;

const W_TRIG_OPEN: XWindow = XWindow::trig_open();
const W_TRIG_CLOSED: XWindow = XWindow::trig_closed();
const W_POS_LOG: XWindow = XWindow::positive_log();
const W_UNIT: XWindow =
    XWindow { upper: Upper::Const(1.0), include_upper: false, log_spaced: false };
const W_UNIT_LOG: XWindow =
    XWindow { upper: Upper::Const(1.0), include_upper: false, log_spaced: true };
const W_TAN_K: XWindow =
    XWindow { upper: Upper::HalfPiScaled(TAN_K_FRAC), include_upper: false, log_spaced: false };
const W_HYP_K: XWindow =
    XWindow { upper: Upper::Const(HYP_K), include_upper: false, log_spaced: true };

// ---------------------------------------------------------------------------
// Shared building blocks
// ---------------------------------------------------------------------------

fn trig(p: f64, x: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    ptrig::sin_cos_signed(PParam::new(p)?, x, cfg)
}

fn hyp(p: f64, x: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    phyp::sinh_cosh_signed(PParam::new(p)?, x, cfg)
}

fn half_pi(p: f64, cfg: &EvalConfig) -> Result<f64> {
    ptrig::half_pi(PParam::new(p)?, cfg)
}

fn arcsin_v(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(ptrig::arcsin_p(x, PParam::new(p)?, cfg)?.value)
}

fn arctan_v(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(ptrig::arctan_p(x, PParam::new(p)?, cfg)?.value)
}

fn arcsinh_v(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(phyp::arcsinh_p(x, PParam::new(p)?, cfg)?.value)
}

fn arctanh_v(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(phyp::arctanh_p(x, PParam::new(p)?, cfg)?.value)
}

fn sin_over_x(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, _) = trig(p, x, cfg)?;
    Ok(s / x)
}

fn tan_over_x(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    Ok(s / (c * x))
}

fn sinh_over_x(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, _) = hyp(p, x, cfg)?;
    Ok(sh / x)
}

fn tanh_over_x(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok(sh / (ch * x))
}

fn x_over_sinh(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, _) = hyp(p, x, cfg)?;
    Ok(x / sh)
}

fn cosh_value(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(hyp(p, x, cfg)?.1)
}

// Constant curves (upper/lower sides of the Huygens/Wilker-type bounds).
fn const_one(_p: f64, _x: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(1.0)
}
fn const_two(_p: f64, _x: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(2.0)
}
fn const_p_plus_1(p: f64, _x: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(p + 1.0)
}
fn const_p_plus_2(p: f64, _x: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(p + 2.0)
}

// Claimed bounds/limits as functions of p.
fn bound_zero(_p: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(0.0)
}
fn bound_one(_p: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(1.0)
}
fn bound_two(_p: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(2.0)
}
fn bound_inv_1p(p: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(1.0 / (1.0 + p))
}
fn bound_p_plus_1(p: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(p + 1.0)
}
fn bound_p_plus_2(p: f64, _cfg: &EvalConfig) -> Result<f64> {
    Ok(p + 2.0)
}
fn bound_two_over_pi_p(p: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(1.0 / half_pi(p, cfg)?)
}

// ---------------------------------------------------------------------------
// 1. tan^{p−2} − tanh^{p−2} strictly increasing (p > 2)
// ---------------------------------------------------------------------------

fn tan_tanh_power_gap(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    let (sh, ch) = hyp(p, x, cfg)?;
    let e = p - 2.0;
    Ok((s / c).powf(e) - (sh / ch).powf(e))
}

fn tan_pow_pm2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    Ok((s / c).powf(p - 2.0))
}

fn tanh_pow_pm2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok((sh / ch).powf(p - 2.0))
}

// ---------------------------------------------------------------------------
// 2. cos·cosh decreasing from (0, π_p/2) onto (0, 1); cos·cosh < 1
// ---------------------------------------------------------------------------

fn cos_cosh_product(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    let (_, ch) = hyp(p, x, cfg)?;
    Ok(c * ch)
}

fn one_minus_cos_cosh(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(1.0 - cos_cosh_product(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// 3. sin/x < x/sinh (geometric-mean comparison, p ≥ 2)
// ---------------------------------------------------------------------------

fn sin_sinh_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(x_over_sinh(p, x, cfg)? - sin_over_x(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// 4. cos^{1/(1+p)} < sin/x < 1, log-ratio decreasing onto (0, 1/(1+p))
// ---------------------------------------------------------------------------

fn mit_margin_lower(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    Ok(s / x - c.powf(1.0 / (1.0 + p)))
}

fn one_minus_sin_ratio(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(1.0 - sin_over_x(p, x, cfg)?)
}

fn cos_pow_alpha(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok(c.powf(1.0 / (1.0 + p)))
}

/// log(sin_p(x)/x) / log(cos_p(x)); series form below w = x^p = 1e-3.
fn mit_log_ratio(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let w = x.powf(p);
    if w <= series::SERIES_CUT_W {
        return Ok(series::trig_log_ratio_small(p, w));
    }
    let (s, c) = trig(p, x, cfg)?;
    Ok((s / x).ln() / c.ln())
}

// ---------------------------------------------------------------------------
// 5. cosh^{1/(1+p)} < sinh/x < cosh, log-ratio increasing onto (1/(1+p), 1)
// ---------------------------------------------------------------------------

fn laza_margin_lower(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok(sh / x - ch.powf(1.0 / (1.0 + p)))
}

fn cosh_minus_sinh_ratio(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok(ch - sh / x)
}

fn cosh_pow_alpha(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, ch) = hyp(p, x, cfg)?;
    Ok(ch.powf(1.0 / (1.0 + p)))
}

/// log(sinh_p(x)/x) / log(cosh_p(x)); series form below w = 1e-3.
fn laza_log_ratio(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let w = x.powf(p);
    if w <= series::SERIES_CUT_W {
        return Ok(series::hyp_log_ratio_small(p, w));
    }
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok((sh / x).ln() / ch.ln())
}

// ---------------------------------------------------------------------------
// 6. Chain (x/sinh)^{1+p} < 1/cosh < tanh/x < sin/x < x/sinh (p ≥ 2)
// ---------------------------------------------------------------------------

fn chain_a(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(x_over_sinh(p, x, cfg)?.powf(1.0 + p))
}

fn chain_b(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(1.0 / cosh_value(p, x, cfg)?)
}

fn chain_c(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    tanh_over_x(p, x, cfg)
}

fn chain_d(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    sin_over_x(p, x, cfg)
}

fn chain_e(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    x_over_sinh(p, x, cfg)
}

fn chain_gap_ab(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok(1.0 / ch - (x / sh).powf(1.0 + p))
}

fn chain_gap_bc(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok(sh / (ch * x) - 1.0 / ch)
}

fn chain_gap_cd(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(sin_over_x(p, x, cfg)? - tanh_over_x(p, x, cfg)?)
}

fn chain_gap_de(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    sin_sinh_margin(p, x, cfg)
}

// ---------------------------------------------------------------------------
// 7/8. Huygens-type: (p+1)·f/x + 1/g > p+2
// ---------------------------------------------------------------------------

fn huygens_trig_lhs(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    Ok((p + 1.0) * s / x + 1.0 / c)
}

fn huygens_trig_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(huygens_trig_lhs(p, x, cfg)? - (p + 2.0))
}

fn huygens_hyp_lhs(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok((p + 1.0) * sh / x + 1.0 / ch)
}

fn huygens_hyp_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(huygens_hyp_lhs(p, x, cfg)? - (p + 2.0))
}

// ---------------------------------------------------------------------------
// 9/10. Second Huygens-type: p·f/x + tan-like/x > 1+p
// ---------------------------------------------------------------------------

fn huygens2_trig_lhs(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    Ok(p * s / x + s / (c * x))
}

fn huygens2_trig_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(huygens2_trig_lhs(p, x, cfg)? - (1.0 + p))
}

fn huygens2_hyp_lhs(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok(p * sh / x + sh / (ch * x))
}

fn huygens2_hyp_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(huygens2_hyp_lhs(p, x, cfg)? - (1.0 + p))
}

// ---------------------------------------------------------------------------
// 11. Wilker-type: (sinh/x)^p + tanh/x > 2
// ---------------------------------------------------------------------------

fn wilker_lhs(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok((sh / x).powf(p) + sh / (ch * x))
}

fn wilker_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(wilker_lhs(p, x, cfg)? - 2.0)
}

// ---------------------------------------------------------------------------
// 12. Cusa-Huygens (trigonometric, p ∈ (1,2]):
//     sin/x < (cos+p)/(1+p) ≤ (cos+2)/3
// ---------------------------------------------------------------------------

fn cusa_trig_bound_p(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok((c + p) / (1.0 + p))
}

fn cusa_trig_bound_2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok((c + 2.0) / 3.0)
}

fn cusa_trig_margin1(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    Ok((c + p) / (1.0 + p) - s / x)
}

/// (cos+2)/3 − (cos+p)/(1+p) = (2−p)(1−cos)/(3(1+p)); identically 0 at p = 2.
fn cusa_trig_margin2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok((c + 2.0) / 3.0 - (c + p) / (1.0 + p))
}

// ---------------------------------------------------------------------------
// 13/14. Cusa-Huygens (hyperbolic): sinh/x < (cosh+p)/(1+p) for p ∈ (1,2];
//        sinh/x < (cosh+2)/3 for p ∈ [2,∞)
// ---------------------------------------------------------------------------

fn cusa_hyp_bound_p(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, ch) = hyp(p, x, cfg)?;
    Ok((ch + p) / (1.0 + p))
}

fn cusa_hyp_bound_2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, ch) = hyp(p, x, cfg)?;
    Ok((ch + 2.0) / 3.0)
}

fn cusa_hyp_small_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok((ch + p) / (1.0 + p) - sh / x)
}

fn cusa_hyp_large_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, ch) = hyp(p, x, cfg)?;
    Ok((ch + 2.0) / 3.0 - sh / x)
}

// ---------------------------------------------------------------------------
// 15. sinh/x < 3/(2+cos) on (0, π_p/2), p ≥ 2
// ---------------------------------------------------------------------------

fn sinh_cos_bound_rhs(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok(3.0 / (2.0 + c))
}

fn sinh_cos_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(sinh_cos_bound_rhs(p, x, cfg)? - sinh_over_x(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// 16. sin/x > (p−1+cos)/p ≥ (1+cos)/2 on (0, π_p/2], p ≥ 2
// ---------------------------------------------------------------------------

fn sin_lower_bound_p(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok((p - 1.0 + c) / p)
}

fn sin_lower_half_bound(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok((1.0 + c) / 2.0)
}

fn sin_lower_margin1(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, c) = trig(p, x, cfg)?;
    Ok(s / x - (p - 1.0 + c) / p)
}

/// (p−1+cos)/p − (1+cos)/2 = (p−2)(1−cos)/(2p); identically 0 at p = 2.
fn sin_lower_margin2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok((p - 1.0 + c) / p - (1.0 + c) / 2.0)
}

// ---------------------------------------------------------------------------
// 17. sin/x decreasing onto (2/π_p, 1); x/arcsin(x) < sin(x)/x <
//     (2x/π_p)/arcsin(2x/π_p) for x ∈ (0, 1)
// ---------------------------------------------------------------------------

fn x_over_arcsin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(x / arcsin_v(p, x, cfg)?)
}

fn sin_ratio_upper(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let beta = 1.0 / half_pi(p, cfg)?; // 2/π_p
    let bx = beta * x;
    Ok(bx / arcsin_v(p, bx, cfg)?)
}

fn ratio_sin_m1(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(sin_over_x(p, x, cfg)? - x_over_arcsin(p, x, cfg)?)
}

fn ratio_sin_m2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(sin_ratio_upper(p, x, cfg)? - sin_over_x(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// 18. tan/x increasing onto (1, ∞); x/arctan(x) < tan(x)/x < ax/arctan(ax)
//     for x ∈ (0, k), k = 0.9·π_p/2, a = tan(k)/k
// ---------------------------------------------------------------------------

fn x_over_arctan(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(x / arctan_v(p, x, cfg)?)
}

fn tan_ratio_upper(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let k = TAN_K_FRAC * half_pi(p, cfg)?;
    let a = tan_over_x(p, k, cfg)?; // tan(k)/k
    let ax = a * x;
    Ok(ax / arctan_v(p, ax, cfg)?)
}

fn ratio_tan_m1(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(tan_over_x(p, x, cfg)? - x_over_arctan(p, x, cfg)?)
}

fn ratio_tan_m2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(tan_ratio_upper(p, x, cfg)? - tan_over_x(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// 19. sinh/x increasing onto (1, ∞); x/arcsinh(x) < sinh(x)/x <
//     bx/arcsinh(bx) for x ∈ (0, 2), b = sinh(2)/2
// ---------------------------------------------------------------------------

fn x_over_arcsinh(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(x / arcsinh_v(p, x, cfg)?)
}

fn sinh_ratio_upper(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let b = sinh_over_x(p, HYP_K, cfg)?; // sinh(2)/2
    let bx = b * x;
    Ok(bx / arcsinh_v(p, bx, cfg)?)
}

fn ratio_sinh_m1(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(sinh_over_x(p, x, cfg)? - x_over_arcsinh(p, x, cfg)?)
}

fn ratio_sinh_m2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(sinh_ratio_upper(p, x, cfg)? - sinh_over_x(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// 20. tanh/x decreasing onto (0, 1); x/arctanh(x) < tanh(x)/x <
//     cx/arctanh(cx); c = tanh(2)/2. The left bound needs arctanh(x), so its
//     scan window is (0, 1) (arctanh domain), the right bound's is (0, 2).
// ---------------------------------------------------------------------------

fn x_over_arctanh(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(x / arctanh_v(p, x, cfg)?)
}

fn tanh_ratio_upper(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let c = tanh_over_x(p, HYP_K, cfg)?; // tanh(2)/2 < 1/2, so cx < 1 on (0, 2)
    let cx = c * x;
    Ok(cx / arctanh_v(p, cx, cfg)?)
}

fn ratio_tanh_m1(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(tanh_over_x(p, x, cfg)? - x_over_arctanh(p, x, cfg)?)
}

fn ratio_tanh_m2(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(tanh_ratio_upper(p, x, cfg)? - tanh_over_x(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// 21–24. t-parametrized families at fixed x: f(t) = F_p(x/t)^t
// ---------------------------------------------------------------------------

fn tpar_cos(p: f64, x: f64, t: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x / t, cfg)?;
    Ok(c.powf(t))
}

fn tpar_sin(p: f64, x: f64, t: f64, cfg: &EvalConfig) -> Result<f64> {
    let (s, _) = trig(p, x / t, cfg)?;
    Ok(s.powf(t))
}

fn tpar_sinh(p: f64, x: f64, t: f64, cfg: &EvalConfig) -> Result<f64> {
    let (sh, _) = hyp(p, x / t, cfg)?;
    Ok(sh.powf(t))
}

fn tpar_cosh(p: f64, x: f64, t: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, ch) = hyp(p, x / t, cfg)?;
    Ok(ch.powf(t))
}

// ---------------------------------------------------------------------------
// 25/26. Conjectured claims (scanned as evidence, never as certification)
// ---------------------------------------------------------------------------

/// log(x/sin_p(x)) / log(sinh_p(x)/x); series form below w = 1e-3 (limit 1).
fn cross_log_ratio(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let w = x.powf(p);
    if w <= series::SERIES_CUT_W {
        return Ok(series::cross_log_ratio_small(p, w));
    }
    let (s, _) = trig(p, x, cfg)?;
    let (sh, _) = hyp(p, x, cfg)?;
    Ok((x / s).ln() / (sh / x).ln())
}

fn conj_cusa_bound(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let (_, c) = trig(p, x, cfg)?;
    Ok((p + 1.0) / (p + c))
}

fn conj_cusa_margin(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    Ok(conj_cusa_bound(p, x, cfg)? - sinh_over_x(p, x, cfg)?)
}

// ---------------------------------------------------------------------------
// The catalog
// ---------------------------------------------------------------------------

static CASES: [InequalityCase; 26] = [
    InequalityCase {
        id: "lem_tan_tanh_monotone",
        description: "tan_p(x)^(p-2) - tanh_p(x)^(p-2) is strictly increasing on (0, pi_p/2) for p > 2",
        kind: CaseKind::Monotone,
        conjecture: false,
        p_domain: PDomain::open_from(2.0),
        default_p: P_GT2,
        components: &[],
        monotones: &[MonotoneSpec {
            name: "tan_tanh_gap",
            increasing: true,
            window: W_TRIG_OPEN,
            eval: tan_tanh_power_gap,
        }],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "tanh_p^(p-2)", eval: tanh_pow_pm2 },
            Curve { name: "tan_p^(p-2)", eval: tan_pow_pm2 },
        ],
    },
    InequalityCase {
        id: "lem_c_ch_decreasing_range",
        description: "cos_p(x)*cosh_p(x) is strictly decreasing from (0, pi_p/2) onto (0, 1); in particular cos_p(x) < 1/cosh_p(x)",
        kind: CaseKind::Monotone,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[Component {
            name: "product_below_one",
            vanish_order: 2,
            equality_p: &[],
            window: W_TRIG_OPEN,
            eval: one_minus_cos_cosh,
        }],
        monotones: &[MonotoneSpec {
            name: "product",
            increasing: false,
            window: W_TRIG_OPEN,
            eval: cos_cosh_product,
        }],
        ranges: &[RangeSpec {
            name: "product",
            lo: Some(bound_zero),
            hi: Some(bound_one),
            vanish_order: 2,
            window: W_TRIG_OPEN,
            eval: cos_cosh_product,
        }],
        log_shapes: &[],
        limits: &[
            LimitSpec {
                name: "x->0+",
                side: LimitSide::ZeroPlus,
                window: W_TRIG_OPEN,
                claimed: bound_one,
                eval: cos_cosh_product,
            },
            LimitSpec {
                name: "x->pi_p/2",
                side: LimitSide::UpperEndpoint,
                window: W_TRIG_OPEN,
                claimed: bound_zero,
                eval: cos_cosh_product,
            },
        ],
        curves: &[
            Curve { name: "cos_p*cosh_p", eval: cos_cosh_product },
            Curve { name: "const_1", eval: const_one },
        ],
    },
    InequalityCase {
        id: "sin_sinh_geometric",
        description: "sin_p(x)/x < x/sinh_p(x) on (0, pi_p/2) for p >= 2",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::closed_from(2.0),
        default_p: P_GE2,
        components: &[Component {
            name: "geometric_mean",
            vanish_order: 2,
            equality_p: &[],
            window: W_TRIG_OPEN,
            eval: sin_sinh_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "sin_p/x", eval: sin_over_x },
            Curve { name: "x/sinh_p", eval: x_over_sinh },
        ],
    },
    InequalityCase {
        id: "mitrinovic_adamovic",
        description: "cos_p(x)^(1/(1+p)) < sin_p(x)/x < 1 with best exponent 1/(1+p); log(sin_p/x)/log(cos_p) decreases from (0, pi_p/2) onto (0, 1/(1+p))",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[
            Component {
                name: "lower",
                vanish_order: 2,
                equality_p: &[],
                window: W_TRIG_OPEN,
                eval: mit_margin_lower,
            },
            Component {
                name: "upper",
                vanish_order: 1,
                equality_p: &[],
                window: W_TRIG_OPEN,
                eval: one_minus_sin_ratio,
            },
        ],
        monotones: &[MonotoneSpec {
            name: "log_ratio",
            increasing: false,
            window: W_TRIG_OPEN,
            eval: mit_log_ratio,
        }],
        ranges: &[RangeSpec {
            name: "log_ratio",
            lo: Some(bound_zero),
            hi: Some(bound_inv_1p),
            vanish_order: 1,
            window: W_TRIG_OPEN,
            eval: mit_log_ratio,
        }],
        log_shapes: &[],
        limits: &[
            LimitSpec {
                name: "x->0+",
                side: LimitSide::ZeroPlus,
                window: W_TRIG_OPEN,
                claimed: bound_inv_1p,
                eval: mit_log_ratio,
            },
            LimitSpec {
                name: "x->pi_p/2",
                side: LimitSide::UpperEndpoint,
                window: W_TRIG_OPEN,
                claimed: bound_zero,
                eval: mit_log_ratio,
            },
        ],
        curves: &[
            Curve { name: "cos_p^(1/(1+p))", eval: cos_pow_alpha },
            Curve { name: "sin_p/x", eval: sin_over_x },
            Curve { name: "const_1", eval: const_one },
        ],
    },
    InequalityCase {
        id: "lazarevic",
        description: "cosh_p(x)^(1/(1+p)) < sinh_p(x)/x < cosh_p(x) with best exponents; log(sinh_p/x)/log(cosh_p) increases from (0, inf) onto (1/(1+p), 1)",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[
            Component {
                name: "lower",
                vanish_order: 2,
                equality_p: &[],
                window: W_POS_LOG,
                eval: laza_margin_lower,
            },
            Component {
                name: "upper",
                vanish_order: 1,
                equality_p: &[],
                window: W_POS_LOG,
                eval: cosh_minus_sinh_ratio,
            },
        ],
        monotones: &[MonotoneSpec {
            name: "log_ratio",
            increasing: true,
            window: W_POS_LOG,
            eval: laza_log_ratio,
        }],
        ranges: &[RangeSpec {
            name: "log_ratio",
            lo: Some(bound_inv_1p),
            hi: Some(bound_one),
            vanish_order: 1,
            window: W_POS_LOG,
            eval: laza_log_ratio,
        }],
        log_shapes: &[],
        limits: &[
            LimitSpec {
                name: "x->0+",
                side: LimitSide::ZeroPlus,
                window: W_POS_LOG,
                claimed: bound_inv_1p,
                eval: laza_log_ratio,
            },
            LimitSpec {
                name: "x->infinity",
                side: LimitSide::Infinity,
                window: W_POS_LOG,
                claimed: bound_one,
                eval: laza_log_ratio,
            },
        ],
        curves: &[
            Curve { name: "cosh_p^(1/(1+p))", eval: cosh_pow_alpha },
            Curve { name: "sinh_p/x", eval: sinh_over_x },
            Curve { name: "cosh_p", eval: cosh_value },
        ],
    },
    InequalityCase {
        id: "chain_2_4_4",
        description: "(x/sinh_p)^(1+p) < 1/cosh_p < tanh_p/x < sin_p/x < x/sinh_p on (0, pi_p/2) for p >= 2",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::closed_from(2.0),
        default_p: P_GE2,
        components: &[
            Component {
                name: "b_minus_a",
                vanish_order: 2,
                equality_p: &[],
                window: W_TRIG_OPEN,
                eval: chain_gap_ab,
            },
            Component {
                name: "c_minus_b",
                vanish_order: 1,
                equality_p: &[],
                window: W_TRIG_OPEN,
                eval: chain_gap_bc,
            },
            Component {
                name: "d_minus_c",
                vanish_order: 1,
                equality_p: &[],
                window: W_TRIG_OPEN,
                eval: chain_gap_cd,
            },
            Component {
                name: "e_minus_d",
                vanish_order: 2,
                equality_p: &[],
                window: W_TRIG_OPEN,
                eval: chain_gap_de,
            },
        ],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "(x/sinh_p)^(1+p)", eval: chain_a },
            Curve { name: "1/cosh_p", eval: chain_b },
            Curve { name: "tanh_p/x", eval: chain_c },
            Curve { name: "sin_p/x", eval: chain_d },
            Curve { name: "x/sinh_p", eval: chain_e },
        ],
    },
    InequalityCase {
        id: "huygens_trig",
        description: "(p+1)*sin_p(x)/x + 1/cos_p(x) > p+2 on (0, pi_p/2) for p > 1",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_TRIG_OPEN,
            eval: huygens_trig_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_TRIG_OPEN,
            claimed: bound_p_plus_2,
            eval: huygens_trig_lhs,
        }],
        curves: &[
            Curve { name: "const_p_plus_2", eval: const_p_plus_2 },
            Curve { name: "(p+1)*sin_p/x+1/cos_p", eval: huygens_trig_lhs },
        ],
    },
    InequalityCase {
        id: "huygens_hyp",
        description: "(p+1)*sinh_p(x)/x + 1/cosh_p(x) > p+2 for x > 0, p > 1",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_POS_LOG,
            eval: huygens_hyp_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_POS_LOG,
            claimed: bound_p_plus_2,
            eval: huygens_hyp_lhs,
        }],
        curves: &[
            Curve { name: "const_p_plus_2", eval: const_p_plus_2 },
            Curve { name: "(p+1)*sinh_p/x+1/cosh_p", eval: huygens_hyp_lhs },
        ],
    },
    InequalityCase {
        id: "huygens2_trig",
        description: "p*sin_p(x)/x + tan_p(x)/x > 1+p on (0, pi_p/2) for p > 1",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_TRIG_OPEN,
            eval: huygens2_trig_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_TRIG_OPEN,
            claimed: bound_p_plus_1,
            eval: huygens2_trig_lhs,
        }],
        curves: &[
            Curve { name: "const_p_plus_1", eval: const_p_plus_1 },
            Curve { name: "p*sin_p/x+tan_p/x", eval: huygens2_trig_lhs },
        ],
    },
    InequalityCase {
        id: "huygens2_hyp",
        description: "p*sinh_p(x)/x + tanh_p(x)/x > 1+p for x > 0, p > 1",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_POS_LOG,
            eval: huygens2_hyp_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_POS_LOG,
            claimed: bound_p_plus_1,
            eval: huygens2_hyp_lhs,
        }],
        curves: &[
            Curve { name: "const_p_plus_1", eval: const_p_plus_1 },
            Curve { name: "p*sinh_p/x+tanh_p/x", eval: huygens2_hyp_lhs },
        ],
    },
    InequalityCase {
        id: "wilker_hyp",
        description: "(sinh_p(x)/x)^p + tanh_p(x)/x > 2 for x > 0, p > 1",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_POS_LOG,
            eval: wilker_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_POS_LOG,
            claimed: bound_two,
            eval: wilker_lhs,
        }],
        curves: &[
            Curve { name: "const_2", eval: const_two },
            Curve { name: "(sinh_p/x)^p+tanh_p/x", eval: wilker_lhs },
        ],
    },
    InequalityCase {
        id: "cusa_trig",
        description: "sin_p(x)/x < (cos_p(x)+p)/(1+p) <= (cos_p(x)+2)/3 on (0, pi_p/2] for p in (1, 2]; the second bound is an identity at p = 2",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_closed(1.0, 2.0),
        default_p: P_LE2,
        components: &[
            Component {
                name: "first",
                vanish_order: 2,
                equality_p: &[],
                window: W_TRIG_CLOSED,
                eval: cusa_trig_margin1,
            },
            Component {
                name: "second",
                vanish_order: 1,
                equality_p: &[2.0],
                window: W_TRIG_CLOSED,
                eval: cusa_trig_margin2,
            },
        ],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "sin_p/x", eval: sin_over_x },
            Curve { name: "(cos_p+p)/(1+p)", eval: cusa_trig_bound_p },
            Curve { name: "(cos_p+2)/3", eval: cusa_trig_bound_2 },
        ],
    },
    InequalityCase {
        id: "cusa_hyp_small_p",
        description: "sinh_p(x)/x < (cosh_p(x)+p)/(1+p) for x > 0, p in (1, 2]",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::open_closed(1.0, 2.0),
        default_p: P_LE2,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_POS_LOG,
            eval: cusa_hyp_small_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "sinh_p/x", eval: sinh_over_x },
            Curve { name: "(cosh_p+p)/(1+p)", eval: cusa_hyp_bound_p },
        ],
    },
    InequalityCase {
        id: "cusa_hyp_large_p",
        description: "sinh_p(x)/x < (cosh_p(x)+2)/3 for x > 0, p in [2, inf)",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::closed_from(2.0),
        default_p: P_GE2,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_POS_LOG,
            eval: cusa_hyp_large_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "sinh_p/x", eval: sinh_over_x },
            Curve { name: "(cosh_p+2)/3", eval: cusa_hyp_bound_2 },
        ],
    },
    InequalityCase {
        id: "sinh_cos_bound",
        description: "sinh_p(x)/x < 3/(2+cos_p(x)) on (0, pi_p/2) for p >= 2",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::closed_from(2.0),
        default_p: P_GE2,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_TRIG_OPEN,
            eval: sinh_cos_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "sinh_p/x", eval: sinh_over_x },
            Curve { name: "3/(2+cos_p)", eval: sinh_cos_bound_rhs },
        ],
    },
    InequalityCase {
        id: "sin_lower_bound",
        description: "sin_p(x)/x > (p-1+cos_p(x))/p >= (1+cos_p(x))/2 on (0, pi_p/2] for p >= 2; the second bound is an identity at p = 2",
        kind: CaseKind::Margin,
        conjecture: false,
        p_domain: PDomain::closed_from(2.0),
        default_p: P_GE2,
        components: &[
            Component {
                name: "first",
                vanish_order: 2,
                equality_p: &[],
                window: W_TRIG_CLOSED,
                eval: sin_lower_margin1,
            },
            Component {
                name: "second",
                vanish_order: 1,
                equality_p: &[2.0],
                window: W_TRIG_CLOSED,
                eval: sin_lower_margin2,
            },
        ],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "(1+cos_p)/2", eval: sin_lower_half_bound },
            Curve { name: "(p-1+cos_p)/p", eval: sin_lower_bound_p },
            Curve { name: "sin_p/x", eval: sin_over_x },
        ],
    },
    InequalityCase {
        id: "ratio_monotone_sin",
        description: "sin_p(x)/x is strictly decreasing from (0, pi_p/2) onto (2/pi_p, 1); for x in (0, 1): x/arcsin_p(x) < sin_p(x)/x < (2x/pi_p)/arcsin_p(2x/pi_p)",
        kind: CaseKind::Monotone,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[
            Component {
                name: "left",
                vanish_order: 2,
                equality_p: &[],
                window: W_UNIT,
                eval: ratio_sin_m1,
            },
            Component {
                name: "right",
                vanish_order: 1,
                equality_p: &[],
                window: W_UNIT,
                eval: ratio_sin_m2,
            },
        ],
        monotones: &[MonotoneSpec {
            name: "ratio",
            increasing: false,
            window: W_TRIG_OPEN,
            eval: sin_over_x,
        }],
        ranges: &[RangeSpec {
            name: "ratio",
            lo: Some(bound_two_over_pi_p),
            hi: Some(bound_one),
            vanish_order: 1,
            window: W_TRIG_OPEN,
            eval: sin_over_x,
        }],
        log_shapes: &[],
        limits: &[
            LimitSpec {
                name: "x->0+",
                side: LimitSide::ZeroPlus,
                window: W_TRIG_OPEN,
                claimed: bound_one,
                eval: sin_over_x,
            },
            LimitSpec {
                name: "x->pi_p/2",
                side: LimitSide::UpperEndpoint,
                window: W_TRIG_OPEN,
                claimed: bound_two_over_pi_p,
                eval: sin_over_x,
            },
        ],
        curves: &[
            Curve { name: "x/arcsin_p(x)", eval: x_over_arcsin },
            Curve { name: "sin_p/x", eval: sin_over_x },
            Curve { name: "(2x/pi_p)/arcsin_p(2x/pi_p)", eval: sin_ratio_upper },
        ],
    },
    InequalityCase {
        id: "ratio_monotone_tan",
        description: "tan_p(x)/x is strictly increasing from (0, pi_p/2) onto (1, inf); for x in (0, k), k = 0.9*pi_p/2, a = tan_p(k)/k: x/arctan_p(x) < tan_p(x)/x < ax/arctan_p(ax)",
        kind: CaseKind::Monotone,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[
            Component {
                name: "left",
                vanish_order: 2,
                equality_p: &[],
                window: W_TAN_K,
                eval: ratio_tan_m1,
            },
            Component {
                name: "right",
                vanish_order: 1,
                equality_p: &[],
                window: W_TAN_K,
                eval: ratio_tan_m2,
            },
        ],
        monotones: &[MonotoneSpec {
            name: "ratio",
            increasing: true,
            window: W_TRIG_OPEN,
            eval: tan_over_x,
        }],
        ranges: &[RangeSpec {
            name: "ratio",
            lo: Some(bound_one),
            hi: None,
            vanish_order: 1,
            window: W_TRIG_OPEN,
            eval: tan_over_x,
        }],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_TRIG_OPEN,
            claimed: bound_one,
            eval: tan_over_x,
        }],
        curves: &[
            Curve { name: "x/arctan_p(x)", eval: x_over_arctan },
            Curve { name: "tan_p/x", eval: tan_over_x },
            Curve { name: "ax/arctan_p(ax)", eval: tan_ratio_upper },
        ],
    },
    InequalityCase {
        id: "ratio_monotone_sinh",
        description: "sinh_p(x)/x is strictly increasing from (0, inf) onto (1, inf); for x in (0, 2), b = sinh_p(2)/2: x/arcsinh_p(x) < sinh_p(x)/x < bx/arcsinh_p(bx)",
        kind: CaseKind::Monotone,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[
            Component {
                name: "left",
                vanish_order: 2,
                equality_p: &[],
                window: W_HYP_K,
                eval: ratio_sinh_m1,
            },
            Component {
                name: "right",
                vanish_order: 1,
                equality_p: &[],
                window: W_HYP_K,
                eval: ratio_sinh_m2,
            },
        ],
        monotones: &[MonotoneSpec {
            name: "ratio",
            increasing: true,
            window: W_POS_LOG,
            eval: sinh_over_x,
        }],
        ranges: &[RangeSpec {
            name: "ratio",
            lo: Some(bound_one),
            hi: None,
            vanish_order: 1,
            window: W_POS_LOG,
            eval: sinh_over_x,
        }],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_POS_LOG,
            claimed: bound_one,
            eval: sinh_over_x,
        }],
        curves: &[
            Curve { name: "x/arcsinh_p(x)", eval: x_over_arcsinh },
            Curve { name: "sinh_p/x", eval: sinh_over_x },
            Curve { name: "bx/arcsinh_p(bx)", eval: sinh_ratio_upper },
        ],
    },
    InequalityCase {
        id: "ratio_monotone_tanh",
        description: "tanh_p(x)/x is strictly decreasing from (0, inf) onto (0, 1); left bound x/arctanh_p(x) < tanh_p(x)/x on (0, 1), right bound tanh_p(x)/x < cx/arctanh_p(cx) on (0, 2), c = tanh_p(2)/2",
        kind: CaseKind::Monotone,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[
            Component {
                name: "left",
                vanish_order: 2,
                equality_p: &[],
                window: W_UNIT_LOG,
                eval: ratio_tanh_m1,
            },
            Component {
                name: "right",
                vanish_order: 1,
                equality_p: &[],
                window: W_HYP_K,
                eval: ratio_tanh_m2,
            },
        ],
        monotones: &[MonotoneSpec {
            name: "ratio",
            increasing: false,
            window: W_POS_LOG,
            eval: tanh_over_x,
        }],
        ranges: &[RangeSpec {
            name: "ratio",
            lo: Some(bound_zero),
            hi: Some(bound_one),
            vanish_order: 1,
            window: W_POS_LOG,
            eval: tanh_over_x,
        }],
        log_shapes: &[],
        limits: &[
            LimitSpec {
                name: "x->0+",
                side: LimitSide::ZeroPlus,
                window: W_POS_LOG,
                claimed: bound_one,
                eval: tanh_over_x,
            },
            LimitSpec {
                name: "x->infinity",
                side: LimitSide::Infinity,
                window: W_POS_LOG,
                claimed: bound_zero,
                eval: tanh_over_x,
            },
        ],
        curves: &[
            Curve { name: "x/arctanh_p(x)", eval: x_over_arctanh },
            Curve { name: "tanh_p/x", eval: tanh_over_x },
            Curve { name: "cx/arctanh_p(cx)", eval: tanh_ratio_upper },
        ],
    },
    InequalityCase {
        id: "t_param_cos",
        description: "t -> cos_p(x/t)^t is strictly increasing and log-concave on (2x/pi_p, inf) for fixed x > 0",
        kind: CaseKind::LogConcavity,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[],
        monotones: &[],
        ranges: &[],
        log_shapes: &[LogShapeSpec {
            name: "cos_p(x/t)^t",
            increasing: true,
            log_convex: false,
            t_lo: TLower::TrigCritical,
            g: tpar_cos,
        }],
        limits: &[],
        curves: &[],
    },
    InequalityCase {
        id: "t_param_sin",
        description: "t -> sin_p(x/t)^t is strictly decreasing and log-concave on (2x/pi_p, inf) for fixed x > 0",
        kind: CaseKind::LogConcavity,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[],
        monotones: &[],
        ranges: &[],
        log_shapes: &[LogShapeSpec {
            name: "sin_p(x/t)^t",
            increasing: false,
            log_convex: false,
            t_lo: TLower::TrigCritical,
            g: tpar_sin,
        }],
        limits: &[],
        curves: &[],
    },
    InequalityCase {
        id: "t_param_sinh",
        description: "t -> sinh_p(x/t)^t is strictly decreasing and log-concave on (0, inf) for fixed x > 0",
        kind: CaseKind::LogConcavity,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[],
        monotones: &[],
        ranges: &[],
        log_shapes: &[LogShapeSpec {
            name: "sinh_p(x/t)^t",
            increasing: false,
            log_convex: false,
            t_lo: TLower::Const(0.1),
            g: tpar_sinh,
        }],
        limits: &[],
        curves: &[],
    },
    InequalityCase {
        id: "t_param_cosh",
        description: "t -> cosh_p(x/t)^t is strictly decreasing and log-convex on (0, inf) for fixed x > 0",
        kind: CaseKind::LogConcavity,
        conjecture: false,
        p_domain: PDomain::open_from(1.0),
        default_p: P_ALL,
        components: &[],
        monotones: &[],
        ranges: &[],
        log_shapes: &[LogShapeSpec {
            name: "cosh_p(x/t)^t",
            increasing: false,
            log_convex: true,
            t_lo: TLower::Const(0.1),
            g: tpar_cosh,
        }],
        limits: &[],
        curves: &[],
    },
    InequalityCase {
        id: "conj_log_ratio",
        description: "conjecture: log(x/sin_p(x))/log(sinh_p(x)/x) is strictly increasing on (0, pi_p/2) for p >= 2",
        kind: CaseKind::Conjecture,
        conjecture: true,
        p_domain: PDomain::closed_from(2.0),
        default_p: P_GE2,
        components: &[],
        monotones: &[MonotoneSpec {
            name: "log_ratio",
            increasing: true,
            window: W_TRIG_OPEN,
            eval: cross_log_ratio,
        }],
        ranges: &[],
        log_shapes: &[],
        limits: &[LimitSpec {
            name: "x->0+",
            side: LimitSide::ZeroPlus,
            window: W_TRIG_OPEN,
            claimed: bound_one,
            eval: cross_log_ratio,
        }],
        curves: &[Curve { name: "log(x/sin_p)/log(sinh_p/x)", eval: cross_log_ratio }],
    },
    InequalityCase {
        id: "conj_cusa_sharp",
        description: "conjecture: sinh_p(x)/x < (p+1)/(p+cos_p(x)) on (0, pi_p/2) for p > 2",
        kind: CaseKind::Conjecture,
        conjecture: true,
        p_domain: PDomain::open_from(2.0),
        default_p: P_GT2,
        components: &[Component {
            name: "margin",
            vanish_order: 2,
            equality_p: &[],
            window: W_TRIG_OPEN,
            eval: conj_cusa_margin,
        }],
        monotones: &[],
        ranges: &[],
        log_shapes: &[],
        limits: &[],
        curves: &[
            Curve { name: "sinh_p/x", eval: sinh_over_x },
            Curve { name: "(p+1)/(p+cos_p)", eval: conj_cusa_bound },
        ],
    },
];

/// The full fixed catalog, in stable order.
pub fn registry() -> &'static [InequalityCase] {
    &CASES
}

/// Look a case up by id.
pub fn find_case(id: &str) -> Option<&'static InequalityCase> {
    CASES.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::scan::scan_case;
    use crate::inequalities::GridSpec;
    use approx::assert_relative_eq;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn catalog_has_exactly_26_stable_ids() {
        assert_eq!(registry().len(), 26);
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        let expected = [
            "lem_tan_tanh_monotone",
            "lem_c_ch_decreasing_range",
            "sin_sinh_geometric",
            "mitrinovic_adamovic",
            "lazarevic",
            "chain_2_4_4",
            "huygens_trig",
            "huygens_hyp",
            "huygens2_trig",
            "huygens2_hyp",
            "wilker_hyp",
            "cusa_trig",
            "cusa_hyp_small_p",
            "cusa_hyp_large_p",
            "sinh_cos_bound",
            "sin_lower_bound",
            "ratio_monotone_sin",
            "ratio_monotone_tan",
            "ratio_monotone_sinh",
            "ratio_monotone_tanh",
            "t_param_cos",
            "t_param_sin",
            "t_param_sinh",
            "t_param_cosh",
            "conj_log_ratio",
            "conj_cusa_sharp",
        ];
        assert_eq!(ids, expected);
        // Ids are unique.
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 26);
    }

    #[test]
    fn find_case_round_trips_every_id() {
        for case in registry() {
            assert!(std::ptr::eq(find_case(case.id).unwrap(), case));
        }
        assert!(find_case("nonexistent").is_none());
    }

    #[test]
    fn default_exponents_lie_inside_each_p_domain() {
        for case in registry() {
            for &p in case.default_p {
                assert!(
                    case.p_domain.contains(p),
                    "{}: default p = {p} outside its domain",
                    case.id
                );
            }
        }
        // Spot-check the boundary conventions.
        let mit = find_case("mitrinovic_adamovic").unwrap();
        assert!(!mit.p_domain.contains(1.0)); // open left end
        assert!(mit.p_domain.contains(1.0000001));
        let conj = find_case("conj_cusa_sharp").unwrap();
        assert!(!conj.p_domain.contains(2.0)); // p > 2 strictly
        let geo = find_case("sin_sinh_geometric").unwrap();
        assert!(geo.p_domain.contains(2.0)); // p >= 2 includes 2
    }

    // At p = 2 every evaluator must reproduce its classical counterpart.
    // Margin formulas checked against direct classical-function arithmetic.

    #[test]
    fn wilker_margin_matches_classical_value_at_p2_x1() {
        // (sinh 1)^2 + tanh 1 - 2
        let m = wilker_margin(2.0, 1.0, &cfg()).unwrap();
        let expected = 1.0f64.sinh().powi(2) + 1.0f64.tanh() - 2.0;
        assert_relative_eq!(m, expected, max_relative = 1e-10);
        assert!((m - 0.1427).abs() < 5e-4);
    }

    #[test]
    fn cusa_trig_margin_at_p2_right_endpoint_is_two_thirds_minus_two_over_pi() {
        let hp = half_pi(2.0, &cfg()).unwrap();
        let m = cusa_trig_margin1(2.0, hp, &cfg()).unwrap();
        let expected = 2.0 / 3.0 - 2.0 / std::f64::consts::PI;
        assert_relative_eq!(m, expected, max_relative = 1e-10);
        assert!((m - 0.0301).abs() < 5e-4);
    }

    #[test]
    fn huygens_margins_match_classical_arithmetic_at_p2() {
        let x = 0.8;
        let m = huygens_trig_margin(2.0, x, &cfg()).unwrap();
        let expected = 3.0 * x.sin() / x + 1.0 / x.cos() - 4.0;
        assert_relative_eq!(m, expected, max_relative = 1e-10);

        let mh = huygens2_hyp_margin(2.0, x, &cfg()).unwrap();
        let eh = 2.0 * x.sinh() / x + x.tanh() / x - 3.0;
        assert_relative_eq!(mh, eh, max_relative = 1e-10);
    }

    #[test]
    fn chain_members_are_ascending_at_a_classical_point() {
        let (p, x) = (2.0, 0.9);
        let c = cfg();
        let vals = [
            chain_a(p, x, &c).unwrap(),
            chain_b(p, x, &c).unwrap(),
            chain_c(p, x, &c).unwrap(),
            chain_d(p, x, &c).unwrap(),
            chain_e(p, x, &c).unwrap(),
        ];
        for w in vals.windows(2) {
            assert!(w[0] < w[1], "chain order violated: {vals:?}");
        }
        // Classical cross-check of the members themselves.
        assert_relative_eq!(vals[1], 1.0 / x.cosh(), max_relative = 1e-10);
        assert_relative_eq!(vals[3], x.sin() / x, max_relative = 1e-10);
    }

    #[test]
    fn log_ratio_series_and_direct_forms_agree_at_the_crossover() {
        // Straddle w = 1e-3 so tightly (±1e-6 relative in w) that the genuine
        // slope of each ratio contributes < 1e-9; anything larger than the
        // tolerance is a real branch mismatch, not curvature.
        let c = cfg();
        for &p in &[1.5, 2.0, 3.0, 10.0] {
            let lo = (series::SERIES_CUT_W * (1.0 - 1e-6)).powf(1.0 / p); // series branch
            let hi = (series::SERIES_CUT_W * (1.0 + 1e-6)).powf(1.0 / p); // direct branch
            let hybrids: [(fn(f64, f64, &EvalConfig) -> Result<f64>, &str); 3] = [
                (mit_log_ratio, "trig"),
                (laza_log_ratio, "hyp"),
                (cross_log_ratio, "cross"),
            ];
            for (f, tag) in hybrids {
                let a = f(p, lo, &c).unwrap();
                let b = f(p, hi, &c).unwrap();
                assert!(
                    (a - b).abs() < 1e-7 * a.abs().max(1.0),
                    "{tag} hybrid jumps at w-cut for p = {p}: {a} vs {b}"
                );
            }
        }
    }

    #[test]
    fn mit_log_ratio_approaches_one_over_one_plus_p() {
        // Limiting value 1/3 at p = 2, approached from below as x -> 0.
        let v = mit_log_ratio(2.0, 1e-3, &cfg()).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-3);
        let w = mit_log_ratio(2.0, 1e-4, &cfg()).unwrap();
        assert!((w - 1.0 / 3.0).abs() < (v - 1.0 / 3.0).abs());
    }

    #[test]
    fn degenerate_second_margins_vanish_identically_at_p2() {
        let c = cfg();
        for x in [0.3, 0.8, 1.2] {
            assert_eq!(cusa_trig_margin2(2.0, x, &c).unwrap(), 0.0);
            assert_eq!(sin_lower_margin2(2.0, x, &c).unwrap(), 0.0);
        }
        // ... and are genuinely positive away from p = 2.
        assert!(cusa_trig_margin2(1.5, 0.8, &c).unwrap() > 1e-4);
        assert!(sin_lower_margin2(3.0, 0.8, &c).unwrap() > 1e-4);
    }

    #[test]
    fn ratio_double_bounds_hold_at_interior_points() {
        let c = cfg();
        // tan case at p = 2: classical tan on (0, 0.9*pi/2).
        let mid = 0.5 * TAN_K_FRAC * std::f64::consts::FRAC_PI_2;
        assert!(ratio_tan_m1(2.0, mid, &c).unwrap() > 0.0);
        assert!(ratio_tan_m2(2.0, mid, &c).unwrap() > 0.0);
        // tanh case, both windows.
        assert!(ratio_tanh_m1(3.0, 0.5, &c).unwrap() > 0.0);
        assert!(ratio_tanh_m2(3.0, 1.5, &c).unwrap() > 0.0);
        // Right-hand bounds collapse to equality at their anchors.
        let m2_at_anchor = {
            let k = HYP_K;
            ratio_sinh_m2(2.0, k, &c).unwrap()
        };
        assert!(m2_at_anchor.abs() < 1e-9, "anchor equality: {m2_at_anchor}");
    }

    #[test]
    fn tparam_families_have_claimed_shape_at_p3_x1() {
        // Sanity on raw values: cos branch increasing, cosh branch decreasing.
        let c = cfg();
        let hp = half_pi(3.0, &c).unwrap();
        let t0 = (1.0 / hp) * 1.01;
        let g1 = tpar_cos(3.0, 1.0, t0 + 0.5, &c).unwrap();
        let g2 = tpar_cos(3.0, 1.0, t0 + 1.5, &c).unwrap();
        assert!(g2 > g1);
        let h1 = tpar_cosh(3.0, 1.0, 0.5, &c).unwrap();
        let h2 = tpar_cosh(3.0, 1.0, 2.0, &c).unwrap();
        assert!(h2 < h1);
    }

    #[test]
    fn full_scan_of_wilker_case_is_clean() {
        let case = find_case("wilker_hyp").unwrap();
        let rep = scan_case(case, &GridSpec::default(), &cfg()).unwrap();
        assert!(rep.clean(), "violations: {:?}", rep.violations);
        let mm = rep.min_margin.unwrap();
        assert!(mm > 1e-12, "min margin {mm}");
        assert_eq!(rep.components.len(), P_ALL.len());
    }
}
