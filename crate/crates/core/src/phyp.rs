//! Generalized hyperbolic functions.
//!
//! arcsinh_p(x) = ∫₀ˣ (1+t^p)^{−1/p} dt (odd, sub-linear, unbounded);
//! sinh_p is its inverse on ℝ, cosh_p = (1 + |sinh_p|^p)^{1/p} its
//! derivative, tanh_p = sinh_p/cosh_p, and arctanh_p(x) = ∫₀ˣ dt/(1−t^p)
//! on (−1, 1).
//!
//! Numerical notes:
//! * For x > 1 the arcsinh integrand decays like 1/t; substituting
//!   t = eᵛ turns ∫₁ˣ into ∫₀^{ln x} (1 + e^{−pv})^{−1/p} dv, a smooth
//!   bounded integrand regardless of how large x is.
//! * sinh_p grows exponentially-like, so |x| is capped (OverflowGuard) and
//!   the inversion bracket is grown geometrically from a classical-sinh
//!   warm start.
//! * cosh_p and tanh_p are computed in forms that never raise a huge
//!   |sinh_p| to the p-th power: for s > 1, cosh = s·(1+s^{−p})^{1/p},
//!   tanh = (1+s^{−p})^{−1/p}, d_tanh = s^{−p}/(1+s^{−p}).
//! * arctanh_p integrates in offset coordinates d = x − t, with the pole
//!   factor 1 − t^p rewritten through expm1/log1p around the *upper* limit;
//!   this keeps full accuracy for x within ~1e-12 of the domain edge, where
//!   plain nodes would quantize onto the singularity.

use crate::error::{Error, Result};
use crate::numerics::invert::newton_bracket;
use crate::numerics::{integrate, EvalConfig, FuncValue};
use crate::ptrig::PParam;

/// Overflow cap for sinh_p/cosh_p/tanh_p arguments: beyond |x| = 50 the
/// values overflow the dynamic range any downstream consumer here needs.
const SINH_ARG_CAP: f64 = 50.0;

/// arctanh_p domain guard: arguments within 1e-12 of ±1 are rejected rather
/// than integrating against the adjacent non-integrable pole.
const ARCTANH_EDGE: f64 = 1e-12;

fn require_finite(func: &'static str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::DomainError { func, arg: x, reason: "finite argument required" })
    }
}

fn arcsinh_inner(p: f64, x: f64, cfg: &EvalConfig) -> Result<FuncValue> {
    debug_assert!(x >= 0.0);
    if x <= 1.0 {
        return integrate(|t| (1.0 + t.powf(p)).powf(-1.0 / p), 0.0, x, cfg);
    }
    let base = integrate(|t| (1.0 + t.powf(p)).powf(-1.0 / p), 0.0, 1.0, cfg)?;
    let tail = integrate(
        |v| (1.0 + (-p * v).exp()).powf(-1.0 / p),
        0.0,
        x.ln(),
        cfg,
    )?;
    Ok(FuncValue::new(base.value + tail.value, base.err_est + tail.err_est))
}

/// arcsinh_p(x) = ∫₀ˣ (1+t^p)^{−1/p} dt, extended oddly.
pub fn arcsinh_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("arcsinh_p", x)?;
    let inner = arcsinh_inner(p.get(), x.abs(), cfg)?;
    Ok(FuncValue::new(x.signum() * inner.value, inner.err_est))
}

/// Inverse of arcsinh_p on x ≥ 0 (core of the odd extension).
fn sinh_core(p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    // Grow the bracket until it surely contains the answer. The classical
    // sinh over-estimates sinh_p's early growth, which makes 1.5·(eˣ−1) a
    // safe initial ceiling for moderate x.
    let mut hi = 2.0_f64.max(2.0 * x).max(1.5 * f64::exp_m1(x.min(60.0)));
    while arcsinh_inner(p, hi, cfg)?.value < x {
        hi *= 2.0;
    }
    let warm = if x < 30.0 { x.sinh().min(hi) } else { hi };
    let root = newton_bracket(
        &|y| arcsinh_inner(p, y, cfg).map(|fv| fv.value),
        Some(&|y: f64| (1.0 + y.powf(p)).powf(-1.0 / p)),
        x,
        0.0,
        hi,
        warm.max(x),
        cfg,
    )?;
    Ok(root.y)
}

/// (sinh_p, cosh_p) evaluated together; the stable-form pairing is what
/// every consumer actually needs.
pub(crate) fn sinh_cosh_signed(p: PParam, x: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
    let s = sinh_core(p.get(), x.abs(), cfg)?;
    let ch = cosh_from_sinh(p.get(), s);
    Ok((x.signum() * s, ch))
}

fn cosh_from_sinh(p: f64, s: f64) -> f64 {
    if s <= 1.0 {
        (1.0 + s.powf(p)).powf(1.0 / p)
    } else {
        s * (1.0 + s.powf(-p)).powf(1.0 / p)
    }
}

fn guard_cap(func: &'static str, x: f64) -> Result<()> {
    if x.abs() > SINH_ARG_CAP {
        return Err(Error::OverflowGuard { func, arg: x.abs(), limit: SINH_ARG_CAP });
    }
    Ok(())
}

/// sinh_p(x): odd, strictly increasing, ≥ x for x ≥ 0. |x| ≤ 50.
pub fn sinh_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("sinh_p", x)?;
    guard_cap("sinh_p", x)?;
    let (s, ch) = sinh_cosh_signed(p, x, cfg)?;
    Ok(FuncValue::new(s, cfg.threshold(x) * ch + f64::EPSILON * s.abs()))
}

/// cosh_p(x) = (1 + |sinh_p(x)|^p)^{1/p}: even, ≥ 1, equality only at 0.
pub fn cosh_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("cosh_p", x)?;
    guard_cap("cosh_p", x)?;
    let (_, ch) = sinh_cosh_signed(p, x, cfg)?;
    Ok(FuncValue::new(ch, cfg.rel_tol * ch + cfg.abs_tol))
}

/// tanh_p(x) = sinh_p/cosh_p: odd, strictly increasing, |tanh_p| < 1.
pub fn tanh_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("tanh_p", x)?;
    guard_cap("tanh_p", x)?;
    let (s, _) = sinh_cosh_signed(p, x, cfg)?;
    let a = s.abs();
    let th = if a <= 1.0 {
        a / (1.0 + a.powf(p.get())).powf(1.0 / p.get())
    } else {
        (1.0 + a.powf(-p.get())).powf(-1.0 / p.get())
    };
    Ok(FuncValue::new(x.signum() * th, cfg.rel_tol * th + cfg.abs_tol))
}

/// arctanh_p(x) = ∫₀ˣ dt/(1−t^p) on (−1, 1).
///
/// Written in offset coordinates around the upper limit: with t = x − d,
/// 1 − t^p = E + x^p·P(d), where E = 1 − x^p = −expm1(p·ln x) and
/// P(d) = 1 − (1 − d/x)^p = −expm1(p·log1p(−d/x)). Both factors are
/// cancellation-free, so the integral stays accurate arbitrarily close to
/// the edge of the domain.
pub fn arctanh_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("arctanh_p", x)?;
    let a = x.abs();
    if a >= 1.0 - ARCTANH_EDGE {
        return Err(Error::DomainError {
            func: "arctanh_p",
            arg: x,
            reason: "|x| < 1 (and at least 1e-12 from the edge)",
        });
    }
    if a == 0.0 {
        return Ok(FuncValue::new(0.0, 0.0));
    }
    let pv = p.get();
    let e = -f64::exp_m1(pv * a.ln());
    let xp = a.powf(pv);
    let inner = integrate(
        |d| 1.0 / (e + xp * (-f64::exp_m1(pv * f64::ln_1p(-d / a)))),
        0.0,
        a,
        cfg,
    )?;
    Ok(FuncValue::new(x.signum() * inner.value, inner.err_est))
}

/// d/dx cosh_p(x) = cosh_p(x)^{2−p}·sinh_p(x)^{p−1} for x ≥ 0.
pub fn d_cosh_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("d_cosh_p", x)?;
    if x < 0.0 {
        return Err(Error::DomainError { func: "d_cosh_p", arg: x, reason: "x >= 0" });
    }
    guard_cap("d_cosh_p", x)?;
    let (s, ch) = sinh_cosh_signed(p, x, cfg)?;
    let v = ch.powf(2.0 - p.get()) * s.powf(p.get() - 1.0);
    Ok(FuncValue::new(v, cfg.rel_tol * v.abs() + cfg.abs_tol))
}

/// d/dx tanh_p(x) = 1 − |tanh_p(x)|^p ∈ (0, 1], computed in the
/// cancellation-free form 1/(1+s^p) (resp. s^{−p}/(1+s^{−p}) for s > 1).
pub fn d_tanh_p(x: f64, p: PParam, cfg: &EvalConfig) -> Result<FuncValue> {
    require_finite("d_tanh_p", x)?;
    guard_cap("d_tanh_p", x)?;
    let (s, _) = sinh_cosh_signed(p, x, cfg)?;
    let a = s.abs();
    let v = if a <= 1.0 {
        1.0 / (1.0 + a.powf(p.get()))
    } else {
        let w = a.powf(-p.get());
        w / (1.0 + w)
    };
    Ok(FuncValue::new(v, cfg.rel_tol * v + cfg.abs_tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ptrig::{sin_p, tan_p};

    const CFG: EvalConfig = EvalConfig {
        rel_tol: 1e-13,
        abs_tol: 1e-14,
        max_quad_levels: 12,
        max_iters: 100,
    };

    fn p(v: f64) -> PParam {
        PParam::new(v).unwrap()
    }

    #[test]
    fn arcsinh_oracle_values() {
        // 50-digit quadrature references.
        let cases = [
            (3.0, 2.0, 1.5580982148556708),  // log-tail branch
            (1.5, 0.5, 0.45995418186470269),
            (10.0, 5.0, 2.5940918410090547),
        ];
        for (pv, x, want) in cases {
            let got = arcsinh_p(x, p(pv), &CFG).unwrap().value;
            assert!((got - want).abs() < 1e-13, "arcsinh_{pv}({x}): {got} vs {want}");
        }
        // classical
        let got = arcsinh_p(1.0, p(2.0), &CFG).unwrap().value;
        assert!((got - 1.0_f64.asinh()).abs() < 1e-13);
    }

    #[test]
    fn sinh_cosh_oracle_values() {
        let cases = [
            (3.0, 1.25, 1.4401512914200659, 1.5856695917405348),
            (1.5, 2.0, 4.2986784486509341, 4.614491710949447),
        ];
        for (pv, x, sh, ch) in cases {
            assert!((sinh_p(x, p(pv), &CFG).unwrap().value - sh).abs() < 1e-12);
            assert!((cosh_p(x, p(pv), &CFG).unwrap().value - ch).abs() < 1e-12);
        }
        let th = tanh_p(2.0, p(3.0), &CFG).unwrap().value;
        assert!((th - 0.98947868956180119).abs() < 1e-13);
    }

    #[test]
    fn classical_case_recovers_hyperbolics() {
        let p2 = p(2.0);
        for i in 0..40 {
            let x = -3.0 + 6.0 * i as f64 / 39.0;
            assert!((sinh_p(x, p2, &CFG).unwrap().value - x.sinh()).abs() < 1e-11);
            assert!((cosh_p(x, p2, &CFG).unwrap().value - x.cosh()).abs() < 1e-11);
            assert!((tanh_p(x, p2, &CFG).unwrap().value - x.tanh()).abs() < 1e-12);
            assert!((arcsinh_p(x, p2, &CFG).unwrap().value - x.asinh()).abs() < 1e-12);
        }
        for i in 0..20 {
            let x = -0.95 + 1.9 * i as f64 / 19.0;
            assert!((arctanh_p(x, p2, &CFG).unwrap().value - x.atanh()).abs() < 1e-12);
        }
    }

    #[test]
    fn arctanh_oracle_values() {
        assert!(
            (arctanh_p(0.5, p(3.0), &CFG).unwrap().value - 0.51684918394299926).abs() < 1e-13
        );
        // deep into the edge region
        assert!(
            (arctanh_p(0.999, p(3.0), &CFG).unwrap().value - 2.7876535906629426).abs() < 1e-12
        );
    }

    #[test]
    fn arctanh_edge_behavior() {
        // Extremely close to 1 (but outside the guard) still converges and
        // is finite and large.
        let v = arctanh_p(1.0 - 2e-12, p(2.0), &CFG).unwrap().value;
        let want = (1.0_f64 - 2e-12).atanh();
        assert!((v - want).abs() < 1e-9 * want);
        // inside the guard: domain error
        assert!(matches!(
            arctanh_p(1.0 - 1e-13, p(2.0), &CFG),
            Err(Error::DomainError { .. })
        ));
        assert!(matches!(
            arctanh_p(-1.0, p(2.0), &CFG),
            Err(Error::DomainError { .. })
        ));
    }

    #[test]
    fn overflow_guard_enforced() {
        assert!(matches!(
            sinh_p(50.5, p(2.0), &CFG),
            Err(Error::OverflowGuard { .. })
        ));
        assert!(sinh_p(49.9, p(1.5), &CFG).is_ok());
    }

    #[test]
    fn hyperbolic_identity_on_grid() {
        for pv in [1.2, 2.0, 5.0, 10.0] {
            let pp = p(pv);
            for i in 0..30 {
                let x = -5.0 + 10.0 * i as f64 / 29.0;
                let (s, ch) = sinh_cosh_signed(pp, x, &CFG).unwrap();
                let lhs = ch.powf(pv) - s.abs().powf(pv);
                // normalized: the raw difference of p-th powers loses all
                // absolute accuracy once cosh^p ~ 1e20
                let denom = ch.powf(pv).max(1.0);
                assert!(
                    ((lhs - 1.0) / denom).abs() < 1e-12,
                    "identity p={pv} x={x}"
                );
            }
        }
    }

    #[test]
    fn parity_and_shape() {
        let pp = p(2.5);
        for i in 1..12 {
            let x = 0.3 * i as f64;
            let s = sinh_p(x, pp, &CFG).unwrap().value;
            assert_eq!(sinh_p(-x, pp, &CFG).unwrap().value, -s);
            assert!(s >= x);
            let ch = cosh_p(x, pp, &CFG).unwrap().value;
            assert_eq!(cosh_p(-x, pp, &CFG).unwrap().value, ch);
            assert!(ch > 1.0);
            let th = tanh_p(x, pp, &CFG).unwrap().value;
            assert!(th < 1.0 && th < x);
            assert!((arcsinh_p(x, pp, &CFG).unwrap().value).abs() <= x);
        }
        assert_eq!(cosh_p(0.0, pp, &CFG).unwrap().value, 1.0);
    }

    #[test]
    fn round_trips() {
        for pv in [1.2, 2.0, 4.0, 10.0] {
            let pp = p(pv);
            for i in 0..20 {
                let x = 0.25 * i as f64;
                let y = arcsinh_p(x, pp, &CFG).unwrap().value;
                let back = sinh_p(y, pp, &CFG).unwrap().value;
                assert!((back - x).abs() < 1e-10 * x.max(1.0), "sinh(arcsinh({x})) p={pv}");
            }
            for i in 0..18 {
                let t = -0.98 + 1.96 * i as f64 / 17.0;
                let y = arctanh_p(t, pp, &CFG).unwrap().value;
                let back = tanh_p(y, pp, &CFG).unwrap().value;
                assert!((back - t).abs() < 1e-11, "tanh(arctanh({t})) p={pv}");
            }
            // spec example: sinh_p(arcsinh_4(3)) = 3
            let y = arcsinh_p(3.0, p(4.0), &CFG).unwrap().value;
            assert!((sinh_p(y, p(4.0), &CFG).unwrap().value - 3.0).abs() < 1e-11);
        }
    }

    #[test]
    fn cross_family_ordering() {
        // sin_p(x) < sinh_p(x) and tan_p(x) > tanh_p(x) on (0, π_p/2).
        for pv in [1.3, 2.0, 6.0] {
            let pp = p(pv);
            let hp = crate::ptrig::pi_p(pp, &CFG).unwrap().half_pi_p;
            for i in 1..12 {
                let x = hp * i as f64 / 12.5;
                let gap_s = sinh_p(x, pp, &CFG).unwrap().value - sin_p(x, pp, &CFG).unwrap().value;
                let gap_t = tan_p(x, pp, &CFG).unwrap().value - tanh_p(x, pp, &CFG).unwrap().value;
                assert!(gap_s > 0.0, "sinh > sin failed p={pv} x={x}");
                assert!(gap_t > 0.0, "tan > tanh failed p={pv} x={x}");
            }
        }
    }

    #[test]
    fn derivative_identities_match_finite_differences() {
        let h = 1e-6;
        for pv in [1.5, 2.0, 3.0] {
            let pp = p(pv);
            for i in 1..=12 {
                let x = 0.1 + 2.0 * i as f64 / 12.0;
                let dc = d_cosh_p(x, pp, &CFG).unwrap().value;
                let fd = (cosh_p(x + h, pp, &CFG).unwrap().value
                    - cosh_p(x - h, pp, &CFG).unwrap().value)
                    / (2.0 * h);
                assert!((dc - fd).abs() <= 1e-6 * fd.abs(), "d_cosh p={pv} x={x}");

                let dt = d_tanh_p(x, pp, &CFG).unwrap().value;
                let fd = (tanh_p(x + h, pp, &CFG).unwrap().value
                    - tanh_p(x - h, pp, &CFG).unwrap().value)
                    / (2.0 * h);
                assert!((dt - fd).abs() <= 1e-6 * fd.abs().max(1e-8), "d_tanh p={pv} x={x}");
                assert!(dt > 0.0 && dt <= 1.0);
            }
        }
        assert_eq!(d_cosh_p(0.0, p(3.0), &CFG).unwrap().value, 0.0);
        assert_eq!(d_tanh_p(0.0, p(3.0), &CFG).unwrap().value, 1.0);
    }
}
