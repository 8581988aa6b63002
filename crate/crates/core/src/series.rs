//! Leading-order expansions of the generalized functions around 0.
//!
//! Each function of the family behaves like its argument plus corrections in
//! powers of w = x^p. Ratio-of-logarithms characteristic functions (used by
//! the scan engine and its limit checks) are 0/0 at the origin; these
//! expansions evaluate them accurately where direct evaluation is pure
//! cancellation noise.
//!
//! Derivation: invert the series of the defining integrals termwise.
//! With a = 1/(p(p+1)) and b = (1+p)/(2p²(2p+1)):
//!   arcsin_p(x)/x  = 1 + a·w + b·w² + O(w³)
//!   sin_p(x)/x     = 1 − a·w + B·w²,   B = a²(p+1) − b
//!   cos_p(x)       = 1 − w/p + C·w²,   C = a − (p−1)/(2p²)
//!   sinh_p(x)/x    = 1 + a·w + B·w²
//!   cosh_p(x)      = 1 + w/p + C·w²
//! (hyperbolic versions flip the sign of the odd-order correction only).
//! At p = 2 these reduce to the classical 1 − x²/6 + x⁴/120, 1 − x²/2 + x⁴/24.

/// Validity cutoff: the quadratic truncations above are accurate to ~1e-6
/// relative (worst case, large p) for w = x^p at the cutoff, and far better
/// below; callers switch to direct evaluation beyond it.
pub(crate) const SERIES_CUT_W: f64 = 1e-3;

#[derive(Clone, Copy)]
pub(crate) struct Coeffs {
    pub a: f64,
    pub big_b: f64,
    pub c: f64,
}

pub(crate) fn coeffs(p: f64) -> Coeffs {
    let a = 1.0 / (p * (p + 1.0));
    let b = (1.0 + p) / (2.0 * p * p * (2.0 * p + 1.0));
    Coeffs {
        a,
        big_b: a * a * (p + 1.0) - b,
        c: a - (p - 1.0) / (2.0 * p * p),
    }
}

/// log(sin_p(x)/x) / log(cos_p(x)) for w = x^p ≤ the cutoff.
/// Tends to 1/(1+p) as w → 0.
pub(crate) fn trig_log_ratio_small(p: f64, w: f64) -> f64 {
    let k = coeffs(p);
    f64::ln_1p(-k.a * w + k.big_b * w * w) / f64::ln_1p(-w / p + k.c * w * w)
}

/// log(sinh_p(x)/x) / log(cosh_p(x)) for small w. Tends to 1/(1+p).
pub(crate) fn hyp_log_ratio_small(p: f64, w: f64) -> f64 {
    let k = coeffs(p);
    f64::ln_1p(k.a * w + k.big_b * w * w) / f64::ln_1p(w / p + k.c * w * w)
}

/// log(x/sin_p(x)) / log(sinh_p(x)/x) for small w. Tends to 1.
pub(crate) fn cross_log_ratio_small(p: f64, w: f64) -> f64 {
    let k = coeffs(p);
    -f64::ln_1p(-k.a * w + k.big_b * w * w) / f64::ln_1p(k.a * w + k.big_b * w * w)
}
