//! Registry of inequality/monotonicity/shape claims about the generalized
//! functions, and grid scanners that certify them numerically.
//!
//! Each claim is registered as one [`InequalityCase`] holding evaluable
//! predicates: signed margins (positive ⟺ the strict inequality holds at the
//! point), monotone characteristic functions, onto-range claims, parametric
//! log-shape claims, and endpoint limits. The scan engine samples these on
//! deterministic grids and assembles one [`ScanReport`] per case.
//!
//! Two fixed thresholds separate arithmetic noise from genuine violations:
//! margins must exceed [`STRICTNESS_TOL`], and difference signs count as
//! violations only beyond [`NOISE_TOL`]. Both sit well above evaluation
//! error (~1e-11 worst case) and well below genuine margins on the scanned
//! windows.

mod registry;
mod scan;

pub use registry::{find_case, registry};
pub use scan::{
    explore_conjecture, limit_check, run_verify, scan_case, scan_log_shape, scan_margin,
    scan_monotone, LogShapePattern, MonotonePattern, SHAPE_X, T_HI,
};

use serde::Serialize;

use crate::error::Result;
use crate::numerics::EvalConfig;

/// Margin pass threshold: a scanned margin ≤ this is recorded as a violation.
pub const STRICTNESS_TOL: f64 = 1e-12;

/// Difference-sign threshold for monotonicity and shape scans: differences
/// within ±NOISE_TOL of zero are neutral ("flat"), not violations.
pub const NOISE_TOL: f64 = 1e-10;

/// Characteristic/margin evaluator: (p, x, cfg) → value.
pub type CharFn = fn(f64, f64, &EvalConfig) -> Result<f64>;

/// A claimed bound or limit that may depend on p (e.g. 2/π_p, 1/(1+p)).
pub type BoundFn = fn(f64, &EvalConfig) -> Result<f64>;

/// Parametric-family evaluator for the t-scans: (p, x, t, cfg) → g(t).
pub type ParamFn = fn(f64, f64, f64, &EvalConfig) -> Result<f64>;

/// Interval of admissible exponents p with open/closed endpoints.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PDomain {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl PDomain {
    pub const fn open_from(lo: f64) -> Self {
        PDomain { lo, hi: f64::INFINITY, lo_open: true, hi_open: true }
    }
    pub const fn closed_from(lo: f64) -> Self {
        PDomain { lo, hi: f64::INFINITY, lo_open: false, hi_open: true }
    }
    pub const fn open_closed(lo: f64, hi: f64) -> Self {
        PDomain { lo, hi, lo_open: true, hi_open: false }
    }

    pub fn contains(&self, p: f64) -> bool {
        let above = if self.lo_open { p > self.lo } else { p >= self.lo };
        let below = if self.hi_open { p < self.hi } else { p <= self.hi };
        above && below
    }
}

/// Upper end of a scan window, possibly relative to the half-period.
#[derive(Debug, Clone, Copy)]
pub enum Upper {
    /// π_p/2 (claims on (0, π_p/2)).
    HalfPi,
    /// c·π_p/2 (e.g. the fixed k = 0.9·π_p/2 of the tangent double bound).
    HalfPiScaled(f64),
    /// Absolute constant (unit interval, hyperbolic windows, the x ≤ 10 cap
    /// that spot-checks claims stated for all x > 0).
    Const(f64),
}

impl Upper {
    pub fn value(self, p: f64, cfg: &EvalConfig) -> Result<f64> {
        match self {
            Upper::HalfPi => crate::ptrig::half_pi(crate::ptrig::PParam::new(p)?, cfg),
            Upper::HalfPiScaled(c) => {
                Ok(c * crate::ptrig::half_pi(crate::ptrig::PParam::new(p)?, cfg)?)
            }
            Upper::Const(c) => Ok(c),
        }
    }
}

/// An x-scan window: (0, upper) or (0, upper], linear or log spaced.
///
/// The lower end is never 0: an `x_margin_frac` sliver is always excluded,
/// and additionally the *resolvability cutoff* applies (see
/// [`XWindow::points`]).
#[derive(Debug, Clone, Copy)]
pub struct XWindow {
    pub upper: Upper,
    pub include_upper: bool,
    pub log_spaced: bool,
}

impl XWindow {
    pub const fn trig_open() -> Self {
        XWindow { upper: Upper::HalfPi, include_upper: false, log_spaced: false }
    }
    pub const fn trig_closed() -> Self {
        XWindow { upper: Upper::HalfPi, include_upper: true, log_spaced: false }
    }
    pub const fn positive_log() -> Self {
        XWindow { upper: Upper::Const(10.0), include_upper: true, log_spaced: true }
    }
    pub const fn spacing_name(&self) -> &'static str {
        if self.log_spaced {
            "log"
        } else {
            "linear"
        }
    }

    /// Concrete grid for exponent `p`.
    ///
    /// `vanish_order` k > 0 declares that the scanned quantity degenerates
    /// like x^{k·p} toward 0 (margin height, or distance to a claimed range
    /// endpoint). Sampling below x ≈ δ^{1/(k·p)} with δ = 1e-7 would probe
    /// quantities smaller than ~1e-7·C — indistinguishable from rounding
    /// noise in f64 and meaningless against a 1e-12 strictness threshold —
    /// so the window starts there instead. k = 0 disables the cutoff (used
    /// by monotone scans, where a flat stretch is neutral, not a violation).
    pub fn points(
        &self,
        p: f64,
        n: usize,
        margin_frac: f64,
        vanish_order: u32,
        cfg: &EvalConfig,
    ) -> Result<(Vec<f64>, f64, f64)> {
        const RESOLVE_DELTA: f64 = 1e-7;
        let span = self.upper.value(p, cfg)?;
        let cut = if vanish_order == 0 {
            0.0
        } else {
            RESOLVE_DELTA.powf(1.0 / (vanish_order as f64 * p))
        };
        let lo = if self.log_spaced {
            // Hyperbolic-style windows scan absolute x down to 1e-3.
            cut.max(1e-3)
        } else {
            span * cut.max(margin_frac)
        };
        let hi = if self.include_upper { span } else { span * (1.0 - margin_frac) };
        if !(lo < hi) {
            return Err(crate::error::Error::InvalidParameter {
                name: "x_window",
                value: lo,
                constraint: "lower cutoff below upper end",
            });
        }
        let pts = if self.log_spaced {
            let (a, b) = (lo.ln(), hi.ln());
            (0..n)
                .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
                .collect()
        } else {
            (0..n)
                .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
                .collect()
        };
        Ok((pts, lo, hi))
    }
}

/// One signed-margin predicate of a case (a case may have several, e.g. the
/// two sides of a double inequality or the four links of a chain).
pub struct Component {
    pub name: &'static str,
    /// Margin vanishing order toward x → 0 (margin ~ C·x^{k·p}).
    pub vanish_order: u32,
    /// Exponents at which this component is an identity (equality holds for
    /// all x); excluded from strict scanning, checked for |margin| ≈ 0.
    pub equality_p: &'static [f64],
    pub window: XWindow,
    pub eval: CharFn,
}

/// A claimed strict monotonicity of a characteristic function.
pub struct MonotoneSpec {
    pub name: &'static str,
    pub increasing: bool,
    pub window: XWindow,
    pub eval: CharFn,
}

/// A claimed onto-range: scanned values must lie strictly inside (lo, hi).
pub struct RangeSpec {
    pub name: &'static str,
    /// `None` = unbounded on that side.
    pub lo: Option<BoundFn>,
    pub hi: Option<BoundFn>,
    /// Degeneration order of the gap to the nearer range endpoint near x→0.
    pub vanish_order: u32,
    pub window: XWindow,
    pub eval: CharFn,
}

/// Where a limit claim sits and which probes test it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum LimitSide {
    /// x → 0⁺, probed at x ∈ {1e-2, 1e-3, 1e-4}.
    ZeroPlus,
    /// x → upper end of the window, probed at upper·(1 − {1e-2, 1e-3, 1e-4}).
    UpperEndpoint,
    /// x → ∞, probed at x ∈ {2.5, 5, 10}.
    Infinity,
}

/// A claimed endpoint limit of a characteristic function; the scan verifies
/// the gaps to the claimed value shrink along the probe sequence.
pub struct LimitSpec {
    pub name: &'static str,
    pub side: LimitSide,
    /// Window whose upper end anchors `UpperEndpoint` probes.
    pub window: XWindow,
    pub claimed: BoundFn,
    pub eval: CharFn,
}

/// Lower end of a t-grid for the parametric scans.
#[derive(Debug, Clone, Copy)]
pub enum TLower {
    /// Just above the critical 2x/π_p where cos_p(x/t) reaches its zero.
    TrigCritical,
    Const(f64),
}

/// A claimed monotonicity + log-concavity/convexity of t ↦ g(t) at fixed x.
pub struct LogShapeSpec {
    pub name: &'static str,
    pub increasing: bool,
    /// false ⇒ log-concave claimed, true ⇒ log-convex.
    pub log_convex: bool,
    pub t_lo: TLower,
    pub g: ParamFn,
}

impl LogShapeSpec {
    /// Concrete lower end of the t-grid at (p, x).
    pub fn t_lo_value(&self, p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
        match self.t_lo {
            // 2x/π_p = x/(π_p/2), nudged up so cos_p(x/t) > 0 on the grid.
            TLower::TrigCritical => {
                let hp = crate::ptrig::half_pi(crate::ptrig::PParam::new(p)?, cfg)?;
                Ok((x / hp) * (1.0 + 1e-3))
            }
            TLower::Const(c) => Ok(c),
        }
    }
}

/// A named curve for plot-data emission (the two sides of an inequality,
/// the chain members, a characteristic ratio), listed in claimed ascending
/// order where the case is an inequality.
pub struct Curve {
    pub name: &'static str,
    pub eval: CharFn,
}

/// Primary classification of a case, mirroring what its scan asserts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    Margin,
    Monotone,
    LogConcavity,
    Conjecture,
}

/// One registered claim with everything needed to scan and plot it.
pub struct InequalityCase {
    pub id: &'static str,
    pub description: &'static str,
    pub kind: CaseKind,
    pub conjecture: bool,
    pub p_domain: PDomain,
    pub default_p: &'static [f64],
    pub components: &'static [Component],
    pub monotones: &'static [MonotoneSpec],
    pub ranges: &'static [RangeSpec],
    pub log_shapes: &'static [LogShapeSpec],
    pub limits: &'static [LimitSpec],
    pub curves: &'static [Curve],
}

/// Grid overrides for a scan run; `Default` gives the standard certification
/// grid (400 points, 1e-3 edge exclusion, per-case default p values).
#[derive(Debug, Clone, Serialize)]
pub struct GridSpec {
    /// `None` → the case's registered default exponents.
    pub p_values: Option<Vec<f64>>,
    pub x_count: usize,
    pub x_margin_frac: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { p_values: None, x_count: 400, x_margin_frac: 1e-3 }
    }
}

// ---------------------------------------------------------------------------
// Report structures (serialized verbatim into the report document).
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ArgMin {
    pub p: f64,
    pub x: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    /// Which check tripped, e.g. "margin:wilker", "monotone:ratio",
    /// "range:log-ratio", "limit:x->0".
    pub check: String,
    pub p: f64,
    pub x: f64,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub name: &'static str,
    pub p: f64,
    pub x_lo: f64,
    pub x_hi: f64,
    pub x_count: usize,
    pub spacing: &'static str,
    pub min_margin: f64,
    pub argmin_x: f64,
    pub violation_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonotoneReport {
    pub name: &'static str,
    pub p: f64,
    pub claimed: &'static str,
    pub n_increasing: usize,
    pub n_decreasing: usize,
    pub n_flat: usize,
    pub violation_count: usize,
    pub min_directed_diff: f64,
    pub pattern_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RangeReport {
    pub name: &'static str,
    pub p: f64,
    pub claimed_lo: Option<f64>,
    pub claimed_hi: Option<f64>,
    pub observed_min: f64,
    pub observed_max: f64,
    pub inside: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LogShapeReport {
    pub name: &'static str,
    pub p: f64,
    pub x: f64,
    pub claimed: String,
    pub monotone_ok: bool,
    pub shape_ok: bool,
    /// Fraction of second differences of log g strictly on the claimed side.
    pub strict_fraction: f64,
    /// Worst second difference against the claim (≤ noise tolerance passes).
    pub worst_second_diff: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitReport {
    pub name: &'static str,
    pub p: f64,
    pub side: LimitSide,
    pub claimed: f64,
    pub probes: Vec<f64>,
    pub observed: Vec<f64>,
    pub gaps: Vec<f64>,
    pub shrinking: bool,
}

/// Full scan outcome of one case across its exponent set.
#[derive(Debug, Serialize)]
pub struct ScanReport {
    pub case_id: String,
    pub kind: CaseKind,
    pub conjecture: bool,
    pub p_values: Vec<f64>,
    pub x_count: usize,
    pub x_margin_frac: f64,
    /// Smallest strict margin over all non-identity components and p; `None`
    /// when the case registers no margin components.
    pub min_margin: Option<f64>,
    pub argmin: Option<ArgMin>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub monotone_sign_pattern: Vec<MonotoneReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub ranges: Vec<RangeReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub log_shapes: Vec<LogShapeReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub limit_checks: Vec<LimitReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl ScanReport {
    /// True when nothing scanned in this case contradicts its claims.
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }
}
