//! The scan engine: walks registered cases over deterministic grids and
//! turns claims into reports.
//!
//! Also exposes the free-standing `scan_monotone` / `scan_log_shape`
//! utilities that classify an arbitrary user function with the same noise
//! conventions the case scans use.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::EvalConfig;

use super::{
    ArgMin, CharFn, Component, GridSpec, InequalityCase, LimitReport, LimitSide, LogShapeReport,
    MonotoneReport, RangeReport, ScanReport, ComponentReport, Violation, NOISE_TOL,
    STRICTNESS_TOL,
};

/// Gaps in a limit probe sequence may plateau at rounding level instead of
/// shrinking; treat "shrinks up to this slack" as shrinking.
const LIMIT_SLACK: f64 = 1e-13;

/// Once a gap is this small relative to the claimed value it has converged:
/// the remaining digits are rounding jitter and their trend is meaningless.
const LIMIT_FLOOR_REL: f64 = 1e-12;

/// Hard cap on the per-case violation list (counts stay exact; the detailed
/// list is for diagnosis, not statistics).
const VIOLATION_CAP: usize = 200;

/// t-grids for the parametric log-shape scans: 64 uniform points up to 6.
pub const T_HI: f64 = 6.0;
const T_COUNT: usize = 64;
/// Fixed abscissas at which the t-families are scanned.
pub const SHAPE_X: [f64; 2] = [0.5, 1.0];

const ZERO_PROBES: [f64; 3] = [1e-2, 1e-3, 1e-4];
const EDGE_FRACS: [f64; 3] = [1e-2, 1e-3, 1e-4];
const INF_PROBES: [f64; 3] = [2.5, 5.0, 10.0];

#[derive(Clone, Copy)]
struct Parts {
    margins: bool,
    monotones: bool,
    ranges: bool,
    shapes: bool,
    limits: bool,
}

impl Parts {
    const ALL: Parts =
        Parts { margins: true, monotones: true, ranges: true, shapes: true, limits: true };
    const MARGINS: Parts =
        Parts { margins: true, monotones: false, ranges: false, shapes: false, limits: false };
    const LIMITS: Parts =
        Parts { margins: false, monotones: false, ranges: false, shapes: false, limits: true };
}

/// Evaluate one scan point, requiring a finite value and attaching the scan
/// coordinates to any failure.
fn ev(f: CharFn, case_id: &'static str, p: f64, x: f64, cfg: &EvalConfig) -> Result<f64> {
    let wrap = |e: Error| Error::ScanFailure { case_id, p, x, source: Box::new(e) };
    let v = f(p, x, cfg).map_err(wrap)?;
    if !v.is_finite() {
        return Err(Error::ScanFailure {
            case_id,
            p,
            x,
            source: Box::new(Error::DomainError {
                func: "case evaluator",
                arg: x,
                reason: "value not finite",
            }),
        });
    }
    Ok(v)
}

fn is_equality_p(comp: &Component, p: f64) -> bool {
    comp.equality_p.iter().any(|&q| (q - p).abs() < 1e-12)
}

fn record(list: &mut Vec<Violation>, truncated: &mut bool, v: Violation) {
    if list.len() < VIOLATION_CAP {
        list.push(v);
    } else {
        *truncated = true;
    }
}

/// (n_increasing, n_decreasing, n_flat) of consecutive differences under the
/// noise convention.
fn classify_diffs(vals: &[f64]) -> (usize, usize, usize) {
    let (mut inc, mut dec, mut flat) = (0, 0, 0);
    for w in vals.windows(2) {
        let d = w[1] - w[0];
        if d > NOISE_TOL {
            inc += 1;
        } else if d < -NOISE_TOL {
            dec += 1;
        } else {
            flat += 1;
        }
    }
    (inc, dec, flat)
}

fn validate_grid(grid: &GridSpec) -> Result<()> {
    if grid.x_count < 2 {
        return Err(Error::InvalidParameter {
            name: "x_count",
            value: grid.x_count as f64,
            constraint: "x_count >= 2",
        });
    }
    if !(0.0..0.5).contains(&grid.x_margin_frac) {
        return Err(Error::InvalidParameter {
            name: "x_margin_frac",
            value: grid.x_margin_frac,
            constraint: "0 <= x_margin_frac < 0.5",
        });
    }
    Ok(())
}

fn resolve_p(case: &InequalityCase, grid: &GridSpec) -> Result<Vec<f64>> {
    match &grid.p_values {
        None => Ok(case.default_p.to_vec()),
        Some(ps) => {
            if ps.is_empty() {
                return Err(Error::InvalidParameter {
                    name: "p_values",
                    value: 0.0,
                    constraint: "at least one exponent",
                });
            }
            for &p in ps {
                if !(p > 1.0) || !p.is_finite() {
                    return Err(Error::InvalidParameter {
                        name: "p",
                        value: p,
                        constraint: "p > 1",
                    });
                }
                if !case.p_domain.contains(p) {
                    return Err(Error::InvalidParameter {
                        name: "p",
                        value: p,
                        constraint: "inside the case's admissible p-domain",
                    });
                }
            }
            Ok(ps.clone())
        }
    }
}

fn run(case: &InequalityCase, grid: &GridSpec, cfg: &EvalConfig, parts: Parts) -> Result<ScanReport> {
    validate_grid(grid)?;
    let p_values = resolve_p(case, grid)?;
    let mut rep = ScanReport {
        case_id: case.id.to_string(),
        kind: case.kind,
        conjecture: case.conjecture,
        p_values: p_values.clone(),
        x_count: grid.x_count,
        x_margin_frac: grid.x_margin_frac,
        min_margin: None,
        argmin: None,
        violations: Vec::new(),
        components: Vec::new(),
        monotone_sign_pattern: Vec::new(),
        ranges: Vec::new(),
        log_shapes: Vec::new(),
        limit_checks: Vec::new(),
        notes: Vec::new(),
    };
    let mut truncated = false;

    if parts.margins {
        for comp in case.components {
            for &p in &p_values {
                if is_equality_p(comp, p) {
                    // The claim is an identity at this exponent: verify it
                    // numerically instead of demanding a strict margin.
                    let (pts, _, _) = comp.window.points(
                        p,
                        5,
                        grid.x_margin_frac,
                        comp.vanish_order.max(1),
                        cfg,
                    )?;
                    let mut worst = 0.0_f64;
                    let mut worst_x = pts[0];
                    for &x in &pts {
                        let m = ev(comp.eval, case.id, p, x, cfg)?;
                        if m.abs() > worst {
                            worst = m.abs();
                            worst_x = x;
                        }
                    }
                    if worst > NOISE_TOL {
                        record(
                            &mut rep.violations,
                            &mut truncated,
                            Violation {
                                check: format!("identity:{}", comp.name),
                                p,
                                x: worst_x,
                                value: worst,
                            },
                        );
                    }
                    rep.notes.push(format!(
                        "{}: equality holds identically at p = {p}; checked |deviation| <= {NOISE_TOL:.0e} \
                         (max observed {worst:.3e}), excluded from strict margins",
                        comp.name
                    ));
                    continue;
                }

                let (pts, x_lo, x_hi) =
                    comp.window.points(p, grid.x_count, grid.x_margin_frac, comp.vanish_order, cfg)?;
                let mut min_m = f64::INFINITY;
                let mut argmin_x = pts[0];
                let mut vcount = 0usize;
                for &x in &pts {
                    let m = ev(comp.eval, case.id, p, x, cfg)?;
                    if m < min_m {
                        min_m = m;
                        argmin_x = x;
                    }
                    if m <= STRICTNESS_TOL {
                        vcount += 1;
                        record(
                            &mut rep.violations,
                            &mut truncated,
                            Violation {
                                check: format!("margin:{}", comp.name),
                                p,
                                x,
                                value: m,
                            },
                        );
                    }
                }
                if rep.min_margin.map_or(true, |cur| min_m < cur) {
                    rep.min_margin = Some(min_m);
                    rep.argmin = Some(ArgMin { p, x: argmin_x });
                }
                rep.components.push(ComponentReport {
                    name: comp.name,
                    p,
                    x_lo,
                    x_hi,
                    x_count: pts.len(),
                    spacing: comp.window.spacing_name(),
                    min_margin: min_m,
                    argmin_x,
                    violation_count: vcount,
                });
            }
        }
    }

    if parts.monotones {
        for spec in case.monotones {
            for &p in &p_values {
                let (pts, _, _) =
                    spec.window.points(p, grid.x_count, grid.x_margin_frac, 0, cfg)?;
                let mut vals = Vec::with_capacity(pts.len());
                for &x in &pts {
                    vals.push(ev(spec.eval, case.id, p, x, cfg)?);
                }
                let (inc, dec, flat) = classify_diffs(&vals);
                let mut vcount = 0usize;
                let mut min_dd = f64::INFINITY;
                for i in 1..vals.len() {
                    let d = vals[i] - vals[i - 1];
                    let dd = if spec.increasing { d } else { -d };
                    if dd < min_dd {
                        min_dd = dd;
                    }
                    if dd < -NOISE_TOL {
                        vcount += 1;
                        record(
                            &mut rep.violations,
                            &mut truncated,
                            Violation {
                                check: format!("monotone:{}", spec.name),
                                p,
                                x: pts[i],
                                value: dd,
                            },
                        );
                    }
                }
                rep.monotone_sign_pattern.push(MonotoneReport {
                    name: spec.name,
                    p,
                    claimed: if spec.increasing { "increasing" } else { "decreasing" },
                    n_increasing: inc,
                    n_decreasing: dec,
                    n_flat: flat,
                    violation_count: vcount,
                    min_directed_diff: min_dd,
                    pattern_ok: vcount == 0,
                });
            }
        }
    }

    if parts.ranges {
        for spec in case.ranges {
            for &p in &p_values {
                let lo = spec.lo.map(|f| f(p, cfg)).transpose()?;
                let hi = spec.hi.map(|f| f(p, cfg)).transpose()?;
                let (pts, _, _) =
                    spec.window.points(p, grid.x_count, grid.x_margin_frac, spec.vanish_order, cfg)?;
                let mut obs_min = f64::INFINITY;
                let mut obs_max = f64::NEG_INFINITY;
                for &x in &pts {
                    let v = ev(spec.eval, case.id, p, x, cfg)?;
                    obs_min = obs_min.min(v);
                    obs_max = obs_max.max(v);
                    let below = lo.map_or(false, |l| v <= l);
                    let above = hi.map_or(false, |h| v >= h);
                    if below || above {
                        let bound = if below { lo.unwrap() } else { hi.unwrap() };
                        record(
                            &mut rep.violations,
                            &mut truncated,
                            Violation {
                                check: format!("range:{}", spec.name),
                                p,
                                x,
                                value: v - bound,
                            },
                        );
                    }
                }
                let inside = lo.map_or(true, |l| obs_min > l) && hi.map_or(true, |h| obs_max < h);
                rep.ranges.push(RangeReport {
                    name: spec.name,
                    p,
                    claimed_lo: lo,
                    claimed_hi: hi,
                    observed_min: obs_min,
                    observed_max: obs_max,
                    inside,
                });
            }
        }
    }

    if parts.shapes {
        for spec in case.log_shapes {
            for &p in &p_values {
                for &x in &SHAPE_X {
                    let t_lo = spec.t_lo_value(p, x, cfg)?;
                    let ts: Vec<f64> = (0..T_COUNT)
                        .map(|i| t_lo + (T_HI - t_lo) * i as f64 / (T_COUNT - 1) as f64)
                        .collect();
                    let mut g = Vec::with_capacity(ts.len());
                    for &t in &ts {
                        let v = (spec.g)(p, x, t, cfg).map_err(|e| Error::ScanFailure {
                            case_id: case.id,
                            p,
                            x: t,
                            source: Box::new(e),
                        })?;
                        if !(v > 0.0) || !v.is_finite() {
                            return Err(Error::NonPositiveValue {
                                what: "log-shape sample",
                                at: t,
                                value: v,
                            });
                        }
                        g.push(v);
                    }

                    let mut vcount = 0usize;
                    for i in 1..g.len() {
                        let d = g[i] - g[i - 1];
                        let dd = if spec.increasing { d } else { -d };
                        if dd < -NOISE_TOL {
                            vcount += 1;
                            record(
                                &mut rep.violations,
                                &mut truncated,
                                Violation {
                                    check: format!("tparam-monotone:{}@x={x}", spec.name),
                                    p,
                                    x: ts[i],
                                    value: dd,
                                },
                            );
                        }
                    }
                    let monotone_ok = vcount == 0;

                    let lg: Vec<f64> = g.iter().map(|v| v.ln()).collect();
                    let n_sd = lg.len() - 2;
                    let mut strict = 0usize;
                    let mut worst = if spec.log_convex { f64::INFINITY } else { f64::NEG_INFINITY };
                    let mut worst_t = ts[1];
                    let mut all_ok = true;
                    for i in 1..lg.len() - 1 {
                        let sd = lg[i + 1] - 2.0 * lg[i] + lg[i - 1];
                        if spec.log_convex {
                            // Claim: second differences >= 0 (beyond noise).
                            if sd > 0.0 {
                                strict += 1;
                            }
                            if sd < -NOISE_TOL {
                                all_ok = false;
                            }
                            if sd < worst {
                                worst = sd;
                                worst_t = ts[i];
                            }
                        } else {
                            if sd < 0.0 {
                                strict += 1;
                            }
                            if sd > NOISE_TOL {
                                all_ok = false;
                            }
                            if sd > worst {
                                worst = sd;
                                worst_t = ts[i];
                            }
                        }
                    }
                    let strict_fraction = strict as f64 / n_sd as f64;
                    let shape_ok = all_ok && strict_fraction >= 0.9;
                    if !shape_ok {
                        record(
                            &mut rep.violations,
                            &mut truncated,
                            Violation {
                                check: format!("log-shape:{}@x={x}", spec.name),
                                p,
                                x: worst_t,
                                value: worst,
                            },
                        );
                    }
                    rep.log_shapes.push(LogShapeReport {
                        name: spec.name,
                        p,
                        x,
                        claimed: format!(
                            "{} log-{}",
                            if spec.increasing { "increasing" } else { "decreasing" },
                            if spec.log_convex { "convex" } else { "concave" }
                        ),
                        monotone_ok,
                        shape_ok,
                        strict_fraction,
                        worst_second_diff: worst,
                    });
                }
            }
        }
    }

    if parts.limits {
        for spec in case.limits {
            for &p in &p_values {
                let probes: Vec<f64> = match spec.side {
                    LimitSide::ZeroPlus => ZERO_PROBES.to_vec(),
                    LimitSide::UpperEndpoint => {
                        let u = spec.window.upper.value(p, cfg)?;
                        EDGE_FRACS.iter().map(|e| u * (1.0 - e)).collect()
                    }
                    LimitSide::Infinity => INF_PROBES.to_vec(),
                };
                let claimed = (spec.claimed)(p, cfg)?;
                let mut observed = Vec::with_capacity(probes.len());
                for &x in &probes {
                    observed.push(ev(spec.eval, case.id, p, x, cfg)?);
                }
                let gaps: Vec<f64> = observed.iter().map(|v| (v - claimed).abs()).collect();
                let floor = LIMIT_FLOOR_REL * claimed.abs().max(1.0);
                let shrinking = gaps
                    .windows(2)
                    .all(|w| w[1] <= w[0] + LIMIT_SLACK || w[1] <= floor);
                if !shrinking {
                    record(
                        &mut rep.violations,
                        &mut truncated,
                        Violation {
                            check: format!("limit:{}", spec.name),
                            p,
                            x: *probes.last().unwrap(),
                            value: *gaps.last().unwrap(),
                        },
                    );
                }
                rep.limit_checks.push(LimitReport {
                    name: spec.name,
                    p,
                    side: spec.side,
                    claimed,
                    probes,
                    observed,
                    gaps,
                    shrinking,
                });
            }
        }
    }

    if truncated {
        rep.notes.push(format!("violation list truncated at {VIOLATION_CAP} entries (counts are exact)"));
    }
    if case.conjecture {
        rep.notes.push(
            "conjecture case: results are numerical evidence only; a clean scan is not a proof"
                .to_string(),
        );
    }
    Ok(rep)
}

/// Scan every registered aspect of one case (margins, monotonicity, ranges,
/// log-shapes, limits) on the given grid.
pub fn scan_case(case: &InequalityCase, grid: &GridSpec, cfg: &EvalConfig) -> Result<ScanReport> {
    run(case, grid, cfg, Parts::ALL)
}

/// Scan only the signed-margin components of a case.
pub fn scan_margin(case: &InequalityCase, grid: &GridSpec, cfg: &EvalConfig) -> Result<ScanReport> {
    run(case, grid, cfg, Parts::MARGINS)
}

/// Evaluate only the claimed endpoint limits of a case (default grid).
pub fn limit_check(case: &InequalityCase, cfg: &EvalConfig) -> Result<ScanReport> {
    run(case, &GridSpec::default(), cfg, Parts::LIMITS)
}

/// Run the evidence scan for one of the two conjecture cases. The returned
/// report is flagged `conjecture: true`; violations in it are evidence
/// against the conjecture, not certification failures.
pub fn explore_conjecture(id: &str, grid: &GridSpec, cfg: &EvalConfig) -> Result<ScanReport> {
    let case = super::find_case(id).ok_or_else(|| Error::UnknownCase {
        id: id.to_string(),
        expected: "a registered case id",
    })?;
    if !case.conjecture {
        return Err(Error::UnknownCase {
            id: id.to_string(),
            expected: "one of the conjecture ids (conj_log_ratio, conj_cusa_sharp)",
        });
    }
    scan_case(case, grid, cfg)
}

/// Scan all cases (or the id-filtered subset, in filter order) and return one
/// report per case. Cases are scanned in parallel; report order is
/// deterministic.
pub fn run_verify(
    ids: Option<&[String]>,
    grid: &GridSpec,
    cfg: &EvalConfig,
) -> Result<Vec<ScanReport>> {
    let cases: Vec<&'static InequalityCase> = match ids {
        None => super::registry().iter().collect(),
        Some(list) => {
            let mut v = Vec::with_capacity(list.len());
            for id in list {
                v.push(super::find_case(id).ok_or_else(|| Error::UnknownCase {
                    id: id.clone(),
                    expected: "a registered case id",
                })?);
            }
            v
        }
    };
    cases.par_iter().map(|case| scan_case(case, grid, cfg)).collect()
}

// ---------------------------------------------------------------------------
// Free-standing classification utilities
// ---------------------------------------------------------------------------

/// Sign pattern of consecutive differences of a sampled function.
#[derive(Debug, Clone, Serialize)]
pub struct MonotonePattern {
    pub n_points: usize,
    pub n_increasing: usize,
    pub n_decreasing: usize,
    pub n_flat: usize,
}

impl MonotonePattern {
    /// No decreasing step beyond noise, and at least one genuine increase.
    pub fn strictly_increasing(&self) -> bool {
        self.n_decreasing == 0 && self.n_increasing > 0
    }
    pub fn strictly_decreasing(&self) -> bool {
        self.n_increasing == 0 && self.n_decreasing > 0
    }
}

/// Classify the monotonicity of `f` on `n` uniform samples of `[lo, hi]`.
pub fn scan_monotone<F>(f: F, interval: (f64, f64), n: usize) -> Result<MonotonePattern>
where
    F: Fn(f64) -> Result<f64>,
{
    let (lo, hi) = interval;
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            constraint: "n >= 3",
        });
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInterval { a: lo, b: hi });
    }
    let mut vals = Vec::with_capacity(n);
    for i in 0..n {
        let x = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        vals.push(f(x)?);
    }
    let (inc, dec, flat) = classify_diffs(&vals);
    Ok(MonotonePattern { n_points: n, n_increasing: inc, n_decreasing: dec, n_flat: flat })
}

/// Second-difference statistics of log g on a uniform t-grid.
#[derive(Debug, Clone, Serialize)]
pub struct LogShapePattern {
    pub n_points: usize,
    pub max_second_diff: f64,
    pub min_second_diff: f64,
    pub frac_strictly_negative: f64,
    pub frac_strictly_positive: f64,
}

impl LogShapePattern {
    /// Log-concavity under the scan convention: no second difference above
    /// +noise, at least 90% strictly negative.
    pub fn log_concave(&self) -> bool {
        self.max_second_diff <= NOISE_TOL && self.frac_strictly_negative >= 0.9
    }
    /// Mirrored convention for log-convexity.
    pub fn log_convex(&self) -> bool {
        self.min_second_diff >= -NOISE_TOL && self.frac_strictly_positive >= 0.9
    }
}

/// Sample `g` (strictly positive) on `n` uniform points of `[lo, hi]` and
/// report the second-difference statistics of log g.
pub fn scan_log_shape<G>(g: G, t_interval: (f64, f64), n: usize) -> Result<LogShapePattern>
where
    G: Fn(f64) -> Result<f64>,
{
    let (lo, hi) = t_interval;
    if n < 5 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as f64,
            constraint: "n >= 5",
        });
    }
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidInterval { a: lo, b: hi });
    }
    let mut lg = Vec::with_capacity(n);
    for i in 0..n {
        let t = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let v = g(t)?;
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::NonPositiveValue { what: "log-shape sample", at: t, value: v });
        }
        lg.push(v.ln());
    }
    let mut max_sd = f64::NEG_INFINITY;
    let mut min_sd = f64::INFINITY;
    let mut neg = 0usize;
    let mut pos = 0usize;
    let n_sd = n - 2;
    for i in 1..n - 1 {
        let sd = lg[i + 1] - 2.0 * lg[i] + lg[i - 1];
        max_sd = max_sd.max(sd);
        min_sd = min_sd.min(sd);
        if sd < 0.0 {
            neg += 1;
        }
        if sd > 0.0 {
            pos += 1;
        }
    }
    Ok(LogShapePattern {
        n_points: n,
        max_second_diff: max_sd,
        min_second_diff: min_sd,
        frac_strictly_negative: neg as f64 / n_sd as f64,
        frac_strictly_positive: pos as f64 / n_sd as f64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inequalities::{find_case, registry, CaseKind};
    use crate::phyp;
    use crate::ptrig::{self, PParam};

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    fn small_grid(n: usize) -> GridSpec {
        GridSpec { x_count: n, ..GridSpec::default() }
    }

    #[test]
    fn monotone_scan_classifies_the_identity_function() {
        let pat = scan_monotone(|x| Ok(x), (0.0, 1.0), 10).unwrap();
        assert_eq!(pat.n_increasing, 9);
        assert_eq!(pat.n_decreasing, 0);
        assert!(pat.strictly_increasing());
        assert!(!pat.strictly_decreasing());
    }

    #[test]
    fn monotone_scan_rejects_tiny_grids_and_bad_intervals() {
        assert!(scan_monotone(|x| Ok(x), (0.0, 1.0), 2).is_err());
        assert!(scan_monotone(|x| Ok(x), (1.0, 0.0), 10).is_err());
    }

    #[test]
    fn monotone_scan_treats_sub_noise_wiggles_as_flat() {
        // A descending staircase of 1e-12 steps is numerically flat.
        let pat = scan_monotone(|x| Ok(1.0 - 1e-12 * x), (0.0, 1.0), 20).unwrap();
        assert_eq!(pat.n_decreasing, 0);
        assert_eq!(pat.n_flat, 19);
    }

    #[test]
    fn gaussian_is_log_concave_on_the_free_scanner() {
        let pat = scan_log_shape(|t| Ok((-t * t).exp()), (0.0, 2.0), 40).unwrap();
        assert!(pat.log_concave());
        assert!(!pat.log_convex());
        // log g = -t^2 has constant negative second difference.
        assert!((pat.max_second_diff - pat.min_second_diff).abs() < 1e-9);
    }

    #[test]
    fn log_shape_scan_rejects_nonpositive_samples() {
        let err = scan_log_shape(|t| Ok(t - 1.0), (0.0, 2.0), 10).unwrap_err();
        match err {
            Error::NonPositiveValue { .. } => {}
            other => panic!("expected NonPositiveValue, got {other}"),
        }
    }

    #[test]
    fn classical_cosh_family_is_decreasing_and_log_convex() {
        // cosh_2(x/t)^t at x = 1 on t in [0.5, 5].
        let c = cfg();
        let g = |t: f64| {
            let y = phyp::cosh_p(1.0 / t, PParam::new(2.0)?, &c)?;
            Ok(y.value.powf(t))
        };
        let pat = scan_log_shape(g, (0.5, 5.0), 50).unwrap();
        assert!(pat.log_convex(), "{pat:?}");
        let mono = scan_monotone(g, (0.5, 5.0), 50).unwrap();
        assert!(mono.strictly_decreasing());
    }

    #[test]
    fn sin_family_at_p3_is_decreasing_and_log_concave() {
        // sin_3(x/t)^t at x = 1 on (2/pi_3, 5].
        let c = cfg();
        let hp = ptrig::half_pi(PParam::new(3.0).unwrap(), &c).unwrap();
        let t_lo = (1.0 / hp) * 1.001;
        let g = |t: f64| {
            let y = ptrig::sin_p(1.0 / t, PParam::new(3.0)?, &c)?;
            Ok(y.value.powf(t))
        };
        let pat = scan_log_shape(g, (t_lo, 5.0), 50).unwrap();
        assert!(pat.log_concave(), "{pat:?}");
        let mono = scan_monotone(g, (t_lo, 5.0), 50).unwrap();
        assert!(mono.strictly_decreasing());
    }

    #[test]
    fn mit_ada_scan_is_clean_and_its_limits_shrink() {
        let case = find_case("mitrinovic_adamovic").unwrap();
        let rep = scan_case(case, &small_grid(120), &cfg()).unwrap();
        assert!(rep.clean(), "violations: {:?}", rep.violations);
        assert!(rep.min_margin.unwrap() > STRICTNESS_TOL);
        // Limit probes: ratio -> 1/(1+p) at 0, -> 0 at the right end.
        for lr in &rep.limit_checks {
            assert!(lr.shrinking, "{lr:?}");
        }
        // The p = 2 zero-limit gap at x = 1e-3 is within 1e-3 of 1/3.
        let lr = rep
            .limit_checks
            .iter()
            .find(|l| l.p == 2.0 && l.side == LimitSide::ZeroPlus)
            .unwrap();
        assert!((lr.claimed - 1.0 / 3.0).abs() < 1e-15);
        assert!(lr.gaps[1] < 1e-3, "gap at 1e-3: {}", lr.gaps[1]);
        // Monotone pattern: decreasing everywhere at every p.
        for m in &rep.monotone_sign_pattern {
            assert!(m.pattern_ok);
            assert_eq!(m.n_increasing, 0);
        }
        // Range: inside (0, 1/(1+p)).
        for r in &rep.ranges {
            assert!(r.inside);
            assert!(r.observed_max < 1.0 / (1.0 + r.p));
        }
    }

    #[test]
    fn degenerate_cusa_component_is_checked_as_identity_not_margin() {
        let case = find_case("cusa_trig").unwrap();
        let rep = scan_case(case, &small_grid(60), &cfg()).unwrap();
        assert!(rep.clean(), "violations: {:?}", rep.violations);
        // p = 2 second bound: no margin component recorded, but a note.
        assert!(rep
            .components
            .iter()
            .all(|c| !(c.name == "second" && c.p == 2.0)));
        assert!(rep.notes.iter().any(|n| n.contains("equality holds identically")));
        // min_margin still present from the non-degenerate parts.
        assert!(rep.min_margin.unwrap() > STRICTNESS_TOL);
    }

    #[test]
    fn conjecture_reports_are_flagged_and_theorem_ids_rejected() {
        let rep = explore_conjecture("conj_cusa_sharp", &small_grid(80), &cfg()).unwrap();
        assert!(rep.conjecture);
        assert_eq!(rep.kind, CaseKind::Conjecture);
        assert!(rep.min_margin.is_some());

        let err = explore_conjecture("wilker_hyp", &small_grid(10), &cfg()).unwrap_err();
        match err {
            Error::UnknownCase { .. } => {}
            other => panic!("expected UnknownCase, got {other}"),
        }
        assert!(explore_conjecture("nope", &small_grid(10), &cfg()).is_err());
    }

    #[test]
    fn grid_overrides_are_validated_against_the_case_domain() {
        let case = find_case("conj_cusa_sharp").unwrap(); // p > 2 strictly
        let grid = GridSpec { p_values: Some(vec![2.0]), ..GridSpec::default() };
        assert!(scan_case(case, &grid, &cfg()).is_err());
        let grid = GridSpec { p_values: Some(vec![0.5]), ..GridSpec::default() };
        assert!(scan_case(case, &grid, &cfg()).is_err());
        let grid = GridSpec { x_count: 1, ..GridSpec::default() };
        assert!(scan_case(case, &grid, &cfg()).is_err());
        let grid = GridSpec { x_margin_frac: 0.7, ..GridSpec::default() };
        assert!(scan_case(case, &grid, &cfg()).is_err());
    }

    #[test]
    fn unknown_filter_id_fails_verify() {
        let err = run_verify(Some(&["no_such_case".to_string()]), &small_grid(10), &cfg());
        assert!(err.is_err());
    }

    #[test]
    fn whole_catalog_scans_clean_on_a_coarse_grid() {
        // The dense certification run is the acceptance gate; this coarse
        // pass catches registry-level regressions quickly.
        let reports = run_verify(None, &small_grid(40), &cfg()).unwrap();
        assert_eq!(reports.len(), registry().len());
        for rep in &reports {
            if rep.conjecture {
                continue;
            }
            assert!(
                rep.clean(),
                "{}: violations {:?}",
                rep.case_id,
                rep.violations.iter().take(3).collect::<Vec<_>>()
            );
            if !rep.components.is_empty() {
                assert!(rep.min_margin.unwrap() > STRICTNESS_TOL, "{}", rep.case_id);
            }
        }
        // Order matches the catalog.
        for (rep, case) in reports.iter().zip(registry()) {
            assert_eq!(rep.case_id, case.id);
        }
    }

    #[test]
    fn margin_only_and_limit_only_runs_are_subsets() {
        let case = find_case("lazarevic").unwrap();
        let m = scan_margin(case, &small_grid(40), &cfg()).unwrap();
        assert!(!m.components.is_empty());
        assert!(m.monotone_sign_pattern.is_empty());
        assert!(m.limit_checks.is_empty());

        let l = limit_check(case, &cfg()).unwrap();
        assert!(l.components.is_empty());
        assert!(!l.limit_checks.is_empty());
        for lr in &l.limit_checks {
            assert!(lr.shrinking, "{lr:?}");
        }
    }
}
