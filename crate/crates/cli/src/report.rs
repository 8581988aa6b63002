//! Structured run reports: one versioned JSON document per run, mirroring
//! the scan reports and echoing back the exact configuration that produced
//! them, so a report is diffable across tool versions and machines.

use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;

use ptfun::inequalities::{GridSpec, ScanReport, NOISE_TOL, STRICTNESS_TOL};
use ptfun::EvalConfig;

/// Schema tag; bump when the document layout changes incompatibly.
pub const FORMAT: &str = "report_v1";

#[derive(Serialize)]
pub struct Report {
    pub format: &'static str,
    pub tool: Tool,
    pub config: Config,
    pub cases: Vec<ScanReport>,
    pub summary: Summary,
}

#[derive(Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct Config {
    pub eval: EvalConfig,
    /// Margins at or below this count as violations.
    pub strictness_tol: f64,
    /// Differences within ±this are classified as flat, not directional.
    pub noise_tol: f64,
    pub grid: GridSpec,
}

#[derive(Serialize)]
pub struct Summary {
    pub n_cases: usize,
    pub n_theorem_cases: usize,
    pub n_conjecture_cases: usize,
    /// Recorded violation entries in theorem cases (0 ⇔ the run is clean).
    pub theorem_violations: usize,
    /// Recorded violation entries in conjecture cases (evidence, not failure).
    pub conjecture_violations: usize,
    pub all_theorems_clean: bool,
}

pub fn build(cfg: &EvalConfig, grid: &GridSpec, cases: Vec<ScanReport>) -> Report {
    let n_cases = cases.len();
    let n_conjecture_cases = cases.iter().filter(|c| c.conjecture).count();
    let theorem_violations = cases
        .iter()
        .filter(|c| !c.conjecture)
        .map(|c| c.violations.len())
        .sum();
    let conjecture_violations = cases
        .iter()
        .filter(|c| c.conjecture)
        .map(|c| c.violations.len())
        .sum();
    Report {
        format: FORMAT,
        tool: Tool {
            name: "ptfun",
            version: env!("CARGO_PKG_VERSION"),
        },
        config: Config {
            eval: *cfg,
            strictness_tol: STRICTNESS_TOL,
            noise_tol: NOISE_TOL,
            grid: grid.clone(),
        },
        cases,
        summary: Summary {
            n_cases,
            n_theorem_cases: n_cases - n_conjecture_cases,
            n_conjecture_cases,
            theorem_violations,
            conjecture_violations,
            all_theorems_clean: theorem_violations == 0,
        },
    }
}

/// Serialize with a trailing newline. JSON numbers use the shortest
/// round-trip form, so identical runs produce byte-identical files.
pub fn write(report: &Report, path: &Path) -> io::Result<()> {
    let mut text =
        serde_json::to_string_pretty(report).expect("report serialization cannot fail");
    text.push('\n');
    fs::write(path, text)
}
