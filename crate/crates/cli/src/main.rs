//! Command-line front end for the generalized trigonometric/hyperbolic
//! function library: point evaluation, CSV tables, the inequality
//! verification suite, conjecture exploration, and plot-data extraction.
//!
//! Exit codes: 0 = success (for `conjecture`, regardless of what the
//! evidence shows), 1 = a theorem scan recorded a violation, 2 = invalid
//! arguments or a domain error.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ptfun::inequalities::{
    explore_conjecture, run_verify, GridSpec, InequalityCase, ScanReport, T_HI,
};
use ptfun::{EvalConfig, PParam};

#[derive(Parser)]
#[command(
    name = "ptfun",
    version,
    about = "Generalized trigonometric and hyperbolic functions (exponent p > 1) \
             with a grid-based inequality verification suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function at a point; prints value and error estimate.
    Eval(EvalArgs),
    /// Emit a CSV table (x,value,err_est) of one function on a uniform grid.
    Table(TableArgs),
    /// Scan the inequality catalog and write a structured JSON report.
    Verify(VerifyArgs),
    /// Numerically explore one conjecture; exit code is 0 regardless of the
    /// evidence (a counterexample candidate is reported, not a failure).
    Conjecture(ConjectureArgs),
    /// Emit CSV plot data: a function graph, a case's comparison curves, or
    /// one parametric t-family.
    Plotdata(PlotdataArgs),
}

/// Functions evaluable at a point. `pi_p` is the period constant π_p and
/// takes no `--x`.
#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Function {
    #[value(name = "pi_p")]
    PiP,
    #[value(name = "arcsin_p")]
    ArcsinP,
    #[value(name = "sin_p")]
    SinP,
    #[value(name = "cos_p")]
    CosP,
    #[value(name = "tan_p")]
    TanP,
    #[value(name = "arctan_p")]
    ArctanP,
    #[value(name = "arcsinh_p")]
    ArcsinhP,
    #[value(name = "sinh_p")]
    SinhP,
    #[value(name = "cosh_p")]
    CoshP,
    #[value(name = "tanh_p")]
    TanhP,
    #[value(name = "arctanh_p")]
    ArctanhP,
}

impl Function {
    /// Evaluate at x, returning (value, error estimate).
    fn eval(self, x: f64, p: PParam, cfg: &EvalConfig) -> Result<(f64, f64), ptfun::Error> {
        let fv = match self {
            Function::PiP => {
                let pi = ptfun::pi_p(p, cfg)?;
                return Ok((pi.pi(), 2.0 * pi.err_est));
            }
            Function::ArcsinP => ptfun::arcsin_p(x, p, cfg)?,
            Function::SinP => ptfun::sin_p(x, p, cfg)?,
            Function::CosP => ptfun::cos_p(x, p, cfg)?,
            Function::TanP => ptfun::tan_p(x, p, cfg)?,
            Function::ArctanP => ptfun::arctan_p(x, p, cfg)?,
            Function::ArcsinhP => ptfun::arcsinh_p(x, p, cfg)?,
            Function::SinhP => ptfun::sinh_p(x, p, cfg)?,
            Function::CoshP => ptfun::cosh_p(x, p, cfg)?,
            Function::TanhP => ptfun::tanh_p(x, p, cfg)?,
            Function::ArctanhP => ptfun::arctanh_p(x, p, cfg)?,
        };
        Ok((fv.value, fv.err_est))
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Function to evaluate.
    #[arg(value_enum)]
    function: Function,
    /// Exponent p > 1.
    #[arg(long)]
    p: f64,
    /// Evaluation point (required except for pi_p).
    #[arg(long)]
    x: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    /// Function to tabulate (pi_p, being a constant, is not tabulable).
    #[arg(value_enum)]
    function: Function,
    /// Exponent p > 1.
    #[arg(long)]
    p: f64,
    /// Grid start (inclusive).
    #[arg(long)]
    x_lo: f64,
    /// Grid end (inclusive).
    #[arg(long)]
    x_hi: f64,
    /// Number of rows (≥ 1).
    #[arg(long)]
    grid_n: usize,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated case ids (default: the whole catalog).
    #[arg(long, value_delimiter = ',')]
    cases: Option<Vec<String>>,
    /// Comma-separated exponents overriding each case's defaults; every
    /// value must lie in the p-domain of every selected case.
    #[arg(long, value_delimiter = ',')]
    p_values: Option<Vec<f64>>,
    /// x samples per scan window.
    #[arg(long, default_value_t = 400)]
    grid_n: usize,
    /// Fraction of each window excluded at open ends.
    #[arg(long, default_value_t = 1e-3)]
    x_margin: f64,
    /// Report path.
    #[arg(long, default_value = "report.json")]
    out: PathBuf,
    /// Fail (exit 1) on conjecture counterexamples too, not only theorems.
    #[arg(long)]
    strict_conjectures: bool,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Conjecture id: conj_log_ratio or conj_cusa_sharp.
    id: String,
    /// Comma-separated exponents overriding the registered defaults.
    #[arg(long, value_delimiter = ',')]
    p_values: Option<Vec<f64>>,
    /// x samples per scan window.
    #[arg(long, default_value_t = 400)]
    grid_n: usize,
    /// Fraction of each window excluded at open ends.
    #[arg(long, default_value_t = 1e-3)]
    x_margin: f64,
    /// Evidence report path.
    #[arg(long, default_value = "evidence.json")]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlotKind {
    /// x,value graph of one function.
    Function,
    /// x plus one column per registered comparison curve of a case (curves
    /// are listed in claimed ascending order where the case is a chain).
    Margin,
    /// t,g(t) for a case's parametric family at fixed x.
    Tparam,
}

#[derive(Args)]
struct PlotdataArgs {
    #[arg(value_enum)]
    kind: PlotKind,
    /// Function name (kind = function).
    #[arg(long, value_enum)]
    function: Option<Function>,
    /// Case id (kind = margin or tparam).
    #[arg(long)]
    case: Option<String>,
    /// Exponent p > 1.
    #[arg(long)]
    p: f64,
    /// Fixed x of the t-family (kind = tparam).
    #[arg(long)]
    x: Option<f64>,
    /// Grid start override.
    #[arg(long)]
    x_lo: Option<f64>,
    /// Grid end override.
    #[arg(long)]
    x_hi: Option<f64>,
    /// Number of rows.
    #[arg(long, default_value_t = 100)]
    grid_n: usize,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure that terminates the process: message to stderr, code as exit.
struct CliError {
    code: u8,
    message: String,
}

impl From<ptfun::Error> for CliError {
    fn from(e: ptfun::Error) -> Self {
        CliError { code: 2, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError { code: 2, message: e.to_string() }
    }
}

fn config_error(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = EvalConfig::default();
    let outcome = match &cli.command {
        Command::Eval(a) => cmd_eval(a, &cfg),
        Command::Table(a) => cmd_table(a, &cfg),
        Command::Verify(a) => cmd_verify(a, &cfg),
        Command::Conjecture(a) => cmd_conjecture(a, &cfg),
        Command::Plotdata(a) => cmd_plotdata(a, &cfg),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn cmd_eval(a: &EvalArgs, cfg: &EvalConfig) -> Result<ExitCode, CliError> {
    let p = PParam::new(a.p)?;
    let x = match (a.function, a.x) {
        (Function::PiP, Some(_)) => {
            return Err(config_error("pi_p is a constant of p alone and takes no --x"));
        }
        (Function::PiP, None) => 0.0,
        (_, Some(x)) => x,
        (_, None) => return Err(config_error("this function requires --x")),
    };
    let (value, err_est) = a.function.eval(x, p, cfg)?;
    println!("{value:.16e} {err_est:.16e}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(a: &TableArgs, cfg: &EvalConfig) -> Result<ExitCode, CliError> {
    if a.function == Function::PiP {
        return Err(config_error("pi_p is a constant; tabulate an x-dependent function"));
    }
    if a.grid_n == 0 {
        return Err(config_error("--grid-n must be at least 1"));
    }
    if !(a.x_lo <= a.x_hi) {
        return Err(config_error("--x-lo must not exceed --x-hi"));
    }
    let p = PParam::new(a.p)?;
    let mut csv = String::from("x,value,err_est\n");
    for i in 0..a.grid_n {
        let x = if a.grid_n == 1 {
            a.x_lo
        } else {
            a.x_lo + (a.x_hi - a.x_lo) * i as f64 / (a.grid_n - 1) as f64
        };
        let (value, err_est) = a.function.eval(x, p, cfg)?;
        csv.push_str(&format!("{x},{value},{err_est}\n"));
    }
    emit(&csv, a.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn grid_spec(p_values: &Option<Vec<f64>>, grid_n: usize, x_margin: f64) -> GridSpec {
    GridSpec {
        p_values: p_values.clone(),
        x_count: grid_n,
        x_margin_frac: x_margin,
    }
}

fn summary_line(rep: &ScanReport) -> String {
    let status = if !rep.violations.is_empty() {
        if rep.conjecture {
            format!("[counterexample candidates: {}]", rep.violations.len())
        } else {
            format!("[VIOLATIONS: {}]", rep.violations.len())
        }
    } else if rep.conjecture {
        "[evidence: clean]".to_string()
    } else {
        "[ok]".to_string()
    };
    match (rep.min_margin, &rep.argmin) {
        (Some(m), Some(am)) => format!(
            "{:<26} min_margin={m} at p={} x={} {status}",
            rep.case_id, am.p, am.x
        ),
        _ => format!("{:<26} min_margin=n/a {status}", rep.case_id),
    }
}

fn cmd_verify(a: &VerifyArgs, cfg: &EvalConfig) -> Result<ExitCode, CliError> {
    let grid = grid_spec(&a.p_values, a.grid_n, a.x_margin);
    let reports = run_verify(a.cases.as_deref(), &grid, cfg)?;
    for rep in &reports {
        println!("{}", summary_line(rep));
    }
    let doc = report::build(cfg, &grid, reports);
    report::write(&doc, &a.out)?;
    println!(
        "{} cases ({} theorems, {} conjectures); report written to {}",
        doc.summary.n_cases,
        doc.summary.n_theorem_cases,
        doc.summary.n_conjecture_cases,
        a.out.display()
    );
    let failed = doc.summary.theorem_violations > 0
        || (a.strict_conjectures && doc.summary.conjecture_violations > 0);
    if failed {
        eprintln!("verification FAILED: see the violation lists in the report");
        Ok(ExitCode::from(1))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}

fn cmd_conjecture(a: &ConjectureArgs, cfg: &EvalConfig) -> Result<ExitCode, CliError> {
    let grid = grid_spec(&a.p_values, a.grid_n, a.x_margin);
    let rep = explore_conjecture(&a.id, &grid, cfg)?;
    println!("{}", summary_line(&rep));
    for note in &rep.notes {
        println!("note: {note}");
    }
    if rep.violations.is_empty() {
        println!("no counterexample found on this grid");
    } else {
        println!("COUNTEREXAMPLE CANDIDATES ({}):", rep.violations.len());
        for v in &rep.violations {
            println!("  {} at p={} x={}: value {}", v.check, v.p, v.x, v.value);
        }
        println!("(evidence only; exit stays 0 — use verify --strict-conjectures to fail on these)");
    }
    let doc = report::build(cfg, &grid, vec![rep]);
    report::write(&doc, &a.out)?;
    println!("evidence report written to {}", a.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_plotdata(a: &PlotdataArgs, cfg: &EvalConfig) -> Result<ExitCode, CliError> {
    let csv = match a.kind {
        PlotKind::Function => plot_function(a, cfg)?,
        PlotKind::Margin => plot_margin(a, cfg)?,
        PlotKind::Tparam => plot_tparam(a, cfg)?,
    };
    emit(&csv, a.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn plot_function(a: &PlotdataArgs, cfg: &EvalConfig) -> Result<String, CliError> {
    let f = a
        .function
        .ok_or_else(|| config_error("kind=function requires --function"))?;
    if f == Function::PiP {
        return Err(config_error("pi_p is a constant; plot an x-dependent function"));
    }
    let (lo, hi) = match (a.x_lo, a.x_hi) {
        (Some(lo), Some(hi)) if lo < hi => (lo, hi),
        _ => return Err(config_error("kind=function requires --x-lo < --x-hi")),
    };
    if a.grid_n < 2 {
        return Err(config_error("--grid-n must be at least 2"));
    }
    let p = PParam::new(a.p)?;
    let mut csv = String::from("x,value\n");
    for i in 0..a.grid_n {
        let x = lo + (hi - lo) * i as f64 / (a.grid_n - 1) as f64;
        let (value, _) = f.eval(x, p, cfg)?;
        csv.push_str(&format!("{x},{value}\n"));
    }
    Ok(csv)
}

fn lookup_case<'a>(id: Option<&str>, p: f64) -> Result<&'a InequalityCase, CliError> {
    let id = id.ok_or_else(|| config_error("this plot kind requires --case"))?;
    let case = ptfun::inequalities::find_case(id)
        .ok_or_else(|| config_error(format!("case id '{id}' not recognized")))?;
    if !case.p_domain.contains(p) {
        return Err(config_error(format!(
            "p = {p} lies outside the validity domain of case '{id}'"
        )));
    }
    Ok(case)
}

fn plot_margin(a: &PlotdataArgs, cfg: &EvalConfig) -> Result<String, CliError> {
    let case = lookup_case(a.case.as_deref(), a.p)?;
    if a.grid_n < 2 {
        return Err(config_error("--grid-n must be at least 2"));
    }
    // Columns: the registered comparison curves where the case has them
    // (claimed ascending order), otherwise the raw component margins.
    let (names, evals): (Vec<&str>, Vec<ptfun::inequalities::CharFn>) = if !case.curves.is_empty()
    {
        case.curves.iter().map(|c| (c.name, c.eval)).unzip()
    } else if !case.components.is_empty() {
        case.components.iter().map(|c| (c.name, c.eval)).unzip()
    } else {
        return Err(config_error(format!(
            "case '{}' registers no plottable curves",
            case.id
        )));
    };
    let window = case
        .components
        .first()
        .map(|c| c.window)
        .or_else(|| case.monotones.first().map(|m| m.window))
        .ok_or_else(|| {
            config_error(format!("case '{}' has no x-window to plot over", case.id))
        })?;
    let span = window.upper.value(a.p, cfg)?;
    // Default to the middle 90% of the window: wide enough for a figure,
    // clear of the endpoint degeneracies where every curve coalesces.
    let lo = a.x_lo.unwrap_or(0.05 * span);
    let hi = a.x_hi.unwrap_or(0.95 * span);
    if !(lo < hi) {
        return Err(config_error("--x-lo must be below --x-hi"));
    }
    let mut csv = String::from("x");
    for n in &names {
        csv.push(',');
        csv.push_str(n);
    }
    csv.push('\n');
    for i in 0..a.grid_n {
        let x = lo + (hi - lo) * i as f64 / (a.grid_n - 1) as f64;
        csv.push_str(&format!("{x}"));
        for ev in &evals {
            let v = ev(a.p, x, cfg)?;
            csv.push_str(&format!(",{v}"));
        }
        csv.push('\n');
    }
    Ok(csv)
}

fn plot_tparam(a: &PlotdataArgs, cfg: &EvalConfig) -> Result<String, CliError> {
    let case = lookup_case(a.case.as_deref(), a.p)?;
    let spec = case
        .log_shapes
        .first()
        .ok_or_else(|| config_error(format!("case '{}' has no parametric family", case.id)))?;
    let x = a.x.ok_or_else(|| config_error("kind=tparam requires --x"))?;
    if !(x > 0.0) {
        return Err(config_error("--x must be positive"));
    }
    if a.grid_n < 2 {
        return Err(config_error("--grid-n must be at least 2"));
    }
    let t_lo = spec.t_lo_value(a.p, x, cfg)?;
    let t_hi = T_HI;
    if !(t_lo < t_hi) {
        return Err(config_error(format!(
            "empty t-range: the family starts at t = {t_lo}, above the grid end {t_hi}"
        )));
    }
    let mut csv = String::from("t,g\n");
    for i in 0..a.grid_n {
        let t = t_lo + (t_hi - t_lo) * i as f64 / (a.grid_n - 1) as f64;
        let g = (spec.g)(a.p, x, t, cfg)?;
        csv.push_str(&format!("{t},{g}\n"));
    }
    Ok(csv)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
