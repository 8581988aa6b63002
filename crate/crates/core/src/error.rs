//! Error type shared by every fallible operation in the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while evaluating a function, an integral,
/// an inversion, or a scan.
///
/// Variants carry enough context to diagnose the failing call without a
/// debugger: the offending argument, the partial value where one exists,
/// and the tolerance that was requested.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An iterative scheme hit its cap with the error estimate still above
    /// tolerance. `value`/`err_est` are the best result obtained so far.
    NonConvergence {
        what: &'static str,
        value: f64,
        err_est: f64,
        tol: f64,
    },
    /// Integration interval is inverted or has a non-finite endpoint.
    InvalidInterval { a: f64, b: f64 },
    /// The integrand returned NaN/inf at an interior quadrature node.
    NonFiniteIntegrand { t: f64 },
    /// Root-finding target lies outside `[f(lo), f(hi)]`.
    TargetOutOfRange { target: f64, f_lo: f64, f_hi: f64 },
    /// Argument outside the mathematical domain of the function.
    DomainError {
        func: &'static str,
        arg: f64,
        reason: &'static str,
    },
    /// Argument too close to a pole for a meaningful finite value.
    PoleError { func: &'static str, x: f64, pole: f64 },
    /// Argument beyond the configured overflow cap of a fast-growing function.
    OverflowGuard { func: &'static str, arg: f64, limit: f64 },
    /// A structural parameter (exponent, tolerance, count) violates its constraint.
    InvalidParameter {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },
    /// A quantity that must be strictly positive (e.g. the argument of a log
    /// in a shape scan) was not.
    NonPositiveValue {
        what: &'static str,
        at: f64,
        value: f64,
    },
    /// An evaluation inside a certification scan failed; wraps the underlying
    /// error with the scan coordinates at which it occurred.
    ScanFailure {
        case_id: &'static str,
        p: f64,
        x: f64,
        source: Box<Error>,
    },
    /// An id filter referenced a case that is absent from the catalog (or
    /// outside the subset the operation accepts).
    UnknownCase { id: String, expected: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonConvergence { what, value, err_est, tol } => write!(
                f,
                "{what} did not converge: value {value:.17e}, error estimate {err_est:.3e} > tolerance {tol:.3e}"
            ),
            Error::InvalidInterval { a, b } => {
                write!(f, "invalid integration interval [{a}, {b}]")
            }
            Error::NonFiniteIntegrand { t } => {
                write!(f, "integrand is not finite at interior node t = {t}")
            }
            Error::TargetOutOfRange { target, f_lo, f_hi } => write!(
                f,
                "inversion target {target} outside bracketed range [{f_lo}, {f_hi}]"
            ),
            Error::DomainError { func, arg, reason } => {
                write!(f, "{func}: argument {arg} outside domain ({reason})")
            }
            Error::PoleError { func, x, pole } => {
                write!(f, "{func}: argument {x} too close to pole at {pole}")
            }
            Error::OverflowGuard { func, arg, limit } => write!(
                f,
                "{func}: |argument| {arg} exceeds overflow cap {limit}"
            ),
            Error::InvalidParameter { name, value, constraint } => {
                write!(f, "invalid parameter {name} = {value}: requires {constraint}")
            }
            Error::NonPositiveValue { what, at, value } => {
                write!(f, "{what} must be positive, got {value} at {at}")
            }
            Error::ScanFailure { case_id, p, x, ref source } => {
                write!(f, "scan of case {case_id} failed at (p = {p}, x = {x}): {source}")
            }
            Error::UnknownCase { ref id, expected } => {
                write!(f, "case id '{id}' not recognized (expected {expected})")
            }
        }
    }
}

impl std::error::Error for Error {}
