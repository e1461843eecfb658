use core::fmt;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument sits on a pole of Γ (a non-positive integer).
    Pole { re: f64, im: f64 },
    /// Argument outside the region where the operation is defined.
    Domain(&'static str),
    /// Series or adaptive quadrature ran out of budget.
    NoConvergence { what: &'static str, budget: usize },
    /// Caller-supplied values violate a precondition.
    Argument(&'static str),
    /// Result left the finite range of `f64`.
    NonFinite(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { re, im } => write!(f, "gamma pole at {re}{im:+}i"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NoConvergence { what, budget } => {
                write!(f, "{what} did not converge within {budget}")
            }
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NonFinite(what) => write!(f, "non-finite result in {what}"),
        }
    }
}

impl core::error::Error for Error {}
