use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite input for `{what}`: {value}")]
    NonFinite { what: &'static str, value: f64 },

    #[error("invalid interval [{a}, {b}]: {reason}")]
    InvalidInterval {
        a: f64,
        b: f64,
        reason: &'static str,
    },

    #[error("radicand {0:e} is negative beyond rounding tolerance")]
    NegativeRadicand(f64),

    #[error("radicand F(x) = {0} must be positive")]
    NonPositiveRadicand(f64),

    #[error("{0} is not a zero of the sign carrier")]
    NotABreakpoint(f64),

    #[error("base point {0} lies on a sign-carrier breakpoint")]
    BaseOnBreakpoint(f64),

    #[error("scale factor alpha must be nonzero")]
    ZeroAlpha,

    #[error("form {0} is not valid for this operation")]
    WrongFormKind(&'static str),

    #[error("cardioid scale must be positive and finite, got {0}")]
    InvalidScale(f64),

    #[error("need at least 3 samples, got {0}")]
    TooFewSamples(usize),

    #[error("tolerance {0:e} is below the supported minimum 1e-12")]
    ToleranceTooSmall(f64),

    #[error("adaptive quadrature did not converge after {subdivisions} subdivisions (error estimate {error_estimate:e})")]
    NoConvergence {
        subdivisions: usize,
        error_estimate: f64,
    },

    #[error("analytic jump {analytic} disagrees with finite-difference jump {numeric} at {at}")]
    JumpMismatch {
        at: f64,
        analytic: f64,
        numeric: f64,
    },
}

pub(crate) fn finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what, value })
    }
}
