use thiserror::Error;

/// Errors raised by kernel evaluation and the supporting numerics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("unsupported dimension m = {m}: {reason}")]
    UnsupportedDimension { m: usize, reason: &'static str },

    #[error("plane values live on different frames")]
    FrameMismatch,

    #[error("{function}: argument outside the supported envelope ({detail})")]
    Envelope {
        function: &'static str,
        detail: String,
    },

    #[error("size guard violated: {0}")]
    SizeGuard(String),

    #[error("the integral representation diverges for m = 2; use the two-dimensional closed form")]
    Divergent,

    #[error("the series representation needs m >= 3; use the two-dimensional closed form for m = 2")]
    SeriesNeedsDim3,

    #[error("Taylor tail bound {bound:e} exceeds 1e-12 at truncation degree {degree}")]
    TailGuard { degree: usize, bound: f64 },

    #[error("brute-force result leaves the plane algebra: residual {0:e}")]
    OutOfPlane(f64),

    #[error("quadrature error estimate {estimate:e} exceeds tolerance {tol:e}")]
    QuadratureTolerance { estimate: f64, tol: f64 },

    #[error("abscissa guard: Re(s) = {re_s} must exceed |x||y| = {t}")]
    Abscissa { re_s: f64, t: f64 },

    #[error("horizon guard: exp(-(Re s - t) T) = {0:e} is not below 1e-12")]
    Horizon(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("iteration did not converge: {0}")]
    NoConvergence(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
