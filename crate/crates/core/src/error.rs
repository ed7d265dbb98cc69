use alloc::string::String;

/// Errors reported by every module of the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("intensity must be a nonnegative rational, got {0}")]
    NegativeIntensity(String),

    #[error("bound constant must be positive, got {0}")]
    NonPositiveConstant(String),

    #[error("cannot parse intensity {0:?}")]
    BadIntensity(String),

    #[error("{what} = {value} exceeds the limit {limit}")]
    Guard {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("{what} = {value} is below the minimum {min}")]
    TooSmall {
        what: &'static str,
        value: u64,
        min: u64,
    },

    #[error("order {k} is outside the table (max order {max_order})")]
    OrderOutOfRange { k: usize, max_order: usize },

    #[error("intensity {intensity} is not in (0, n] for n = {n}")]
    IntensityOutOfRange { intensity: f64, n: usize },

    #[error("bounds are only stated for intensity 1, got {0}")]
    BoundsNeedUnitIntensity(String),

    #[error("symmetric eigensolver did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("eigenvalues fail the trace identity ({identity}): expected {expected}, got {actual}")]
    TraceMismatch {
        identity: &'static str,
        expected: f64,
        actual: f64,
    },

    #[error("empty eigenvalue pool")]
    EmptyPool,
}

pub type Result<T> = core::result::Result<T, Error>;
