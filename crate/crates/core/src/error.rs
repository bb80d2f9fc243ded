use thiserror::Error;

use crate::transfer::Direction;

/// Errors raised by the walk machinery.
///
/// Magnitudes are reported as `f64` regardless of the scalar type used for
/// the computation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coin entry is not finite")]
    NonFiniteEntry,

    #[error("coin is not unitary: max |U†U - I| = {deviation:e}")]
    NotUnitary { deviation: f64 },

    #[error("eigenvalue must lie on the unit circle, got |lambda| = {modulus}")]
    NotOnUnitCircle { modulus: f64 },

    #[error("window [{x_min}, {x_max}] must contain the origin")]
    WindowExcludesOrigin { x_min: i64, x_max: i64 },

    #[error("segment length {len} does not match window [{x_min}, {x_max}]")]
    LengthMismatch { x_min: i64, x_max: i64, len: usize },

    #[error("window has {sites} sites, need at least {needed}")]
    WindowTooSmall { sites: usize, needed: usize },

    #[error("singular {direction} transfer matrix at y = {site}: |denominator| = {modulus:e}")]
    SingularDenominator {
        direction: Direction,
        site: i64,
        modulus: f64,
    },

    #[error("initial state violates the origin constraint: residual {residual:e}")]
    ConstraintViolated { residual: f64 },

    #[error("amplitude overflow at x = {site}")]
    OverflowDetected { site: i64 },

    #[error("non-finite amplitude in segment")]
    NonFiniteAmplitude,

    #[error("tolerance must be positive, got {tolerance}")]
    InvalidTolerance { tolerance: f64 },
}

impl Error {
    /// True for failures of the transfer-matrix method itself (as opposed to
    /// malformed input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularDenominator { .. }
                | Error::ConstraintViolated { .. }
                | Error::OverflowDetected { .. }
        )
    }
}
