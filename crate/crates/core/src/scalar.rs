//! Real scalar abstraction.
//!
//! Every numerical routine in the crate is generic over [`Real`], which is
//! implemented for `f32` and `f64`. The trait also carries the numerical
//! thresholds used throughout, since a tolerance that is sensible in double
//! precision is meaningless in single precision.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point type usable by the walk machinery.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Maximum entrywise deviation of `U†U` from the identity.
    const UNITARY_TOL: Self;
    /// Maximum deviation of `|λ|` from one.
    const UNIT_CIRCLE_TOL: Self;
    /// Transfer-matrix denominators below this modulus are singular.
    const SINGULAR_TOL: Self;
    /// Maximum residual of the origin constraint accepted by `propagate`.
    const CONSTRAINT_TOL: Self;
    /// Coefficients below this modulus are treated as zero in constraint solving.
    const DEGENERATE_TOL: Self;
    /// Amplitude components above this modulus abort propagation.
    const OVERFLOW_LIMIT: Self;

    /// Lossy conversion used for constants and error reporting.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 constant")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const UNITARY_TOL: Self = 1e-10;
    const UNIT_CIRCLE_TOL: Self = 1e-12;
    const SINGULAR_TOL: Self = 1e-12;
    const CONSTRAINT_TOL: Self = 1e-10;
    const DEGENERATE_TOL: Self = 1e-12;
    const OVERFLOW_LIMIT: Self = 1e150;
}

impl Real for f32 {
    const UNITARY_TOL: Self = 1e-5;
    const UNIT_CIRCLE_TOL: Self = 1e-6;
    const SINGULAR_TOL: Self = 1e-6;
    const CONSTRAINT_TOL: Self = 1e-5;
    const DEGENERATE_TOL: Self = 1e-6;
    const OVERFLOW_LIMIT: Self = 1e30;
}

/// Complex scalar over a [`Real`].
pub type Cplx<T> = Complex<T>;

pub(crate) fn cr<T: Real>(re: T) -> Cplx<T> {
    Complex::new(re, T::zero())
}

pub(crate) fn is_finite<T: Real>(z: Cplx<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Returns `Ok(())` when `|lambda|` is one within [`Real::UNIT_CIRCLE_TOL`].
pub fn check_unit_circle<T: Real>(lambda: Cplx<T>) -> Result<(), crate::Error> {
    let deviation = (lambda.norm() - T::one()).abs();
    if is_finite(lambda) && deviation <= T::UNIT_CIRCLE_TOL {
        Ok(())
    } else {
        Err(crate::Error::NotOnUnitCircle {
            modulus: lambda.norm().as_f64(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_circle_check() {
        assert!(check_unit_circle(Complex::new(0.0, 1.0)).is_ok());
        assert!(check_unit_circle(Complex::from_polar(1.0, 2.0)).is_ok());
        assert!(check_unit_circle(Complex::new(0.5, 0.0)).is_err());
        assert!(check_unit_circle(Complex::new(f64::NAN, 0.0)).is_err());
        assert!(check_unit_circle(Complex::<f32>::from_polar(1.0, 0.3)).is_ok());
    }
}
