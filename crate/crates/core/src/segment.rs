use crate::linalg::ComplexTriple;
use crate::scalar::{check_unit_circle, Cplx, Real};
use crate::Error;

/// Amplitudes `Ψ(x)` on the window `[x_min, x_max]` together with the
/// eigenvalue they were built for.
///
/// Amplitudes are not normalized; stationary solutions are generally not
/// square summable on the whole line.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeSegment<T> {
    x_min: i64,
    x_max: i64,
    values: Vec<ComplexTriple<T>>,
    lambda: Cplx<T>,
}

impl<T: Real> AmplitudeSegment<T> {
    /// Checks that the window contains the origin, that the length matches,
    /// that every amplitude is finite and that `|lambda| = 1`.
    pub fn new(
        x_min: i64,
        x_max: i64,
        values: Vec<ComplexTriple<T>>,
        lambda: Cplx<T>,
    ) -> Result<Self, Error> {
        if !(x_min <= 0 && 0 <= x_max) {
            return Err(Error::WindowExcludesOrigin { x_min, x_max });
        }
        Self::unchecked_origin(x_min, x_max, values, lambda)
    }

    /// Like [`AmplitudeSegment::new`] but allows windows that do not contain
    /// the origin. One step of the evolution shrinks a window by a site on
    /// each side, so evolved segments may leave it behind.
    pub(crate) fn unchecked_origin(
        x_min: i64,
        x_max: i64,
        values: Vec<ComplexTriple<T>>,
        lambda: Cplx<T>,
    ) -> Result<Self, Error> {
        if x_max < x_min || values.len() as i64 != x_max - x_min + 1 {
            return Err(Error::LengthMismatch {
                x_min,
                x_max,
                len: values.len(),
            });
        }
        check_unit_circle(lambda)?;
        if !values.iter().all(ComplexTriple::is_finite) {
            return Err(Error::NonFiniteAmplitude);
        }
        Ok(Self {
            x_min,
            x_max,
            values,
            lambda,
        })
    }

    /// Segment whose amplitude is zero everywhere except at the listed sites.
    pub fn sparse(
        x_min: i64,
        x_max: i64,
        sites: &[(i64, ComplexTriple<T>)],
        lambda: Cplx<T>,
    ) -> Result<Self, Error> {
        let len = (x_max - x_min + 1).max(0) as usize;
        let mut values = vec![ComplexTriple::zero(); len];
        for (x, v) in sites {
            if let Some(slot) = values.get_mut((x - x_min) as usize) {
                if *x >= x_min {
                    *slot = *v;
                }
            }
        }
        Self::new(x_min, x_max, values, lambda)
    }

    /// Same amplitude at every site.
    pub fn constant(
        x_min: i64,
        x_max: i64,
        value: ComplexTriple<T>,
        lambda: Cplx<T>,
    ) -> Result<Self, Error> {
        let len = (x_max - x_min + 1).max(0) as usize;
        Self::new(x_min, x_max, vec![value; len], lambda)
    }

    pub fn x_min(&self) -> i64 {
        self.x_min
    }

    pub fn x_max(&self) -> i64 {
        self.x_max
    }

    pub fn lambda(&self) -> Cplx<T> {
        self.lambda
    }

    pub fn values(&self) -> &[ComplexTriple<T>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, x: i64) -> Option<&ComplexTriple<T>> {
        if x < self.x_min || x > self.x_max {
            return None;
        }
        self.values.get((x - self.x_min) as usize)
    }

    /// Mutable access for callers that perturb a solution on purpose.
    pub fn get_mut(&mut self, x: i64) -> Option<&mut ComplexTriple<T>> {
        if x < self.x_min || x > self.x_max {
            return None;
        }
        self.values.get_mut((x - self.x_min) as usize)
    }

    /// `(x, Ψ(x))` pairs in increasing `x`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &ComplexTriple<T>)> {
        (self.x_min..=self.x_max).zip(self.values.iter())
    }

    pub(crate) fn at(&self, x: i64) -> &ComplexTriple<T> {
        &self.values[(x - self.x_min) as usize]
    }
}
