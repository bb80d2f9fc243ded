//! Measures induced by amplitudes and a coarse description of their shape.

use serde::Serialize;

use crate::linalg::ComplexTriple;
use crate::scalar::Real;
use crate::segment::AmplitudeSegment;
use crate::Error;

/// Relative tolerance used by [`classify`] when callers have no preference.
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

/// `|Ψ^L|² + |Ψ^O|² + |Ψ^R|²`.
pub fn phi<T: Real>(v: &ComplexTriple<T>) -> T {
    v.norm_sqr()
}

/// `μ(x)` on a window.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureProfile<T> {
    x_min: i64,
    x_max: i64,
    values: Vec<T>,
}

impl<T: Real> MeasureProfile<T> {
    /// Values must be finite and non-negative, one per site of `[x_min, x_max]`.
    pub fn new(x_min: i64, values: Vec<T>) -> Result<Self, Error> {
        if values.iter().any(|v| !v.is_finite() || *v < T::zero()) {
            return Err(Error::NonFiniteAmplitude);
        }
        let x_max = x_min + values.len() as i64 - 1;
        Ok(Self {
            x_min,
            x_max,
            values,
        })
    }

    pub fn x_min(&self) -> i64 {
        self.x_min
    }

    pub fn x_max(&self) -> i64 {
        self.x_max
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, x: i64) -> Option<T> {
        if x < self.x_min || x > self.x_max {
            return None;
        }
        self.values.get((x - self.x_min) as usize).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, T)> + '_ {
        (self.x_min..=self.x_max).zip(self.values.iter().copied())
    }

    pub fn scaled(&self, factor: T) -> Self {
        Self {
            x_min: self.x_min,
            x_max: self.x_max,
            values: self.values.iter().map(|v| *v * factor).collect(),
        }
    }
}

pub fn measure_profile<T: Real>(segment: &AmplitudeSegment<T>) -> MeasureProfile<T> {
    MeasureProfile {
        x_min: segment.x_min(),
        x_max: segment.x_max(),
        values: segment.values().iter().map(phi).collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "period", rename_all = "lowercase")]
pub enum MeasureKind {
    Uniform,
    Periodic(usize),
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureClassification<T> {
    pub kind: MeasureKind,
    /// The window maximum is attained (within tolerance) on the central half
    /// of the window, i.e. no growth towards the edges.
    pub bounded_on_window: bool,
    /// `max μ / min μ`; infinite when the minimum is zero and the maximum is not.
    pub max_over_min_ratio: T,
}

/// Classifies a profile as uniform, periodic with the smallest period in
/// `[2, len/2]`, or other. `tolerance` is relative to the profile mean.
pub fn classify<T: Real>(
    profile: &MeasureProfile<T>,
    tolerance: T,
) -> Result<MeasureClassification<T>, Error> {
    let v = profile.values();
    if v.len() < 4 {
        return Err(Error::WindowTooSmall {
            sites: v.len(),
            needed: 4,
        });
    }
    if tolerance.is_nan() || tolerance <= T::zero() {
        return Err(Error::InvalidTolerance {
            tolerance: tolerance.as_f64(),
        });
    }
    let n = T::from_usize(v.len()).expect("window length fits");
    let mean = v.iter().copied().sum::<T>() / n;
    let thr = tolerance * mean;

    let kind = if v.iter().all(|x| (*x - mean).abs() <= thr) {
        MeasureKind::Uniform
    } else {
        (2..=v.len() / 2)
            .find(|&p| (0..v.len() - p).all(|k| (v[k + p] - v[k]).abs() <= thr))
            .map_or(MeasureKind::Other, MeasureKind::Periodic)
    };

    let max = v.iter().copied().fold(T::zero(), T::max);
    let min = v.iter().copied().fold(T::infinity(), T::min);
    let ratio = if max == T::zero() {
        T::one()
    } else if min == T::zero() {
        T::infinity()
    } else {
        max / min
    };

    let quarter = v.len() / 4;
    let central_max = v[quarter..v.len() - quarter]
        .iter()
        .copied()
        .fold(T::zero(), T::max);
    let bounded_on_window = max <= central_max * (T::one() + tolerance) + thr;

    Ok(MeasureClassification {
        kind,
        bounded_on_window,
        max_over_min_ratio: ratio,
    })
}
