//! Direct evolution by the whole-line operator, used to check transfer-matrix
//! results independently.
//!
//! Windows are finite and nothing is assumed outside them: a step only
//! produces sites whose neighbours are both inside the window, so every step
//! shrinks the window by one site on each side.

// `!(a <= b)` is used deliberately so NaN counts as a new maximum.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use serde::Serialize;

use crate::coin::CoinField;
use crate::linalg::ComplexTriple;
use crate::measure::phi;
use crate::scalar::Real;
use crate::segment::AmplitudeSegment;
use crate::Error;

fn require_sites<T>(segment: &AmplitudeSegment<T>, needed: usize) -> Result<(), Error>
where
    T: Real,
{
    if segment.len() < needed {
        Err(Error::WindowTooSmall {
            sites: segment.len(),
            needed,
        })
    } else {
        Ok(())
    }
}

/// One application of the whole-line operator:
/// `Ψ'(x) = P_{x+1}Ψ(x+1) + R_xΨ(x) + Q_{x-1}Ψ(x-1)` on `[x_min+1, x_max-1]`.
pub fn step<T: Real>(
    field: &CoinField<T>,
    segment: &AmplitudeSegment<T>,
) -> Result<AmplitudeSegment<T>, Error> {
    require_sites(segment, 3)?;
    let (lo, hi) = (segment.x_min() + 1, segment.x_max() - 1);
    let values = (lo..=hi)
        .map(|x| {
            let from_right = field.coin_at(x + 1).decompose().p.mul_vec(segment.at(x + 1));
            let stay = field.coin_at(x).decompose().r.mul_vec(segment.at(x));
            let from_left = field.coin_at(x - 1).decompose().q.mul_vec(segment.at(x - 1));
            from_right + stay + from_left
        })
        .collect();
    AmplitudeSegment::unchecked_origin(lo, hi, values, segment.lambda())
}

/// Which site relation a residual belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `λΨ^L(x) = row₁(U_{x+1})·Ψ(x+1)`
    Left,
    /// `λΨ^O(x) = row₂(U_x)·Ψ(x)`
    Loop,
    /// `λΨ^R(x) = row₃(U_{x-1})·Ψ(x-1)`
    Right,
}

/// Largest eigen-equation residual and where it occurs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport<T> {
    pub max: T,
    pub site: i64,
    pub relation: Relation,
}

/// Componentwise residuals of `UΨ = λΨ` at every interior site.
pub fn eigen_residual_report<T: Real>(
    field: &CoinField<T>,
    segment: &AmplitudeSegment<T>,
) -> Result<ResidualReport<T>, Error> {
    require_sites(segment, 3)?;
    let lambda = segment.lambda();
    let mut worst = ResidualReport {
        max: T::zero(),
        site: segment.x_min() + 1,
        relation: Relation::Left,
    };
    for x in segment.x_min() + 1..segment.x_max() {
        let here: &ComplexTriple<T> = segment.at(x);
        let left = (lambda * here.left
            - field.coin_at(x + 1).matrix().row(0).dot(segment.at(x + 1)))
        .norm();
        let stay = (lambda * here.stay - field.coin_at(x).matrix().row(1).dot(here)).norm();
        let right = (lambda * here.right
            - field.coin_at(x - 1).matrix().row(2).dot(segment.at(x - 1)))
        .norm();
        for (value, relation) in [
            (left, Relation::Left),
            (stay, Relation::Loop),
            (right, Relation::Right),
        ] {
            // NaN must surface as a failure, so compare with `!(<=)`
            if !(value <= worst.max) {
                worst = ResidualReport {
                    max: value,
                    site: x,
                    relation,
                };
            }
        }
    }
    Ok(worst)
}

/// Max-norm residual of the eigen-equations over interior sites.
pub fn eigen_residual<T: Real>(
    field: &CoinField<T>,
    segment: &AmplitudeSegment<T>,
) -> Result<T, Error> {
    eigen_residual_report(field, segment).map(|r| r.max)
}

/// `max_{n ≤ n_steps} max_x |φ(Ψ_n)(x) - φ(Ψ_0)(x)|` over the sites that
/// survive `n` steps.
pub fn stationarity_deviation<T: Real>(
    field: &CoinField<T>,
    segment: &AmplitudeSegment<T>,
    n_steps: usize,
) -> Result<T, Error> {
    require_sites(segment, 2 * n_steps + 1)?;
    let mut current = segment.clone();
    let mut worst = T::zero();
    for _ in 0..n_steps {
        current = step(field, &current)?;
        for (x, v) in current.iter() {
            let d = (phi(v) - phi(segment.at(x))).abs();
            if !(d <= worst) {
                worst = d;
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::CoinMatrix;
    use crate::linalg::Mat3;
    use crate::models::{fourier_field, grover_field, omega};
    use crate::scalar::cr;
    use crate::transfer::propagate;
    use num_complex::Complex;

    fn grover_stationary(x_min: i64, x_max: i64) -> AmplitudeSegment<f64> {
        propagate(&grover_field(), cr(-1.0), ComplexTriple::real(1.0, 0.0, -1.0), x_min, x_max)
            .unwrap()
    }

    #[test]
    fn zero_stays_zero() {
        let s = AmplitudeSegment::constant(-3, 3, ComplexTriple::zero(), cr(1.0)).unwrap();
        let out = step(&grover_field(), &s).unwrap();
        assert_eq!((out.x_min(), out.x_max()), (-2, 2));
        assert!(out.values().iter().all(|v| *v == ComplexTriple::zero()));
    }

    #[test]
    fn grover_eigenvector_picks_up_lambda() {
        let s = AmplitudeSegment::constant(-5, 5, ComplexTriple::real(1.0, 0.0, -1.0), cr(-1.0))
            .unwrap();
        let out = step(&grover_field(), &s).unwrap();
        assert_eq!((out.x_min(), out.x_max()), (-4, 4));
        for (_, v) in out.iter() {
            assert!(v.max_abs_diff(&ComplexTriple::real(-1.0, 0.0, 1.0)) < 1e-15);
        }
    }

    #[test]
    fn identity_coin_shifts_components() {
        let field = CoinField::homogeneous(CoinMatrix::new(Mat3::identity()).unwrap());
        let s =
            AmplitudeSegment::sparse(-2, 2, &[(0, ComplexTriple::real(1.0, 1.0, 1.0))], cr(1.0))
                .unwrap();
        let out = step(&field, &s).unwrap();
        assert_eq!(*out.get(-1).unwrap(), ComplexTriple::real(1.0, 0.0, 0.0));
        assert_eq!(*out.get(0).unwrap(), ComplexTriple::real(0.0, 1.0, 0.0));
        assert_eq!(*out.get(1).unwrap(), ComplexTriple::real(0.0, 0.0, 1.0));
    }

    #[test]
    fn step_needs_three_sites() {
        let s = AmplitudeSegment::constant(-1, 0, ComplexTriple::zero(), cr(1.0)).unwrap();
        assert_eq!(
            step(&grover_field(), &s),
            Err(Error::WindowTooSmall { sites: 2, needed: 3 })
        );
        assert!(eigen_residual(&grover_field(), &s).is_err());
    }

    #[test]
    fn residual_of_grover_and_fourier_solutions() {
        assert!(eigen_residual(&grover_field(), &grover_stationary(-10, 10)).unwrap() <= 1e-10);

        let w = omega::<f64>();
        let fourier = propagate(
            &fourier_field(),
            Complex::new(0.0, 1.0),
            ComplexTriple::new(cr(1.0), cr(0.0), -w.powi(-2)),
            -9,
            9,
        )
        .unwrap();
        assert!(eigen_residual(&fourier_field(), &fourier).unwrap() <= 1e-10);
    }

    #[test]
    fn corrupted_site_is_detected() {
        let mut s = grover_stationary(-6, 6);
        s.get_mut(3).unwrap().left += 1.0;
        let r = eigen_residual_report(&grover_field(), &s).unwrap();
        assert!(r.max >= 0.1, "{r:?}");
        assert!((2..=4).contains(&r.site));
    }

    #[test]
    fn stationary_grover_measure() {
        let s = grover_stationary(-30, 30);
        assert!(stationarity_deviation(&grover_field(), &s, 20).unwrap() <= 1e-9);
    }

    #[test]
    fn localized_start_spreads() {
        // One step from (1,0,0) at the origin: the left move sends -1/3 to x = -1,
        // the loop keeps 2/3 at 0 and the right move sends 2/3 to x = 1; φ(0)
        // drops from 1 to 4/9.
        let s = AmplitudeSegment::sparse(-3, 3, &[(0, ComplexTriple::real(1.0, 0.0, 0.0))], cr(1.0))
            .unwrap();
        let d: f64 = stationarity_deviation(&grover_field(), &s, 1).unwrap();
        assert!((d - 5.0 / 9.0).abs() < 1e-15, "{d}");
    }

    #[test]
    fn stationarity_window_precondition() {
        let s = grover_stationary(-3, 3);
        assert_eq!(
            stationarity_deviation(&grover_field(), &s, 4),
            Err(Error::WindowTooSmall { sites: 7, needed: 9 })
        );
        assert!(stationarity_deviation(&grover_field(), &s, 3).is_ok());
    }
}
