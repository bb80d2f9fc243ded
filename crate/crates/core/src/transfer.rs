//! Transfer matrices for the eigenvalue problem `U Ψ = λ Ψ` and propagation
//! of stationary amplitudes outward from the origin.
//!
//! Writing the eigen-equation site by site gives three relations:
//!
//! ```text
//! λ Ψ^L(x) = a_{x+1} Ψ^L(x+1) + b_{x+1} Ψ^O(x+1) + c_{x+1} Ψ^R(x+1)   (left move)
//! λ Ψ^O(x) = d_x Ψ^L(x) + e_x Ψ^O(x) + f_x Ψ^R(x)                   (loop)
//! λ Ψ^R(x) = g_{x-1} Ψ^L(x-1) + h_{x-1} Ψ^O(x-1) + i_{x-1} Ψ^R(x-1)   (right move)
//! ```
//!
//! `T⁺_y` maps `Ψ(y-1)` to `Ψ(y)` and `T⁻_y` maps `Ψ(y+1)` to `Ψ(y)`. The loop
//! relation at the origin is not implied by either and constrains `Ψ(0)`.

use std::fmt;

use num_complex::Complex;
use num_traits::Zero;
use serde::Serialize;

use crate::coin::CoinField;
use crate::linalg::{ComplexTriple, Mat3};
use crate::scalar::{check_unit_circle, cr, Cplx, Real};
use crate::segment::AmplitudeSegment;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Plus,
    Minus,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Plus => f.write_str("plus"),
            Direction::Minus => f.write_str("minus"),
        }
    }
}

/// `T⁺_y` or `T⁻_y` for a given eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix<T> {
    pub entries: Mat3<T>,
    pub direction: Direction,
    pub site: i64,
    pub lambda: Cplx<T>,
}

impl<T: Real> TransferMatrix<T> {
    pub fn apply(&self, v: &ComplexTriple<T>) -> ComplexTriple<T> {
        self.entries.mul_vec(v)
    }
}

fn singular<T: Real>(direction: Direction, site: i64, denom: Cplx<T>) -> Result<(), Error> {
    let modulus = denom.norm();
    if modulus < T::SINGULAR_TOL || !modulus.is_finite() {
        Err(Error::SingularDenominator {
            direction,
            site,
            modulus: modulus.as_f64(),
        })
    } else {
        Ok(())
    }
}

fn finished<T: Real>(
    rows: [[Cplx<T>; 3]; 3],
    direction: Direction,
    site: i64,
    lambda: Cplx<T>,
    denom: Cplx<T>,
) -> Result<TransferMatrix<T>, Error> {
    let entries = Mat3::from_rows(rows);
    if !entries.is_finite() {
        return Err(Error::SingularDenominator {
            direction,
            site,
            modulus: denom.norm().as_f64(),
        });
    }
    Ok(TransferMatrix {
        entries,
        direction,
        site,
        lambda,
    })
}

/// `T⁺_y`, built from the coins at `y` and `y - 1`.
///
/// Fails with [`Error::SingularDenominator`] when
/// `|λ{a_y(λ - e_y) + b_y d_y}|` is below [`Real::SINGULAR_TOL`].
pub fn transfer_plus<T: Real>(
    field: &CoinField<T>,
    y: i64,
    lambda: Cplx<T>,
) -> Result<TransferMatrix<T>, Error> {
    check_unit_circle(lambda)?;
    let u = field.coin_at(y);
    let prev = field.coin_at(y - 1);
    let (a, b, c, d, e, f) = (u.a(), u.b(), u.c(), u.d(), u.e(), u.f());
    let (g, h, i) = (prev.g(), prev.h(), prev.i());

    let shift = lambda - e;
    let denom = lambda * (a * shift + b * d);
    singular(Direction::Plus, y, denom)?;

    let cross = b * f + c * shift;
    let minor = a * f - c * d;
    let rows = [
        [
            (shift * (lambda * lambda - g * c) - g * b * f) / denom,
            -(h * cross) / denom,
            -(i * cross) / denom,
        ],
        [
            (lambda * lambda * d + g * minor) / denom,
            h * minor / denom,
            i * minor / denom,
        ],
        [g / lambda, h / lambda, i / lambda],
    ];
    finished(rows, Direction::Plus, y, lambda, denom)
}

/// `T⁻_y`, built from the coins at `y` and `y + 1`.
///
/// Fails with [`Error::SingularDenominator`] when
/// `|λ{h_y f_y + i_y(λ - e_y)}|` is below [`Real::SINGULAR_TOL`].
pub fn transfer_minus<T: Real>(
    field: &CoinField<T>,
    y: i64,
    lambda: Cplx<T>,
) -> Result<TransferMatrix<T>, Error> {
    check_unit_circle(lambda)?;
    let u = field.coin_at(y);
    let next = field.coin_at(y + 1);
    let (d, e, f, g, h, i) = (u.d(), u.e(), u.f(), u.g(), u.h(), u.i());
    let (a, b, c) = (next.a(), next.b(), next.c());

    let shift = lambda - e;
    let denom = lambda * (h * f + i * shift);
    singular(Direction::Minus, y, denom)?;

    let k = f * g - i * d;
    let m = h * d + g * shift;
    let rows = [
        [a / lambda, b / lambda, c / lambda],
        [
            -(a * k) / denom,
            -(b * k) / denom,
            (lambda * lambda * f - c * k) / denom,
        ],
        [
            -(a * m) / denom,
            -(b * m) / denom,
            (shift * (lambda * lambda - g * c) - h * c * d) / denom,
        ],
    ];
    finished(rows, Direction::Minus, y, lambda, denom)
}

/// Linear condition `coeff_left·Ψ^L + coeff_stay·Ψ^O + coeff_right·Ψ^R = 0`
/// from the loop relation at one site.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OriginConstraint<T> {
    pub coeff_left: Cplx<T>,
    pub coeff_stay: Cplx<T>,
    pub coeff_right: Cplx<T>,
    /// Set when every coefficient vanishes, so that any triple is admissible.
    pub vacuous: bool,
}

impl<T: Real> OriginConstraint<T> {
    pub fn coefficients(&self) -> ComplexTriple<T> {
        ComplexTriple::new(self.coeff_left, self.coeff_stay, self.coeff_right)
    }

    /// `|coeff · v|`.
    pub fn residual(&self, v: &ComplexTriple<T>) -> T {
        self.coefficients().dot(v).norm()
    }
}

/// Loop relation at site `x`: `(d_x, e_x - λ, f_x)`.
pub fn site_constraint<T: Real>(
    field: &CoinField<T>,
    x: i64,
    lambda: Cplx<T>,
) -> OriginConstraint<T> {
    let u = field.coin_at(x);
    let (l, o, r) = (u.d(), u.e() - lambda, u.f());
    let vacuous = [l, o, r].iter().all(|z| z.norm() < T::DEGENERATE_TOL);
    OriginConstraint {
        coeff_left: l,
        coeff_stay: o,
        coeff_right: r,
        vacuous,
    }
}

/// The restriction on `Ψ(0)` imposed by the loop relation at the origin.
pub fn origin_constraint<T: Real>(
    field: &CoinField<T>,
    lambda: Cplx<T>,
) -> Result<OriginConstraint<T>, Error> {
    check_unit_circle(lambda)?;
    Ok(site_constraint(field, 0, lambda))
}

/// Basis of the admissible initial states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialStates<T> {
    /// Two independent solutions of a non-vacuous constraint.
    Constrained([ComplexTriple<T>; 2]),
    /// The constraint was vacuous; all of `C³` is admissible.
    Unconstrained([ComplexTriple<T>; 3]),
}

impl<T: Real> InitialStates<T> {
    pub fn vectors(&self) -> &[ComplexTriple<T>] {
        match self {
            InitialStates::Constrained(v) => v,
            InitialStates::Unconstrained(v) => v,
        }
    }

    pub fn first(&self) -> ComplexTriple<T> {
        self.vectors()[0]
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, InitialStates::Unconstrained(_))
    }
}

/// Solves the constraint for a basis of its two-dimensional solution space.
///
/// When the left or right coefficient is non-zero the first vector mixes only
/// the left and right components: `(1, 0, -c_L/c_R)`, or `(-c_R/c_L, 0, 1)`
/// when `|c_R| < |c_L|/2`. The second vector adds the loop
/// component against the same pivot.
pub fn solve_initial_states<T: Real>(constraint: &OriginConstraint<T>) -> InitialStates<T> {
    let c = constraint.coefficients();
    let scale = c.max_abs();
    if constraint.vacuous || scale < T::DEGENERATE_TOL {
        return InitialStates::Unconstrained([0, 1, 2].map(ComplexTriple::basis));
    }
    let zero = Complex::zero();
    let one = cr(T::one());
    let tiny = T::DEGENERATE_TOL * scale;
    let (cl, co, cr_) = (c.left, c.stay, c.right);

    if cl.norm() <= tiny && cr_.norm() <= tiny {
        // only the loop coefficient survives: Ψ^O = 0
        return InitialStates::Constrained([
            ComplexTriple::new(one, zero, zero),
            ComplexTriple::new(zero, zero, one),
        ]);
    }
    // prefer the right pivot unless it is much smaller, so ties resolve the same way
    if cr_.norm() >= cl.norm() * T::of(0.5) {
        InitialStates::Constrained([
            ComplexTriple::new(one, zero, -(cl / cr_)),
            ComplexTriple::new(zero, one, -(co / cr_)),
        ])
    } else {
        InitialStates::Constrained([
            ComplexTriple::new(-(cr_ / cl), zero, one),
            ComplexTriple::new(-(co / cl), one, zero),
        ])
    }
}

/// Stationary amplitude on `[x_min, x_max]` grown from `psi0` by repeated
/// transfer-matrix application outward from the origin.
///
/// `psi0` must satisfy the origin constraint within [`Real::CONSTRAINT_TOL`];
/// it is never projected onto it.
pub fn propagate<T: Real>(
    field: &CoinField<T>,
    lambda: Cplx<T>,
    psi0: ComplexTriple<T>,
    x_min: i64,
    x_max: i64,
) -> Result<AmplitudeSegment<T>, Error> {
    check_unit_circle(lambda)?;
    if !(x_min <= 0 && 0 <= x_max) {
        return Err(Error::WindowExcludesOrigin { x_min, x_max });
    }
    if !psi0.is_finite() {
        return Err(Error::NonFiniteAmplitude);
    }
    let constraint = site_constraint(field, 0, lambda);
    let residual = constraint.residual(&psi0);
    if residual > T::CONSTRAINT_TOL {
        return Err(Error::ConstraintViolated {
            residual: residual.as_f64(),
        });
    }

    let guard = |x: i64, v: ComplexTriple<T>| {
        if !v.is_finite() || v.max_abs() > T::OVERFLOW_LIMIT {
            Err(Error::OverflowDetected { site: x })
        } else {
            Ok(v)
        }
    };

    let mut right = Vec::with_capacity(x_max as usize);
    let mut v = psi0;
    for x in 1..=x_max {
        v = guard(x, transfer_plus(field, x, lambda)?.apply(&v))?;
        right.push(v);
    }

    let mut left = Vec::with_capacity((-x_min) as usize);
    let mut v = psi0;
    for x in (x_min..=-1).rev() {
        v = guard(x, transfer_minus(field, x, lambda)?.apply(&v))?;
        left.push(v);
    }

    let mut values = Vec::with_capacity((x_max - x_min + 1) as usize);
    values.extend(left.into_iter().rev());
    values.push(psi0);
    values.extend(right);
    AmplitudeSegment::new(x_min, x_max, values, lambda)
}
