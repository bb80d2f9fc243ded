//! Coin matrices, their left/stay/right split, and position-dependent coin
//! fields on the integer line.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::linalg::Mat3;
use crate::scalar::{Cplx, Real};
use crate::Error;

/// A 3×3 unitary coin `U_x`.
///
/// Rows feed, in order, the left move, the loop and the right move. Entries
/// are named `a..i` in row-major order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinMatrix<T> {
    m: Mat3<T>,
}

impl<T: Real> CoinMatrix<T> {
    /// Validates unitarity and stores the entries verbatim.
    pub fn new(m: Mat3<T>) -> Result<Self, Error> {
        if !m.is_finite() {
            return Err(Error::NonFiniteEntry);
        }
        let deviation = unitarity_deviation(&m);
        if deviation > T::UNITARY_TOL {
            return Err(Error::NotUnitary {
                deviation: deviation.as_f64(),
            });
        }
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Mat3<T> {
        &self.m
    }

    /// `max |U†U - I|` over all entries.
    pub fn unitarity_deviation(&self) -> T {
        unitarity_deviation(&self.m)
    }

    /// The coin multiplied by `e^{i·phase}`; stays unitary.
    pub fn phased(&self, phase: T) -> Self {
        Self {
            m: self.m.scale(Complex::from_polar(T::one(), phase)),
        }
    }

    /// Splits the coin by rows into the left-move, loop and right-move parts.
    pub fn decompose(&self) -> CoinDecomposition<T> {
        let mut p = Mat3::zero();
        let mut r = Mat3::zero();
        let mut q = Mat3::zero();
        p.rows[0] = self.m.rows[0];
        r.rows[1] = self.m.rows[1];
        q.rows[2] = self.m.rows[2];
        CoinDecomposition { p, r, q }
    }

    pub fn a(&self) -> Cplx<T> {
        self.m.rows[0][0]
    }
    pub fn b(&self) -> Cplx<T> {
        self.m.rows[0][1]
    }
    pub fn c(&self) -> Cplx<T> {
        self.m.rows[0][2]
    }
    pub fn d(&self) -> Cplx<T> {
        self.m.rows[1][0]
    }
    pub fn e(&self) -> Cplx<T> {
        self.m.rows[1][1]
    }
    pub fn f(&self) -> Cplx<T> {
        self.m.rows[1][2]
    }
    pub fn g(&self) -> Cplx<T> {
        self.m.rows[2][0]
    }
    pub fn h(&self) -> Cplx<T> {
        self.m.rows[2][1]
    }
    pub fn i(&self) -> Cplx<T> {
        self.m.rows[2][2]
    }
}

fn unitarity_deviation<T: Real>(m: &Mat3<T>) -> T {
    (m.adjoint() * *m).max_abs_diff(&Mat3::identity())
}

/// Builds a coin from nine entries in row-major order.
pub fn make_coin<T: Real>(entries: [Cplx<T>; 9]) -> Result<CoinMatrix<T>, Error> {
    CoinMatrix::new(Mat3::from_row_major(entries))
}

/// Row split `U = P + R + Q`: `p` keeps row 1, `r` row 2, `q` row 3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinDecomposition<T> {
    pub p: Mat3<T>,
    pub r: Mat3<T>,
    pub q: Mat3<T>,
}

impl<T: Real> CoinDecomposition<T> {
    pub fn recombine(&self) -> Mat3<T> {
        self.p + self.r + self.q
    }
}

pub fn decompose<T: Real>(coin: &CoinMatrix<T>) -> CoinDecomposition<T> {
    coin.decompose()
}

/// Coins over the whole integer line: a default coin plus finitely many
/// site overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinField<T> {
    default_coin: CoinMatrix<T>,
    overrides: BTreeMap<i64, CoinMatrix<T>>,
}

impl<T: Real> CoinField<T> {
    pub fn homogeneous(coin: CoinMatrix<T>) -> Self {
        Self {
            default_coin: coin,
            overrides: BTreeMap::new(),
        }
    }

    pub fn with_override(mut self, x: i64, coin: CoinMatrix<T>) -> Self {
        self.overrides.insert(x, coin);
        self
    }

    pub fn coin_at(&self, x: i64) -> &CoinMatrix<T> {
        self.overrides.get(&x).unwrap_or(&self.default_coin)
    }

    pub fn default_coin(&self) -> &CoinMatrix<T> {
        &self.default_coin
    }

    pub fn overrides(&self) -> impl Iterator<Item = (i64, &CoinMatrix<T>)> {
        self.overrides.iter().map(|(x, c)| (*x, c))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.overrides.is_empty()
    }
}

pub fn coin_at<T: Real>(field: &CoinField<T>, x: i64) -> CoinMatrix<T> {
    *field.coin_at(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cr;

    fn grover() -> CoinMatrix<f64> {
        let t = 1.0 / 3.0;
        CoinMatrix::new(Mat3::from_real([
            [-t, 2.0 * t, 2.0 * t],
            [2.0 * t, -t, 2.0 * t],
            [2.0 * t, 2.0 * t, -t],
        ]))
        .unwrap()
    }

    #[test]
    fn identity_coin_is_accepted() {
        let one = cr(1.0);
        let zero = cr(0.0);
        let coin = make_coin([one, zero, zero, zero, one, zero, zero, zero, one]).unwrap();
        assert_eq!(*coin.matrix(), Mat3::identity());
        assert_eq!(coin.unitarity_deviation(), 0.0);
    }

    #[test]
    fn grover_coin_is_accepted_verbatim() {
        let t = 1.0 / 3.0;
        let entries = [-t, 2.0 * t, 2.0 * t, 2.0 * t, -t, 2.0 * t, 2.0 * t, 2.0 * t, -t].map(cr);
        let coin = make_coin(entries).unwrap();
        assert_eq!(coin.matrix().row_major(), entries);
        assert_eq!(coin.e(), cr(-t));
    }

    #[test]
    fn non_unitary_rejected() {
        let e = [1.0, 0.0, 0.0, 0.0, 2.0, 0.0, 0.0, 0.0, 1.0].map(cr);
        match make_coin(e) {
            Err(Error::NotUnitary { deviation }) => assert!((deviation - 3.0).abs() < 1e-12),
            other => panic!("expected NotUnitary, got {other:?}"),
        }
    }

    #[test]
    fn non_finite_rejected() {
        let mut e = [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0].map(cr);
        e[4] = Complex::new(f64::NAN, 0.0);
        assert_eq!(make_coin(e), Err(Error::NonFiniteEntry));
    }

    #[test]
    fn decomposition_rows() {
        let d = grover().decompose();
        let t = 1.0 / 3.0;
        assert_eq!(d.p.rows[0], [-t, 2.0 * t, 2.0 * t].map(cr));
        assert_eq!(d.p.rows[1], [cr(0.0); 3]);
        assert_eq!(d.p.rows[2], [cr(0.0); 3]);
        assert_eq!(d.r.rows[0], [cr(0.0); 3]);
        assert_eq!(d.q.rows[1], [cr(0.0); 3]);
        assert_eq!(d.recombine(), *grover().matrix());

        let id = CoinMatrix::<f64>::new(Mat3::identity()).unwrap().decompose();
        assert_eq!(id.p.rows[0], [cr(1.0), cr(0.0), cr(0.0)]);
        assert_eq!(id.r.rows[1], [cr(0.0), cr(1.0), cr(0.0)]);
        assert_eq!(id.q.rows[2], [cr(0.0), cr(0.0), cr(1.0)]);
    }

    #[test]
    fn field_lookup() {
        let g = grover();
        let field = CoinField::homogeneous(g).with_override(0, g.phased(std::f64::consts::PI));
        assert_eq!(coin_at(&field, 7), g);
        assert_eq!(coin_at(&field, -3), g);
        let at0 = coin_at(&field, 0);
        assert!(at0.matrix().max_abs_diff(&g.matrix().scale(cr(-1.0))) < 1e-15);
        assert!(!field.is_homogeneous());
        assert_eq!(field.overrides().count(), 1);
    }
}
