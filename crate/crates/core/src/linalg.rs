//! Fixed-size complex vectors and matrices: the three-component site
//! amplitude and 3×3 complex matrices.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;

use crate::scalar::{cr, is_finite, Cplx, Real};

/// Amplitude of one lattice site: left-moving, loop (stay) and right-moving
/// components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexTriple<T> {
    pub left: Cplx<T>,
    pub stay: Cplx<T>,
    pub right: Cplx<T>,
}

impl<T: Real> ComplexTriple<T> {
    pub fn new(left: Cplx<T>, stay: Cplx<T>, right: Cplx<T>) -> Self {
        Self { left, stay, right }
    }

    /// Triple with real components.
    pub fn real(left: T, stay: T, right: T) -> Self {
        Self::new(cr(left), cr(stay), cr(right))
    }

    pub fn zero() -> Self {
        Self::new(Complex::zero(), Complex::zero(), Complex::zero())
    }

    /// Unit vector along component `k` (0 = left, 1 = stay, 2 = right).
    pub fn basis(k: usize) -> Self {
        let mut v = Self::zero();
        v[k] = cr(T::one());
        v
    }

    pub fn from_array(a: [Cplx<T>; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn to_array(self) -> [Cplx<T>; 3] {
        [self.left, self.stay, self.right]
    }

    /// Bilinear (non-conjugating) product `Σ self_k · other_k`.
    pub fn dot(&self, other: &Self) -> Cplx<T> {
        self.left * other.left + self.stay * other.stay + self.right * other.right
    }

    /// `Σ |component|²`.
    pub fn norm_sqr(&self) -> T {
        self.left.norm_sqr() + self.stay.norm_sqr() + self.right.norm_sqr()
    }

    /// Largest component modulus.
    pub fn max_abs(&self) -> T {
        self.left
            .norm()
            .max(self.stay.norm())
            .max(self.right.norm())
    }

    pub fn is_finite(&self) -> bool {
        is_finite(self.left) && is_finite(self.stay) && is_finite(self.right)
    }

    pub fn scale(self, s: Cplx<T>) -> Self {
        Self::new(self.left * s, self.stay * s, self.right * s)
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        (*self - *other).max_abs()
    }
}

impl<T> Index<usize> for ComplexTriple<T> {
    type Output = Cplx<T>;

    fn index(&self, k: usize) -> &Cplx<T> {
        match k {
            0 => &self.left,
            1 => &self.stay,
            2 => &self.right,
            _ => panic!("triple index {k} out of range"),
        }
    }
}

impl<T> IndexMut<usize> for ComplexTriple<T> {
    fn index_mut(&mut self, k: usize) -> &mut Cplx<T> {
        match k {
            0 => &mut self.left,
            1 => &mut self.stay,
            2 => &mut self.right,
            _ => panic!("triple index {k} out of range"),
        }
    }
}

impl<T: Real> Add for ComplexTriple<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.left + o.left, self.stay + o.stay, self.right + o.right)
    }
}

impl<T: Real> Sub for ComplexTriple<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.left - o.left, self.stay - o.stay, self.right - o.right)
    }
}

impl<T: Real> Neg for ComplexTriple<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.left, -self.stay, -self.right)
    }
}

impl<T: Real> Mul<Cplx<T>> for ComplexTriple<T> {
    type Output = Self;
    fn mul(self, s: Cplx<T>) -> Self {
        self.scale(s)
    }
}

/// Dense 3×3 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat3<T> {
    pub rows: [[Cplx<T>; 3]; 3],
}

impl<T: Real> Mat3<T> {
    pub fn from_rows(rows: [[Cplx<T>; 3]; 3]) -> Self {
        Self { rows }
    }

    /// Builds a matrix from nine entries in row-major order.
    pub fn from_row_major(e: [Cplx<T>; 9]) -> Self {
        Self::from_rows([[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]])
    }

    pub fn from_real(rows: [[T; 3]; 3]) -> Self {
        Self::from_rows(rows.map(|r| r.map(cr)))
    }

    pub fn zero() -> Self {
        Self::from_rows([[Complex::zero(); 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..3 {
            m.rows[k][k] = cr(T::one());
        }
        m
    }

    pub fn row(&self, i: usize) -> ComplexTriple<T> {
        ComplexTriple::from_array(self.rows[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = &Cplx<T>> {
        self.rows.iter().flatten()
    }

    pub fn row_major(&self) -> [Cplx<T>; 9] {
        let r = &self.rows;
        [
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2],
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().all(|z| is_finite(*z))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.rows[i][j] = self.rows[j][i].conj();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &ComplexTriple<T>) -> ComplexTriple<T> {
        ComplexTriple::new(self.row(0).dot(v), self.row(1).dot(v), self.row(2).dot(v))
    }

    pub fn scale(&self, s: Cplx<T>) -> Self {
        Self::from_rows(self.rows.map(|r| r.map(|z| z * s)))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries()
            .zip(other.entries())
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }
}

impl<T: Real> Mul for Mat3<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.rows[i][j] = (0..3).map(|k| self.rows[i][k] * o.rows[k][j]).sum();
            }
        }
        m
    }
}

impl<T: Real> Add for Mat3<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.rows[i][j] = m.rows[i][j] + o.rows[i][j];
            }
        }
        m
    }
}
