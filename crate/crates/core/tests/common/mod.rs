#![allow(dead_code)]

use num_complex::Complex64;
use qwalk3::linalg::Mat3;
use qwalk3::{CoinField, CoinMatrix, Triple};
use rand::Rng;
use rand_distr::StandardNormal;

fn gaussian<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-ish random unitary: Gram–Schmidt on a complex Gaussian matrix.
pub fn random_unitary<R: Rng>(rng: &mut R) -> CoinMatrix {
    let mut cols: Vec<[Complex64; 3]> = Vec::new();
    while cols.len() < 3 {
        let mut v = [gaussian(rng), gaussian(rng), gaussian(rng)];
        for u in &cols {
            let proj: Complex64 = (0..3).map(|k| u[k].conj() * v[k]).sum();
            for k in 0..3 {
                v[k] -= proj * u[k];
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        cols.push(v.map(|z| z / norm));
    }
    let mut m = Mat3::zero();
    for (j, col) in cols.iter().enumerate() {
        for (row, z) in m.rows.iter_mut().zip(col) {
            row[j] = *z;
        }
    }
    CoinMatrix::new(m).expect("Gram-Schmidt output is unitary")
}

/// Random homogeneous coin with up to three random defects in `[-radius, radius]`.
pub fn random_field<R: Rng>(rng: &mut R, radius: i64) -> CoinField {
    let mut field = CoinField::homogeneous(random_unitary(rng));
    for _ in 0..rng.random_range(0..=3) {
        field = field.with_override(rng.random_range(-radius..=radius), random_unitary(rng));
    }
    field
}

pub fn random_unit<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

/// Random unit-norm combination of the given vectors.
pub fn random_combination<R: Rng>(rng: &mut R, basis: &[Triple]) -> Triple {
    let v = basis
        .iter()
        .fold(Triple::zero(), |acc, b| acc + b.scale(gaussian(rng)));
    v.scale(Complex64::new(1.0 / v.norm_sqr().sqrt(), 0.0))
}
