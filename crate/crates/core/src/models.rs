//! Built-in coin fields and their closed-form stationary measures.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::coin::{CoinField, CoinMatrix};
use crate::linalg::{ComplexTriple, Mat3};
use crate::scalar::{cr, Cplx, Real};

/// `ω = e^{2πi/3}`.
pub fn omega<T: Real>() -> Cplx<T> {
    Complex::from_polar(T::one(), T::of(2.0) * T::PI() / T::of(3.0))
}

/// `(1/3)·[[-1,2,2],[2,-1,2],[2,2,-1]]`.
pub fn grover_coin<T: Real>() -> CoinMatrix<T> {
    let third = T::one() / T::of(3.0);
    let (d, o) = (-third, T::of(2.0) * third);
    CoinMatrix::new(Mat3::from_real([[d, o, o], [o, d, o], [o, o, d]]))
        .expect("Grover coin is unitary")
}

/// `(1/√3)·[[1,1,1],[1,ω,ω²],[1,ω²,ω]]`.
pub fn fourier_coin<T: Real>() -> CoinMatrix<T> {
    let w = omega::<T>();
    let w2 = w * w;
    let one = cr(T::one());
    let s = cr(T::one() / T::of(3.0).sqrt());
    CoinMatrix::new(Mat3::from_rows([[one, one, one], [one, w, w2], [one, w2, w]]).scale(s))
        .expect("Fourier coin is unitary")
}

pub fn grover_field<T: Real>() -> CoinField<T> {
    CoinField::homogeneous(grover_coin())
}

/// Grover walk whose coin at the origin carries the weight `ρ = e^{i·phase}`.
pub fn grover_defect_field<T: Real>(phase: T) -> CoinField<T> {
    let g = grover_coin();
    CoinField::homogeneous(g).with_override(0, g.phased(phase))
}

pub fn fourier_field<T: Real>() -> CoinField<T> {
    CoinField::homogeneous(fourier_coin())
}

/// Field cycling through `coins` (site `x` gets `coins[x mod n]`) on
/// `[x_min, x_max]`, with `background` outside.
pub fn periodic_field<T: Real>(
    background: CoinMatrix<T>,
    coins: &[CoinMatrix<T>],
    x_min: i64,
    x_max: i64,
) -> CoinField<T> {
    let mut field = CoinField::homogeneous(background);
    if coins.is_empty() {
        return field;
    }
    let n = coins.len() as i64;
    for x in x_min..=x_max {
        field = field.with_override(x, coins[x.rem_euclid(n) as usize]);
    }
    field
}

/// Models with a known closed-form stationary measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoldenModel {
    /// Homogeneous Grover walk, `λ = -1`.
    Grover,
    /// Grover walk with weight `ρ = -1` at the origin, `λ = -1`.
    GroverDefectRhoMinus1,
    /// Homogeneous Fourier walk, `λ = i`.
    Fourier,
}

impl GoldenModel {
    pub const ALL: [GoldenModel; 3] = [
        GoldenModel::Grover,
        GoldenModel::GroverDefectRhoMinus1,
        GoldenModel::Fourier,
    ];

    pub fn field<T: Real>(self) -> CoinField<T> {
        match self {
            GoldenModel::Grover => grover_field(),
            GoldenModel::GroverDefectRhoMinus1 => grover_defect_field(T::PI()),
            GoldenModel::Fourier => fourier_field(),
        }
    }

    pub fn lambda<T: Real>(self) -> Cplx<T> {
        match self {
            GoldenModel::Grover | GoldenModel::GroverDefectRhoMinus1 => cr(-T::one()),
            GoldenModel::Fourier => Complex::i(),
        }
    }

    /// `(α, 0, -α)` for the Grover models, `(α, 0, -αω⁻²)` for Fourier.
    pub fn initial_state<T: Real>(self, alpha: Cplx<T>) -> ComplexTriple<T> {
        let zero = cr(T::zero());
        match self {
            GoldenModel::Grover | GoldenModel::GroverDefectRhoMinus1 => {
                ComplexTriple::new(alpha, zero, -alpha)
            }
            GoldenModel::Fourier => ComplexTriple::new(alpha, zero, -alpha * omega().powi(-2)),
        }
    }
}

/// Closed-form `μ(x)` reported for the built-in models.
///
/// The defect entry is the commonly quoted closed form `2|α|²·(3 if |x| = 1 else 1)`.
/// Transfer-matrix propagation gives `6|α|²` at every `x ≠ 0`, so the two
/// agree only for `|x| ≤ 1`.
pub fn golden_measure<T: Real>(model: GoldenModel, alpha: Cplx<T>, x: i64) -> T {
    let a2 = alpha.norm_sqr();
    match model {
        GoldenModel::Grover => T::of(2.0) * a2,
        GoldenModel::GroverDefectRhoMinus1 => {
            let bump = if x.abs() == 1 { T::of(3.0) } else { T::one() };
            T::of(2.0) * a2 * bump
        }
        GoldenModel::Fourier => {
            let k = if x.rem_euclid(3) == 0 { 2.0 } else { 5.0 };
            T::of(k) * a2
        }
    }
}

/// Names accepted on the command line and in configuration files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinModel {
    Grover,
    GroverDefect,
    Fourier,
}

impl BuiltinModel {
    pub const ALL: [BuiltinModel; 3] = [
        BuiltinModel::Grover,
        BuiltinModel::GroverDefect,
        BuiltinModel::Fourier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinModel::Grover => "grover",
            BuiltinModel::GroverDefect => "grover-defect",
            BuiltinModel::Fourier => "fourier",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            BuiltinModel::Grover => "homogeneous Grover coin (1/3)[[-1,2,2],[2,-1,2],[2,2,-1]]",
            BuiltinModel::GroverDefect => {
                "Grover coin with weight exp(i*phase) at x = 0 (phase defaults to pi)"
            }
            BuiltinModel::Fourier => "homogeneous 3x3 Fourier coin (1/sqrt3)[[1,1,1],[1,w,w^2],[1,w^2,w]]",
        }
    }

    pub fn field<T: Real>(self, phase: Option<T>) -> CoinField<T> {
        match self {
            BuiltinModel::Grover => grover_field(),
            BuiltinModel::GroverDefect => grover_defect_field(phase.unwrap_or_else(T::PI)),
            BuiltinModel::Fourier => fourier_field(),
        }
    }
}

impl fmt::Display for BuiltinModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown model `{s}`"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::coin_at;
    use std::f64::consts::PI;

    #[test]
    fn grover_entries() {
        let g = coin_at(&grover_field::<f64>(), 0);
        assert!((g.e().re + 1.0 / 3.0).abs() < 1e-16);
        assert!(g.unitarity_deviation() <= 1e-15);
        let p = g.decompose().p;
        let sum: Complex<f64> = p.rows[0].iter().sum();
        assert!((sum - 1.0).norm() < 1e-15);
    }

    #[test]
    fn defect_coin() {
        let f = grover_defect_field::<f64>(PI);
        let d = coin_at(&f, 0).matrix().max_abs_diff(&grover_coin().matrix().scale(cr(-1.0)));
        assert!(d < 1e-15);
        let same = grover_defect_field::<f64>(0.0);
        for x in -3..=3 {
            assert_eq!(coin_at(&same, x), coin_at(&grover_field(), x));
        }
        for phase in [0.1, 1.0, 2.5, 10.0] {
            assert!(coin_at(&grover_defect_field::<f64>(phase), 0).unitarity_deviation() < 1e-15);
        }
    }

    #[test]
    fn fourier_entries() {
        let w = omega::<f64>();
        let f = coin_at(&fourier_field::<f64>(), 5);
        assert!((f.i() - w / 3f64.sqrt()).norm() < 1e-16);
        assert!(f.unitarity_deviation() <= 1e-14);
        assert!((w.powi(3) - 1.0).norm() < 1e-15);
    }

    #[test]
    fn golden_values() {
        let one = cr(1.0);
        assert_eq!(golden_measure(GoldenModel::Grover, one, 100), 2.0);
        assert_eq!(golden_measure(GoldenModel::GroverDefectRhoMinus1, cr(2.0), -1), 24.0);
        assert_eq!(golden_measure(GoldenModel::Fourier, one, -4), 5.0);
        assert_eq!(golden_measure(GoldenModel::Fourier, one, -3), 2.0);
    }

    #[test]
    fn negative_axis_case_labels_match_mod3_rule() {
        // x = -3m-1 and x = -3m-2 are the μ = 5 cases, x = -3m the μ = 2 case
        for m in 0..=10i64 {
            for (x, want) in [(-3 * m, 2.0), (-3 * m - 1, 5.0), (-3 * m - 2, 5.0)] {
                if x >= -30 {
                    assert_eq!(golden_measure(GoldenModel::Fourier, cr(1.0), x), want);
                }
            }
        }
    }

    #[test]
    fn periodic_helper() {
        let g = grover_coin::<f64>();
        let f = fourier_coin::<f64>();
        let field = periodic_field(g, &[g, f], -4, 4);
        assert_eq!(coin_at(&field, 1), f);
        assert_eq!(coin_at(&field, -3), f);
        assert_eq!(coin_at(&field, 2), g);
        assert_eq!(coin_at(&field, 5), g);
    }

    #[test]
    fn model_names() {
        for m in BuiltinModel::ALL {
            assert_eq!(m.name().parse::<BuiltinModel>().unwrap(), m);
        }
        assert!("hadamard".parse::<BuiltinModel>().is_err());
    }
}
