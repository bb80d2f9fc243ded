//! Stationary measures of one-dimensional three-state coined quantum walks.
//!
//! The eigenvalue problem `UΨ = λΨ` (`|λ| = 1`) for the whole-line walk
//! operator is solved site by site with 3×3 transfer matrices, starting from
//! an admissible `Ψ(0)`. Each solution gives a stationary measure
//! `μ(x) = |Ψ(x)|²`. A direct implementation of the one-step evolution
//! ([`oracle`]) checks every transfer-matrix result independently.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`). The aliases at
//! the crate root fix the scalar to `f64`, which the CLI uses.
//!
//! ```
//! use qwalk3::{models, propagate, measure_profile, Complex64, Triple};
//!
//! let field = models::grover_field();
//! let psi0 = Triple::real(1.0, 0.0, -1.0);
//! let seg = propagate(&field, Complex64::new(-1.0, 0.0), psi0, -5, 5).unwrap();
//! let mu = measure_profile(&seg);
//! assert!(mu.values().iter().all(|m| (m - 2.0).abs() < 1e-12));
//! ```

pub mod coin;
pub mod config;
mod error;
pub mod linalg;
pub mod measure;
pub mod models;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod segment;
pub mod transfer;

pub use num_complex::{Complex32, Complex64};

pub use coin::{coin_at, decompose, make_coin};
pub use error::Error;
pub use measure::{classify, measure_profile, phi, MeasureKind};
pub use oracle::{eigen_residual, stationarity_deviation, step};
pub use scalar::{Cplx, Real};
pub use transfer::{
    origin_constraint, propagate, site_constraint, solve_initial_states, transfer_minus,
    transfer_plus, Direction, InitialStates,
};

pub type Triple = linalg::ComplexTriple<f64>;
pub type Matrix3 = linalg::Mat3<f64>;
pub type CoinMatrix = coin::CoinMatrix<f64>;
pub type CoinDecomposition = coin::CoinDecomposition<f64>;
pub type CoinField = coin::CoinField<f64>;
pub type AmplitudeSegment = segment::AmplitudeSegment<f64>;
pub type TransferMatrix = transfer::TransferMatrix<f64>;
pub type OriginConstraint = transfer::OriginConstraint<f64>;
pub type MeasureProfile = measure::MeasureProfile<f64>;
pub type MeasureClassification = measure::MeasureClassification<f64>;

pub type Triple32 = linalg::ComplexTriple<f32>;
pub type CoinField32 = coin::CoinField<f32>;
pub type AmplitudeSegment32 = segment::AmplitudeSegment<f32>;
