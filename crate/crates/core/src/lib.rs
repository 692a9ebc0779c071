//! Extremal bounds for `|<x, b>|^2` over unit vectors `x` orthogonal to a
//! fixed `a`, in finite-dimensional inner-product spaces.
//!
//! For linearly independent `a`, `b` the supremum is
//! `(|a|^2 |b|^2 - |<a, b>|^2) / |a|^2`, attained by
//! `x = nu (b - (conj<a, b>/|a|^2) a)` with `|nu| = |a| / sqrt(det)`. The
//! dual problem, the smallest `x` with `<x, a> = 0` and `<x, b> = 1`, has the
//! closed form `(|a|^2 b - <b, a> a)/det` and squared norm `|a|^2/det`.
//!
//! The crate is generic over the coordinate field through [`Scalar`]
//! (`f32`, `f64`, `Complex<f32>`, `Complex<f64>`); the aliases below fix the
//! common 64-bit choices.

pub mod cli;
pub mod error;
pub mod ops;
pub mod scalar;
pub mod space;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
pub use ops::{
    deflated_schwarz, extremizer, gram2, inner, min_norm_solution, norm_sq, ostrowski_bound,
    project_out, schwarz_gap, DeflatedSides, GramSummary, MinNormSolution, Tolerances,
};
pub use scalar::{Real, Scalar};
pub use space::{Space, SpaceKind};
pub use vector::Vector;
pub use verify::{
    sample_feasible, verify_all, verify_bound, verify_deflated, verify_min_norm, RngSeed, Status,
    VerificationReport,
};

pub use num_complex::Complex;

pub type C64 = Complex<f64>;
pub type C32 = Complex<f32>;

pub type Space64 = Space<f64>;
pub type Space32 = Space<f32>;

pub type RealVector = Vector<f64>;
pub type ComplexVector = Vector<C64>;

pub type Tolerances64 = Tolerances<f64>;
pub type RealGram = GramSummary<f64>;
pub type ComplexGram = GramSummary<C64>;
pub type RealReport = VerificationReport<f64>;
pub type ComplexReport = VerificationReport<C64>;
