use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("non-finite coordinate at index {index}")]
    NonFiniteInput { index: usize },

    #[error("non-finite sample at node {index} (x = {node})")]
    NonFiniteSample { index: usize, node: f64 },

    #[error("zero vector {name}")]
    ZeroVector { name: &'static str },

    #[error("vectors are linearly dependent (det = {det:e}, threshold = {threshold:e})")]
    DependentVectors { det: f64, threshold: f64 },

    #[error("invalid dimension {dim}: {reason}")]
    InvalidDimension { dim: usize, reason: &'static str },

    #[error("weight at index {index} is not strictly positive and finite ({value})")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },

    #[error("quadrature nodes must be finite and strictly increasing (violated at index {index})")]
    NodesNotIncreasing { index: usize },

    #[error("space is not a quadrature space")]
    NotQuadrature,

    #[error("tolerance {name} = {value} must lie in (0, 1)")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("no usable sample after {retries} consecutive draws")]
    DegenerateSample { retries: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
