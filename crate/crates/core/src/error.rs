use thiserror::Error;

use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not divisor-closed: {divisor} divides {multiple} but is missing")]
    NotDivisorClosed {
        divisor: Monomial,
        multiple: Monomial,
    },

    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u64, cap: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0} is not square-free")]
    NotSquareFree(Monomial),

    #[error("multicomplex is not shifted under the requested variable order")]
    NotShifted,

    #[error("not a partition: parts must be weakly decreasing")]
    InvalidPartition,

    #[error("invalid variable order: {0}")]
    InvalidOrder(String),

    #[error("degree bound {bound} is below the required minimum {required}")]
    DegreeBound { bound: usize, required: usize },

    #[error("matrix is not symmetric: |a[{row}][{col}] - a[{col}][{row}]| = {gap}")]
    NotSymmetric { row: usize, col: usize, gap: f64 },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("vector length {found} does not match the {expected} matrix columns")]
    LengthMismatch { expected: usize, found: usize },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("N = {n} is outside the supported range 1..={max}")]
    RangeN { n: u64, max: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
