use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("vector length {0} is odd; expected interleaved (x, z) pairs")]
    OddLength(usize),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("generators on lines {first} and {second} anticommute")]
    NonCommuting { first: usize, second: usize },

    #[error("no generators given")]
    Empty,

    #[error("code encodes no logical qubits; distance is undefined")]
    NoLogicalQubits,

    #[error("distance enumeration is capped at n = {max}, code has n = {n}")]
    DistanceCap { n: usize, max: usize },

    #[error("element set {0:#06x} is not a subalgebra of M2(F2)")]
    NotAnAlgebra(u16),

    #[error("search limit {cap} exceeded{}", predicted.as_ref().map(|p| format!(" (predicted order {p})")).unwrap_or_default())]
    CapExceeded {
        cap: u64,
        predicted: Option<BigUint>,
    },

    #[error("order of family case {case} at l = {ell} is not available")]
    OrderUnavailable { case: usize, ell: usize },

    #[error("code is not generic (family case {0})")]
    NotGeneric(usize),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
