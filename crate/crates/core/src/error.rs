use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex has no boundary")]
    VertexBoundary,
    #[error("expected a cell of dimension {expected}, got {got} ({cell})")]
    WrongDimension {
        expected: usize,
        got: usize,
        cell: String,
    },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("scale mismatch: {0} vs {1}")]
    ScaleMismatch(i32, i32),
    #[error("symmetry does not preserve the lattice: {0}")]
    NotLatticePreserving(String),
    #[error("invalid symmetry: {0}")]
    InvalidSymmetry(String),
    #[error("variable {0} is outside the operator's universe")]
    OutsideUniverse(String),
    #[error("invalid areas: {0}")]
    InvalidAreas(String),
    #[error("generator is not a homogeneous linear form: {0}")]
    NotLinear(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid operator spec: {0}")]
    InvalidSpec(String),
}
