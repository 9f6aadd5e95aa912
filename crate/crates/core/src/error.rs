use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("Clifford dimension must be an even integer >= 4, got {0}")]
    Dimension(usize),

    #[error("gamma index {index} out of range for C_{n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("matrix size mismatch: expected {expected}x{expected}, got {got_rows}x{got_cols}")]
    SizeMismatch {
        expected: usize,
        got_rows: usize,
        got_cols: usize,
    },

    #[error("projector validation failed: {0}")]
    Projector(String),

    #[error("commutator closure failed for generator pair ({i}, {j}): residual {residual:.3e}")]
    Closure { i: usize, j: usize, residual: f64 },

    #[error("operation requires N = {expected}, algebra has N = {got}")]
    WrongAlgebra { expected: usize, got: usize },

    #[error("group/spin dimension mismatch: {0}")]
    GroupDimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
