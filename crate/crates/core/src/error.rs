use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("not a height-two Hilbert function: {0}")]
    NonUnimodalShape(String),
    #[error("degree {degree} outside the block range {low}..={high}")]
    DegreeOutOfRange { degree: usize, low: usize, high: usize },
    #[error("Hilbert function {0} has more than one block")]
    NotSingleBlock(String),
    #[error("block {0} is empty")]
    EmptyBlock(usize),
    #[error("hook code does not fit its boxes: {0}")]
    BoxOverflow(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
