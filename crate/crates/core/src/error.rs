use std::io;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("generator entry t{index} = {value} is negative or not finite")]
    NegativeEntry { index: usize, value: f64 },
    #[error("generator entries sum to {sum}, expected 1")]
    SumNotOne { sum: f64 },
    #[error("level count {0} is outside the supported range {1}")]
    InvalidLevels(u32, &'static str),
    #[error("noise level {noise} is outside [0, {max}]")]
    NoiseOutOfRange { noise: f64, max: f64 },
    #[error("ratio condition needs t2 > 0 and t4 > 0")]
    DegenerateMatrix,
    #[error("degree sequence has zero total weight")]
    ZeroTotalWeight,
    #[error("invalid degree sequence: {0}")]
    InvalidDegrees(String),
    #[error("spectra describe different level counts ({0} vs {1})")]
    MismatchedLevels(u32, u32),
    #[error("eigensolver did not converge (residual {residual:e})")]
    ConvergenceFailure { residual: f64 },
    #[error("malformed edge-list line {line}: {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("edge list contains no edges")]
    EmptyInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}
