//! Error types, one enum per subsystem.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("log of zero function")]
    LogOfZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KahlerError {
    #[error("zero curve has no squared norm")]
    ZeroCurve,
    #[error("squared norm is not real-symmetric")]
    NotRealSymmetric,
    #[error("gram matrix is not conjugate-symmetric")]
    GramNotHermitian,
    #[error("gram matrix dimension {got} does not match curve dimension {want}")]
    GramDimension { got: usize, want: usize },
    #[error("degenerate metric")]
    DegenerateMetric,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported rank {rank} for family {family}")]
    UnsupportedRank { family: char, rank: usize },
    #[error("generator consistency check failed: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("wedge order {k} out of range 1..={max}")]
    WedgeOutOfRange { k: usize, max: usize },
    #[error("degree {degree} too small for ambient dimension {ambient} (need degree ≥ ambient − 1)")]
    DegreeTooSmall { degree: usize, ambient: usize },
    #[error("could not draw a nondegenerate curve within the retry budget")]
    RetryBudgetExhausted,
    #[error("curve has no nonzero entry")]
    ZeroVector,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpinError {
    #[error("matrix does not lie in so(Q)")]
    NotOrthogonal,
    #[error("highest weight verification failed: {0}")]
    HighestWeight(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
}

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("curve file error: {0}")]
    CurveFile(String),
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("all sample points degenerate")]
    AllPointsDegenerate,
    #[error(transparent)]
    Kahler(#[from] KahlerError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Spin(#[from] SpinError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
