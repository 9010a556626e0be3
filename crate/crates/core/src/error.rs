use thiserror::Error;

/// Errors produced by configuration construction, the relation algebra and
/// the decomposition algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} cells, expected {degree}")]
    NotSquare { row: usize, len: usize, degree: usize },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeOverflow { degree: usize, max: usize },

    #[error("degree must be positive")]
    InvalidDegree,

    #[error("colors are not contiguous: color {missing} of 0..{rank} never occurs")]
    NonContiguousColors { missing: usize, rank: usize },

    #[error("C1: {0}")]
    InvalidDiagonal(String),

    #[error("C2: {0}")]
    InvalidTranspose(String),

    #[error("C3: {0}")]
    InvalidIntersectionNumbers(String),

    #[error("color {color} out of range for rank {rank}")]
    ColorOutOfRange { color: usize, rank: usize },

    #[error("relations belong to different configurations")]
    HomeMismatch,

    #[error("relation is not a parabolic")]
    NotAParabolic,

    #[error("equivalence closure is not a union of basis relations")]
    ClosureNotARelation,

    #[error("map is not a bijection of 0..{degree}")]
    NotABijection { degree: usize },

    #[error("not thick: decomposition requires a configuration without irreflexive thin relations")]
    NotThick,

    #[error("parabolics do not form a Cartesian decomposition: {0}")]
    NotCartesian(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("internal verification failed: {0}")]
    VerificationFailed(String),

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// The violated coherence axiom, for validation failures.
    pub fn axiom(&self) -> Option<&'static str> {
        match self {
            Error::InvalidDiagonal(_) => Some("C1"),
            Error::InvalidTranspose(_) => Some("C2"),
            Error::InvalidIntersectionNumbers(_) => Some("C3"),
            _ => None,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
