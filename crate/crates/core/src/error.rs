use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// Variants map onto stable CLI exit codes through [`AtlasError::exit_code`].
#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("zero polynomial is not a valid input")]
    ZeroPolynomial,

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("singular curve: discriminant is zero")]
    SingularCurve,

    #[error("point is not on the curve")]
    OffCurvePoint,

    #[error("unsupported torsion order {0}; expected one of 2, 3, 4, 5, 7, 8, 9")]
    UnsupportedOrder(u32),

    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("sporadic isogeny data: {0}")]
    SporadicData(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl AtlasError {
    /// 0 success, 1 usage error, 2 invariant violation, 3 I/O error.
    pub fn exit_code(&self) -> i32 {
        match self {
            AtlasError::InvariantViolation(_) => 2,
            AtlasError::Io(_) => 3,
            _ => 1,
        }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        AtlasError::InvariantViolation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, AtlasError>;
