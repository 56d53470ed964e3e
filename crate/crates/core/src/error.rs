use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("degree {k} out of range for a form of degree {d}")]
    DegreeOutOfRange { k: u32, d: u32 },
    #[error("the zero polynomial has no apolar algebra")]
    ZeroPolynomial,
    #[error("expected socle dimension 1, found {dim} (hilbert {hilbert:?})")]
    SocleDimension { dim: usize, hilbert: Vec<usize> },
    #[error("inconsistent ideal pieces: {0}")]
    InconsistentPieces(String),
    #[error("empty point list")]
    EmptyPoints,
    #[error("points {0} and {1} coincide projectively")]
    CoincidentPoints(usize, usize),
    #[error("expected a cubic, got degree {0}")]
    NotCubic(u32),
    #[error("invalid scroll: {0}")]
    InvalidScroll(String),
    #[error("divisor classes live on different scrolls")]
    ScrollMismatch,
    #[error("expected {expected} factors, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate construction: {0}")]
    Degenerate(String),
    #[error("found {found} of {wanted} points within the search budget")]
    InsufficientPoints { found: usize, wanted: usize },
    #[error("degree-{degree} ideal piece has dimension {found}, expected {expected}")]
    IdealDimension { degree: u32, expected: usize, found: usize },
    #[error("evaluation ranks not saturated: {before:?} -> {after:?}")]
    Unsaturated { before: Vec<usize>, after: Vec<usize> },
    #[error("hilbert certificate failed: {0:?}")]
    HilbertCertificate(Vec<usize>),
    #[error("restricted hyperplane section has degree {found}, expected {expected}")]
    GammaDegree { expected: usize, found: usize },
    #[error("root finding failed: {0}")]
    RootFinding(String),
    #[error("power-sum fit failed, residual {0:e}")]
    FitFailed(f64),
    #[error("negative genus {0}")]
    NegativeGenus(i64),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Malformed or out-of-contract input, as opposed to a failed certificate.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NvarsMismatch(..)
                | Error::DegreeMismatch(..)
                | Error::Shape(_)
                | Error::DegreeOutOfRange { .. }
                | Error::ZeroPolynomial
                | Error::EmptyPoints
                | Error::NotCubic(_)
                | Error::InvalidScroll(_)
                | Error::ScrollMismatch
                | Error::Arity { .. }
                | Error::InvalidInput(_)
                | Error::Parse(_)
                | Error::Json(_)
                | Error::Io(_)
        )
    }
}
