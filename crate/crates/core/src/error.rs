use thiserror::Error;

/// Errors shared across the algebra and factorization layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    ZeroDenominator,
    #[error("expected {expected} substitution images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("components are not homogeneous of a common degree")]
    Inhomogeneous,
    #[error("all components are zero")]
    ZeroTuple,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("composition collapsed to the zero tuple (image meets indeterminacy locus)")]
    DegenerateComposition,
    #[error("chart component is identically zero")]
    ZeroChartComponent,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("coincident points: {0}")]
    CoincidentPoints(&'static str),
    #[error("determinant is not 1")]
    NotSpecialLinear,
    #[error("determinant is not a unit: {0}")]
    NotUnimodular(String),
    #[error("determinant has no rational {0}-th root up to sign; requires scalar extension")]
    NoScalarRoot(usize),
    #[error("supplied inverse is not a two-sided inverse")]
    NotInverse,
    #[error("{0}")]
    Classification(String),
    #[error("word is not reduced: {0}")]
    NotReduced(String),
    #[error("unknown corpus entry id: {0}")]
    UnknownCorpusId(String),
    #[error("unknown bound class: {0}")]
    UnknownBoundClass(String),
    #[error("missing parameter `{0}` for bound formula")]
    MissingBoundParam(&'static str),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
