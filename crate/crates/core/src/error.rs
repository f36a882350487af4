use crate::rational::Rational;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("interval endpoints must satisfy a < b, got {a} and {b}")]
    EmptyInterval { a: Rational, b: Rational },

    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),

    #[error("point {x} lies outside the open interval {domain}")]
    PointOutsideDomain { x: Rational, domain: String },

    #[error("atom location {x} is not admissible on {domain}")]
    AtomOutsideDomain { x: Rational, domain: String },

    #[error("density piece ({lo},{hi}) does not fit the domain partition")]
    BadDensityPiece { lo: Rational, hi: Rational },

    #[error("pieces must be contiguous: expected next piece to start at {expected}, got {got}")]
    NonContiguous { expected: Rational, got: Rational },

    #[error("piece endpoints must satisfy x_lo < x_hi, got {lo} and {hi}")]
    EmptyPiece { lo: Rational, hi: Rational },

    #[error("a piecewise function needs at least one piece")]
    NoPieces,

    #[error("ambient interval must strictly contain the closed interval {domain}")]
    AmbientTooSmall { domain: String },

    #[error("test function must be continuous at {x}")]
    DiscontinuousTestFunction { x: Rational },

    #[error("test function must vanish at both endpoints")]
    TestFunctionNotVanishing,

    #[error("Dirichlet datum must be continuous (jump at {x})")]
    DiscontinuousDatum { x: Rational },

    #[error("divergence of the field is not nonpositive")]
    DivergenceNotNonpositive,

    #[error("dimension must be a positive integer")]
    ZeroDimension,

    #[error("region is not contained in the closure of the domain")]
    RegionOutsideDomain,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("family member {index} is not below its successor")]
    FamilyNotMonotone { index: usize },

    #[error("family member {index} is not certified, so the hypothesis fails")]
    FamilyMemberNotCertified { index: usize },

    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("failed to read {path}: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
