use thiserror::Error;

/// Errors raised anywhere in the analysis pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed decimal literal `{0}`")]
    Decimal(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("endpoint {0} is a root; perturb the interval")]
    EndpointRoot(String),

    #[error("degenerate family: {0}")]
    DegenerateFamily(String),

    #[error(
        "Re P(jw) and Im P(jw) share the factor {0}, which depends on w; \
         the region-count bounds require them to have no common divisor depending on w"
    )]
    CommonFactor(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("sample point ({r}, {p}) has a root on the stability boundary")]
    BorderContact { r: String, p: String },

    #[error("leading coefficient vanishes at ({r}, {p})")]
    DegreeDrop { r: String, p: String },

    #[error("segment lies inside the curve")]
    DegenerateSegment,

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("region count {count} exceeds the curve-complement bound {bound} for degree {degree}")]
    BoundViolation { count: usize, bound: u128, degree: u32 },

    #[error("integer overflow while evaluating bound")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
