use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("precision unreachable: tail bound {tail:e} above tolerance {tol:e} at radius {radius}")]
    PrecisionUnreachable { tail: f64, tol: f64, radius: usize },
    #[error("non-invertible denominator")]
    NonInvertibleDenominator,
    #[error("outside family domain: Im t = {im_t} <= {bound}")]
    OutsideDomain { im_t: f64, bound: f64 },
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("relation too long: length {len} exceeds cap {cap}")]
    RelationTooLong { len: usize, cap: usize },
    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),
    #[error("conductor {0} exceeds the cap 720")]
    ConductorTooLarge(u64),
    #[error("bounded variable must be nonzero")]
    BoundedVariableZero,
    #[error("leading term vanishes; use secondary term")]
    LeadingTermVanishes,
    #[error("unexpected fixed-part rank {0}")]
    UnexpectedFixedRank(usize),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
