use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix shapes do not match: {0}")]
    ShapeMismatch(String),
    #[error("subspace is not totally isotropic")]
    NotTotallyIsotropic,
    #[error("no complement of the requested kind exists")]
    NoSuchComplement,
    #[error("too many parameters: {parameters} parameters need {points} evaluation points (limit {limit})")]
    TooManyParameters { parameters: usize, points: u128, limit: u128 },
    #[error("metric is degenerate")]
    DegenerateMetric,
    #[error("Gram matrix is degenerate")]
    DegenerateGram,
    #[error("form is not positive definite")]
    NotPositiveDefinite,
    #[error("metric is not ad-invariant: violation at basis triple {0:?}")]
    NotAdInvariant((usize, usize, usize)),
    #[error("Lie algebra is not 2-step nilpotent")]
    NotTwoStep,
    #[error("trilinear form is not alternating at {0:?}")]
    NotAlternating((usize, usize, usize)),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid rho map: {0}")]
    InvalidRho(String),
    #[error("map is not a skew-symmetric derivation")]
    NotSkewDerivation,
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("algebra is not eligible: {0}")]
    NotEligible(String),
    #[error("endomorphism is not skew-symmetric for the metric")]
    NotSkew,
    #[error("endomorphism is not a classical r-matrix: Jacobi fails at {0:?}")]
    NotClassical((usize, usize, usize)),
    #[error("dimension {0} is odd")]
    OddDimension(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
