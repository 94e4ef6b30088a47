use thiserror::Error;

/// Errors raised by the form, resolvent and equivalence routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("undefined roots: zero polynomial")]
    ZeroPolynomial,
    #[error("zero form")]
    ZeroForm,
    #[error("zero bihomogeneous form")]
    ZeroBiForm,
    #[error("discriminant is zero")]
    ZeroDiscriminant,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("different discriminants")]
    DiscriminantMismatch,
    #[error("resolvent algebra mismatch")]
    AlgebraMismatch,
    #[error("evaluation point (0,0) is not allowed")]
    ZeroPoint,
    #[error("no rational linear factor")]
    NoLinearFactor,
    #[error("not a norm-P^3 element")]
    NotNormPCubed,
    #[error("invalid invariant: {0}")]
    InvalidInvariant(&'static str),
    #[error("leading coefficient zero; use rational_roots_of_form")]
    LeadingCoefficientZero,
    #[error("reducible bilinear form")]
    ReducibleBilinear,
    #[error("scaling obstruction")]
    ScalingObstruction,
    #[error("covering map undefined at z=0")]
    CoverAtInfinity,
    #[error("point not on cover")]
    NotOnCover,
    #[error("bidegree mismatch: expected {expected:?}, got {got:?}")]
    Bidegree {
        expected: (usize, usize),
        got: (usize, usize),
    },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
