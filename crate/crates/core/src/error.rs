use thiserror::Error;

/// Errors shared by every module in the crate.
///
/// Domain failures (degenerate input, infeasible searches) are distinguished
/// from structural ones (dimension mismatches, malformed data) so callers can
/// map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial has no root bound")]
    ConstantPolynomial,
    #[error("not square-free")]
    NotSquareFree,
    #[error("malformed rational `{0}`")]
    BadRational(String),
    #[error("{0}")]
    BadInput(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid intersection form: {0}")]
    BadForm(String),
    #[error("degenerate class")]
    DegenerateClass,
    #[error("reference class not plausibly ample")]
    ReferenceNotAmple,
    #[error("inconsistent data: reference class not ample or intersection form not geometric")]
    InconsistentData,
    #[error("class is not integral")]
    NonIntegralClass,
    #[error("pair index condition does not hold")]
    PairConditionFails,
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("not totally real: found {found} real roots for degree {degree}")]
    NotTotallyReal { found: usize, degree: usize },
    #[error("defining polynomial must be monic with integer coefficients")]
    NotMonicInteger,
    #[error("degenerate Hermitian form")]
    DegenerateHermitianForm,
    #[error("degenerate element")]
    DegenerateElement,
    #[error("point is not in the upper half plane")]
    NotUpperHalf,
    #[error("embedding subsets overlap or are out of range")]
    BadEmbeddingSubsets,
    #[error("search cap exceeded after {iterations} rounds (interval width {width}, scale {scale})")]
    SearchCapExceeded {
        iterations: u64,
        width: String,
        scale: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
