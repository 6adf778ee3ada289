use crate::decomposition::VerifyFailure;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("ideal is not squarefree")]
    NotSquarefree,
    #[error("ideal must be nonzero and proper")]
    ImproperIdeal,
    #[error("ideal is not unmixed")]
    NotUnmixed,
    #[error("graph has no edges; the empty intersection would be the unit ideal")]
    EdgelessGraph,
    #[error("quotient pair requires J \u{2286} I")]
    NotNested,
    #[error("{0} variables exceed the supported limit of {1} for exhaustive search")]
    TooManyVariables(usize, usize),
    #[error("poset has {points} points, over the configured limit of {limit}")]
    PosetTooLarge { points: usize, limit: usize },
    #[error("time budget of {secs} s exceeded")]
    TimeBudgetExceeded { secs: u64 },
    #[error("decomposition is invalid: {0}")]
    InvalidDecomposition(VerifyFailure),
    #[error("image of {monomial} lies in {count} source spaces; instance or input decomposition is malformed")]
    BadSpaceLookup { monomial: String, count: usize },
    #[error("emitted root {root} escapes its source space; input decomposition is inconsistent")]
    RootClaimFailed { root: String },
    #[error("verification box exceeded the growth limit during transfer")]
    BoxGrowthExceeded,
    #[error("membership-equivalence condition fails at {monomial}; the pairs and the map are inconsistent")]
    ConditionViolated { monomial: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
