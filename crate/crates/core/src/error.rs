use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {position}: {message}")]
    Parse { message: String, position: usize },

    #[error("valuation undefined for the zero polynomial")]
    ZeroValuation,

    #[error("invalid braid: {0}")]
    InvalidBraid(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error(
        "budget exceeded: {strands} strands and {letters} letters after reduction \
         (limits {max_strands} strands, {max_letters} letters)"
    )]
    BudgetExceeded {
        strands: usize,
        letters: usize,
        max_strands: usize,
        max_letters: usize,
    },

    #[error("weights must be even (vertex {vertex} has weight {weight})")]
    OddWeight { vertex: usize, weight: i64 },

    #[error("zero weight at vertex {vertex}")]
    ZeroWeight { vertex: usize },

    #[error("formula out of scope: tree is not strongly excessive (failing vertices {failing:?})")]
    NotStronglyExcessive { failing: Vec<usize> },

    #[error("inconsistent quasipositive data: {0}")]
    InconsistentQuasipositive(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("genus kind mismatch: {0}")]
    GenusKind(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-contract input, as
    /// opposed to resource limits.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::BudgetExceeded { .. })
    }
}
