use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("divisor is not a unit and does not divide exactly: {0}")]
    NonUnitDivisor(String),
    #[error("symbol {0} cannot be expanded as a series in epsilon")]
    UnexpandedSymbol(String),
    #[error("series division needs valuation {needed}, numerator has {found}")]
    DivisionObstruction { needed: usize, found: usize },
    #[error("rewrite step budget of {0} exceeded")]
    StepBudgetExceeded(u64),
    #[error("search budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("slot {slot} out of range for {n} tensor factors")]
    SlotOutOfRange { slot: usize, n: usize },
    #[error("unknown decoration: {0}")]
    UnknownDecoration(String),
    #[error("target is not in the span of the basis: {0}")]
    NotInSpan(String),
    #[error("basis is linearly dependent on every realization tried (rank {rank} < {size})")]
    AmbiguousExpansion { rank: usize, size: usize },
    #[error("irrep {m4} does not occur in the tensor product {dims:?}")]
    EmptyMultiplicity { dims: Vec<usize>, m4: usize },
    #[error("group closure exceeded {0} elements")]
    ClosureBudgetExceeded(usize),
    #[error("element is not in the image of the skein map: {0}")]
    NotInImage(String),
    #[error("fast path and diagram path disagree: {0}")]
    PathMismatch(String),
    #[error("crossing index not catalogued for ({0}, {1})")]
    UnsupportedPair(String, String),
    #[error("rank deficient: {0}")]
    RankDeficient(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}
