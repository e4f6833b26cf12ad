use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("wire count must be at least 1")]
    EmptyWireSet,
    #[error("wire {wire} out of range for {n} wires")]
    WireOutOfRange { wire: usize, n: usize },
    #[error("swap {0}{0} is a self-swap")]
    SelfSwap(usize),
    #[error("wire counts differ: {left} vs {right}")]
    WireCountMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("permutations {index} and {} are not adjacent", index + 1)]
    NotAdjacent { index: usize },
    #[error("a tangle needs at least one permutation")]
    EmptyTangle,
    #[error("list is not simple")]
    NotSimple,
    #[error("list is not odd")]
    NotOdd,
    #[error("list is not even")]
    NotEven,
    #[error("list is not feasible")]
    NotFeasible,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("too many wires ({n}) for this solver (max {max})")]
    TooManyWires { n: usize, max: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("no feasible list found after {0} rejection rounds")]
    RejectionCapExceeded(usize),
    #[error("invalid render settings: {0}")]
    InvalidRenderSpec(String),
}

pub type Result<T> = std::result::Result<T, TangleError>;
