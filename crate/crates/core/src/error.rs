use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Variants split into two kinds. Input errors come from arguments a caller
/// can fix. Consistency errors mean two independent computations disagreed,
/// which points at a bug rather than at the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("weight lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("cannot reflect in the zero vector")]
    ZeroRoot,

    #[error("positivity is undefined for the zero weight")]
    ZeroWeight,

    #[error("reflection of {weight} in {root} leaves the integer lattice")]
    NonIntegralReflection { weight: String, root: String },

    #[error("{weight} is not in the root lattice of {family}{rank}")]
    NotInRootLattice {
        weight: String,
        family: char,
        rank: usize,
    },

    #[error("invalid block layout: {0}")]
    InvalidBlocks(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid case {case}: {reason}")]
    InvalidCase { case: String, reason: String },

    #[error("invalid cycle {cycle} for {case}: {reason}")]
    InvalidCycle {
        case: String,
        cycle: String,
        reason: String,
    },

    #[error("invalid index set: {0}")]
    InvalidSubset(String),

    #[error("invalid Hodge numbers: {0}")]
    InvalidHodge(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl FlagError {
    /// True for errors caused by the caller's input, false for internal
    /// consistency failures.
    pub fn is_input(&self) -> bool {
        !matches!(self, FlagError::Consistency(_))
    }
}

pub type Result<T> = std::result::Result<T, FlagError>;
