use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank n = {0} is outside the supported range 1..={max}", max = crate::MAX_RANK)]
    RankOutOfRange(usize),

    #[error("index {index} is not a generator index for rank n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("mismatched ranks: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("cannot parse subset {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{0:?} is not a permutation of 1..=n")]
    InvalidPermutation(Vec<usize>),

    /// A presentation that fails to reduce some non-square-free monomial.
    #[error(
        "incomplete presentation at n = {n}, degree {degree}: monomial {monomial} is not a pivot"
    )]
    IncompletePresentation {
        n: usize,
        degree: usize,
        monomial: String,
    },

    /// A mathematical invariant failed (non-integral or negative constant,
    /// engine disagreement, ...).
    #[error("consistency failure: {0}")]
    Consistency(String),
}
