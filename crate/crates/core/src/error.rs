use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column (got {rows}x{cols})")]
    EmptyMatrix { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("the zero vector has no primitive form")]
    ZeroVector,

    #[error("invalid generators: {0}")]
    InvalidGenerators(String),

    #[error("variable blocks differ: {0}")]
    BlockMismatch(String),

    #[error("generators are not homogeneous for the ideal's grading weights")]
    NotHomogeneous,

    #[error(
        "rank conditions fail: rk A = {rank_a}, rk B = {rank_b}, rk [A|B] = {rank_ab}, n = {n}"
    )]
    RankConditionsFail {
        rank_a: usize,
        rank_b: usize,
        rank_ab: usize,
        n: usize,
    },

    #[error("binomial is not in the ideal of C: {0}")]
    NotInIdeal(String),

    #[error("{0} and {1} are not relatively prime")]
    NotCoprime(u64, u64),

    #[error("enumeration exceeded the work limit of {limit} points")]
    BoundTooLarge { limit: usize },

    #[error("homological propagation requires a verified gluing")]
    NotAGluing,

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
