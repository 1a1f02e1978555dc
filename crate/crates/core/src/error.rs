use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("{lambda} is not a ({m}|{n})-hook partition")]
    NotHook { lambda: Partition, m: usize, n: usize },

    #[error("operation needs a nonempty Borel sequence")]
    EmptyBorel,

    #[error("invalid Borel sequence {0:?}: expected only 'd' and 'e'")]
    BadBorel(String),

    #[error("Borel sequence has counts ({got_m}|{got_n}), expected ({m}|{n})")]
    BorelMismatch { m: usize, n: usize, got_m: usize, got_n: usize },

    #[error("rank m+n = {rank} exceeds the cap of {cap}")]
    TooLarge { rank: usize, cap: usize },

    #[error("letter {letter} is out of range for gl({m}|{n})")]
    LetterOutOfRange { letter: String, m: usize, n: usize },

    #[error("invalid letter {0:?}")]
    BadLetter(String),

    #[error("row lengths {rows:?} do not match shape {shape}")]
    ShapeMismatch { shape: Partition, rows: Vec<usize> },

    #[error("content has {got_m} unbarred and {got_n} barred counts, expected {m} and {n}")]
    ContentMismatch { m: usize, n: usize, got_m: usize, got_n: usize },

    #[error("tableau is not b-semistandard for {0}")]
    NotSemistandard(String),

    #[error("invalid branching chain: {0}")]
    InvalidChain(String),

    #[error("search exceeded the node limit of {0}")]
    NodeLimit(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
