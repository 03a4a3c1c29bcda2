use thiserror::Error;

/// Errors raised by the keyscan library.
///
/// Variants fall in two groups. Input problems (bad partitions, bad
/// fillings, out-of-range indices) are ordinary validation failures. The
/// variants for which [`Error::is_internal`] returns `true` indicate that an
/// invariant the algorithms rely on was observed to fail; they should never
/// occur and are reported as bugs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("rank mismatch: expected n = {expected}, found n = {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("row weakness violated at ({column},{row}): {left} > {right}")]
    RowViolation {
        column: usize,
        row: usize,
        left: usize,
        right: usize,
    },

    #[error("column strictness violated at ({column},{row}): {above} >= {below}")]
    ColumnViolation {
        column: usize,
        row: usize,
        above: usize,
        below: usize,
    },

    #[error("value {value} at ({column},{row}) outside [1,{n}]")]
    ValueOutOfRange {
        column: usize,
        row: usize,
        value: usize,
        n: usize,
    },

    #[error("cell ({column},{row}) is not in the shape")]
    CellOutsideShape { column: usize, row: usize },

    #[error("shape mismatch")]
    ShapeMismatch,

    #[error("tableau is not a key")]
    NotAKey,

    #[error("generator exceeded the cap of {cap} live frames")]
    FrameCapExceeded { cap: usize },

    #[error("generator exceeded its time cap")]
    TimeCapExceeded,

    #[error("coefficient overflow")]
    Overflow,

    #[error("internal: nonzero remainder in exact division")]
    NonzeroRemainder,

    #[error("internal: {0}")]
    Invariant(String),
}

impl Error {
    /// `true` for invariant breaches (bug sentinels) as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Overflow | Error::NonzeroRemainder | Error::Invariant(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
