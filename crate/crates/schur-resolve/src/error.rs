use thiserror::Error;

/// Crate-wide error type. Every variant is a caller-visible contract
/// violation; internal invariants use assertions instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parts must be weakly increasing: {0}")]
    NotWeaklyIncreasing(String),

    #[error("cannot parse partition entry {0:?}")]
    BadPartitionEntry(String),

    #[error("expected {expected} slots, got {got}")]
    WrongSlotCount { expected: usize, got: usize },

    #[error("part {part} exceeds the allowed maximum {max}")]
    PartTooLarge { part: u32, max: u32 },

    #[error("{what} = {value} out of range [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("{what}: expected length {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error(
        "entry ({row},{col}) of the morphism has degree {degree} < 1; the morphism must be minimal"
    )]
    NonMinimalDegree { row: usize, col: usize, degree: i64 },

    #[error("adjacency requires consecutive homological degrees (got {left} and {right})")]
    NotConsecutive { left: i64, right: i64 },

    #[error("adjacency requires both derived partitions to be present")]
    DerivedAbsent,

    #[error("multiset difference went negative at twist {twist}")]
    NegativeMultiplicity { twist: i64 },

    #[error("no summand labeled {label:?} with rank {rank} at twist {twist}")]
    MissingSummand {
        twist: i64,
        label: String,
        rank: u64,
    },

    #[error("unknown output format {0:?} (expected text, json or csv)")]
    UnknownFormat(String),

    #[error("unsupported codimension c = {c}; supported: {supported}")]
    UnsupportedCodim { c: u32, supported: &'static str },

    #[error("unsupported rank t = {t}: {why}")]
    UnsupportedRank { t: u32, why: &'static str },

    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),

    #[error("specialized matrix does not match the morphism spec")]
    SpecMismatch,

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
