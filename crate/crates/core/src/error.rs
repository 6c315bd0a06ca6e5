use thiserror::Error;

/// Errors raised by set-family computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {t} is out of range (1..={max})")]
    InvalidGroundSet { t: u32, max: u32 },
    #[error("ground set size {t} exceeds the limit {limit} for this operation")]
    GroundSetTooLarge { t: u32, limit: u32 },
    #[error("element {element} is outside the ground set E_{t}")]
    ElementOutOfRange { element: u32, t: u32 },
    #[error("mask {bits:#x} has bits outside E_{t}")]
    MaskOutOfRange { bits: u64, t: u32 },
    #[error("families live on different ground sets ({left} vs {right})")]
    GroundSetMismatch { left: u32, right: u32 },
    #[error("family is not an antichain: {smaller:#x} is contained in {larger:#x}")]
    NotAnAntichain { smaller: u64, larger: u64 },
    #[error("clutter is trivial (empty family or {{empty set}})")]
    TrivialClutter,
    #[error("clutter is not self-dual")]
    NotSelfDual,
    #[error("family is not downward closed: {missing:#x} is missing")]
    NotAComplex { missing: u64 },
    #[error("complex is not star-self-dual")]
    NotStarSelfDual,
    #[error("complex has an empty vertex set")]
    EmptyVertexSet,
    #[error("ground set size {t} is odd")]
    OddGroundSet { t: u32 },
    #[error("cascade level must be at least 1, got {k}")]
    InvalidLevel { k: u32 },
    #[error("entry {index} = {value} is not a valid f-vector entry (0..={max})")]
    NotAnFVector { index: usize, value: i64, max: i64 },
    #[error("vector length {len} does not match ground set size {t}")]
    LengthMismatch { len: usize, t: u32 },
    #[error("integer overflow")]
    Overflow,
    #[error(
        "structural and cardinality self-duality tests disagree (structural: {structural}, cardinality: {cardinality})"
    )]
    CriterionDisagreement { structural: bool, cardinality: bool },
    #[error("line {line}: {message} (near `{token}`)")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
