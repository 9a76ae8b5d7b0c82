use alloc::string::String;
use thiserror::Error;

/// Errors reported by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation image list is not a bijection")]
    InvalidImages,
    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("domain must contain at least one point")]
    EmptyDomain,
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("unknown element label `{label}`")]
    UnknownLabel { label: String },
    #[error("duplicate element label `{label}`")]
    DuplicateLabel { label: String },
    #[error("covering relations induce a cycle through `{label}`")]
    CyclicCovers { label: String },
    #[error("elements must be distinct, got `{label}` twice")]
    NotDistinct { label: String },
    #[error("index {index} out of range for {count} elements")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("subset is not ancestral (not upward closed)")]
    NotAncestral,
    #[error("subsets are not nested: the kernel set must lie inside the projection set")]
    NotNested,
    #[error("element does not belong to this group (shape mismatch)")]
    ShapeMismatch,
    #[error("point has the wrong number of coordinates")]
    PointMismatch,
    #[error("coordinate {value} out of range for a domain of size {size}")]
    CoordinateOutOfRange { value: usize, size: usize },
    #[error("{what} would need {needed} entries, above the configured limit {limit}")]
    TooLarge {
        what: &'static str,
        needed: u64,
        limit: u64,
    },
    #[error("element `{label}` is not minimal in the poset")]
    NotMinimal { label: String },
    #[error("element lies outside the requested subgroup")]
    NotInSubgroup,
    #[error("operation requires a {expected} poset")]
    WrongPosetShape { expected: &'static str },
    #[error("factor at `{label}` is not transitive")]
    IntransitiveFactor { label: String },
    #[error("factor at `{label}` is not the full symmetric group")]
    NonSymmetricFactor { label: String },
    #[error("domain at `{label}` must have at least two points")]
    DomainTooSmall { label: String },
    #[error("certification requires at least two poset elements")]
    TooFewIndices,
    #[error("{what}: search budget exhausted after {attempts} attempts")]
    BudgetExhausted { what: &'static str, attempts: u64 },
    #[error("{what}: constructed witness failed verification")]
    ConstructionFailed { what: &'static str },
    #[error("parse error: {msg}")]
    Parse { msg: String },
}

pub type Result<T> = core::result::Result<T, Error>;
