use thiserror::Error;

/// Casebase validation failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("expected exactly two outcome labels, found {}: {}", .0.len(), .0.join(", "))]
    TooManyOutcomes(Vec<String>),
    #[error("outcome `{0}` is neither the default outcome nor its declared complement")]
    UnknownOutcome(String),
    #[error("default and complement outcome are both `{0}`")]
    IdenticalOutcomes(String),
    #[error("duplicate case id `{0}`")]
    DuplicateId(String),
    #[error("case id `{0}` is reserved for the new case")]
    ReservedId(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("secondary attacks require the supported (saacbr) mode")]
    SecondaryWithoutSupports,
    #[error("evaluation needs at least {required} cases, casebase has {actual}")]
    CasebaseTooSmall { required: usize, actual: usize },
    #[error("split ratio {0} leaves an empty training or test set")]
    InvalidSplit(f64),
    #[error(
        "framework with {actual} arguments is too large for exhaustive enumeration (limit {limit})"
    )]
    TooLargeForEnumeration { actual: usize, limit: usize },
}
