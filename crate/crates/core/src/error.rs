use thiserror::Error;

/// Errors raised by poset construction, partition handling and the categorical
/// constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "invalid label {0:?}: labels must be non-empty, free of whitespace and not start with '#'"
    )]
    InvalidLabel(String),

    #[error("relation is not antisymmetric: {0} and {1} are mutually related")]
    Cycle(String, String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("partition is not regular: blocks {0} and {1} lie on a cycle")]
    NotRegular(String, String),

    #[error("not a set partition of the vertex set: {0}")]
    InvalidPartition(String),

    #[error("not a forest: the down-set of {0} is not a chain")]
    NotAForest(String),

    #[error("not a lattice: {0} and {1} have no {2}")]
    NotALattice(String, String, &'static str),

    #[error("a lattice needs at least one element")]
    EmptyLattice,

    #[error("size guard exceeded: {what} is {actual}, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
