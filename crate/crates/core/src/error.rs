use thiserror::Error;

/// Errors raised while building or analysing finite orders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order relation is not antisymmetric: {a} <= {b} and {b} <= {a}")]
    Cycle { a: String, b: String },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("cover pair ({0}, {0}) is reflexive; covers are strict")]
    ReflexiveCover(String),

    #[error("invalid order relation: {0}")]
    InvalidRelation(String),

    #[error("not a lattice: {a} and {b} lack a {missing}")]
    NotALattice {
        a: String,
        b: String,
        missing: &'static str,
    },

    #[error("a lattice needs at least one element")]
    EmptyLattice,

    #[error("size limit exceeded for {what}: {size} > {cap}")]
    SizeLimit { what: &'static str, size: u128, cap: u128 },

    #[error("unknown example name `{0}`")]
    UnknownName(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, OrderError>;
