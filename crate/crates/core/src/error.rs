use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds cap: {order} > {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    #[error("generator {index} is not a permutation of degree {degree}")]
    NotAPermutation { index: usize, degree: usize },

    #[error("cayley table is not a group: {0}")]
    NotAGroup(String),

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal in the given overgroup")]
    NotNormal,

    #[error("mobius function is undefined at 0")]
    MobiusZero,

    #[error("galois exponent {k} is not coprime to conductor {e}")]
    NotCoprime { k: i64, e: usize },

    #[error("class function is not rational valued at class {class}")]
    NotRational { class: usize },

    #[error("class function is not constant on generators of <g> at class {class}")]
    NotPowerInvariant { class: usize },

    #[error("operands belong to different groups")]
    GroupMismatch,

    #[error("character table computation failed: {0}")]
    Dixon(String),

    #[error("character table is invalid: {0}")]
    InvalidCharacterTable(String),

    #[error("artin reconstruction failed at class {class}")]
    Reconstruction { class: usize },

    #[error("idempotent routes disagree for rational class {class}: {detail}")]
    RouteMismatch { class: usize, detail: String },
}
