//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field parameter: {0}")]
    InvalidField(String),

    #[error("element {bits:#x} is out of range for GF(2^{k})")]
    FieldElemOutOfRange { bits: u32, k: u32 },

    #[error("division by zero in GF(2^{k})")]
    DivisionByZero { k: u32 },

    #[error("unknown group descriptor `{0}`")]
    UnknownDescriptor(String),

    #[error("group parameter out of range: {0}")]
    BadGroupParameter(String),

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("subgroup is not normal in its parent")]
    NotNormal,

    #[error("element `{0}` is not a central involution")]
    NotCentralInvolution(String),

    #[error("subgroup does not have the required index/order: {0}")]
    BadSubgroup(String),

    #[error("operands belong to different group algebras")]
    AlgebraMismatch,

    #[error("element is not a normalized unit (augmentation != 1)")]
    NotNormalized,

    #[error("enumeration of {required} candidates exceeds the bound {bound}")]
    Infeasible { required: String, bound: u64 },

    #[error("hypothesis `{hypothesis}` failed{}", witness.as_ref().map(|w| format!(": {w}")).unwrap_or_default())]
    HypothesisFailed {
        hypothesis: String,
        witness: Option<String>,
    },

    #[error("no covered method for group `{group}`: {detail}")]
    UncoveredGroup { group: String, detail: String },

    #[error("order formula does not apply to `{group}`: {detail}")]
    FamilyNotCovered { group: String, detail: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
