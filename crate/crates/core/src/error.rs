use num_bigint::BigUint;
use thiserror::Error;

use crate::rho::RhoViolation;

/// Errors produced by the tableau, move, code and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: part {index} ({part}) {reason}")]
    InvalidPartition {
        index: usize,
        part: usize,
        reason: &'static str,
    },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("enumeration of {count} objects exceeds the cap of {cap}")]
    CapExceeded { count: BigUint, cap: u64 },

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("entry {entry} is out of range 1..={n}")]
    EntryOutOfRange { entry: usize, n: usize },

    #[error("move delta_{entry} is not applicable: {reason}")]
    NotApplicable { entry: usize, reason: &'static str },

    #[error("kappa code has length {found}, expected {expected}")]
    KappaLength { expected: usize, found: usize },

    #[error("kappa_{index} = {value} exceeds its bound {bound}")]
    KappaOutOfBounds {
        index: usize,
        value: usize,
        bound: usize,
    },

    #[error("invalid rho sequence: {}", format_violations(.0))]
    InvalidRho(Vec<RhoViolation>),

    #[error("invalid skew tableau: {0}")]
    InvalidSkewTableau(String),

    #[error("rectification shapes do not form a one-box chain at k = {k}")]
    BrokenChain { k: usize },

    #[error("invalid parameters for family {family}: {reason}")]
    FamilyParameters { family: String, reason: String },

    #[error("unknown closed-form family {0:?}")]
    UnknownFamily(String),

    #[error("methods disagree on shape {shape}: {detail}")]
    MethodDisagreement { shape: String, detail: String },
}

fn format_violations(violations: &[RhoViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
