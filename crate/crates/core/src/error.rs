use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },
    #[error("group order exceeds the bound {bound}")]
    OrderBoundExceeded { bound: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("element {0} is not in the group")]
    InvalidElement(usize),
    #[error("element list is not a subgroup of the parent group")]
    NotASubgroup,
    #[error("point {0} is out of range")]
    InvalidPoint(usize),
    #[error("group action violates {0}")]
    InvalidAction(&'static str),
    #[error("iota has order {order}, not 2")]
    IotaNotInvolution { order: usize },
    #[error("iota does not commute with element {0}")]
    IotaNotCentral(usize),
    #[error("iota fixes the prime {0}; the datum is outside the fixed-point-free regime")]
    IotaFixesAPrime(usize),
    #[error("iota is not a central involution")]
    IotaInvalid,
    #[error("enumeration of {count} items exceeds the cap {cap}")]
    EnumerationBoundExceeded { count: u128, cap: u128 },
    #[error("invalid Frobenius function: {0}")]
    InvalidFunction(String),
    #[error("index (G:H) = {0} is odd")]
    OddIndex(usize),
    #[error("matrix row {row} has length {len}, expected {expected}")]
    RaggedMatrix { row: usize, len: usize, expected: usize },
    #[error("not a CM type: {0}")]
    NotACmType(String),
    #[error("ordering must start with the identity")]
    OrderingMissingIdentity,
    #[error("reduction convention violated: {0}")]
    ConventionViolation(String),
    #[error("pair G-set is invalid: {0}")]
    InvalidPairGSet(&'static str),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
