use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} repeated")]
    RepeatedPoint(usize),

    #[error("malformed cycle text {text:?}: {reason}")]
    MalformedCycles { text: String, reason: String },

    #[error("{0} is not a member of the group")]
    NotAMember(String),

    #[error("group order {order} exceeds element cap {cap}")]
    CapExceeded { order: BigUint, cap: u64 },

    #[error("tuple budget exceeded: {needed} tuples needed, budget {budget}")]
    BudgetExceeded { needed: BigUint, budget: u64 },

    #[error("element {element} has order {order}, which is not a prime greater than 3")]
    OrderPrecondition { element: String, order: BigUint },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("invalid group spec {text:?}: {reason}")]
    InvalidSpec { text: String, reason: String },

    #[error("group file {path}: {reason}")]
    GroupFile { path: String, reason: String },

    #[error("claimed order {claimed} does not match computed order {computed}")]
    OrderMismatch { claimed: BigUint, computed: BigUint },

    #[error("no conjugacy class contains {0}")]
    ClassNotFound(String),
}
