use num_bigint::BigUint;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),

    #[error("group order {order} exceeds enumeration bound {bound}")]
    BoundExceeded { order: BigUint, bound: u64 },

    #[error("not implemented: {0}")]
    NotImplemented(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
