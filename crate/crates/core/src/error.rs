use alloc::string::String;

/// Errors raised by table construction and the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the operation's domain (element out of range,
    /// mismatched degrees, malformed permutation).
    #[error("domain error: {0}")]
    Domain(String),
    /// The table lacks the algebraic structure the operation needs
    /// (not latin, no identity element, ...).
    #[error("structure error: {0}")]
    Structure(String),
    /// A caller-supplied relation between inputs does not hold.
    #[error("contract error: {0}")]
    Contract(String),
    /// A conditional construction was asked for outside its hypothesis.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    /// A search or enumeration exceeded its configured limit.
    #[error("budget exhausted: {0}")]
    Budget(String),
    /// An internal consistency check failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::error::Error::Domain(alloc::format!($($arg)*)) };
}
macro_rules! structure {
    ($($arg:tt)*) => { $crate::error::Error::Structure(alloc::format!($($arg)*)) };
}
pub(crate) use domain;
pub(crate) use structure;
