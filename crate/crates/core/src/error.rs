use thiserror::Error;

/// Errors surfaced by the invariant calculus.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Slope requested for an object of generalized rank zero.
    #[error("ZeroRank: slope undefined for generalized rank 0")]
    ZeroRank,

    /// A checked integer operation left the 64-bit range.
    #[error("Overflow: intermediate value exceeds the integer range")]
    Overflow,

    /// An operation specific to double curves received another multiplicity.
    #[error("WrongMultiplicity: expected n = 2, got n = {0}")]
    WrongMultiplicity(i64),

    /// Filtration-slice rank or torsion constraints are violated.
    #[error("InvalidSlice: {0}")]
    InvalidSlice(String),

    /// The non-emptiness criterion needs genus at least 2.
    #[error("GenusTooSmall: criterion requires g >= 2, got g = {0}")]
    GenusTooSmall(i64),

    /// An enumeration would exceed its configured size cap.
    #[error("BudgetExceeded: enumeration of size {size} exceeds cap {cap}")]
    BudgetExceeded { size: u128, cap: u128 },

    /// Inputs contradict each other (e.g. a negative Ext dimension).
    #[error("InconsistentInput: {0}")]
    InconsistentInput(String),

    /// A constructor rejected its arguments.
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Exact division; the callers only divide quantities proven even.
pub(crate) fn div_exact(a: i64, b: i64) -> Result<i64> {
    debug_assert!(b != 0 && a % b == 0);
    a.checked_div(b).ok_or(Error::Overflow)
}
