use thiserror::Error;

/// Errors reported by the enumeration and polynomial routines.
///
/// `CapExceeded` is a guard against runaway enumeration, not a math error:
/// every enumeration is bounded up front by the product of the signature
/// entries (or an explicit desk-scale limit) and refuses to start past the
/// cap. `NotDivisible` is a tripwire: it is never expected on the
/// polynomials this crate produces, and a sighting means an invariant of
/// the underlying combinatorics has been falsified.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration or construction would exceed the configured cap.
    #[error("{what} {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u64,
    },

    /// Checked integer arithmetic overflowed; results are never wrapped.
    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    /// Exact division by `1 + x + ... + x^(k-1)` left a remainder or a
    /// negative coefficient.
    #[error("polynomial is not exactly divisible by 1 + x + ... + x^{}", k - 1)]
    NotDivisible { k: u64 },

    /// A caller-supplied argument violates a documented precondition.
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
