use alloc::string::String;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("t-index {index} exceeds the index ceiling {ceiling}")]
    IndexCeiling { index: u32, ceiling: u32 },
    #[error("pivot index must be at least 1")]
    ZeroPivot,
    #[error("intermediate element has {count} monomials, above the cap {cap}")]
    MonomialCap { count: usize, cap: usize },
    #[error("{0} is not a standard monomial")]
    NotStandard(String),
    #[error("element is not nilpotent within 2^{0} (exponent cap)")]
    ExponentCap(u32),
    #[error("basis level {level} exceeds the enumeration ceiling {ceiling}")]
    EnumerationCeiling { level: u32, ceiling: u32 },
    #[error("superweight of {0} is zero")]
    ZeroSuperweight(String),
    #[error("empty generator set")]
    EmptyInput,
    #[error("generators do not all lie on one side of the superweight split")]
    MixedSigns,
    #[error("series has a negative coefficient at ({0}, {1})")]
    NegativeCoefficient(i64, i64),
    #[error("series has a nonzero constant term")]
    ConstantTerm,
    #[error("series has support outside the non-negative quadrant at ({0}, {1})")]
    LaurentSupport(i64, i64),
    #[error("series is truncated at degree {have}, degree {need} requested")]
    InsufficientTruncation { have: u32, need: u32 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
