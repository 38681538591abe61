use thiserror::Error;

/// Errors shared across the crate.
///
/// Degenerate denominators are surfaced as errors rather than infinities:
/// every ratio functional here excludes inputs whose alternating-sum
/// denominator vanishes, and callers must see that exclusion explicitly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("sequence is not {0} within tolerance")]
    NotMonotone(&'static str),

    #[error("sequence element {index} = {value} outside box [{lo}, {hi}]")]
    OutOfBox {
        index: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("empty or non-finite sequence: {0}")]
    InvalidSequence(String),

    #[error("alternating-sum denominator vanishes (excluded degenerate case)")]
    DegenerateDenominator,

    #[error("quotient sequence a_k/b_k is not monotone")]
    QuotientNotMonotone,

    #[error("alternating power sum is negative beyond tolerance: {0}")]
    NonPositiveInnerSum(f64),

    #[error("invalid exponent: {0}")]
    InvalidExponent(String),

    #[error("degenerate bounds box: {0}")]
    DegenerateBox(String),

    #[error("cap {cap} is below the sequence maximum {max}")]
    CapBelowMax { cap: f64, max: f64 },

    #[error("invalid generation spec: {0}")]
    InvalidSpec(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("excluded witness family: {0}")]
    ExcludedFamily(String),

    #[error("convex function domain [0, {domain}] does not cover [0, {needed}]")]
    DomainTooSmall { domain: f64, needed: f64 },

    #[error("infeasible search configuration: {0}")]
    Infeasible(String),

    #[error("mismatched configuration: {0}")]
    MismatchedConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
