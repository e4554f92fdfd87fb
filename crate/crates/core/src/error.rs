use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra {family}{rank}: {reason}")]
    InvalidAlgebra {
        family: char,
        rank: usize,
        reason: String,
    },

    #[error("weight belongs to {found}, expected {expected}")]
    AlgebraMismatch { expected: String, found: String },

    #[error("weight has {found} coordinates, {algebra} has rank {expected}")]
    WeightLength {
        algebra: String,
        expected: usize,
        found: usize,
    },

    #[error("weight {0} is not dominant integral")]
    NotDominant(String),

    #[error("weight {0} is not integral")]
    NotIntegral(String),

    #[error("module of dimension {dim} exceeds the cap {cap}")]
    SizeCap { dim: String, cap: u64 },

    #[error("not a character: {0}")]
    NotACharacter(String),

    #[error("level {level} is critical for {algebra} (h^vee = {dual_coxeter})")]
    CriticalLevel {
        algebra: String,
        level: String,
        dual_coxeter: u32,
    },

    #[error("level equation has degree {0}; only rational roots plus a quadratic remainder are supported")]
    UnsupportedDegree(usize),

    #[error("level equation is degenerate: {0}")]
    DegenerateEquation(String),

    #[error("invalid dual pair {family}({n},{m}): {reason}")]
    InvalidDualPair {
        family: String,
        n: usize,
        m: usize,
        reason: String,
    },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("catalog entry {label:?}: {reason}")]
    Catalog { label: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("series error: {0}")]
    Series(String),

    #[error("{0}")]
    Invalid(String),
}
