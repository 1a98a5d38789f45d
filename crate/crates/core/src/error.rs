//! Error types shared by all modules.

use crate::symbol::SymbolFamily;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("reciprocal requires an invertible rational constant term")]
    NonInvertibleConstantTerm,

    #[error("composition requires the inner series to have zero constant term")]
    CompositionConstantTerm,

    #[error("series is not reversible: need g(0) = 0 and invertible linear coefficient")]
    NotReversible,

    #[error("bad constant term: log requires f(0) = 1, exp requires f(0) = 0")]
    BadConstantTerm,

    #[error("step from level {from} to level {to} is not covered by the valuation scheme")]
    SchemeMismatch { from: u32, to: u32 },

    #[error("valuation scheme parameter {family:?}_{index} lies beyond the supplied prefix")]
    IndexBeyondPrefix { family: SymbolFamily, index: u32 },

    #[error("Hankel determinant Delta_{0} vanishes")]
    SingularHankel(usize),

    #[error("need moments up to order {needed}, only {available} available")]
    InsufficientMoments { needed: usize, available: usize },

    #[error("requested order {order} exceeds the range stabilized by depth {depth}")]
    InsufficientDepth { order: usize, depth: usize },

    #[error("configuration enumeration exceeded the bound of {limit} partial configurations")]
    ExplosionGuard { limit: u64 },

    #[error("exact polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("operation undefined for order {0}")]
    BadOrder(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
