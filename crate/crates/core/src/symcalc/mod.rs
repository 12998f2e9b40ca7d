//! Truncated pseudodifferential symbol calculus at a point.
//!
//! Symbols are sums of homogeneous parts `c(x) ξ^α |ξ|^r`. Coefficients carry a
//! first-order jet in the base point, which is all the degree `-n` part of
//! the operators here ever sees: second-order jets would enter only three
//! degrees below the leading one. Deeper budgets need deeper jets.

mod compose;
mod curvature;
mod inverse;
mod sphere;
mod symbol;

pub use compose::compose_symbols;
pub use curvature::CurvatureJet;
pub use inverse::{negative_power, parametrix, sqrt_symbol};
pub use sphere::{moment, sphere_integrate, sphere_volume, SphereVolume};
pub use symbol::{Budget, HomogeneousSymbol, Jet, SymbolSum, XiMonomial};

/// Leading degrees needed for every residue computed in this crate.
pub const DEFAULT_BUDGET: Budget = 2;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("requested {requested} leading degrees but the input only guarantees {available}")]
    InsufficientBudget { requested: Budget, available: Budget },
    #[error("leading symbol is not |ξ|^r times the unit")]
    NonInvertibleLeading,
    #[error("leading symbol must have even degree, got {0}")]
    OddLeadingDegree(i32),
    #[error("expected a symbol of degree {expected}, got {got}")]
    DegreeMismatch { expected: i32, got: i32 },
    #[error("power must be at least 1, got {0}")]
    InvalidPower(u32),
    #[error("symbols of dimension {left} and {right} cannot be combined")]
    DimensionMismatch { left: usize, right: usize },
}
