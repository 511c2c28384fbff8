//! Sparse multivariate polynomial arithmetic over complex and real
//! coefficients, realification, substitutions, cyclic products and
//! Newton-support utilities.

mod coeff;
mod expt;
mod mpoly;
pub mod newton;
pub mod parse;

pub use coeff::{rational_pow, rational_sqrt, Coeff, ComplexCoeff, FromLiteral, GaussRational};
pub use expt::Expt;
pub use mpoly::{
    gauss_to_complex, rat_to_real, ComplexPoly, GaussPoly, MPoly, RatPoly, RealPoly,
    DEFAULT_CYCLIC_BUDGET, ZERO_PRUNE_REL,
};
pub use newton::{coamoeba_component_bound, NewtonSupport};
pub use parse::{parse_poly, parse_poly_exact, parse_real_poly};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable `{letter}{index}` at byte {pos} is out of range")]
    VarOutOfRange { pos: usize, letter: char, index: u32 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("monomial map columns have inconsistent lengths")]
    RaggedMap,
    #[error("rotation order r must be at least 1")]
    InvalidRotationOrder,
    #[error("cyclic product with r = {r} exceeds the size budget {budget}")]
    CyclicBudgetExceeded { r: u32, budget: usize },
    #[error("scale factor {index} is not strictly positive")]
    NonPositiveScale { index: usize },
    #[error("operation unsupported in dimension {n}")]
    UnsupportedDimension { n: usize },
}
