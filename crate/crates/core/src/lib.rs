//! Exact generating functions for alternating sign matrices, descending plane
//! partitions and their extended families.

pub mod asm_side;
pub mod coeff;
pub mod dpp_side;
pub mod error;
pub mod laurent;
pub mod opformula;
pub mod paths;
pub mod symfunc;

pub use coeff::Coeff;
pub use error::{Error, Result};
pub use laurent::{Assignment, Format, LaurentPoly, Monomial, Value, Var};

use num_bigint::BigInt;

/// Polynomial over arbitrary-precision integers, the default everywhere.
pub type Poly = LaurentPoly<BigInt>;
/// Matrix of [`Poly`].
pub type PolyMatrix = laurent::Matrix<BigInt>;
