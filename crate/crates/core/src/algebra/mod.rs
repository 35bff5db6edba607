//! Exact multivariate rational arithmetic for verifying the polynomial
//! identities of the non-existence argument.

mod mpoly;
mod parse;
mod resultant;
mod rexpr;
mod sturm;

pub mod checks;
pub mod constants;

pub use mpoly::{MPoly, Monomial, Var, NVARS};
pub use parse::{parse_expr, parse_poly};
pub use resultant::{bareiss_determinant, sylvester_matrix, sylvester_resultant};
pub use rexpr::RationalExpr;
pub use sturm::{discriminant_quadratic, positive_definite_quadratic, sturm_count, sturm_sequence, Bound, UPoly};

pub type Rational = num_rational::BigRational;
