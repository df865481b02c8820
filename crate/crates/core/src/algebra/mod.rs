//! Exact arithmetic over `F_p`: monomials, polynomials, free-module layouts
//! and the polynomial text format.

pub mod field;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub(crate) mod vector;

pub use field::{Coeff, PrimeField};
pub use module::{leading_term, FreeModuleLayout, Matrix, ModuleOrder, Presentation, VectorElement};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{format_polynomial, parse_polynomial};
pub use poly::{ArithOp, PolyRing, Polynomial};
