//! Exact rational coefficients, sparse multivariate polynomials in the joined
//! variable set (s₁..s_m, x₁..x_n), local monomial orderings, weighted
//! degrees, and differential-operator application.

mod diffop;
mod monomial;
mod ordering;
mod parse;
mod poly;
pub mod rational;

pub use diffop::{diff_apply, DiffOp, DiffOpMatrix, DiffOpTerm};
pub use monomial::Monomial;
pub use ordering::{monomial_cmp, BlockKey, OrderingSpec, TieBreak};
pub use parse::{infer_vars, parse_poly, parse_x_poly};
pub use poly::{LeadingData, LeadingSData, SparsePoly};

pub use num::BigRational as Rational;
