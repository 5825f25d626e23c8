//! Exact arithmetic kernel: rationals, weighted variable tables, graded
//! multivariate polynomials and dense exact row reduction.

mod matrix;
mod parse;
mod poly;
mod rational;
mod table;

pub use matrix::{ExactMatrix, RowReduction};
pub use parse::parse_poly;
pub use poly::GradedPoly;
pub use rational::{bernoulli_numbers, binomial, factorial, int, rat, Rational};
pub use table::{monomial_basis, Exponents, VariableTable};
