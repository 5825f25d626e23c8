//! Exact computer algebra for tautological rings of moduli of curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`] : rationals, weighted polynomials, exact row reduction.
//! * [`graded`] : finitely presented graded algebras computed degree by degree.
//! * [`chern`] : formal bundles and splitting-principle Chern class calculus.
//! * [`schur`] : partitions, Schur functor dimensions, Littlewood:Richardson.
//! * [`geometry`] : Hirzebruch surfaces, Grassmannians, dimension counts.
//! * [`grr`] : formal Grothendieck:Riemann:Roch on the universal curve.

pub mod algebra;
pub mod chern;
pub mod error;
pub mod geometry;
pub mod graded;
pub mod grr;
pub mod schur;

pub use algebra::{
    binomial, int, monomial_basis, parse_poly, rat, ExactMatrix, Exponents, GradedPoly, Rational,
    RowReduction, VariableTable,
};
pub use error::{Error, Result};
pub use chern::{FormalBundle, LineClass};
pub use geometry::{GrassmannData, HirzebruchClass};
pub use graded::{GradedPiece, PoincareReport, RingPresentation};
pub use grr::{KappaBundle, PsiSeries};
pub use schur::{Partition, SchurDecomposition};
