//! Exact sparse polynomials over the rationals, Weyl group actions, Demazure
//! operators, symmetrizers and the product classes entering merge formulas.

pub mod classes;
pub mod invariants;
mod monomial;
pub mod operators;
mod polynomial;
pub mod roots;
mod text;

pub use monomial::{Monomial, Var};
pub use operators::{demazure_section, demazure_simple, demazure_word, monomials_of_degree, DemazureSum, Symmetrizer};
pub use polynomial::{rat, Polynomial, Rat};
pub use roots::{Block, Frame, LinearForm, RootProduct, RootType};
