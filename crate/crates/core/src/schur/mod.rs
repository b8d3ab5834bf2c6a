//! Quiver Schur algebras and their mixed variants acting on graded rings of partial
//! invariants, words in their generators and Bott–Samelson elements.

pub mod basis;
pub mod graded;
pub mod ordinary;
pub mod realization;
pub mod theta;
pub mod word;

pub use basis::{basis_independence_check, bott_samelson_basis, bott_samelson_element, BasisReport, OperatorMatrix};
pub use graded::{Graded, GradedElement, Key, ThetaElement};
pub use ordinary::SchurAlgebra;
pub use realization::{Counterexample, Realization};
pub use theta::MixedSchurAlgebra;
pub use word::{Generator, SchurWord};
