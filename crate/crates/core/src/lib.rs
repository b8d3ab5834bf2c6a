//! Exact polynomial realizations of quiver Schur algebras, their mixed (isotropic)
//! variants, cohomological Hall algebras and Hall modules.

pub mod error;
pub mod hall;
pub mod poly;
pub mod quiver;
pub mod schur;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, Rat, Var};
pub use quiver::{Comp, DimVector, InvolutionData, IsoComp, Quiver, Side};
pub use weyl::{Perm, SignedPerm, WeylElement};
