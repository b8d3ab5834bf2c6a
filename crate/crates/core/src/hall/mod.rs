//! The cohomological Hall algebra and module realized on invariant polynomials.

pub mod coha;
pub mod cohm;

pub use coha::{hilbert_series_comp, shift_vars, Coha, CohaElement};
pub use cohm::{hilbert_series_iso, Cohm, CohmElement};
