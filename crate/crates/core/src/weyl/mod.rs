//! Weyl groups as products of symmetric and hyperoctahedral groups, parabolic
//! subgroups, coset representatives, partitionings and refinement data.

mod cosets;
mod group;
mod parabolics;
mod partition;
mod perm;
mod refinement;

pub use cosets::{brute_force_double_coset_reps, is_minimal_in_double_coset, min_double_coset_reps, GroupTable};
pub use group::{sort_elements, Factor, FactorKind, Parabolic, WeylElement};
pub use parabolics::{kinds, parabolic, theta_kinds, theta_parabolic};
pub use partition::{fold_apply, Partitioning, Slot};
pub use perm::{all_perms, Perm, SignedPerm};
pub use refinement::{
    act_perm_comp, act_signed_iso, CrossingDatum, OrbitDatum, RefinementDatum, ThetaCrossingDatum, ThetaOrbitDatum,
    ThetaRefinementDatum,
};
