//! The `N`-Ising family: `I_{N,ζ}`, the rings `C_M`, and braidings induced
//! from `Ising ⊠ vec^ζ_{Z_{2^N}}` tracked through squared-braiding scalars.

mod braiding;
mod families;
mod theorems;

pub use braiding::{
    degeneracy_criterion, induced_center, squared_braiding_table, twist_obstruction, verify_primeness,
    DegeneracyRow, DegeneracyTable, InducedBraiding, InducedCenter, IsingPairing, PrimenessReport,
    SquaredBraidingEntry, TwistVerdict,
};
pub use families::{
    build_cm, build_ising, build_moore_read, build_nising, self_dual_noninvertibles, CmBasis, CmRing, NIsing,
    NIsingSpec, MAX_N,
};
pub use theorems::{verify_fact_cm, verify_nofact, FactCmReport, NofactReport};
