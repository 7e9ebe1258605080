//! Pointed braided data: roots of unity, quadratic forms on finite abelian
//! groups, the cocycles `ω_ζ` and braidings `σ_ξ` on cyclic groups, and the
//! Müger-center classification of a premetric group.
//!
//! No floating point is used here. Every scalar is a [`RootOfUnity`].

mod cocycle;
mod form;
mod root;

pub use cocycle::{enumerate_braidings, quadratic_from_xi, CyclicBraiding, CyclicCocycle};
pub use form::{
    automorphisms, enumerate_quadratic_forms, premetric_equivalent, split_svect_factor, CenterClass,
    QuadraticForm, SvectSplit,
};
pub use root::RootOfUnity;
