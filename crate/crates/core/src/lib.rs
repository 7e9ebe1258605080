//! Exact computations on fusion rings and pointed braided data.
//!
//! The crate works at the level of Grothendieck rings and quadratic forms:
//! every scalar is either a nonnegative integer structure constant, an element
//! of `Z[√2]`, or a root of unity stored as a rational exponent. Nothing here
//! touches IO; the `fusionkit` crate layers file formats and a CLI on top.
//!
//! Layout:
//!
//! - [`ring`]: fusion rings, validation, Frobenius–Perron dimensions,
//!   invertibles, subrings, gradings, Deligne products, isomorphism search.
//! - [`group`]: finite abelian groups, Cayley tables and their invariant
//!   factor decompositions.
//! - [`pointed`]: roots of unity, quadratic forms, cyclic 3-cocycles and
//!   braidings, Müger-center classification of pointed data.
//! - [`nising`]: the Ising, `C_M` and N-Ising families and their induced
//!   braidings.
//! - [`structure`]: decomposition of generalized Tambara–Yamagami rings into
//!   an N-Ising factor and a pointed factor.

#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

mod error;
mod num;

pub mod group;
pub mod nising;
pub mod pointed;
pub mod ring;
pub mod structure;

pub use error::{Error, Result};
pub use group::{AbelianDecomposition, CayleyTable, FiniteAbelianGroup};
pub use pointed::RootOfUnity;
pub use ring::{ExactDim, FusionRing, Limits, Subring, ZSqrt2};
