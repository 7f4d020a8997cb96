//! Finite quasigroups and loops given by Cayley tables.
//!
//! The crate checks the left central, right central and central identities,
//! builds isotopes, principal isotopes, derivatives and the parastrophe of a
//! table, decides isomorphism and isotopy by pruned exhaustive search, and
//! computes centers, nuclei and center ranks. [`harness`] runs the whole
//! battery of theorem checks over small loops and the embedded [`catalog`].
//!
//! Elements are labelled `1..=n` in every public signature. Methods with an
//! `_index` suffix, and [`FiniteMagma::op`], work on 0-based indices.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod enumerate;
mod error;
pub mod harness;
pub mod identities;
pub mod morphisms;
pub mod perm;
pub mod structure;
pub mod tables;
pub mod transforms;

pub use error::{Error, Result};
pub use identities::{check_family, check_identity, classify, Family, IdentityId, IdentityReport};
pub use morphisms::{are_isomorphic, are_isotopic, MorphismResult};
pub use perm::Permutation;
pub use tables::{FiniteMagma, Side};
pub use transforms::IsotopismTriple;

/// Largest supported order; labels are stored in a byte.
pub const MAX_ORDER: usize = 255;
