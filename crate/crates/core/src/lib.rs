//! Finite group extensions `1 -> Γ -> G' -> G -> 1`, their irreducible
//! representations and 2-cocycles, and counting of commuting lifts and
//! surface-group homomorphism lifts.
//!
//! Every count is available two ways: by exhaustive enumeration over the
//! kernel, and by the character-theoretic sum over `Irr(Γ)` weighted by
//! cocycle holonomies. The two routes share no code past the group tables.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod census;
pub mod cocycle;
pub mod config;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod numeric;
pub mod rep;

pub use config::{EngineConfig, Tolerance, DEFAULT_SEED};
pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, GroupHom, GroupRef, ShortExactSequence, Subgroup};
pub use numeric::{Matrix, Scalar};
