//! Exact computer algebra for partial Hopf actions.
//!
//! Finite-dimensional Hopf algebras act partially on finite-dimensional
//! algebras; from such an action this crate builds the partial smash product,
//! computes classical and H-equivariant radicals, and checks the ideal and
//! radical correspondences between an algebra and its smash product. All
//! arithmetic is exact, over ℚ or a prime field 𝔽_p.

pub mod error;
pub mod gen;
pub mod algebra;
pub mod exactla;
pub mod hopf;
pub mod paction;
pub mod pmod;
pub mod radicals;
pub mod smash;
pub mod verify;

pub use error::{Error, Result};
