//! Mutually unbiased bases and finite projective planes.
//!
//! - [`algebra`]: prime powers, Galois fields, subspace counts, Bruck–Ryser.
//! - [`geometry`]: incidence structures, PG(2,q), duality, affine planes,
//!   Singer difference sets.
//! - [`mub`]: orthonormal bases, unbiasedness checks, complete sets for
//!   prime-power dimensions.
//! - [`search`]: gradient search for unbiased bases where no construction
//!   is known.
//! - [`survey`]: per-dimension consistency table tying the two sides together.

pub mod algebra;
pub mod error;
pub mod geometry;
pub mod mub;
pub mod search;
pub mod survey;

pub use error::{Error, Result};
