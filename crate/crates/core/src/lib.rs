//! Hirzebruch-Milnor classes of projective hyperplane arrangements.
//!
//! Two independent routes are provided: [`ktheory`] works from the characteristic
//! polynomial of the intersection lattice, [`spectrum`] sums local Steenbrink spectra
//! over the singular strata. For `P^2` and `P^3` they must agree.

pub mod algebra;
pub mod error;
pub mod families;
pub mod ktheory;
pub mod lattice;
pub mod spectrum;

pub use error::{Error, Result};
