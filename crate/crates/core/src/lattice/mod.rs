//! Hyperplane arrangements over Q and their intersection lattices.

mod arrangement;
mod flats;
pub mod linalg;
mod strata;

pub use arrangement::Arrangement;
pub use flats::{Flat, Lattice, DEFAULT_MAX_FLATS};
pub use strata::{infinity_multiplicity, relative_multiplicity, StrataTables};
