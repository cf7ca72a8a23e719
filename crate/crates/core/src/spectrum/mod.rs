//! Hirzebruch-Milnor classes stratum by stratum from local Hodge spectra.

mod contribution;
mod engine;
mod local;
mod sigma;

pub use contribution::{p3_point_contribution, stratum_contribution};
pub use engine::{
    hm_p2, hm_p3, l_coeff, p2_strata_spectra, p3_edge_contribution, p3_strata_spectra,
};
pub use local::{
    p2_point_multiplicities, p3_edge_infinity_spectrum, p3_edge_spectrum, p3_point_multiplicities,
};
pub use sigma::{SigmaClass, StratumKind, StratumSpec, TopTerm};
