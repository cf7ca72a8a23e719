//! Hirzebruch-Milnor classes from the characteristic polynomial alone: the
//! difference of the virtual and actual Hirzebruch classes of the arrangement.

mod acoeff;
mod class;
mod hm;
mod kclass;
mod virtual_class;

pub use acoeff::{a_coeff, hirzebruch_pn};
pub use class::{basis_label, coefficient_prefix, join_terms, GradedProjClass};
pub use hm::{arr_hirzebruch_pushforward, hm_p3_closed, hm_pushforward};
pub use kclass::KClassRat;
pub use virtual_class::{virtual_pushforward_closed, virtual_pushforward_series};
