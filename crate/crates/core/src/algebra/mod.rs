//! Exact arithmetic: rationals, polynomials in `y`, truncated power series and
//! fractional-exponent spectra.

mod poly;
mod rational;
mod raty;
mod series;
mod spectrum;

pub use poly::{binomial_poly, PolyY};
pub use rational::{binomial, int, parse_rational, rat, render_rational, Rational};
pub use raty::RatY;
pub use series::{exp_series, log1p_series, TruncSeries};
pub use spectrum::{ordinary_power_spectrum, Spectrum};
