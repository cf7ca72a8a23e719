use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::algebra::{int, PolyY, Rational, Spectrum};
use crate::error::{Error, Result};

/// `(-1)^{n-1} sum_a n_a (-y)^{floor(n - a)}` for a spectrum with exponents in `(0, n]`.
pub fn stratum_contribution(spec: &Spectrum, n: usize) -> Result<PolyY> {
    let mut total = PolyY::zero();
    for (a, c) in spec.iter() {
        if !a.is_positive() || *a > int(n as i64) {
            return Err(Error::ExponentOutOfRange {
                exponent: a.to_string(),
                bound: n,
            });
        }
        total = &total + &PolyY::neg_y_pow(floor_gap(n, a)).scale(&int(c));
    }
    Ok(if n % 2 == 0 { -total } else { total })
}

/// The point and infinity terms in `P^3` carry sign `+1`.
pub fn p3_point_contribution(spec: &Spectrum) -> Result<PolyY> {
    stratum_contribution(spec, 3)
}

/// `floor(n - a)` for `a <= n`.
pub(crate) fn floor_gap(n: usize, a: &Rational) -> usize {
    let d = int(n as i64) - a;
    d.numer()
        .div_floor(d.denom())
        .to_usize()
        .expect("exponent at most n")
}
