use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::poly::PolyY;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A rational function `num / (1+y)^unit_pow`.
///
/// Canonical form: `num` is not divisible by `1+y` unless `unit_pow == 0`, and the zero
/// value always has `unit_pow == 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatY {
    num: PolyY,
    unit_pow: u32,
}

impl RatY {
    pub fn new(num: PolyY, unit_pow: u32) -> Self {
        let mut r = RatY { num, unit_pow };
        r.canonicalize();
        r
    }

    pub fn zero() -> Self {
        RatY::default()
    }

    pub fn one() -> Self {
        RatY::from(PolyY::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatY::from(PolyY::constant(c))
    }

    pub fn numerator(&self) -> &PolyY {
        &self.num
    }

    pub fn unit_pow(&self) -> u32 {
        self.unit_pow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Multiplies by `(1+y)^{-k}`.
    pub fn div_unit_power(&self, k: u32) -> Self {
        RatY::new(self.num.clone(), self.unit_pow + k)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatY::new(self.num.scale(c), self.unit_pow)
    }

    /// Returns the polynomial if the denominator has cancelled completely.
    pub fn into_poly(self) -> Result<PolyY> {
        if self.unit_pow == 0 {
            Ok(self.num)
        } else {
            Err(Error::NotDivisible {
                power: self.unit_pow,
            })
        }
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.unit_pow = 0;
            return;
        }
        while self.unit_pow > 0 {
            let (q, r) = self.num.div_rem_one_plus_y();
            if !r.is_zero() {
                break;
            }
            self.num = q;
            self.unit_pow -= 1;
        }
    }

    fn lifted(&self, to: u32) -> PolyY {
        &self.num * &PolyY::one_plus_y().pow(to - self.unit_pow)
    }
}

impl From<PolyY> for RatY {
    fn from(num: PolyY) -> Self {
        RatY { num, unit_pow: 0 }
    }
}

impl Add for &RatY {
    type Output = RatY;
    fn add(self, rhs: &RatY) -> RatY {
        let e = self.unit_pow.max(rhs.unit_pow);
        RatY::new(self.lifted(e) + rhs.lifted(e), e)
    }
}

impl Sub for &RatY {
    type Output = RatY;
    fn sub(self, rhs: &RatY) -> RatY {
        let e = self.unit_pow.max(rhs.unit_pow);
        RatY::new(self.lifted(e) - rhs.lifted(e), e)
    }
}

impl Mul for &RatY {
    type Output = RatY;
    fn mul(self, rhs: &RatY) -> RatY {
        RatY::new(&self.num * &rhs.num, self.unit_pow + rhs.unit_pow)
    }
}

impl Neg for &RatY {
    type Output = RatY;
    fn neg(self) -> RatY {
        RatY {
            num: -&self.num,
            unit_pow: self.unit_pow,
        }
    }
}
