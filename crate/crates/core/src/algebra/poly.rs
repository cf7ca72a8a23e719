use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{binomial, int, render_rational, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial in the Hirzebruch parameter `y` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `y^i`. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyY {
    coeffs: Vec<Rational>,
}

impl PolyY {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyY { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        PolyY { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * y^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `1 + y`
    pub fn one_plus_y() -> Self {
        Self::from_ints(&[1, 1])
    }

    /// `(-y)^k`
    pub fn neg_y_pow(k: usize) -> Self {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        Self::monomial(int(sign), k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    /// Divides by `1 + y` once, returning quotient and remainder (synthetic division at `y = -1`).
    pub fn div_rem_one_plus_y(&self) -> (Self, Rational) {
        if self.coeffs.is_empty() {
            return (Self::zero(), Rational::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quot = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for i in (1..=d).rev() {
            carry = &self.coeffs[i] - carry;
            quot[i - 1] = carry.clone();
        }
        let rem = &self.coeffs[0] - carry;
        (Self::new(quot), rem)
    }

    /// Exact division by `(1+y)^k`.
    pub fn div_unit_power(&self, k: u32) -> Result<Self> {
        let mut q = self.clone();
        for _ in 0..k {
            let (next, rem) = q.div_rem_one_plus_y();
            if !rem.is_zero() {
                return Err(Error::NotDivisible { power: k });
            }
            q = next;
        }
        Ok(q)
    }

    /// Renders with descending powers and no spaces, e.g. `-2y^2-21y+1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            if k == 0 {
                out.push_str(&render_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&var);
            } else if abs.is_integer() {
                out.push_str(&format!("{}{var}", abs.numer()));
            } else {
                out.push_str(&format!("({}){var}", render_rational(&abs)));
            }
        }
        out
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for PolyY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<Rational> for PolyY {
    fn from(c: Rational) -> Self {
        PolyY::constant(c)
    }
}

impl From<i64> for PolyY {
    fn from(c: i64) -> Self {
        PolyY::constant(int(c))
    }
}

/// `binom(a, 2)`-style polynomial binomial as a constant polynomial.
pub fn binomial_poly(a: i64, k: u32) -> PolyY {
    PolyY::from(binomial(a, k))
}

impl Add for &PolyY {
    type Output = PolyY;
    fn add(self, rhs: &PolyY) -> PolyY {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyY::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyY {
    type Output = PolyY;
    fn sub(self, rhs: &PolyY) -> PolyY {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyY::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyY {
    type Output = PolyY;
    fn mul(self, rhs: &PolyY) -> PolyY {
        if self.is_zero() || rhs.is_zero() {
            return PolyY::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyY::new(out)
    }
}

impl Neg for &PolyY {
    type Output = PolyY;
    fn neg(self) -> PolyY {
        PolyY::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolyY {
            type Output = PolyY;
            fn $m(self, rhs: PolyY) -> PolyY { (&self).$m(&rhs) }
        }
        impl $tr<&PolyY> for PolyY {
            type Output = PolyY;
            fn $m(self, rhs: &PolyY) -> PolyY { (&self).$m(rhs) }
        }
        impl $tr<PolyY> for &PolyY {
            type Output = PolyY;
            fn $m(self, rhs: PolyY) -> PolyY { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PolyY {
    type Output = PolyY;
    fn neg(self) -> PolyY {
        -&self
    }
}

impl std::iter::Sum for PolyY {
    fn sum<I: Iterator<Item = PolyY>>(iter: I) -> Self {
        iter.fold(PolyY::zero(), |acc, p| acc + p)
    }
}
