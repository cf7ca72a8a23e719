use std::ops::{Add, Mul, Sub};

use crate::algebra::{binomial, exp_series, int, PolyY, RatY, TruncSeries};

/// Element of `Q(y)[t] / ((1-t)^{n+1})`, the Grothendieck group of `P^n` with
/// `t = [O(-1)]`, tensored with rational functions in `y`.
///
/// Stored in the nilpotent basis `s = 1 - t`: `coeffs[k]` multiplies `s^k`, and
/// `s^{n+1} = 0` is the Koszul relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClassRat {
    n: usize,
    coeffs: Vec<RatY>,
}

impl KClassRat {
    pub fn zero(n: usize) -> Self {
        KClassRat {
            n,
            coeffs: vec![RatY::zero(); n + 1],
        }
    }

    pub fn constant(n: usize, c: RatY) -> Self {
        let mut k = Self::zero(n);
        k.coeffs[0] = c;
        k
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, RatY::one())
    }

    /// `s = 1 - t`.
    pub fn s(n: usize) -> Self {
        Self::from_s_coeffs(n, vec![RatY::zero(), RatY::one()])
    }

    /// `t = [O(-1)]`.
    pub fn t(n: usize) -> Self {
        &Self::one(n) - &Self::s(n)
    }

    /// Truncates beyond `s^n`.
    pub fn from_s_coeffs(n: usize, mut coeffs: Vec<RatY>) -> Self {
        coeffs.resize(n + 1, RatY::zero());
        KClassRat { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s_coeffs(&self) -> &[RatY] {
        &self.coeffs
    }

    /// Coefficients in the monomial basis `1, t, ..., t^n` (from `s^k = (1-t)^k`).
    pub fn t_coeffs(&self) -> Vec<RatY> {
        let mut out = vec![RatY::zero(); self.n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            for (l, slot) in out.iter_mut().enumerate().take(k + 1) {
                let sign = if l % 2 == 0 { 1 } else { -1 };
                let b = int(sign * binomial(k as i64, l as u32));
                *slot = &*slot + &c.scale(&b);
            }
        }
        out
    }

    pub fn scale(&self, c: &RatY) -> Self {
        KClassRat {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// Hirzebruch-Riemann-Roch pushforward to `H_*(P^n)`: `ch(t) = e^{-h}` times
    /// `td(P^n) = (h / (1 - e^{-h}))^{n+1}`, with `h^i` read as `[P^{n-i}]`.
    /// Returns the unnormalized coefficient of `[P^d]` at index `d`.
    pub fn todd_pushforward(&self) -> Vec<RatY> {
        let n = self.n;
        let one_minus_exp = |order: usize| {
            TruncSeries::one(order)
                .checked_sub(&exp_series(order).scale_var(&int(-1)))
                .expect("same order")
        };
        let td = one_minus_exp(n + 1)
            .div_var()
            .and_then(|q| q.inverse())
            .expect("h / (1 - e^{-h}) is invertible")
            .pow(n as u32 + 1);
        let s_image = one_minus_exp(n);
        let mut out = vec![RatY::zero(); n + 1];
        let mut power = td;
        for c in &self.coeffs {
            for (i, a) in power.coeffs().iter().enumerate() {
                out[n - i] = &out[n - i] + &c.scale(a);
            }
            power = power.checked_mul(&s_image).expect("same order");
        }
        out
    }
}

impl Add for &KClassRat {
    type Output = KClassRat;
    fn add(self, rhs: &KClassRat) -> KClassRat {
        assert_eq!(self.n, rhs.n);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        KClassRat { n: self.n, coeffs }
    }
}

impl Sub for &KClassRat {
    type Output = KClassRat;
    fn sub(self, rhs: &KClassRat) -> KClassRat {
        assert_eq!(self.n, rhs.n);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        KClassRat { n: self.n, coeffs }
    }
}

impl Mul for &KClassRat {
    type Output = KClassRat;
    fn mul(self, rhs: &KClassRat) -> KClassRat {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = vec![RatY::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KClassRat { n, coeffs: out }
    }
}

pub(crate) fn raty(p: PolyY) -> RatY {
    RatY::from(p)
}
