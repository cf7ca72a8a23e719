use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Power series in one formal variable, truncated after `x^order`.
///
/// Arithmetic between series of different orders is rejected rather than silently
/// truncated; callers pick the order they need.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients are kept.
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![Rational::one()])
    }

    /// The series `x`.
    pub fn var(order: usize) -> Self {
        Self::new(order, vec![Rational::zero(), Rational::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncSeries { coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(TruncSeries { coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_same_order(other))
    }

    fn mul_same_order(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Substitutes `x -> c x`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut factor = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &factor);
            factor *= c;
        }
        TruncSeries { coeffs }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul_same_order(self);
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut s = Rational::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &out[k - j];
            }
            out.push(-s * &inv0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Divides by `x`, lowering the order by one. The constant term must vanish.
    pub fn div_var(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // Horner in the outer coefficients.
        let n = self.order();
        let mut acc = Self::zero(n);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul_same_order(inner);
            acc.coeffs[0] += a;
        }
        Ok(acc)
    }
}

/// `ln(1+x) = x - x^2/2 + x^3/3 - ...` up to `x^order`.
pub fn log1p_series(order: usize) -> TruncSeries {
    let coeffs = (0..=order)
        .map(|p| match p {
            0 => Rational::zero(),
            _ => {
                let sign = if p % 2 == 1 { 1 } else { -1 };
                Rational::new(sign.into(), (p as i64).into())
            }
        })
        .collect();
    TruncSeries::new(order, coeffs)
}

/// `e^x` up to `x^order`.
pub fn exp_series(order: usize) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    for p in 0..=order {
        if p > 0 {
            term /= int(p as i64);
        }
        coeffs.push(term.clone());
    }
    TruncSeries::new(order, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    /// Full (untruncated) convolution, cut afterwards.
    fn convolve_then_cut(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
        let mut full = vec![Rational::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                full[i + j] += x * y;
            }
        }
        full.truncate(order + 1);
        full
    }

    #[test]
    fn log1p_coefficients() {
        assert_eq!(log1p_series(0).coeffs(), &[int(0)]);
        assert_eq!(log1p_series(1), TruncSeries::var(1));
        assert_eq!(
            log1p_series(3).coeffs(),
            &[int(0), int(1), rat(-1, 2), rat(1, 3)]
        );
    }

    #[test]
    fn mul_examples() {
        let a = TruncSeries::new(2, vec![int(1), int(1)]);
        let b = TruncSeries::new(2, vec![int(1), int(-1)]);
        assert_eq!(
            a.checked_mul(&b).unwrap().coeffs(),
            &[int(1), int(0), int(-1)]
        );

        let l = log1p_series(3);
        let sq = l.checked_mul(&l).unwrap();
        let oracle = convolve_then_cut(l.coeffs(), l.coeffs(), 3);
        assert_eq!(sq.coeffs(), oracle.as_slice());
        assert_eq!(sq.coeffs(), &[int(0), int(0), int(1), int(-1)]);

        assert_eq!(
            l.checked_mul(&TruncSeries::zero(3)).unwrap(),
            TruncSeries::zero(3)
        );
    }

    #[test]
    fn order_mismatch_is_error() {
        let err = log1p_series(2).checked_mul(&log1p_series(3)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn inverse_of_one_minus_x() {
        let s = TruncSeries::new(4, vec![int(1), int(-1)]);
        assert_eq!(s.inverse().unwrap().coeffs(), vec![int(1); 5].as_slice());
        assert_eq!(TruncSeries::var(3).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn exp_log_are_inverse() {
        for n in 0..8 {
            let expm1 = exp_series(n).checked_sub(&TruncSeries::one(n)).unwrap();
            assert_eq!(
                expm1.compose(&log1p_series(n)).unwrap(),
                TruncSeries::var(n)
            );
            assert_eq!(
                log1p_series(n).compose(&expm1).unwrap(),
                TruncSeries::var(n)
            );
        }
    }

    #[test]
    fn compose_rejects_constant_inner() {
        let n = 2;
        assert_eq!(
            exp_series(n).compose(&TruncSeries::one(n)),
            Err(Error::NonzeroConstantTerm)
        );
    }

    fn series(order: usize) -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-9i64..9, 1i64..4), order + 1).prop_map(move |v| {
            TruncSeries::new(order, v.into_iter().map(|(n, d)| rat(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn mul_matches_convolution(a in series(5), b in series(5)) {
            let got = a.checked_mul(&b).unwrap();
            let oracle = convolve_then_cut(a.coeffs(), b.coeffs(), 5);
            prop_assert_eq!(got.coeffs(), oracle.as_slice());
        }

        #[test]
        fn inverse_is_two_sided(mut a in series(5)) {
            if a.coeff(0).is_zero() {
                a = a.checked_add(&TruncSeries::one(5)).unwrap();
            }
            prop_assume!(!a.coeff(0).is_zero());
            let inv = a.inverse().unwrap();
            prop_assert_eq!(a.checked_mul(&inv).unwrap(), TruncSeries::one(5));
        }
    }
}
