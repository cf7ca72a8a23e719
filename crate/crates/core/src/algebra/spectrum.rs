use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{rat, render_rational, Rational};

/// Fractional Laurent polynomial `sum n_a t^a` with rational exponents and integer
/// multiplicities. Zero multiplicities are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Spectrum {
    terms: BTreeMap<Rational, i64>,
}

impl Spectrum {
    pub fn empty() -> Self {
        Spectrum::default()
    }

    /// The monomial `c t^a`.
    pub fn monomial(exponent: Rational, c: i64) -> Self {
        let mut s = Spectrum::empty();
        s.add_term(exponent, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Rational, i64)>>(terms: I) -> Self {
        let mut s = Spectrum::empty();
        for (a, c) in terms {
            s.add_term(a, c);
        }
        s
    }

    pub fn add_term(&mut self, exponent: Rational, c: i64) {
        if c == 0 {
            return;
        }
        let updated = self.terms.get(&exponent).copied().unwrap_or(0) + c;
        if updated == 0 {
            self.terms.remove(&exponent);
        } else {
            self.terms.insert(exponent, updated);
        }
    }

    pub fn multiplicity(&self, exponent: &Rational) -> i64 {
        self.terms.get(exponent).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.terms.iter().map(|(a, &c)| (a, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities (the value at `t = 1`).
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Thom-Sebastiani product: exponents add, multiplicities multiply.
    pub fn mul(&self, other: &Spectrum) -> Spectrum {
        let mut out = Spectrum::empty();
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }

    pub fn add(&self, other: &Spectrum) -> Spectrum {
        let mut out = self.clone();
        for (a, &c) in &other.terms {
            out.add_term(a.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> Spectrum {
        Spectrum::from_terms(self.terms.iter().map(|(a, &n)| (a.clone(), n * c)))
    }

    pub fn min_exponent(&self) -> Option<&Rational> {
        self.terms.keys().next()
    }

    pub fn max_exponent(&self) -> Option<&Rational> {
        self.terms.keys().next_back()
    }
}

/// Spectrum of `x^m` at the origin: `t^{1/m} + ... + t^{(m-1)/m}`, empty for `m = 1`.
pub fn ordinary_power_spectrum(m: u32) -> Spectrum {
    assert!(m >= 1, "ordinary_power_spectrum needs m >= 1");
    Spectrum::from_terms((1..m).map(|k| (rat(k as i64, m as i64), 1)))
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                f.write_str(" ")?;
                f.write_str(sign)?;
                f.write_str(" ")?;
            } else {
                f.write_str(sign)?;
            }
            let abs = c.abs();
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            if a.is_zero() {
                if abs == 1 {
                    f.write_str("1")?;
                }
            } else if a.is_one() {
                f.write_str("t")?;
            } else if a.is_integer() {
                write!(f, "t^{}", a.numer())?;
            } else {
                write!(f, "t^({})", render_rational(a))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use proptest::prelude::*;

    #[test]
    fn ordinary_power_examples() {
        assert!(ordinary_power_spectrum(1).is_empty());
        assert_eq!(ordinary_power_spectrum(2), Spectrum::monomial(rat(1, 2), 1));
        assert_eq!(
            ordinary_power_spectrum(4),
            Spectrum::from_terms([(rat(1, 4), 1), (rat(1, 2), 1), (rat(3, 4), 1)])
        );
    }

    #[test]
    fn product_examples() {
        let sq = ordinary_power_spectrum(2).mul(&ordinary_power_spectrum(2));
        assert_eq!(sq, Spectrum::monomial(int(1), 1));
        assert!(sq.mul(&Spectrum::empty()).is_empty());

        let third = ordinary_power_spectrum(3);
        let edge = third.mul(&third).mul(&Spectrum::monomial(int(1), -1));
        assert_eq!(
            edge,
            Spectrum::from_terms([(rat(5, 3), -1), (int(2), -2), (rat(7, 3), -1)])
        );
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut s = Spectrum::monomial(rat(1, 2), 3);
        s.add_term(rat(1, 2), -3);
        assert!(s.is_empty());
    }

    #[test]
    fn display() {
        let s = Spectrum::from_terms([(int(1), 2), (int(2), -3), (rat(5, 3), 1)]);
        assert_eq!(s.to_string(), "2t + t^(5/3) - 3t^2");
    }

    #[test]
    fn milnor_numbers_of_ordinary_points() {
        for m in 1..12u32 {
            let sp = ordinary_power_spectrum(m);
            assert_eq!(sp.total_multiplicity(), m as i64 - 1);
            assert_eq!(sp.mul(&sp).total_multiplicity(), (m as i64 - 1).pow(2));
        }
    }

    fn spectrum() -> impl Strategy<Value = Spectrum> {
        prop::collection::vec((0i64..12, 1i64..5, -3i64..4), 0..5)
            .prop_map(|v| Spectrum::from_terms(v.into_iter().map(|(n, d, c)| (rat(n, d), c))))
    }

    proptest! {
        #[test]
        fn product_commutes(a in spectrum(), b in spectrum()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn product_associates(a in spectrum(), b in spectrum(), c in spectrum()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn total_is_multiplicative(a in spectrum(), b in spectrum()) {
            prop_assert_eq!(a.mul(&b).total_multiplicity(), a.total_multiplicity() * b.total_multiplicity());
        }
    }
}
