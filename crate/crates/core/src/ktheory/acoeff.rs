use num_traits::Zero;

use super::class::GradedProjClass;
use crate::algebra::{binomial, int, log1p_series, PolyY, Rational, TruncSeries};

/// Constant term of `(ln(1+x))^j (1 + 1/x)^{m-i}`, read off as the coefficient of
/// `x^{m-i}` in `(1+x)^{m-i} (ln(1+x))^j`. Zero when `i > m`.
pub fn a_coeff(m: usize, i: usize, j: usize) -> Rational {
    if i > m {
        return Rational::zero();
    }
    let order = m - i;
    let base = TruncSeries::new(order, vec![int(1), int(1)]).pow(order as u32);
    let logs = log1p_series(order).pow(j as u32);
    base.checked_mul(&logs).expect("same order").coeff(order)
}

/// Normalized Hirzebruch class `T_{y*}(P^m)` as a class in `H_*(P^m)[y]`.
pub fn hirzebruch_pn(m: usize) -> GradedProjClass {
    let mut class = GradedProjClass::zero(m);
    for j in 0..=m {
        for i in 0..=m - j {
            let a = a_coeff(m, i, j);
            if a.is_zero() {
                continue;
            }
            let term = &PolyY::neg_y_pow(i) * &PolyY::one_plus_y().pow((m - i - j) as u32);
            let c = a * int(binomial(m as i64 + 1, i as u32));
            class.add_to(j, &term.scale(&c));
        }
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{exp_series, rat};
    use num_traits::One;

    /// `[h^{N-j}] (h / (1 - e^{-h}))^{N+1}`: the same residue evaluated after the
    /// substitution `x = e^h - 1`.
    fn todd_oracle(n_minus_i: usize, j: usize) -> Rational {
        if j > n_minus_i {
            return Rational::zero();
        }
        let n = n_minus_i;
        let one_minus_exp = TruncSeries::one(n + 1)
            .checked_sub(&exp_series(n + 1).scale_var(&int(-1)))
            .unwrap();
        let td = one_minus_exp
            .div_var()
            .unwrap()
            .inverse()
            .unwrap()
            .pow(n as u32 + 1);
        td.coeff(n - j)
    }

    /// Term-by-term expansion of `(ln(1+x))^j`: compositions `i_1 + ... + i_j = k` each
    /// weighted by `(-1)^{k+j} / (i_1 ... i_j)`.
    fn nested_sum(m: usize, i: usize, j: usize) -> Rational {
        let n = m - i;
        if j == 0 {
            return Rational::one();
        }
        // weights[k] = sum over compositions of k into j positive parts of 1/(i_1...i_j)
        let mut weights = vec![Rational::zero(); n + 1];
        weights[0] = Rational::one();
        for _ in 0..j {
            let mut next = vec![Rational::zero(); n + 1];
            for (k, w) in weights.iter().enumerate() {
                for part in 1..=n - k {
                    next[k + part] += w / int(part as i64);
                }
            }
            weights = next;
        }
        (1..=n)
            .map(|k| {
                let sign = if (k + j) % 2 == 0 { 1 } else { -1 };
                &weights[k] * int(sign * binomial(n as i64, k as u32))
            })
            .sum()
    }

    #[test]
    fn small_values() {
        assert_eq!(a_coeff(2, 0, 1), rat(3, 2));
        assert_eq!(a_coeff(3, 0, 1), rat(11, 6));
        assert_eq!(a_coeff(1, 2, 0), int(0));
    }

    #[test]
    fn agrees_with_todd_residue() {
        for m in 0..=10 {
            for i in 0..=m {
                for j in 0..=10 {
                    assert_eq!(a_coeff(m, i, j), todd_oracle(m - i, j), "a({m},{i},{j})");
                }
            }
        }
    }

    #[test]
    fn agrees_with_composition_sum() {
        for m in 0..=9 {
            for i in 0..=m {
                for j in 0..=9 {
                    assert_eq!(a_coeff(m, i, j), nested_sum(m, i, j), "a({m},{i},{j})");
                }
            }
        }
    }

    #[test]
    fn projective_spaces_of_small_dimension() {
        assert_eq!(hirzebruch_pn(0).to_string(), "[pt]");
        assert_eq!(hirzebruch_pn(1).to_string(), "[P^1] + (-y+1)[pt]");
        let p2 = hirzebruch_pn(2);
        assert_eq!(p2.coeff(2), &PolyY::one());
        assert_eq!(p2.coeff(1), &PolyY::new(vec![rat(3, 2), rat(-3, 2)]));
        assert_eq!(p2.coeff(0), &PolyY::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn chern_and_chi_y_specializations() {
        for m in 0..=10usize {
            let t = hirzebruch_pn(m);
            let at_minus_one = t.eval(&int(-1));
            for i in 0..=m {
                assert_eq!(at_minus_one[m - i], int(binomial(m as i64 + 1, i as u32)));
            }
            let chi_y: PolyY = (0..=m).map(PolyY::neg_y_pow).sum();
            assert_eq!(t.coeff(0), &chi_y);
        }
    }
}
