use crate::algebra::{binomial, int, ordinary_power_spectrum, rat, Spectrum};

fn ceil_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}

/// Spectrum of an ordinary `m_P`-fold point of a plane curve, from the closed
/// multiplicities `n_{k/m} = k - 1`, `n_{1+k/m} = m - k - 1 + delta_{k,m}`.
pub fn p2_point_multiplicities(m_p: usize) -> Spectrum {
    assert!(m_p >= 2, "a singular point has multiplicity at least 2");
    let m = m_p as i64;
    let mut sp = Spectrum::empty();
    for k in 1..=m {
        sp.add_term(rat(k, m), k - 1);
        sp.add_term(rat(m + k, m), m - k - 1 + i64::from(k == m));
    }
    sp
}

/// Transversal spectrum along an edge of multiplicity `m_S`: `-t Sp(x^{m_S})^2`.
pub fn p3_edge_spectrum(m_s: usize) -> Spectrum {
    let sp = ordinary_power_spectrum(m_s as u32);
    sp.mul(&sp).mul(&Spectrum::monomial(int(1), -1))
}

/// Spectrum where an edge meets a generic plane: `Sp(x^{m_S})^2 Sp(x^m)`.
pub fn p3_edge_infinity_spectrum(m_s: usize, m: usize) -> Spectrum {
    let sp = ordinary_power_spectrum(m_s as u32);
    sp.mul(&sp).mul(&ordinary_power_spectrum(m as u32))
}

/// Spectrum of a point of multiplicity `m_P` of a plane arrangement in `P^3`, corrected
/// by every edge through it (`edge_mults` lists their `m_S`).
///
/// Binomials are polynomial in the upper argument, so `binom(-1, 2) = 1`.
pub fn p3_point_multiplicities(m_p: usize, edge_mults: &[usize]) -> Spectrum {
    let mp = m_p as i64;
    let mut sp = Spectrum::empty();
    for k in 1..=mp {
        let ceils: Vec<(i64, i64)> = edge_mults
            .iter()
            .map(|&ms| (ceil_div(k * ms as i64, mp), ms as i64))
            .collect();
        let n0 = binomial(k - 1, 2) - ceils.iter().map(|&(c, _)| binomial(c - 1, 2)).sum::<i64>();
        let n1 =
            (k - 1) * (mp - k - 1) - ceils.iter().map(|&(c, ms)| (c - 1) * (ms - c)).sum::<i64>();
        let n2 = binomial(mp - k - 1, 2)
            - ceils
                .iter()
                .map(|&(c, ms)| binomial(ms - c, 2))
                .sum::<i64>()
            - i64::from(k == mp);
        sp.add_term(rat(k, mp), n0);
        sp.add_term(rat(k + mp, mp), n1);
        sp.add_term(rat(k + 2 * mp, mp), n2);
    }
    sp
}
