use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::acoeff::hirzebruch_pn;
use super::class::GradedProjClass;
use super::virtual_class::{virtual_pushforward_closed, virtual_pushforward_series};
use crate::algebra::{binomial, int, PolyY, Rational};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, StrataTables};

/// Pushforward of the Hirzebruch class of the arrangement itself, from the cone's
/// characteristic polynomial `chi(x) = sum (-1)^i c_i x^{n+1-i}` (ascending input):
/// `sum_{i=1}^n (-1)^{i+1} c_i T_{y*}(P^{n-i})`.
pub fn arr_hirzebruch_pushforward(charpoly: &[BigInt], n: usize) -> Result<GradedProjClass> {
    if charpoly.len() != n + 2 || !charpoly[n + 1].is_one() {
        return Err(Error::NotMonic {
            expected_degree: n + 1,
        });
    }
    let mut total = GradedProjClass::zero(n);
    for i in 1..=n {
        let signed = &charpoly[n + 1 - i];
        // (-1)^{i+1} c_i = (-1)^{i+1} (-1)^i [x^{n+1-i}] chi = -[x^{n+1-i}] chi
        let weight = -Rational::from_integer(signed.clone());
        if weight.is_zero() {
            continue;
        }
        total = &total + &hirzebruch_pn(n - i).embed(n).scale(&weight);
    }
    Ok(total)
}

/// Hirzebruch-Milnor class pushed into `H_*(P^n)[y]`: virtual minus actual class.
///
/// The closed virtual form is cross-checked against the K-theory expansion.
pub fn hm_pushforward(lat: &Lattice) -> Result<GradedProjClass> {
    let n = lat.dim();
    let m = lat.num_hyperplanes();
    let closed = virtual_pushforward_closed(n, m)?;
    if virtual_pushforward_series(n, m)? != closed {
        return Err(Error::VirtualMismatch { n, m });
    }
    let hm = &closed - &arr_hirzebruch_pushforward(lat.charpoly(), n)?;
    if let Some(d) = hm.top_dim().filter(|&d| d + 2 > n) {
        return Err(Error::SupportViolation { dim: d });
    }
    Ok(hm)
}

/// Closed formula in `P^3` from `m`, the edge multiplicities and `mu(1) = chi(0)`.
///
/// The constant `[pt]` term is `binom(m-1, 3) - mu(1)`; this is what `chi(1) = 0`
/// forces when subtracting the arrangement class from the virtual class.
pub fn hm_p3_closed(lat: &Lattice) -> Result<GradedProjClass> {
    if lat.dim() != 3 {
        return Err(Error::Dimension {
            found: lat.dim(),
            expected: "3",
        });
    }
    let m = lat.num_hyperplanes() as i64;
    let strata = StrataTables::new(lat);
    let edge_mults: Vec<i64> = strata
        .edges
        .iter()
        .map(|&e| lat.flat(e).multiplicity() as i64)
        .collect();

    let edges: PolyY = edge_mults
        .iter()
        .map(|&ms| PolyY::from_ints(&[-binomial(ms - 1, 2), binomial(ms, 2)]))
        .sum();
    let excess: i64 = edge_mults.iter().map(|ms| ms - 1).sum();
    let mu_one = lat.mu_one().to_i64().expect("mu(1) fits in i64");
    let c = binomial(m - 1, 3);
    let pt = PolyY::new(vec![
        int(c - mu_one),
        int(-(4 * binomial(m, 3) + excess)),
        int(c - m + 1),
    ]);
    Ok(GradedProjClass::from_coeffs(3, vec![pt, edges]))
}
