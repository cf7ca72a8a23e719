use num_integer::Integer;

use super::contribution::{floor_gap, p3_point_contribution, stratum_contribution};
use super::local::{
    p2_point_multiplicities, p3_edge_infinity_spectrum, p3_edge_spectrum, p3_point_multiplicities,
};
use super::sigma::{SigmaClass, StratumKind, StratumSpec, TopTerm};
use crate::algebra::{int, PolyY};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, StrataTables};

/// Hirzebruch-Milnor class of a line arrangement: one term per singular point.
pub fn hm_p2(lat: &Lattice) -> Result<SigmaClass> {
    if lat.dim() != 2 {
        return Err(Error::Dimension {
            found: lat.dim(),
            expected: "2",
        });
    }
    let strata = StrataTables::new(lat);
    let mut class = SigmaClass::new(2);
    for &p in &strata.points {
        let flat = lat.flat(p);
        let coeff = stratum_contribution(&p2_point_multiplicities(flat.multiplicity()), 2)?;
        class.top.push(TopTerm {
            label: flat.label.clone(),
            flat: p,
            coeff,
        });
    }
    Ok(class)
}

/// `l_{S,k} = sum_{P in S} ceil(k (m_P - m_S) / m_S) + ceil(k (m_S - m) / m_S)`.
pub fn l_coeff(lat: &Lattice, strata: &StrataTables, edge: usize, k: i64) -> i64 {
    let m_s = lat.flat(edge).multiplicity() as i64;
    let m = lat.num_hyperplanes() as i64;
    let on_edge: i64 = strata
        .points_on(edge)
        .into_iter()
        .map(|p| Integer::div_ceil(&(k * (lat.flat(p).multiplicity() as i64 - m_s)), &m_s))
        .sum();
    on_edge + Integer::div_ceil(&(k * (m_s - m)), &m_s)
}

/// Edge term and `[pt]` correction of one edge.
///
/// The log-bundle degree for the exponent `k / m_S` is `l_{S,-k}`: the eigensheaf
/// attached to `alpha` is the one of `e(-alpha)`. For edges whose `l` is odd in `k`
/// the two readings differ, and only this one matches the K-theory class.
pub fn p3_edge_contribution(
    lat: &Lattice,
    strata: &StrataTables,
    edge: usize,
) -> Result<(PolyY, PolyY)> {
    edge_contribution_with_sign(lat, strata, edge, -1)
}

pub(crate) fn edge_contribution_with_sign(
    lat: &Lattice,
    strata: &StrataTables,
    edge: usize,
    sign: i64,
) -> Result<(PolyY, PolyY)> {
    let m_s = lat.flat(edge).multiplicity();
    let points = strata.points_on(edge).len() as i64;
    let mut edge_poly = PolyY::zero();
    let mut pt_poly = PolyY::zero();
    for (a, n) in p3_edge_spectrum(m_s).iter() {
        if *a > int(3) {
            return Err(Error::ExponentOutOfRange {
                exponent: a.to_string(),
                bound: 3,
            });
        }
        let k = a * int(m_s as i64);
        let k = i64::try_from(k.to_integer()).expect("small exponent");
        let weight = PolyY::neg_y_pow(floor_gap(3, a)).scale(&int(n));
        let l = l_coeff(lat, strata, edge, sign * k);
        let bracket = PolyY::from_ints(&[l - points, l - 1]);
        edge_poly = &edge_poly + &weight;
        pt_poly = &pt_poly + &(&weight * &bracket);
    }
    Ok((edge_poly, pt_poly))
}

/// Local spectra of every stratum used by the `P^3` assembly, in lattice order.
pub fn p3_strata_spectra(lat: &Lattice) -> Result<Vec<StratumSpec>> {
    if lat.dim() != 3 {
        return Err(Error::Dimension {
            found: lat.dim(),
            expected: "3",
        });
    }
    let m = lat.num_hyperplanes();
    let strata = StrataTables::new(lat);
    let mut out = Vec::new();
    for &e in &strata.edges {
        let flat = lat.flat(e);
        let m_s = flat.multiplicity();
        for (kind, spectrum) in [
            (StratumKind::Edge, p3_edge_spectrum(m_s)),
            (
                StratumKind::EdgeAtInfinity,
                p3_edge_infinity_spectrum(m_s, m),
            ),
        ] {
            out.push(StratumSpec {
                label: flat.label.clone(),
                flat: e,
                kind,
                spectrum,
                multiplicity: m_s,
                degree: m,
            });
        }
    }
    for (&p, edges) in strata.points.iter().zip(&strata.incidence) {
        let flat = lat.flat(p);
        let edge_mults: Vec<usize> = edges.iter().map(|&e| lat.flat(e).multiplicity()).collect();
        out.push(StratumSpec {
            label: flat.label.clone(),
            flat: p,
            kind: StratumKind::Point,
            spectrum: p3_point_multiplicities(flat.multiplicity(), &edge_mults),
            multiplicity: flat.multiplicity(),
            degree: m,
        });
    }
    Ok(out)
}

/// Local spectra of every singular point of a line arrangement.
pub fn p2_strata_spectra(lat: &Lattice) -> Result<Vec<StratumSpec>> {
    if lat.dim() != 2 {
        return Err(Error::Dimension {
            found: lat.dim(),
            expected: "2",
        });
    }
    let strata = StrataTables::new(lat);
    Ok(strata
        .points
        .iter()
        .map(|&p| {
            let flat = lat.flat(p);
            StratumSpec {
                label: flat.label.clone(),
                flat: p,
                kind: StratumKind::Point,
                spectrum: p2_point_multiplicities(flat.multiplicity()),
                multiplicity: flat.multiplicity(),
                degree: lat.num_hyperplanes(),
            }
        })
        .collect())
}

/// Hirzebruch-Milnor class of a plane arrangement in `P^3`: edge terms on each `[S]`
/// and the point, infinity and log-bundle terms collected on `[pt]`.
pub fn hm_p3(lat: &Lattice) -> Result<SigmaClass> {
    assemble_p3(lat, -1)
}

pub(crate) fn assemble_p3(lat: &Lattice, sign: i64) -> Result<SigmaClass> {
    if lat.dim() != 3 {
        return Err(Error::Dimension {
            found: lat.dim(),
            expected: "3",
        });
    }
    let strata = StrataTables::new(lat);
    let mut class = SigmaClass::new(3);
    let mut pt = PolyY::zero();
    for spec in p3_strata_spectra(lat)? {
        match spec.kind {
            StratumKind::Edge => {
                let (edge_poly, pt_poly) =
                    edge_contribution_with_sign(lat, &strata, spec.flat, sign)?;
                class.top.push(TopTerm {
                    label: spec.label,
                    flat: spec.flat,
                    coeff: edge_poly,
                });
                pt = &pt + &pt_poly;
            }
            StratumKind::EdgeAtInfinity | StratumKind::Point => {
                pt = &pt + &p3_point_contribution(&spec.spectrum)?;
            }
        }
    }
    class.lower.insert(0, pt);
    Ok(class)
}
