//! Standard arrangements used by tests, benchmarks and the CLI corpus.

use crate::algebra::{int, Rational};
use crate::error::Result;
use crate::lattice::Arrangement;

fn build(n: usize, rows: Vec<Vec<i64>>) -> Result<Arrangement> {
    Arrangement::from_int_rows(n, &rows)
}

/// `m` hyperplanes in general position, from points on the moment curve.
pub fn generic(n: usize, m: usize) -> Result<Arrangement> {
    let rows = (1..=m as i64)
        .map(|t| (0..=n as u32).map(|k| t.pow(k)).collect())
        .collect();
    build(n, rows)
}

/// `m` hyperplanes through a common codimension-two subspace `x_0 = x_1 = 0`.
pub fn pencil(n: usize, m: usize) -> Result<Arrangement> {
    let rows = (0..m as i64)
        .map(|t| {
            let mut r = vec![0; n + 1];
            r[0] = 1;
            r[1] = t;
            if t == 0 {
                r[0] = 0;
                r[1] = 1;
            }
            r
        })
        .collect();
    build(n, rows)
}

/// A pencil of `m - 1` hyperplanes plus one generic hyperplane.
pub fn near_pencil(n: usize, m: usize) -> Result<Arrangement> {
    let mut rows: Vec<Vec<i64>> = pencil(n, m - 1)?
        .forms()
        .iter()
        .map(|f| f.iter().map(to_i64).collect())
        .collect();
    rows.push((0..=n as i64).map(|k| k + 1).collect());
    build(n, rows)
}

/// The `m <= n + 1` coordinate hyperplanes `x_0, ..., x_{m-1}`.
pub fn boolean(n: usize, m: usize) -> Result<Arrangement> {
    let rows = (0..m)
        .map(|i| {
            let mut r = vec![0; n + 1];
            r[i] = 1;
            r
        })
        .collect();
    build(n, rows)
}

/// Braid arrangement `x_i - x_j` on `n + 2` coordinates, written in the `n + 1`
/// coordinates `x_i - x_{n+1}`.
pub fn braid(n: usize) -> Result<Arrangement> {
    let k = n + 1;
    let mut rows = Vec::new();
    for i in 0..k {
        let mut r = vec![0; k];
        r[i] = 1;
        rows.push(r);
    }
    for i in 0..k {
        for j in i + 1..k {
            let mut r = vec![0; k];
            r[i] = 1;
            r[j] = -1;
            rows.push(r);
        }
    }
    build(n, rows)
}

/// Cone over an arrangement: the same forms in `P^{n+1}` (non-essential).
pub fn cone(arr: &Arrangement) -> Arrangement {
    arr.cone()
}

fn to_i64(c: &Rational) -> i64 {
    assert!(c.is_integer(), "expected integral coefficient");
    i64::try_from(c.to_integer()).expect("coefficient fits in i64")
}

/// Rational coefficient convenience for callers assembling forms by hand.
pub fn form(coeffs: &[i64]) -> Vec<Rational> {
    coeffs.iter().map(|&c| int(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;
    use num_bigint::BigInt;

    fn chi(arr: &Arrangement) -> Vec<i64> {
        Lattice::build(arr)
            .unwrap()
            .charpoly()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn generic_lines_have_only_double_points() {
        let lat = Lattice::build(&generic(2, 5).unwrap()).unwrap();
        assert_eq!(lat.rank_counts(), vec![1, 5, 10, 1]);
    }

    #[test]
    fn pencil_is_rank_two() {
        let arr = pencil(2, 4).unwrap();
        assert_eq!(arr.rank(), 2);
        // chi = x (x-1)(x-3)
        assert_eq!(chi(&arr), vec![0, 3, -4, 1]);
    }

    #[test]
    fn near_pencil_counts() {
        let lat = Lattice::build(&near_pencil(2, 5).unwrap()).unwrap();
        // one quadruple point plus four double points
        assert_eq!(lat.rank_counts(), vec![1, 5, 5, 1]);
    }

    #[test]
    fn braid_a3_charpoly() {
        // A_3 exponents 1, 2, 3
        let arr = braid(2).unwrap();
        assert_eq!(arr.len(), 6);
        assert_eq!(chi(&arr), vec![-6, 11, -6, 1]);
    }

    #[test]
    fn boolean_is_binomial() {
        assert_eq!(chi(&boolean(3, 4).unwrap()), vec![1, -4, 6, -4, 1]);
        assert_eq!(
            Lattice::build(&boolean(3, 2).unwrap()).unwrap().mu_one(),
            BigInt::from(0)
        );
    }

    #[test]
    fn cone_multiplies_by_x() {
        let arr = generic(2, 4).unwrap();
        let mut expected = vec![0];
        expected.extend(chi(&arr));
        assert_eq!(chi(&cone(&arr)), expected);
    }
}
