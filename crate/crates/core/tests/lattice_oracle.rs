//! Whitney's formula `chi(x) = sum_{S subset A} (-1)^{|S|} x^{n+1-rank S}` as an
//! independent check on the Möbius recursion.

use hmclass_core::families;
use hmclass_core::lattice::{linalg, Arrangement, Lattice, StrataTables};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn whitney(arr: &Arrangement) -> Vec<i64> {
    let n = arr.dim();
    let m = arr.len();
    let mut chi = vec![0i64; n + 2];
    for mask in 0u32..(1 << m) {
        let rows: Vec<_> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| arr.forms()[i].clone())
            .collect();
        let sign = if rows.len() % 2 == 0 { 1 } else { -1 };
        chi[n + 1 - linalg::rank(&rows)] += sign;
    }
    chi
}

fn random_arrangement(rng: &mut StdRng, n: usize, m: usize) -> Arrangement {
    loop {
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..=n).map(|_| rng.gen_range(-1..=1)).collect())
            .collect();
        if let Ok(arr) = Arrangement::from_int_rows(n, &rows) {
            return arr;
        }
    }
}

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn check(arr: &Arrangement) {
    let lat = Lattice::build(arr).unwrap();
    let expected: Vec<BigInt> = whitney(arr).into_iter().map(BigInt::from).collect();
    assert_eq!(lat.charpoly(), expected.as_slice(), "{}", arr.to_text());
    assert_eq!(lat.charpoly_at(&BigInt::from(1)), BigInt::from(0));

    // every pair of hyperplanes spans exactly one codimension-two flat
    let m = arr.len();
    let pairs: usize = lat
        .flats()
        .iter()
        .filter(|f| f.rank == 2)
        .map(|f| binom2(f.multiplicity()))
        .sum();
    assert_eq!(pairs, binom2(m));

    if arr.dim() == 2 {
        for f in lat.flats().iter().filter(|f| f.rank == 2) {
            assert_eq!(f.mobius, BigInt::from(f.multiplicity() as i64 - 1));
        }
    }
    let strata = StrataTables::new(&lat);
    for (&p, edges) in strata.points.iter().zip(&strata.incidence) {
        for &e in edges {
            assert!(lat
                .flat(e)
                .hyperplanes
                .iter()
                .all(|h| lat.flat(p).hyperplanes.contains(h)));
        }
    }
}

#[test]
fn families_match_whitney() {
    for n in 2..=3 {
        for m in 1..=7 {
            check(&families::generic(n, m).unwrap());
            if m >= 2 {
                check(&families::pencil(n, m).unwrap());
            }
            if m >= 3 {
                check(&families::near_pencil(n, m).unwrap());
            }
        }
        for m in 1..=n + 1 {
            check(&families::boolean(n, m).unwrap());
        }
        check(&families::braid(n).unwrap());
    }
    check(&families::cone(&families::braid(2).unwrap()));
}

#[test]
fn random_arrangements_match_whitney() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(2..=3);
        let m = rng.gen_range(1..=8);
        check(&random_arrangement(&mut rng, n, m));
    }
}
