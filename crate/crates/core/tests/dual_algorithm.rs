use hmclass_core::algebra::{int, PolyY};
use hmclass_core::families;
use hmclass_core::ktheory::{hm_p3_closed, hm_pushforward};
use hmclass_core::lattice::{Arrangement, Lattice};
use hmclass_core::spectrum::{hm_p2, hm_p3};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_arrangement(rng: &mut StdRng, n: usize, m: usize, spread: i64) -> Option<Arrangement> {
    for _ in 0..100 {
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..=n).map(|_| rng.gen_range(-spread..=spread)).collect())
            .collect();
        if let Ok(arr) = Arrangement::from_int_rows(n, &rows) {
            return Some(arr);
        }
    }
    None
}

#[test]
fn random_line_arrangements() {
    let mut rng = StdRng::seed_from_u64(2);
    for _ in 0..120 {
        let m = rng.gen_range(1..=8);
        let Some(arr) = random_arrangement(&mut rng, 2, m, 2) else {
            continue;
        };
        let lat = Lattice::build(&arr).unwrap();
        let sigma = hm_p2(&lat).unwrap();
        assert_eq!(
            sigma.pushforward(),
            hm_pushforward(&lat).unwrap(),
            "{}",
            arr.to_text()
        );
        for t in &sigma.top {
            let mp = lat.flat(t.flat).multiplicity() as i64;
            assert_eq!(t.coeff.eval(&int(-1)), int(-(mp - 1) * (mp - 1)));
        }
    }
}

#[test]
fn random_plane_arrangements() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut seen = 0;
    while seen < 80 {
        let m = rng.gen_range(1..=7);
        let Some(arr) = random_arrangement(&mut rng, 3, m, 1) else {
            continue;
        };
        seen += 1;
        let lat = Lattice::build(&arr).unwrap();
        let k = hm_pushforward(&lat).unwrap();
        let sigma = hm_p3(&lat).unwrap();
        assert_eq!(sigma.pushforward(), k, "{}", arr.to_text());
        assert_eq!(hm_p3_closed(&lat).unwrap(), k, "{}", arr.to_text());
        for t in &sigma.top {
            let ms = lat.flat(t.flat).multiplicity() as i64;
            assert_eq!(t.coeff.eval(&int(-1)), int(-(ms - 1) * (ms - 1)));
        }
    }
}

#[test]
fn cones_over_line_arrangements() {
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..20 {
        let m = rng.gen_range(2..=6);
        let Some(arr) = random_arrangement(&mut rng, 2, m, 2) else {
            continue;
        };
        let lat = Lattice::build(&families::cone(&arr)).unwrap();
        assert!(!lat.is_essential());
        assert_eq!(
            hm_p3(&lat).unwrap().pushforward(),
            hm_pushforward(&lat).unwrap()
        );
    }
}

#[test]
fn generic_lines_only_double_points() {
    for m in 2..=8usize {
        let lat = Lattice::build(&families::generic(2, m).unwrap()).unwrap();
        let sigma = hm_p2(&lat).unwrap();
        assert_eq!(sigma.top.len(), m * (m - 1) / 2);
        assert!(sigma.top.iter().all(|t| t.coeff == PolyY::y()));
    }
}
