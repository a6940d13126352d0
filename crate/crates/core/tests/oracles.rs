mod common;

use common::{adjacency_i64, brute_isomorphic, cofactor_charpoly, cofactor_det, random_graph, random_permutation};
use cospectral_lifts::algebra::berkowitz_charpoly;
use cospectral_lifts::fixtures::{c4_base, c4_cover_signature, base_g, base_h};
use cospectral_lifts::graph::{cycle, star, Graph};
use cospectral_lifts::isomorph::{are_isomorphic, canonical_form};
use cospectral_lifts::lift::build_lift;
use cospectral_lifts::spectra::{charpoly, integer_charpoly};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn berkowitz_matches_cofactor_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..300 {
        let n = rng.gen_range(1..=5);
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let cp = berkowitz_charpoly(&m, &()).unwrap();
        assert_eq!(cp.len(), n + 1);
        // the constant term of det(tI - M) is (-1)^n det(M)
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(cp[n] as i128, sign * cofactor_det(&m), "trial {trial}: {m:?}");
        assert_eq!(integer_charpoly(&m).unwrap(), cofactor_charpoly(&m), "trial {trial}: {m:?}");
    }
}

#[test]
fn berkowitz_agrees_across_rings() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let n = rng.gen_range(1..=7);
        let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let small = berkowitz_charpoly(&m, &()).unwrap();
        let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let wide = berkowitz_charpoly(&big, &()).unwrap();
        assert_eq!(small.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>(), wide);
    }
}

#[test]
fn graph_charpoly_matches_cofactor_oracle() {
    for g in [base_g(), base_h(), star(4), cycle(5)] {
        assert_eq!(charpoly(&g), cofactor_charpoly(&adjacency_i64(&g)));
    }
}

#[test]
fn isomorphism_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut positives = 0;
    for trial in 0..300 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        // half the time compare against a relabelled copy
        let h = if rng.gen_bool(0.5) {
            g.relabel(&random_permutation(&mut rng, n))
        } else {
            random_graph(&mut rng, n, p)
        };
        let expected = brute_isomorphic(&g, &h);
        let got = are_isomorphic(&g, &h).unwrap();
        assert_eq!(got.is_some(), expected, "trial {trial}: {g:?} vs {h:?}");
        if let Some(map) = got {
            assert_eq!(g.relabel(&map), h);
            positives += 1;
        }
        assert_eq!(canonical_form(&g).unwrap() == canonical_form(&h).unwrap(), expected);
    }
    assert!(positives >= 100);
}

#[test]
fn relabelled_copies_are_isomorphic() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..100 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n, 0.4);
        let h = g.relabel(&random_permutation(&mut rng, n));
        let map = are_isomorphic(&g, &h).unwrap().expect("relabelled copy");
        assert_eq!(g.relabel(&map), h);
        // isomorphic graphs are cospectral
        assert_eq!(charpoly(&g), charpoly(&h));
    }
}

#[test]
fn canonical_form_reproduces_canonical_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = rng.gen_range(2..=20);
        let g = random_graph(&mut rng, n, 0.3);
        let cf = canonical_form(&g).unwrap();
        assert_eq!(g.relabel(cf.labeling()).edges(), cf.edges());
    }
}

#[test]
fn named_isomorphism_cases() {
    let lift = build_lift(&c4_base(), &c4_cover_signature()).unwrap();
    assert_eq!(canonical_form(&lift).unwrap(), canonical_form(&cycle(8)).unwrap());
    assert_ne!(canonical_form(&base_g()).unwrap(), canonical_form(&base_h()).unwrap());
    let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
    assert_eq!(are_isomorphic(&star(4), &c4k1).unwrap(), None);
}
