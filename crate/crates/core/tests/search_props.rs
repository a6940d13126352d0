mod common;

use std::collections::HashMap;

use common::{adjacency_i64, leverrier_charpoly};
use cospectral_lifts::algebra::{characters, CycloElem, GroupElement, GroupSpec};
use cospectral_lifts::graph::{cycle, star, Graph};
use cospectral_lifts::isomorph::are_isomorphic;
use cospectral_lifts::lift::{build_lift, signature_count, Signature};
use cospectral_lifts::search::{
    check_condition1, check_condition2, conditions_hold, corollary_generate, search, CorollaryParams, FixturePair,
    SearchOptions,
};
use cospectral_lifts::spectra::charpoly;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_signatures(base: &Graph, gr: &GroupSpec) -> Vec<Signature> {
    let count = signature_count(gr, base.edge_count()).unwrap();
    (0..count).map(|r| Signature::from_rank(base, gr, r).unwrap()).collect()
}

/// Every pair compared directly, no caching or hashing.
fn double_loop(g: &Graph, h: &Graph, gr: &GroupSpec) -> Vec<(u64, u64, bool)> {
    let lifts = |base: &Graph| -> Vec<(u64, Graph, _)> {
        all_signatures(base, gr)
            .iter()
            .map(|s| {
                let l = build_lift(base, s).unwrap();
                let p = leverrier_charpoly(&adjacency_i64(&l));
                (s.rank(), l, p)
            })
            .collect()
    };
    let (left, right) = (lifts(g), lifts(h));
    let mut out = Vec::new();
    for (rg, a, pa) in &left {
        for (rh, b, pb) in &right {
            if pa == pb {
                out.push((*rg, *rh, are_isomorphic(a, b).unwrap().is_none()));
            }
        }
    }
    out
}

fn summary(g: &Graph, h: &Graph, gr: &GroupSpec) -> Vec<(u64, u64, bool)> {
    search(g, h, gr, &SearchOptions::default())
        .unwrap()
        .iter()
        .map(|r| (r.rank_g(), r.rank_h(), r.non_isomorphic))
        .collect()
}

#[test]
fn search_matches_double_loop_on_three_edge_base() {
    let p4 = Graph::from_edge_list(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
    let p4_relabelled = Graph::from_edge_list(4, [(2, 4), (4, 1), (1, 3)]).unwrap();
    let z2 = GroupSpec::cyclic(2);
    let expected = double_loop(&p4, &p4_relabelled, &z2);
    assert_eq!(summary(&p4, &p4_relabelled, &z2), expected);
    // a tree's Z2 lifts are all disjoint double copies: every pair qualifies
    assert_eq!(expected.len(), 64);
}

#[test]
fn search_matches_double_loop_on_star_and_square() {
    let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
    let z2 = GroupSpec::cyclic(2);
    let expected = double_loop(&star(4), &c4k1, &z2);
    let got = summary(&star(4), &c4k1, &z2);
    assert_eq!(got, expected);
    assert!(got.contains(&(0, 0, true)));
}

#[test]
fn search_results_reverify_independently() {
    let fx = FixturePair::new();
    let z2 = GroupSpec::cyclic(2);
    let mut oracle = HashMap::new();
    let mut poly = |base: &Graph, s: &Signature| {
        let key = (base.clone(), s.rank());
        oracle
            .entry(key)
            .or_insert_with(|| leverrier_charpoly(&adjacency_i64(&build_lift(base, s).unwrap())))
            .clone()
    };
    for r in search(&fx.g, &fx.h, &z2, &SearchOptions::default()).unwrap() {
        let pa = poly(&fx.g, &r.s);
        assert_eq!(pa, poly(&fx.h, &r.s_prime));
        assert_eq!(pa, r.charpoly);
        assert_eq!(r.conditions_satisfied, conditions_hold(&r.s, &r.s_prime).unwrap());
    }
}

#[test]
fn search_output_does_not_depend_on_thread_count() {
    let fx = FixturePair::new();
    let gr = GroupSpec::cyclic(2);
    let run = |jobs| {
        let opts = SearchOptions { jobs: Some(jobs), ..SearchOptions::default() };
        search(&fx.g, &fx.h, &gr, &opts).unwrap().iter().map(|r| r.to_line()).collect::<Vec<_>>()
    };
    let one = run(1);
    assert_eq!(one, run(3));
    assert_eq!(one, run(8));
}

fn params_from(values: &[GroupElement]) -> CorollaryParams {
    let [u, v, w, x, y, r, x1] = values else { panic!("seven free values") };
    CorollaryParams::with_v1_from_w(u.clone(), v.clone(), w.clone(), x.clone(), y.clone(), r.clone(), x1.clone())
}

#[test]
fn corollary_pairs_are_cospectral_over_z2() {
    let z2 = GroupSpec::cyclic(2);
    let elems = z2.elements();
    for mask in 0u32..128 {
        let values: Vec<GroupElement> = (0..7).map(|b| elems[((mask >> b) & 1) as usize].clone()).collect();
        let (s, sp) = corollary_generate(&z2, &params_from(&values)).unwrap();
        assert!(check_condition1(&s).unwrap());
        assert!(check_condition2(&s, &sp).unwrap());
        let fx = FixturePair::new();
        assert_eq!(charpoly(&build_lift(&fx.g, &s).unwrap()), charpoly(&build_lift(&fx.h, &sp).unwrap()));
    }
}

#[test]
fn corollary_pairs_are_cospectral_over_random_groups() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let fx = FixturePair::new();
    for spec in ["Z3", "Z4", "Z5", "Z2xZ2"] {
        let gr: GroupSpec = spec.parse().unwrap();
        let elems = gr.elements();
        for _ in 0..60 {
            let values: Vec<GroupElement> = (0..7).map(|_| elems.choose(&mut rng).unwrap().clone()).collect();
            let (s, sp) = corollary_generate(&gr, &params_from(&values)).unwrap();
            assert!(conditions_hold(&s, &sp).unwrap());
            assert_eq!(charpoly(&build_lift(&fx.g, &s).unwrap()), charpoly(&build_lift(&fx.h, &sp).unwrap()));
        }
    }
}

#[test]
fn corollary_with_other_v1_may_break_the_second_condition() {
    let z3 = GroupSpec::cyclic(3);
    let e = |a| GroupElement::Abelian(vec![a]);
    // alpha = x v w^-1 = 1; gamma = x v v1^-1 = 0 with v1 = 1
    let mut p = CorollaryParams::with_v1_from_w(e(0), e(1), e(0), e(0), e(0), e(0), e(0));
    p.v1 = e(1);
    let (s, sp) = corollary_generate(&z3, &p).unwrap();
    assert!(check_condition1(&s).unwrap());
    assert!(!check_condition2(&s, &sp).unwrap());
}

#[test]
fn z3_search_contains_every_corollary_pair() {
    let fx = FixturePair::new();
    let z3 = GroupSpec::cyclic(3);
    let opts = SearchOptions { filter_by_theorem: true, ..SearchOptions::default() };
    let found: std::collections::HashSet<(u64, u64)> =
        search(&fx.g, &fx.h, &z3, &opts).unwrap().iter().map(|r| (r.rank_g(), r.rank_h())).collect();
    let elems = z3.elements();
    for code in 0..3u32.pow(7) {
        let values: Vec<GroupElement> = (0..7).map(|k| elems[(code / 3u32.pow(k) % 3) as usize].clone()).collect();
        let (s, sp) = corollary_generate(&z3, &params_from(&values)).unwrap();
        assert!(found.contains(&(s.rank(), sp.rank())), "{s:?} / {sp:?}");
    }
}

#[test]
fn conditions_are_sound_over_z4() {
    let fx = FixturePair::new();
    let z4 = GroupSpec::cyclic(4);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut cache: HashMap<(bool, u64), cospectral_lifts::spectra::CharPoly> = HashMap::new();
    let mut poly = |side: bool, s: &Signature| {
        let base = if side { &fx.h } else { &fx.g };
        cache.entry((side, s.rank())).or_insert_with(|| charpoly(&build_lift(base, s).unwrap())).clone()
    };
    let count = signature_count(&z4, 7).unwrap();
    let mut hits = 0;
    for _ in 0..10_000 {
        let s = Signature::from_rank(&fx.g, &z4, rng.gen_range(0..count)).unwrap();
        let sp = Signature::from_rank(&fx.h, &z4, rng.gen_range(0..count)).unwrap();
        if conditions_hold(&s, &sp).unwrap() {
            hits += 1;
            assert_eq!(poly(false, &s), poly(true, &sp), "{s:?} / {sp:?}");
        }
    }
    // uniform pairs rarely satisfy both conditions; bias toward the family
    let elems = z4.elements();
    for _ in 0..500 {
        let values: Vec<GroupElement> = (0..7).map(|_| elems.choose(&mut rng).unwrap().clone()).collect();
        let (s, sp) = corollary_generate(&z4, &params_from(&values)).unwrap();
        assert_eq!(poly(false, &s), poly(true, &sp));
        hits += 1;
    }
    assert!(hits > 500);
}

/// For every character, `2(χ(α) + χ(α⁻¹)) = χ(β) + χ(β⁻¹) + χ(γ) + χ(γ⁻¹)`
/// in the cyclotomic ring.
fn character_sums_agree(gr: &GroupSpec, a: &GroupElement, b: &GroupElement, c: &GroupElement) -> bool {
    let sym = |chi: &cospectral_lifts::algebra::Character, x: &GroupElement| -> CycloElem {
        chi.eval(x).unwrap().add(&chi.eval(&gr.inverse(x).unwrap()).unwrap()).unwrap()
    };
    characters(gr).unwrap().iter().all(|chi| {
        let left = sym(chi, a).add(&sym(chi, a)).unwrap();
        let right = sym(chi, b).add(&sym(chi, c)).unwrap();
        left == right
    })
}

fn multisets_agree(gr: &GroupSpec, a: &GroupElement, b: &GroupElement, c: &GroupElement) -> bool {
    let idx = |xs: [GroupElement; 4]| {
        let mut v: Vec<usize> = xs.iter().map(|x| gr.element_index(x).unwrap()).collect();
        v.sort_unstable();
        v
    };
    let inv = |x: &GroupElement| gr.inverse(x).unwrap();
    idx([a.clone(), inv(a), a.clone(), inv(a)]) == idx([b.clone(), inv(b), c.clone(), inv(c)])
}

#[test]
fn multiset_reformulation_matches_character_sums() {
    let groups: Vec<GroupSpec> =
        ["Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"].iter().map(|s| s.parse().unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut agreeing = 0;
    for gr in &groups {
        let elems = gr.elements();
        for _ in 0..150 {
            let a = elems.choose(&mut rng).unwrap();
            // pick b, c near a often enough to see both outcomes
            let b = if rng.gen_bool(0.5) { a.clone() } else { elems.choose(&mut rng).unwrap().clone() };
            let c = if rng.gen_bool(0.5) { gr.inverse(a).unwrap() } else { elems.choose(&mut rng).unwrap().clone() };
            let by_chars = character_sums_agree(gr, a, &b, &c);
            assert_eq!(by_chars, multisets_agree(gr, a, &b, &c), "{gr}: {a} {b} {c}");
            agreeing += usize::from(by_chars);
        }
    }
    assert!(agreeing > 100);
}

#[test]
fn first_condition_matches_character_products() {
    for gr in ["Z2", "Z3", "Z4", "Z2xZ2", "Z6"].iter().map(|s| s.parse::<GroupSpec>().unwrap()) {
        let chars = characters(&gr).unwrap();
        let fx = FixturePair::new();
        let count = signature_count(&gr, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(gr.order());
        for _ in 0..100 {
            let s = Signature::from_rank(&fx.g, &gr, rng.gen_range(0..count)).unwrap();
            let v = s.values();
            let (vv, w, y, z) = (&v[1], &v[2], &v[4], &v[5]);
            let by_chars = chars.iter().all(|chi| {
                chi.eval(w).unwrap().mul(&chi.eval(z).unwrap()).unwrap()
                    == chi.eval(vv).unwrap().mul(&chi.eval(y).unwrap()).unwrap()
            });
            assert_eq!(check_condition1(&s).unwrap(), by_chars);
        }
    }
}
