//! The two signature conditions on the 6-vertex pair, and the one-parameter
//! family of signatures that satisfies them.
//!
//!     cargo run --example conditions

use cospectral_lifts::algebra::{GroupElement, GroupSpec};
use cospectral_lifts::lift::build_lift;
use cospectral_lifts::search::{
    check_condition1, check_condition2, corollary_generate, CorollaryParams, FixturePair, G_VARIABLES, H_VARIABLES,
};
use cospectral_lifts::spectra::charpoly;

fn main() {
    let names = |vars: &[(&str, (usize, usize))]| {
        vars.iter().map(|(n, (i, j))| format!("{n}={i}{j}")).collect::<Vec<_>>().join(" ")
    };
    println!("G edges: {}", names(&G_VARIABLES));
    println!("H edges: {}", names(&H_VARIABLES));

    let z5 = GroupSpec::cyclic(5);
    let el = |a: u32| GroupElement::Abelian(vec![a]);
    let p = CorollaryParams::with_v1_from_w(el(1), el(2), el(3), el(4), el(0), el(2), el(1));
    let (s, sp) = corollary_generate(&z5, &p).unwrap();
    print!("s over Z5:\n{}s':\n{}", s.to_text(), sp.to_text());
    println!("condition 1: {}", check_condition1(&s).unwrap());
    println!("condition 2: {}", check_condition2(&s, &sp).unwrap());

    let fx = FixturePair::new();
    let (a, b) = (build_lift(&fx.g, &s).unwrap(), build_lift(&fx.h, &sp).unwrap());
    println!("lifts cospectral: {}", charpoly(&a) == charpoly(&b));

    // moving v1 off w (and off x^2 v^2 w^-1) breaks the second condition
    let bad = CorollaryParams { v1: el(0), ..p };
    let (s, sp) = corollary_generate(&z5, &bad).unwrap();
    println!("with v1=0, condition 2: {}", check_condition2(&s, &sp).unwrap());
}
