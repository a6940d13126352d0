//! Lifting two cospectral graphs by the same involution on every edge
//! keeps them cospectral.
//!
//!     cargo run --example constant_lifts

use cospectral_lifts::algebra::GroupSpec;
use cospectral_lifts::fixtures::{base_g, base_h};
use cospectral_lifts::lift::build_constant_lift;
use cospectral_lifts::spectra::{charpoly, verify_constant_lift_lemma};

fn main() {
    let (g, h) = (base_g(), base_h());
    for spec in ["Z2", "Z2xZ2", "S3"] {
        let gr: GroupSpec = spec.parse().unwrap();
        for e in gr.elements() {
            if gr.element_order(&e).unwrap() != 2 {
                continue;
            }
            let same = verify_constant_lift_lemma(&g, &h, &gr, &e).unwrap();
            let lifted = build_constant_lift(&g, &gr, &e).unwrap();
            println!("{spec:6} {e:8} cospectral={same}  charpoly {}", charpoly(&lifted));
        }
    }

    // an element of order 3 is refused: its permutation matrix is not symmetric
    let z3 = GroupSpec::cyclic(3);
    let e = z3.parse_element("1").unwrap();
    println!("Z3 1: {}", verify_constant_lift_lemma(&g, &h, &z3, &e).unwrap_err());
}
