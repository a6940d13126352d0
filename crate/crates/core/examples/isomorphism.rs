//! Canonical forms and isomorphism testing.
//!
//!     cargo run --example isomorphism

use cospectral_lifts::fixtures::{base_g, base_h, example_s, example_s_prime};
use cospectral_lifts::graph::{complete, Graph};
use cospectral_lifts::isomorph::{are_isomorphic, canonical_form};
use cospectral_lifts::lift::build_lift;

fn main() {
    let petersen = Graph::from_edge_list(
        10,
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 6), (2, 7), (3, 8), (4, 9), (5, 10), (6, 8), (8, 10), (10, 7), (7, 9), (9, 6)],
    )
    .unwrap();
    let shuffled = petersen.relabel(&[3, 7, 0, 9, 2, 5, 1, 8, 6, 4]);
    let (a, b) = (canonical_form(&petersen).unwrap(), canonical_form(&shuffled).unwrap());
    println!("Petersen and a relabelled copy share a canonical form: {}", a == b);
    println!("canonical edges {:?}", a.edges());

    // highly symmetric inputs stay cheap
    let k = complete(20);
    println!("K20 canonical edges: {}", canonical_form(&k).unwrap().edges().len());

    println!("G ~ H: {}", are_isomorphic(&base_g(), &base_h()).unwrap().is_some());
    let lg = build_lift(&base_g(), &example_s()).unwrap();
    let lh = build_lift(&base_h(), &example_s_prime()).unwrap();
    println!("G(s) ~ H(s'): {}", are_isomorphic(&lg, &lh).unwrap().is_some());
}
