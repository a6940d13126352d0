//! The Z2 voltage lift of C4 with one flipped edge is the 8-cycle.
//!
//!     cargo run --example double_cover

use cospectral_lifts::fixtures::{c4_base, c4_cover_signature};
use cospectral_lifts::graph::{cycle, emit_edge_list};
use cospectral_lifts::isomorph::are_isomorphic;
use cospectral_lifts::lift::build_lift;

fn main() {
    let base = c4_base();
    let s = c4_cover_signature();
    print!("signature:\n{}", s.to_text());

    let lift = build_lift(&base, &s).unwrap();
    println!("lift has {} vertices, {} edges", lift.vertex_count(), lift.edge_count());
    print!("{}", emit_edge_list(&lift));

    // vertex (i, a) sits at index (i-1)*d + a; any labelling of C8 will do
    let map = are_isomorphic(&lift, &cycle(8)).unwrap().expect("an 8-cycle");
    let shown: Vec<String> = map.iter().enumerate().map(|(v, w)| format!("{}->{}", v + 1, w + 1)).collect();
    println!("isomorphism onto C8: {}", shown.join(" "));
}
