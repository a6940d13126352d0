//! Reading and writing graphs as graph6 and as edge lists.
//!
//!     cargo run --example graph_formats

use cospectral_lifts::fixtures::base_g;
use cospectral_lifts::graph::{cycle, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};

fn main() {
    let g = base_g();
    let g6 = emit_graph6(&g);
    println!("G as graph6: {g6}");
    println!("G as an edge list:\n{}", emit_edge_list(&g));
    println!("degree sequence {:?}, {} triangles", g.degree_sequence(), g.triangle_count());

    // both formats round-trip
    assert_eq!(parse_graph6(&g6).unwrap(), g);
    assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);

    let c5 = parse_graph6("Dhc").unwrap();
    println!("Dhc is C5: {}", c5 == cycle(5));
    println!("{}", c5.matrix_text());

    match parse_graph6("D~~~") {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("rejected D~~~: {e}"),
    }
}
