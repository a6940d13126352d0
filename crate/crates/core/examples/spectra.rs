//! Exact characteristic polynomials, numeric eigenvalues and a small
//! cospectral pair.
//!
//!     cargo run --example spectra

use cospectral_lifts::fixtures::{base_g, base_h};
use cospectral_lifts::graph::{cycle, star, Graph};
use cospectral_lifts::spectra::{charpoly, cospectral, numeric_spectrum};

fn main() {
    let p = charpoly(&cycle(6));
    let eig: Vec<String> = numeric_spectrum(&p, 1e-10).iter().map(|x| format!("{x:.6}")).collect();
    println!("C6: {p}\n    eigenvalues {}", eig.join(" "));

    // the smallest cospectral pair: K_{1,4} and C4 plus an isolated vertex
    let k14 = star(4);
    let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
    println!("K1,4     {}", charpoly(&k14));
    println!("C4 + K1  {}", charpoly(&c4k1));
    println!("cospectral: {}", cospectral(&k14, &c4k1));

    let (g, h) = (base_g(), base_h());
    println!("G {}  degrees {:?}", charpoly(&g), g.degree_sequence());
    println!("H {}  degrees {:?}", charpoly(&h), h.degree_sequence());
    println!("cospectral: {}", cospectral(&g, &h));
}
