//! The spectrum of an abelian lift is the union of the spectra of the
//! character-twisted matrices `A_chi`, one per character.
//!
//!     cargo run --example decomposition

use cospectral_lifts::algebra::{characters, GroupSpec};
use cospectral_lifts::fixtures::base_g;
use cospectral_lifts::lift::Signature;
use cospectral_lifts::spectra::{build_ax, verify_decomposition};

fn main() {
    let g = base_g();
    let z4 = GroupSpec::cyclic(4);
    let s = Signature::from_rank(&g, &z4, 12_345).unwrap();
    print!("signature #{}:\n{}", s.rank(), s.to_text());

    for chi in characters(&z4).unwrap() {
        let ax = build_ax(&g, &s, &chi).unwrap();
        let poly: Vec<String> = ax.charpoly().unwrap().iter().map(|c| c.to_string()).collect();
        println!("chi{:?}: det(tI - A_chi) = [{}]", chi.index(), poly.join(", "));
    }

    let report = verify_decomposition(&g, &s).unwrap();
    println!("lift    {}", report.lift_poly);
    println!("product {}", report.product_poly);
    println!("{}", if report.holds { "equal" } else { "DIFFERENT" });
}
