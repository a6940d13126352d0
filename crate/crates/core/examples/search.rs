//! Exhaustive search for signature pairs with cospectral lifts.
//!
//!     cargo run --release --example search [GROUP] [THREADS]

use std::env;

use cospectral_lifts::algebra::GroupSpec;
use cospectral_lifts::graph::{cycle, star, Graph};
use cospectral_lifts::search::{search, FixturePair, SearchOptions};

fn main() {
    let mut args = env::args().skip(1);
    let gr: GroupSpec = args.next().unwrap_or_else(|| "Z2".into()).parse().expect("group like Z2 or Z2xZ2");
    let jobs = args.next().map(|j| j.parse().expect("thread count"));

    let fx = FixturePair::new();
    let opts = SearchOptions { jobs, ..SearchOptions::default() };
    let all = search(&fx.g, &fx.h, &gr, &opts).unwrap();
    let filtered = search(&fx.g, &fx.h, &gr, &SearchOptions { filter_by_theorem: true, ..opts.clone() }).unwrap();
    let noniso = all.iter().filter(|r| r.non_isomorphic).count();
    println!("{gr}: {} cospectral pairs, {} satisfy both conditions, {noniso} non-isomorphic", all.len(), filtered.len());
    for r in all.iter().take(5) {
        println!("  {}", r.to_line());
    }

    // any two bases work; conditions are then reported as 0
    let k14 = star(4);
    let c4k1 = cycle(4).disjoint_union(&Graph::empty(1));
    let pairs = search(&k14, &c4k1, &GroupSpec::cyclic(2), &opts).unwrap();
    println!("K1,4 vs C4+K1 over Z2: {} pairs", pairs.len());
    for r in pairs.iter().take(3) {
        println!("  {}", r.to_line());
    }
}
