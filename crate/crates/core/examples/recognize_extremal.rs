//! Decide extremality for a few graphs with 8 edges and maximum degree 4.

use kt_extremal::extremal::{family_spec, is_extremal, is_total_extremal};
use kt_extremal::graph::{disjoint_union, Graph};

fn main() {
    let k4 = Graph::complete(4).unwrap();
    let colex8 = kt_extremal::colex::build_colex(8).unwrap();
    let k4_and_k2 = disjoint_union(&[
        k4.clone(),
        Graph::complete(2).unwrap(),
        Graph::complete(2).unwrap(),
    ])
    .unwrap();
    let cycle =
        Graph::from_edge_list(&(0..8).map(|i| (i, (i + 1) % 8)).collect::<Vec<_>>()).unwrap();

    println!(
        "family for t=3, delta=4, b=8: {:?}",
        family_spec(3, 4, 8).unwrap().case
    );
    for (name, g) in [("L_8", &colex8), ("K4 + 2K2", &k4_and_k2), ("C8", &cycle)] {
        let v = is_extremal(g, 3, 4).unwrap();
        println!(
            "{name:>9}: extremal={} k_3={} max={} ({})",
            v.is_extremal, v.count, v.formula, v.reason
        );
    }
    let v = is_total_extremal(&colex8, 4).unwrap();
    println!("L_8 total-count extremal: {}", v.is_extremal);
}
