//! Build a maximizer and confirm it meets the constraints.

use kt_extremal::cliques::count_kt;
use kt_extremal::extremal::{build_extremal, build_total_alternative, decompose, extremal_value};
use kt_extremal::graph::{components, to_graph6};

fn main() {
    let (t, delta, m) = (3, 4, 27);
    let g = build_extremal(t, delta, m).expect("fits in 64 vertices");
    let d = decompose(m, delta);
    println!(
        "m={m} delta={delta}: {} copies of K_{} plus a colex remainder of {} edges",
        d.q,
        delta + 1,
        d.b
    );
    println!("graph6: {}", to_graph6(&g));
    println!(
        "vertices={} edges={} max degree={}",
        g.n(),
        g.edge_count(),
        g.max_degree()
    );
    for c in components(&g) {
        println!("  component: {} vertices, {} edges", c.n(), c.edge_count());
    }
    println!(
        "k_{t} = {} (formula {})",
        count_kt(&g, t as usize),
        extremal_value(t, delta, m)
    );

    // When s = 1 the total clique count has a second maximizer.
    let m = 10;
    if let Some(alt) = build_total_alternative(3, m).expect("fits") {
        println!("total-count tie at m={m}, delta=3: {}", to_graph6(&alt));
    }
}
