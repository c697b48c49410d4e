//! Colex graphs against the real-valued Kruskal–Katona bound.

use kt_extremal::colex::{build_colex, colex_decompose, colex_kt, kk_bound_real};
use kt_extremal::graph::to_graph6;

fn main() {
    println!(
        "{:>4} {:>3} {:>3} {:>6} {:>10}  graph6",
        "m", "r", "s", "k_3", "bound"
    );
    for m in (0..=45).step_by(5) {
        let c = colex_decompose(m);
        let g = build_colex(m).unwrap();
        println!(
            "{m:>4} {:>3} {:>3} {:>6} {:>10.3}  {}",
            c.r,
            c.s,
            colex_kt(m, 3),
            kk_bound_real(m, 3),
            to_graph6(&g)
        );
    }
}
