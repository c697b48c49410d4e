//! Clique profile and per-vertex diagnostics of the Petersen graph plus a K_4.

use kt_extremal::cliques::{clique_number, clique_profile, induced_k12_count, vertex_diagnostics};
use kt_extremal::graph::{disjoint_union, Graph};

fn main() {
    let petersen = Graph::from_edge_list(&[
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 0),
        (0, 5),
        (1, 6),
        (2, 7),
        (3, 8),
        (4, 9),
        (5, 7),
        (7, 9),
        (9, 6),
        (6, 8),
        (8, 5),
    ])
    .unwrap();
    let g = disjoint_union(&[petersen, Graph::complete(4).unwrap()]).unwrap();

    let profile = clique_profile(&g);
    for (t, count) in &profile.counts {
        println!("K_{t}: {count}");
    }
    println!("total cliques: {}", profile.total);
    println!("clique number: {}", clique_number(&g));
    println!("induced paths of length two: {}", induced_k12_count(&g));

    let diag = vertex_diagnostics(&g, 3);
    for (v, d) in diag.vertices.iter().enumerate().take(3) {
        println!(
            "vertex {v}: degree {} mu {} mu_3 {}",
            d.degree, d.mu, d.mu_t
        );
    }
}
