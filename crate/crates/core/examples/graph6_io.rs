//! Parse, canonicalize and re-encode graphs in graph6 and edge-list form.

use kt_extremal::graph::{canonical_form, parse_graph, parse_graph6, to_edge_list, to_graph6};

fn main() {
    let path = parse_graph("# a path\n0 1\n1 2\n2 3\n").unwrap();
    println!("P4 as graph6: {}", to_graph6(&path));

    let relabeled = parse_graph("2 0\n0 3\n3 1\n").unwrap();
    println!(
        "same certificate after relabeling: {}",
        canonical_form(&path) == canonical_form(&relabeled)
    );

    let k4 = parse_graph6("C~").unwrap();
    print!("K4 as an edge list:\n{}", to_edge_list(&k4));

    for bad in ["", "C", "C~~", "A\x7f"] {
        println!("{bad:?}: {}", parse_graph6(bad).unwrap_err());
    }
}
