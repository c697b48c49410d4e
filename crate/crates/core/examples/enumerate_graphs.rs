//! Count isomorphism classes by edge number, with and without a degree cap.

use kt_extremal::search::{Corpus, SearchConfig};

fn main() {
    let config = SearchConfig::default();
    let up_to = 9;
    let free = Corpus::build(up_to, None, &config).unwrap();
    let capped = Corpus::build(up_to, Some(3), &config).unwrap();
    println!("{:>3} {:>8} {:>12}", "m", "all", "max deg 3");
    for m in 0..=up_to {
        println!(
            "{m:>3} {:>8} {:>12}",
            free.level(m).unwrap().len(),
            capped.level(m).unwrap().len()
        );
    }
    let level = capped.level(4).unwrap();
    println!("\nmax degree 3, four edges:");
    for e in level {
        println!("  {} {:?}", e.certificate, e.graph.degree_sequence());
    }
}
