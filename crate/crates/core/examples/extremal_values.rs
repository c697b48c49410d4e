//! Table of the maximum number of `K_t` over graphs with `m` edges and
//! maximum degree at most `delta`.
//!
//! cargo run --example extremal_values -- [delta] [t] [max_m]

use kt_extremal::extremal::{decompose, extremal_value, total_extremal_value};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let delta = args.next().unwrap_or(4);
    let t = args.next().unwrap_or(3);
    let max_m = args.next().unwrap_or(30);

    println!("delta = {delta}, t = {t}");
    println!(
        "{:>4} {:>3} {:>3} {:>3} {:>3} {:>8} {:>8}",
        "m", "q", "b", "r", "s", "k_t", "total"
    );
    for m in 0..=max_m {
        let d = decompose(m, delta);
        println!(
            "{m:>4} {:>3} {:>3} {:>3} {:>3} {:>8} {:>8}",
            d.q,
            d.b,
            d.r,
            d.s,
            extremal_value(t, delta, m),
            total_extremal_value(delta, m)
        );
    }
}
