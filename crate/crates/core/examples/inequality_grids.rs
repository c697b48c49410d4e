//! Run the binomial inequality grids; the scale stretches every range.

use kt_extremal::props::run_props;

fn main() {
    let scale = std::env::args()
        .nth(1)
        .map_or(1, |s| s.parse().expect("integer scale"));
    let report = run_props(scale);
    for g in &report.grids {
        let state = if g.passed() { "ok" } else { "FAILED" };
        println!("{:<26} {:>8} points  {state}", g.name, g.checked);
        if let Some(why) = &g.first_failure {
            println!("    first failure: {why}");
        }
    }
    std::process::exit(if report.passed { 0 } else { 1 });
}
