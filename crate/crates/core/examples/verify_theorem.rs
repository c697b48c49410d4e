//! Exhaustively compare the closed forms against every graph up to a few
//! edges. Pass `--json` for the full reports.

use kt_extremal::search::{
    verify_kk_on, verify_main_on, verify_total_on, Corpus, SearchConfig, VerificationReport,
};

fn show(r: &VerificationReport, json: bool) {
    if json {
        println!("{}", r.to_json());
        return;
    }
    let t = r.t.map_or("-".into(), |t| t.to_string());
    let delta = r.delta.map_or("-".into(), |d| d.to_string());
    println!(
        "{:<6} m={:<2} delta={delta:<2} t={t:<2} max={:<4} formula={:<4} maximizers={:<4} corpus={:<5} {}",
        format!("{:?}", r.check).to_lowercase(),
        r.m,
        r.oracle_max,
        r.formula,
        r.argmax_certificates.len(),
        r.corpus_size,
        if r.passed() { "ok" } else { "MISMATCH" },
    );
}

fn main() {
    let json = std::env::args().any(|a| a == "--json");
    let config = SearchConfig::default();
    let max_m = 10;
    for delta in [2, 3, 4] {
        let corpus = Corpus::build(max_m, Some(delta), &config).unwrap();
        for m in max_m - 2..=max_m {
            for t in 3..=(delta + 1).min(5) {
                show(&verify_main_on(&corpus, m, t).unwrap(), json);
            }
            show(&verify_total_on(&corpus, m).unwrap(), json);
        }
    }
    let free = Corpus::build(max_m, None, &config).unwrap();
    for t in 3..=5 {
        show(&verify_kk_on(&free, max_m, t).unwrap(), json);
    }
}
