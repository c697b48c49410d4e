//! Grid sweeps over the binomial inequalities in [`crate::binom`].
//!
//! `scale = 1` is the reference grid; larger scales stretch every upper
//! range proportionally.

use serde::Serialize;

use crate::binom::{
    binom_exact, binom_real, degree_sum_bound, easy_convex_check, g_value, max_convex_sum_oracle,
    slope_inequality_check, ConvexCheck, SlopeCheck, ABS_TOL, REL_TOL,
};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl GridResult {
    fn new(name: &'static str) -> Self {
        GridResult {
            name,
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropsReport {
    pub scale: u32,
    pub grids: Vec<GridResult>,
    pub passed: bool,
}

/// `C(x,t) + C(w,t) >= C(y,t) + C(z,t)`, strict when `x > y` and `x > z`.
pub fn convex_swap_grid(scale: u32) -> GridResult {
    let mut res = GridResult::new("binomial_swap_inequality");
    let top = 20 * u64::from(scale);
    for t in 2..=6u64 {
        for x in t..=top {
            for w in 0..=top {
                for y in 0..=x.min(top) {
                    let Some(z) = (x + w).checked_sub(y) else {
                        continue;
                    };
                    if z > x || z > top {
                        continue;
                    }
                    let want = if x > y && x > z {
                        ConvexCheck::HoldsStrict
                    } else {
                        ConvexCheck::HoldsWeak
                    };
                    let got = easy_convex_check(t, w, x, y, z);
                    res.record(got == want, || {
                        format!("t={t} w={w} x={x} y={y} z={z}: {got:?}")
                    });
                }
            }
        }
    }
    res
}

/// Exact integer maximum never exceeds the real interpolation bound.
pub fn degree_sum_grid(scale: u32) -> GridResult {
    let mut res = GridResult::new("degree_sum_bound");
    let s = u64::from(scale);
    for n in 1..=6 * s {
        for delta in 2..=7 * s {
            for r in 1..delta {
                for d in n * r..=n * delta {
                    for k in 2..=5 {
                        let exact = max_convex_sum_oracle(n, d, r, delta, k).expect("in range");
                        let bound = degree_sum_bound(n, d, r, delta, k).expect("in range");
                        res.record(exact.to_f64() <= bound + ABS_TOL, || {
                            format!("n={n} D={d} r={r} delta={delta} k={k}: {exact} > {bound}")
                        });
                    }
                }
            }
        }
    }
    res
}

/// Second differences of `g` on a half-integer grid are non-negative.
pub fn g_convexity_grid(scale: u32) -> GridResult {
    let mut res = GridResult::new("g_convexity");
    let steps = 120 * scale;
    for t in 3..=6u32 {
        for i in 1..steps {
            let x = f64::from(i) * 0.5;
            let (lo, mid, hi) = (g_value(x - 0.5, t), g_value(x, t), g_value(x + 0.5, t));
            let second = lo + hi - 2.0 * mid;
            res.record(second >= -(ABS_TOL + REL_TOL * mid.abs()), || {
                format!("t={t} x={x}: second difference {second}")
            });
        }
    }
    res
}

/// Secant slope inequality for `g` on a half-integer grid.
pub fn slope_grid(scale: u32) -> GridResult {
    let mut res = GridResult::new("slope_inequality");
    let span = 40 * scale;
    for t in 3..=6u64 {
        for r in t..=t + 10 * u64::from(scale) {
            for i in 0..=span {
                let x = r as f64 + f64::from(i) * 0.5;
                let got = slope_inequality_check(x, r, t);
                res.record(got == SlopeCheck::Holds, || {
                    format!("x={x} r={r} t={t}: {got:?}")
                });
            }
        }
    }
    res
}

/// Real and exact binomials agree at integer points.
pub fn real_exact_grid(scale: u32) -> GridResult {
    let mut res = GridResult::new("real_exact_agreement");
    for n in 0..=60 * u64::from(scale) {
        for k in 0..=n {
            let exact = binom_exact(n, k).to_f64();
            let real = binom_real(n as f64, k as u32);
            res.record(((real - exact) / exact).abs() <= REL_TOL, || {
                format!("C({n},{k}): {real} vs {exact}")
            });
        }
    }
    res
}

pub fn run_props(scale: u32) -> PropsReport {
    let scale = scale.max(1);
    let grids = vec![
        real_exact_grid(scale),
        convex_swap_grid(scale),
        degree_sum_grid(scale),
        g_convexity_grid(scale),
        slope_grid(scale),
    ];
    let passed = grids.iter().all(GridResult::passed);
    PropsReport {
        scale,
        grids,
        passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_grids_hold() {
        let report = run_props(1);
        for g in &report.grids {
            assert!(g.passed(), "{g:?}");
        }
        assert!(report.passed);
    }

    #[test]
    fn failures_are_recorded() {
        let mut r = GridResult::new("x");
        r.record(true, || unreachable!());
        r.record(false, || "first".into());
        r.record(false, || "second".into());
        assert_eq!((r.checked, r.failures), (3, 2));
        assert_eq!(r.first_failure.as_deref(), Some("first"));
        assert!(!r.passed());
    }
}
