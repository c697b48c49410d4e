//! Colex order on vertex pairs, colex graphs, and the clique bounds they
//! realize.

use serde::Serialize;

use crate::binom::{binom_exact, binom_real, pair_root, ExactCount};
use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// `m = C(r, 2) + s` with `0 <= s < r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColexDecomposition {
    pub m: u64,
    pub r: u64,
    pub s: u64,
}

#[inline]
fn choose2(r: u64) -> u64 {
    r * r.saturating_sub(1) / 2
}

/// Largest `r >= 1` with `C(r, 2) <= m`, and the remainder.
pub fn colex_decompose(m: u64) -> ColexDecomposition {
    // Start from the real root and correct for rounding.
    let mut r = pair_root(m as f64).floor().max(1.0) as u64;
    while choose2(r) > m {
        r -= 1;
    }
    while choose2(r + 1) <= m {
        r += 1;
    }
    ColexDecomposition {
        m,
        r,
        s: m - choose2(r),
    }
}

/// The `i`-th pair (0-indexed) in colex order over `{1, 2, ...}`, returned
/// as `(min, max)`.
pub fn colex_pair_unrank(i: u64) -> (u64, u64) {
    // Pairs with maximum j occupy indices C(j-1, 2) .. C(j, 2).
    let d = colex_decompose(i);
    let j = d.r + 1;
    (d.s + 1, j)
}

/// Graph on the first `m` colex pairs, shifted to 0-indexed labels: `K_r` on
/// `0..r` plus vertex `r` joined to `0..s`.
pub fn build_colex(m: u64) -> Result<Graph, GraphError> {
    let d = colex_decompose(m);
    let n = if m == 0 { 0 } else { d.r + u64::from(d.s > 0) };
    if n as usize > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n as usize));
    }
    let pairs: Vec<(usize, usize)> = (0..m)
        .map(|i| {
            let (a, b) = colex_pair_unrank(i);
            (a as usize - 1, b as usize - 1)
        })
        .collect();
    Graph::from_edge_list(&pairs)
}

/// `C(r, t) + C(s, t-1)`, the number of `t`-cliques in the colex graph with
/// `m` edges.
pub fn colex_kt(m: u64, t: u64) -> ExactCount {
    let d = colex_decompose(m);
    binom_exact(d.r, t) + binom_exact(d.s, t.saturating_sub(1))
}

/// Real bound `C(x, t)` where `C(x, 2) = m`; zero when `x < t`.
pub fn kk_bound_real(m: u64, t: u32) -> f64 {
    let x = pair_root(m as f64);
    if x >= f64::from(t) {
        binom_real(x, t)
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::count_kt;
    use crate::graph::canonical_form;

    /// Smallest r with C(r+1, 2) > m, by linear scan.
    fn scan_decompose(m: u64) -> (u64, u64) {
        let r = (1..).find(|&r| choose2(r + 1) > m).unwrap();
        (r, m - choose2(r))
    }

    #[test]
    fn decompose_examples() {
        let d = colex_decompose(7);
        assert_eq!((d.r, d.s), (4, 1));
        let d = colex_decompose(0);
        assert_eq!((d.r, d.s), (1, 0));
        let d = colex_decompose(10);
        assert_eq!((d.r, d.s), (5, 0));
        for m in 0..5000 {
            let d = colex_decompose(m);
            assert_eq!((d.r, d.s), scan_decompose(m));
            assert!(d.s < d.r);
        }
    }

    #[test]
    fn unrank_matches_sorted_enumeration() {
        let mut pairs: Vec<(u64, u64)> = (1..=30u64)
            .flat_map(|b| (1..b).map(move |a| (a, b)))
            .collect();
        pairs.sort_by_key(|&(a, b)| (b, a));
        for (i, &p) in pairs.iter().enumerate() {
            assert_eq!(colex_pair_unrank(i as u64), p);
        }
        assert_eq!(colex_pair_unrank(5), (3, 4));
        assert_eq!(colex_pair_unrank(6), (1, 5));
    }

    #[test]
    fn build_examples() {
        let l5 = build_colex(5).unwrap();
        let expected = Graph::from_edge_list(&[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(l5, expected);
        assert_eq!(build_colex(0).unwrap().n(), 0);
        assert_eq!(
            canonical_form(&build_colex(6).unwrap()),
            canonical_form(&Graph::complete(4).unwrap())
        );
        assert_eq!(build_colex(2016).unwrap(), Graph::complete(64).unwrap());
        assert!(build_colex(2017).is_err());
    }

    #[test]
    fn colex_kt_examples() {
        assert_eq!(colex_kt(5, 3), ExactCount::from(2u64));
        assert_eq!(colex_kt(6, 3), ExactCount::from(4u64));
        assert_eq!(colex_kt(4, 4), ExactCount::zero());
    }

    #[test]
    fn colex_kt_counts_the_colex_graph() {
        for m in 0..=40 {
            let g = build_colex(m).unwrap();
            assert_eq!(g.edge_count() as u64, m);
            for t in 2..=6 {
                assert_eq!(colex_kt(m, t), count_kt(&g, t as usize), "m={m} t={t}");
            }
        }
    }

    #[test]
    fn colex_kt_monotone() {
        for t in 2..=6 {
            for m in 0..200 {
                assert!(colex_kt(m, t) <= colex_kt(m + 1, t));
            }
        }
    }

    #[test]
    fn kk_bound_examples() {
        assert!((kk_bound_real(6, 3) - 4.0).abs() < 1e-12);
        let x = (1.0 + 57f64.sqrt()) / 2.0;
        assert!((kk_bound_real(7, 3) - 14.0 * (x - 2.0) / 6.0).abs() < 1e-12);
        assert!((kk_bound_real(7, 3) - 5.3081).abs() < 1e-4);
        assert_eq!(kk_bound_real(1, 3), 0.0);
    }
}
