//! Exact clique counting by ordered neighborhood intersection, and the
//! per-vertex neighborhood deficits `mu(v)` and `mu_t(v)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::binom::{binom_exact, binom_u128, ExactCount};
use crate::graph::{bit, bits, Graph};

/// Mask of vertex indices strictly greater than `v`.
#[inline]
fn above(v: usize) -> u64 {
    if v >= 63 {
        0
    } else {
        !((bit(v + 1)) - 1)
    }
}

#[inline]
fn is_clique(adj: &[u64], cand: u64) -> bool {
    bits(cand).all(|v| adj[v] & cand == cand & !bit(v))
}

/// Number of `need`-cliques inside `cand`, each counted once through its
/// increasing vertex sequence.
fn count_in(adj: &[u64], cand: u64, need: usize) -> u128 {
    let size = cand.count_ones() as usize;
    if need == 0 {
        return 1;
    }
    if size < need {
        return 0;
    }
    if need == 1 {
        return size as u128;
    }
    if is_clique(adj, cand) {
        return binom_u128(size as u64, need as u64);
    }
    bits(cand)
        .map(|v| count_in(adj, cand & adj[v] & above(v), need - 1))
        .sum()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Relabels by non-increasing degree, ties by index.
fn degree_ordered(g: &Graph) -> Graph {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    g.relabel(&order)
}

/// Number of complete subgraphs on `t` vertices.
pub fn count_kt(g: &Graph, t: usize) -> ExactCount {
    let h = degree_ordered(g);
    ExactCount::from(count_in(h.masks(), full_mask(h.n()), t))
}

/// Per-size counts of all cliques in `cand`, extending a clique of size
/// `depth`.
fn profile_in(adj: &[u64], cand: u64, depth: usize, counts: &mut [u128]) {
    let size = cand.count_ones() as u64;
    if size == 0 {
        return;
    }
    if is_clique(adj, cand) {
        for j in 1..=size {
            counts[depth + j as usize] += binom_u128(size, j);
        }
        return;
    }
    for v in bits(cand) {
        counts[depth + 1] += 1;
        profile_in(adj, cand & adj[v] & above(v), depth + 1, counts);
    }
}

fn has_clique_in(adj: &[u64], cand: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    if need == 1 || is_clique(adj, cand) {
        return true;
    }
    bits(cand).any(|v| has_clique_in(adj, cand & adj[v] & above(v), need - 1))
}

/// Whether `g` contains `K_r`; stops at the first one found.
pub fn has_clique(g: &Graph, r: usize) -> bool {
    let h = degree_ordered(g);
    has_clique_in(h.masks(), full_mask(h.n()), r)
}

pub fn clique_number(g: &Graph) -> usize {
    let h = degree_ordered(g);
    let mut best = 0;
    while best < h.n() && has_clique_in(h.masks(), full_mask(h.n()), best + 1) {
        best += 1;
    }
    best
}

/// Counts `k_t` for every `t >= 2` up to the clique number, and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueProfile {
    pub counts: BTreeMap<usize, ExactCount>,
    pub total: ExactCount,
}

impl CliqueProfile {
    pub fn get(&self, t: usize) -> ExactCount {
        self.counts.get(&t).cloned().unwrap_or_default()
    }
}

pub fn clique_profile(g: &Graph) -> CliqueProfile {
    let h = degree_ordered(g);
    let mut raw = vec![0u128; h.n() + 1];
    profile_in(h.masks(), full_mask(h.n()), 0, &mut raw);
    let counts: BTreeMap<usize, ExactCount> = raw
        .iter()
        .enumerate()
        .skip(2)
        .filter(|(_, &c)| c > 0)
        .map(|(t, &c)| (t, ExactCount::from(c)))
        .collect();
    let total = counts.values().cloned().sum();
    CliqueProfile { counts, total }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexDiagnostic {
    pub degree: usize,
    /// Non-adjacent pairs inside `N(v)`.
    pub mu: ExactCount,
    /// `(t-1)`-subsets of `N(v)` that are not cliques.
    pub mu_t: ExactCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexDiagnostics {
    pub t: usize,
    pub vertices: Vec<VertexDiagnostic>,
}

pub fn vertex_diagnostics(g: &Graph, t: usize) -> VertexDiagnostics {
    assert!(t >= 3, "mu_t is defined for t >= 3");
    let adj = g.masks();
    let vertices = (0..g.n())
        .map(|v| {
            let nbhd = adj[v];
            let d = nbhd.count_ones() as u64;
            let inner_edges: u64 = bits(nbhd)
                .map(|u| u64::from((adj[u] & nbhd).count_ones()))
                .sum::<u64>()
                / 2;
            let mu = binom_u128(d, 2) - u128::from(inner_edges);
            let mu_t = binom_u128(d, t as u64 - 1) - count_in(adj, nbhd, t - 1);
            VertexDiagnostic {
                degree: d as usize,
                mu: ExactCount::from(mu),
                mu_t: ExactCount::from(mu_t),
            }
        })
        .collect();
    VertexDiagnostics { t, vertices }
}

/// Vertex triples spanning exactly two edges.
pub fn induced_k12_count(g: &Graph) -> ExactCount {
    let n = g.n();
    let mut total = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            let ab = u32::from(g.has_edge(a, b));
            for c in b + 1..n {
                if ab + u32::from(g.has_edge(a, c)) + u32::from(g.has_edge(b, c)) == 2 {
                    total += 1;
                }
            }
        }
    }
    ExactCount::from(total)
}

/// Sum over vertices of `C(d(v), t-1) - mu_t(v)`; equals `t * k_t`.
pub fn vertex_clique_sum(diag: &VertexDiagnostics) -> ExactCount {
    diag.vertices
        .iter()
        .map(|v| {
            let full = binom_exact(v.degree as u64, diag.t as u64 - 1);
            let mu_t = v.mu_t.to_u128().expect("bounded by C(63, 31)");
            ExactCount::from(full.to_u128().expect("bounded by C(63, 31)") - mu_t)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;

    fn g(edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        g(&e)
    }

    fn c(v: u64) -> ExactCount {
        ExactCount::from(v)
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_kt(&Graph::complete(5).unwrap(), 4), c(5));
        assert_eq!(count_kt(&petersen(), 3), c(0));
        assert_eq!(count_kt(&petersen(), 2), c(15));
        // K_4 on 0..4 plus vertex 4 joined to two clique vertices.
        let l8 = g(&[
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (2, 3),
            (0, 4),
            (1, 4),
        ]);
        assert_eq!(count_kt(&l8, 3), c(5));
        assert_eq!(count_kt(&l8, 5), c(0));
        assert_eq!(
            count_kt(&Graph::complete(64).unwrap(), 32),
            binom_exact(64, 32)
        );
    }

    #[test]
    fn profile_examples() {
        let p = clique_profile(&Graph::complete(4).unwrap());
        assert_eq!(p.counts.len(), 3);
        assert_eq!(
            (p.get(2), p.get(3), p.get(4), p.total.clone()),
            (c(6), c(4), c(1), c(11))
        );
        let k3k2 =
            disjoint_union(&[Graph::complete(3).unwrap(), Graph::complete(2).unwrap()]).unwrap();
        let p = clique_profile(&k3k2);
        assert_eq!((p.get(2), p.get(3), p.total.clone()), (c(4), c(1), c(5)));
        let p = clique_profile(&Graph::empty(3).unwrap());
        assert!(p.counts.is_empty());
        assert_eq!(p.total, c(0));
        let p = clique_profile(&Graph::complete(64).unwrap());
        assert_eq!(p.total.to_string(), (BigTotal::k64()).to_string());
    }

    struct BigTotal;
    impl BigTotal {
        // 2^64 - 64 - 1
        fn k64() -> num_bigint::BigUint {
            (num_bigint::BigUint::from(1u32) << 64u32) - 65u32
        }
    }

    #[test]
    fn clique_number_and_detection() {
        assert_eq!(clique_number(&petersen()), 2);
        assert_eq!(clique_number(&Graph::complete(6).unwrap()), 6);
        assert_eq!(clique_number(&Graph::default()), 0);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert!(has_clique(&Graph::complete(5).unwrap(), 5));
        assert!(!has_clique(&petersen(), 3));
    }

    #[test]
    fn diagnostics_examples() {
        // K_4 minus edge {2,3}; vertex 0 has degree 3 and misses pair {2,3}.
        let k4e = g(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        let d = vertex_diagnostics(&k4e, 3);
        assert_eq!(d.vertices[0].degree, 3);
        assert_eq!(
            (d.vertices[0].mu.clone(), d.vertices[0].mu_t.clone()),
            (c(1), c(1))
        );
        let k5 = vertex_diagnostics(&Graph::complete(5).unwrap(), 4);
        assert!(k5
            .vertices
            .iter()
            .all(|v| v.mu.is_zero() && v.mu_t.is_zero()));
        let star = vertex_diagnostics(&g(&[(0, 1), (0, 2), (0, 3)]), 3);
        assert_eq!(
            (star.vertices[0].mu.clone(), star.vertices[0].mu_t.clone()),
            (c(3), c(3))
        );
    }

    #[test]
    fn induced_cherries() {
        assert_eq!(induced_k12_count(&Graph::complete(3).unwrap()), c(0));
        assert_eq!(induced_k12_count(&g(&[(0, 1), (1, 2)])), c(1));
        assert_eq!(
            induced_k12_count(&g(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])),
            c(2)
        );
    }
}
