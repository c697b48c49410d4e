//! Canonical labeling up to isolated vertices.
//!
//! Each connected component is labeled by color refinement followed by an
//! individualization search over the first non-singleton cell; the labeling
//! kept is the one whose permuted adjacency rows are lexicographically
//! smallest. Components are then ordered by `(size, rows)` and concatenated.
//! Branches on interchangeable twins (`N(u) - w == N(w) - u`) are explored
//! once, since swapping twins is an automorphism fixing every singleton cell.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{bit, bits, io::to_graph6, parse_graph6, Graph};

/// Isomorphism certificate: the graph6 string of the canonically relabeled
/// graph with isolated vertices removed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        parse_graph6(&self.0).expect("certificate is valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6(&canonical_graph(g)))
}

/// `g` relabeled canonically, isolated vertices dropped.
pub fn canonical_graph(g: &Graph) -> Graph {
    let mut parts: Vec<(usize, Vec<u64>, Vec<usize>)> = g
        .component_masks()
        .into_iter()
        .map(|mask| {
            let verts: Vec<usize> = bits(mask).collect();
            let local = g.induced(mask);
            let (rows, order) = label_connected(local.masks());
            (
                verts.len(),
                rows,
                order.into_iter().map(|i| verts[i]).collect(),
            )
        })
        .collect();
    parts.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let order: Vec<usize> = parts.into_iter().flat_map(|p| p.2).collect();
    g.relabel(&order)
}

/// Returns the minimal permuted rows and the vertex order achieving them.
fn label_connected(adj: &[u64]) -> (Vec<u64>, Vec<usize>) {
    let n = adj.len();
    let mut colors = vec![0u32; n];
    refine(adj, &mut colors);
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    search(adj, colors, &mut best);
    best.expect("search visits at least one leaf")
}

fn search(adj: &[u64], colors: Vec<u32>, best: &mut Option<(Vec<u64>, Vec<usize>)>) {
    let n = adj.len();
    let mut sizes = vec![0u32; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let Some(target) = sizes.iter().position(|&s| s > 1) else {
        let mut order = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| bits(adj[v]).fold(0u64, |m, u| m | bit(colors[u] as usize)))
            .collect();
        if best.as_ref().is_none_or(|(b, _)| rows < *b) {
            *best = Some((rows, order));
        }
        return;
    };
    let target = target as u32;
    let mut reps: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        if !reps.iter().any(|&w| twins(adj, v, w)) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| match c.cmp(&target) {
                std::cmp::Ordering::Less => c,
                std::cmp::Ordering::Equal if u == v => c,
                _ => c + 1,
            })
            .collect();
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

#[inline]
fn twins(adj: &[u64], u: usize, w: usize) -> bool {
    adj[u] & !bit(w) == adj[w] & !bit(u)
}

/// Equitable refinement. Colors must be dense ranks `0..k`; on return they
/// are dense ranks of a partition finer than or equal to the input, with
/// cell order decided only by color signatures.
fn refine(adj: &[u64], colors: &mut [u32]) {
    let n = adj.len();
    let mut k = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut sigs: Vec<(u32, Vec<u8>, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut counts = vec![0u8; k];
            for u in bits(adj[v]) {
                counts[colors[u] as usize] += 1;
            }
            sigs.push((colors[v], counts, v));
        }
        sigs.sort_unstable();
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            colors[sigs[i].2] = rank;
        }
        let next_k = if n == 0 { 0 } else { rank as usize + 1 };
        if next_k == k {
            return;
        }
        k = next_k;
    }
}
