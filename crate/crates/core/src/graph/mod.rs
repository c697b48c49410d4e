//! Small simple undirected graphs over at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbor mask per vertex, so a
//! neighborhood intersection is a single `&`.

mod canon;
mod io;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use io::{parse_edge_list, parse_graph, parse_graph6, to_edge_list, to_graph6};

use thiserror::Error;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {0} exceeds the 64-vertex limit")]
    VertexOutOfRange(usize),
    #[error("{0} vertices exceed the 64-vertex limit")]
    TooManyVertices(usize),
    #[error("malformed graph6 header: {0}")]
    Graph6Header(String),
    #[error("invalid graph6 byte 0x{0:02x}")]
    Graph6Byte(u8),
    #[error("truncated graph6 body: expected {expected} bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("{0} trailing bytes after graph6 body")]
    Graph6Trailing(usize),
    #[error("nonzero graph6 padding bits")]
    Graph6Padding,
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Builds a graph with exactly the given edges on vertices
    /// `0..=max index`.
    pub fn from_edge_list(pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let n = pairs.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        let mut g = Graph::empty(n.min(MAX_VERTICES))?;
        for &(u, v) in pairs {
            if u >= MAX_VERTICES || v >= MAX_VERTICES {
                return Err(GraphError::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds from raw neighbor masks. Callers guarantee symmetry and no loops.
    pub(crate) fn from_masks(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &m)| m & bit(v) == 0 && bits(m).all(|u| adj[u] & bit(v) != 0)));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn masks(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Degrees in non-decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in bits(self.adj[u] >> u) {
                if v > 0 {
                    out.push((u, u + v));
                }
            }
        }
        out
    }

    /// Returns a new graph with edge `{u, v}` added, growing the vertex set
    /// when needed.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u >= MAX_VERTICES || v >= MAX_VERTICES {
            return Err(GraphError::VertexOutOfRange(u.max(v)));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj.resize(adj.len().max(u.max(v) + 1), 0);
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Graph { adj })
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&m| m == 0).count()
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`. Vertices not
    /// listed are dropped.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj = order
            .iter()
            .map(|&v| {
                bits(self.adj[v])
                    .filter(|&u| pos[u] != usize::MAX)
                    .fold(0u64, |m, u| m | bit(pos[u]))
            })
            .collect();
        Graph { adj }
    }

    /// The same graph with isolated vertices deleted, relative order kept.
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&v| self.adj[v] != 0).collect();
        self.relabel(&keep)
    }

    /// Vertex sets of the connected components among non-isolated vertices,
    /// ordered by smallest member.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.n() {
            if seen & bit(v) != 0 || self.adj[v] == 0 {
                continue;
            }
            let mut comp = bit(v);
            let mut frontier = bit(v);
            while frontier != 0 {
                let next = bits(frontier).fold(0u64, |m, u| m | self.adj[u]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn induced(&self, mask: u64) -> Graph {
        let order: Vec<usize> = bits(mask).collect();
        self.relabel(&order)
    }
}

/// Connected components of the non-isolated part, each relabeled to `0..k`.
pub fn components(g: &Graph) -> Vec<Graph> {
    g.component_masks()
        .into_iter()
        .map(|m| g.induced(m))
        .collect()
}

/// Block-diagonal union of the inputs, in order.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph, GraphError> {
    let total: usize = gs.iter().map(Graph::n).sum();
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(total));
    }
    let mut adj = Vec::with_capacity(total);
    let mut offset = 0;
    for g in gs {
        adj.extend(g.adj.iter().map(|&m| m << offset));
        offset += g.n();
    }
    Ok(Graph { adj })
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    g.degree_sequence()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_construction() {
        let g = Graph::from_edge_list(&[]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (0, 0));
        let tri = Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(tri.degrees(), vec![2, 2, 2]);
        assert_eq!(
            Graph::from_edge_list(&[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(&[(1, 0), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(&[(3, 3)]),
            Err(GraphError::SelfLoop(3))
        );
        assert_eq!(
            Graph::from_edge_list(&[(0, 64)]),
            Err(GraphError::VertexOutOfRange(64))
        );
        assert!(Graph::from_edge_list(&[(0, 63)]).is_ok());
    }

    #[test]
    fn components_split() {
        let k4 = Graph::complete(4).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let g = disjoint_union(&[k4.clone(), k4.clone(), k2]).unwrap();
        let sizes: Vec<usize> = components(&g).iter().map(Graph::n).collect();
        assert_eq!(sizes, vec![4, 4, 2]);
        assert_eq!(components(&k4).len(), 1);
        assert!(components(&Graph::empty(5).unwrap()).is_empty());
        assert!(components(&Graph::default()).is_empty());
    }

    #[test]
    fn union_additivity_and_budget() {
        let k4 = Graph::complete(4).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let g = disjoint_union(&[k4.clone(), k4.clone(), k2.clone()]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 13));
        assert_eq!(disjoint_union(std::slice::from_ref(&k2)).unwrap(), k2);
        let many = vec![k4; 17];
        assert_eq!(disjoint_union(&many), Err(GraphError::TooManyVertices(68)));
        assert_eq!(Graph::complete(64).unwrap().edge_count(), 2016);
    }

    #[test]
    fn degrees() {
        assert_eq!(max_degree(&Graph::complete(4).unwrap()), 3);
        let l4 = Graph::from_edge_list(&[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(degree_sequence(&l4), vec![1, 2, 2, 3]);
        assert_eq!(max_degree(&Graph::default()), 0);
    }

    #[test]
    fn with_edge_returns_new_graph() {
        let g = Graph::complete(2).unwrap();
        let h = g.with_edge(1, 4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        assert_eq!((h.n(), h.edge_count()), (5, 2));
        assert_eq!(h.isolated_count(), 2);
        assert_eq!(h.without_isolated().n(), 3);
        assert!(g.with_edge(0, 1).is_err());
    }
}
