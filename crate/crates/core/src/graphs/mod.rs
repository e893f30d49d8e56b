//! Undirected simple graphs and every graph construction used by the catalog.

mod cayley;
pub mod graph6;
mod metrics;
mod named;
mod ops;

use std::fmt;

use crate::error::{Error, Result};

pub use cayley::{cayley_graph, right_translation};
pub use metrics::{distances_from, GraphMetrics, Unbounded};
pub(crate) use named::pair_index;
pub use named::{
    chang_switching_set, schlafli_complement_heisenberg, schlafli_complement_semidirect,
    shrikhande_construction, NamedGraph,
};

/// Simple undirected graph on `0..n` with sorted adjacency lists and a
/// bit-matrix for constant-time adjacency tests.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
    words: usize,
    bits: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            adj: vec![Vec::new(); n],
            words,
            bits: vec![0; n * words],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// Graph whose adjacency is given by a symmetric irreflexive predicate.
    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.set_bit(u, v);
                    g.set_bit(v, u);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    fn flip_bit(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] ^= 1 << (v % 64);
    }

    fn rebuild_lists(&mut self) {
        for u in 0..self.n {
            let row = self.row(u);
            let mut list = Vec::new();
            for (w, &word) in row.iter().enumerate() {
                let mut word = word;
                while word != 0 {
                    list.push((w * 64 + word.trailing_zeros() as usize) as u32);
                    word &= word - 1;
                }
            }
            self.adj[u] = list;
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as a bitset.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Common degree if the graph is regular (and nonempty).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Seidel switching: flips exactly the pairs with one endpoint in `set`.
    pub fn seidel_switch(&self, set: &[usize]) -> Self {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut g = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                if inside[u] != inside[v] {
                    g.flip_bit(u, v);
                }
            }
        }
        g.rebuild_lists();
        g.labels = self.labels.clone();
        g
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v]));
        Self::from_edges(self.n, edges).expect("relabeling by a bijection")
    }

    /// True iff the bijection `perm` maps edges onto edges.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.is_isomorphism_to(self, perm)
    }

    /// True iff `map` is an isomorphism from `self` onto `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, map: &[usize]) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() || map.len() != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &x in map {
            if x >= self.n || hit[x] {
                return false;
            }
            hit[x] = true;
        }
        self.edges().into_iter().all(|(u, v)| other.has_edge(map[u], map[v]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_invariants() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.has_edge(1, 0) && !g.has_edge(0, 2));
        assert_eq!(g.common_neighbors(0, 2), 2);
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 3)]).is_err());
    }

    #[test]
    fn seidel_switch_trivial_sets() {
        let g = NamedGraph::Kneser(5, 2).build().unwrap();
        assert_eq!(g.seidel_switch(&[]), g);
        let all: Vec<usize> = (0..g.n()).collect();
        assert_eq!(g.seidel_switch(&all), g);
        let s = g.seidel_switch(&[0]);
        assert_eq!(s.degree(0), 6);
    }

    #[test]
    fn complement_involution() {
        let g = NamedGraph::Cycle(7).build().unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().regular_degree(), Some(4));
    }
}
