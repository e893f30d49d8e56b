use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// Clique search is skipped above this size unless explicitly forced.
pub const CLIQUE_LIMIT: usize = 100;

/// A length that may be infinite (disconnected diameter, acyclic girth).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Unbounded {
    Finite(usize),
    Infinite,
}

impl Unbounded {
    pub fn finite(self) -> Option<usize> {
        match self {
            Unbounded::Finite(x) => Some(x),
            Unbounded::Infinite => None,
        }
    }
}

impl fmt::Display for Unbounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unbounded::Finite(x) => write!(f, "{x}"),
            Unbounded::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Unbounded {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Unbounded::Finite(x) => s.serialize_u64(*x as u64),
            Unbounded::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    pub n: usize,
    pub edges: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub regular_degree: Option<usize>,
    pub diameter: Unbounded,
    pub girth: Unbounded,
    pub clique_number: Option<usize>,
}

/// BFS distances from `v`; unreachable vertices get `usize::MAX`.
pub fn distances_from(g: &Graph, v: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    dist[v] = 0;
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

impl GraphMetrics {
    /// BFS metrics; the clique number is computed when `n <= 100` or when
    /// `force_clique` is set.
    pub fn compute(g: &Graph, force_clique: bool) -> Self {
        let n = g.n();
        let mut diameter = 0;
        let mut connected = true;
        for v in 0..n {
            let d = distances_from(g, v);
            match d.iter().max() {
                Some(&usize::MAX) => {
                    connected = false;
                    break;
                }
                Some(&m) => diameter = diameter.max(m),
                None => {}
            }
        }
        GraphMetrics {
            n,
            edges: g.edge_count(),
            connected,
            bipartite: g.is_bipartite(),
            regular_degree: g.regular_degree(),
            diameter: if connected { Unbounded::Finite(diameter) } else { Unbounded::Infinite },
            girth: g.girth(),
            clique_number: (force_clique || n <= CLIQUE_LIMIT).then(|| g.clique_number()),
        }
    }
}

impl Graph {
    pub fn is_connected(&self) -> bool {
        self.n == 0 || distances_from(self, 0).iter().all(|&d| d != usize::MAX)
    }

    pub fn diameter(&self) -> Unbounded {
        let mut best = 0;
        for v in 0..self.n {
            for d in distances_from(self, v) {
                if d == usize::MAX {
                    return Unbounded::Infinite;
                }
                best = best.max(d);
            }
        }
        Unbounded::Finite(best)
    }

    /// Proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Unbounded {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            dist.fill(usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Unbounded::Infinite
        } else {
            Unbounded::Finite(best)
        }
    }

    /// Size of a largest clique, by branch and bound with a greedy colouring
    /// bound.
    pub fn clique_number(&self) -> usize {
        let words = self.words;
        let mut cand = vec![0u64; words];
        for v in 0..self.n {
            cand[v / 64] |= 1 << (v % 64);
        }
        let mut best = 0;
        self.expand_clique(0, &cand, &mut best);
        best
    }

    fn expand_clique(&self, size: usize, cand: &[u64], best: &mut usize) {
        let order = self.colour_order(cand);
        let mut cand = cand.to_vec();
        for &(v, colour) in order.iter().rev() {
            if size + colour <= *best {
                return;
            }
            let next: Vec<u64> = cand.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                *best = (*best).max(size + 1);
            } else {
                self.expand_clique(size + 1, &next, best);
            }
            cand[v / 64] &= !(1 << (v % 64));
        }
    }

    /// Greedy sequential colouring of `cand`: vertices with their colour
    /// numbers (1-based), non-decreasing in colour.
    fn colour_order(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut uncoloured = cand.to_vec();
        let mut out = Vec::new();
        let mut colour = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = first_bit(&avail) {
                uncoloured[v / 64] &= !(1 << (v % 64));
                avail[v / 64] &= !(1 << (v % 64));
                for (a, r) in avail.iter_mut().zip(self.row(v)) {
                    *a &= !r;
                }
                out.push((v, colour));
            }
        }
        out
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraph;

    fn metrics(g: NamedGraph) -> GraphMetrics {
        GraphMetrics::compute(&g.build().unwrap(), false)
    }

    #[test]
    fn heawood_and_cycles() {
        let m = metrics(NamedGraph::Heawood);
        assert!(m.bipartite && m.connected);
        assert_eq!((m.girth, m.diameter), (Unbounded::Finite(6), Unbounded::Finite(3)));
        let m = metrics(NamedGraph::Cycle(7));
        assert_eq!((m.girth, m.diameter), (Unbounded::Finite(7), Unbounded::Finite(3)));
        assert!(!m.bipartite);
    }

    #[test]
    fn cliques_separate_cospectral_pair() {
        assert_eq!(metrics(NamedGraph::Lattice(4)).clique_number, Some(4));
        assert_eq!(metrics(NamedGraph::Shrikhande).clique_number, Some(3));
        assert_eq!(metrics(NamedGraph::Complete(7)).clique_number, Some(7));
        assert_eq!(metrics(NamedGraph::Petersen).clique_number, Some(2));
        assert_eq!(metrics(NamedGraph::Triangular(8)).clique_number, Some(7));
    }

    #[test]
    fn disconnected_and_acyclic() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let m = GraphMetrics::compute(&g, false);
        assert!(!m.connected);
        assert_eq!(m.diameter, Unbounded::Infinite);
        assert_eq!(m.girth, Unbounded::Infinite);
        assert_eq!(serde_json::to_value(m.diameter).unwrap(), "inf");
    }

    #[test]
    fn famous_girths() {
        assert_eq!(metrics(NamedGraph::TutteCoxeter).girth, Unbounded::Finite(8));
        assert_eq!(metrics(NamedGraph::TutteCoxeter).diameter, Unbounded::Finite(4));
        assert_eq!(metrics(NamedGraph::HoffmanSingleton).girth, Unbounded::Finite(5));
        assert_eq!(metrics(NamedGraph::Petersen).girth, Unbounded::Finite(5));
    }
}
