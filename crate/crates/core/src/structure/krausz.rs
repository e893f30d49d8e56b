//! Line-graph recognition through Krausz clique partitions.
//!
//! A connected graph is a line graph iff its edges split into cliques with
//! every vertex in at most two of them. Once the two cliques at one vertex
//! are chosen, the cliques at every neighbour are forced, so the search only
//! branches on how the first vertex's neighbourhood splits into two cliques.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Refuse to enumerate more neighbourhood splits than `2^MAX_FREE_COMPONENTS`.
const MAX_FREE_COMPONENTS: usize = 20;

#[derive(Debug, Clone, Serialize)]
pub struct KrauszDecomposition {
    /// Sorted vertex sets; every edge lies in exactly one. Vertices that lie
    /// in a single edge clique also get a singleton clique, so every vertex
    /// is in exactly two.
    pub cliques: Vec<Vec<usize>>,
    /// Root graph on the cliques.
    #[serde(skip)]
    pub root: Graph,
    /// `embedding[v]` is the root edge `(i, j)`, `i < j`, represented by `v`.
    pub embedding: Vec<(usize, usize)>,
    pub bipartite: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct KrauszSummary {
    pub root_vertices: usize,
    pub root_edges: usize,
    pub root_degrees: Vec<usize>,
    pub root_bipartite: bool,
    pub root_girth: crate::graphs::Unbounded,
    pub largest_clique: usize,
}

impl KrauszDecomposition {
    /// Checks that `embedding` is an isomorphism from `g` onto `L(root)` and
    /// that the clique conditions hold exactly.
    pub fn verify(&self, g: &Graph) -> bool {
        let edges = self.root.edges();
        let Some(map) = self
            .embedding
            .iter()
            .map(|e| edges.binary_search(e).ok())
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        let mut count = vec![0; g.n()];
        let mut covered = HashSet::new();
        for c in &self.cliques {
            for (i, &x) in c.iter().enumerate() {
                count[x] += 1;
                for &y in &c[i + 1..] {
                    if !g.has_edge(x, y) || !covered.insert((x, y)) {
                        return false;
                    }
                }
            }
        }
        covered.len() == g.edge_count()
            && count.iter().all(|&k| k == 2)
            && g.is_isomorphism_to(&self.root.line_graph(), &map)
    }

    pub fn summary(&self) -> KrauszSummary {
        let mut degrees: Vec<usize> = (0..self.root.n()).map(|v| self.root.degree(v)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        KrauszSummary {
            root_vertices: self.root.n(),
            root_edges: self.root.edge_count(),
            root_degrees: degrees,
            root_bipartite: self.bipartite,
            root_girth: self.root.girth(),
            largest_clique: self.cliques.iter().map(Vec::len).max().unwrap_or(0),
        }
    }
}

/// Colour classes of the components of the complement of `G[N(v)]`, or
/// `None` if that complement is not bipartite (then `N(v)` is not a union of
/// two cliques).
fn co_components(g: &Graph, v: usize) -> Option<Vec<[Vec<usize>; 2]>> {
    let nbrs: Vec<usize> = g.neighbors(v).iter().map(|&x| x as usize).collect();
    let k = nbrs.len();
    let mut side = vec![u8::MAX; k];
    let mut comps = Vec::new();
    for s in 0..k {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut classes: [Vec<usize>; 2] = [vec![nbrs[s]], Vec::new()];
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..k {
                if i == j || g.has_edge(nbrs[i], nbrs[j]) {
                    continue;
                }
                if side[j] == u8::MAX {
                    side[j] = 1 - side[i];
                    classes[side[j] as usize].push(nbrs[j]);
                    stack.push(j);
                } else if side[j] == side[i] {
                    return None;
                }
            }
        }
        comps.push(classes);
    }
    Some(comps)
}

struct Builder<'a> {
    g: &'a Graph,
    cliques: Vec<Vec<usize>>,
    of: Vec<Vec<usize>>,
    covered: HashSet<(usize, usize)>,
}

impl Builder<'_> {
    fn add(&mut self, mut clique: Vec<usize>) -> bool {
        clique.sort_unstable();
        if clique.iter().any(|&x| self.of[x].len() >= 2) {
            return false;
        }
        for (i, &x) in clique.iter().enumerate() {
            for &y in &clique[i + 1..] {
                if !self.g.has_edge(x, y) || !self.covered.insert((x, y)) {
                    return false;
                }
            }
        }
        let id = self.cliques.len();
        for &x in &clique {
            self.of[x].push(id);
        }
        self.cliques.push(clique);
        true
    }
}

fn attempt(g: &Graph, u: usize, a: Vec<usize>, b: Vec<usize>) -> Option<KrauszDecomposition> {
    let n = g.n();
    let mut bld = Builder { g, cliques: Vec::new(), of: vec![Vec::new(); n], covered: HashSet::new() };
    if !bld.add([vec![u], a].concat()) || (!b.is_empty() && !bld.add([vec![u], b].concat())) {
        return None;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([u]);
    seen[u] = true;
    while let Some(v) = queue.pop_front() {
        let mut member = HashSet::new();
        for &c in &bld.of[v] {
            member.extend(bld.cliques[c].iter().copied());
        }
        let rest: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| w as usize)
            .filter(|w| !member.contains(w))
            .collect();
        if !rest.is_empty() && !bld.add([vec![v], rest].concat()) {
            return None;
        }
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    for v in 0..n {
        if bld.of[v].len() == 1 {
            bld.of[v].push(bld.cliques.len());
            bld.cliques.push(vec![v]);
        }
    }
    let embedding: Vec<(usize, usize)> = bld
        .of
        .iter()
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    let root = Graph::from_edges(bld.cliques.len(), embedding.iter().copied()).ok()?;
    let bipartite = root.is_bipartite();
    Some(KrauszDecomposition { cliques: bld.cliques, root, embedding, bipartite })
}

/// Krausz decomposition of a connected graph on at least four vertices, or
/// `None` if it is not a line graph.
pub fn krausz(g: &Graph) -> Result<Option<KrauszDecomposition>> {
    let n = g.n();
    if n < 4 {
        return Err(Error::WhitneyException(format!(
            "{n} vertices: K3 is the line graph of both K3 and K1,3 and smaller graphs \
             have no unique root"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut best: Option<(usize, Vec<[Vec<usize>; 2]>)> = None;
    for v in 0..n {
        let Some(comps) = co_components(g, v) else {
            return Ok(None);
        };
        if best.as_ref().is_none_or(|(_, b)| comps.len() < b.len()) {
            best = Some((v, comps));
        }
    }
    let (u, comps) = best.expect("n >= 4");
    let free = comps.len() - 1;
    if free > MAX_FREE_COMPONENTS {
        return Err(Error::Precondition(format!(
            "every neighbourhood splits into more than 2^{MAX_FREE_COMPONENTS} clique pairs"
        )));
    }
    for mask in 0u64..1 << free {
        let (mut a, mut b) = (comps[0][0].clone(), comps[0][1].clone());
        for (i, [x, y]) in comps[1..].iter().enumerate() {
            let (to_a, to_b) = if mask >> i & 1 == 0 { (x, y) } else { (y, x) };
            a.extend(to_a);
            b.extend(to_b);
        }
        if let Some(dec) = attempt(g, u, a, b) {
            return Ok(Some(dec));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraph;
    use crate::symmetry::are_isomorphic;

    fn root_of(name: NamedGraph) -> KrauszDecomposition {
        let g = name.build().unwrap();
        let d = krausz(&g).unwrap().expect("line graph");
        assert!(d.verify(&g));
        d
    }

    #[test]
    fn lattice_roots_are_complete_bipartite() {
        for n in 2..6 {
            let d = root_of(NamedGraph::Lattice(n));
            assert!(d.bipartite);
            let knn = NamedGraph::CompleteBipartite(n, n).build().unwrap();
            assert!(are_isomorphic(&d.root, &knn));
        }
    }

    #[test]
    fn triangular_root_is_complete() {
        let d = root_of(NamedGraph::Triangular(7));
        assert!(!d.bipartite);
        assert!(are_isomorphic(&d.root, &NamedGraph::Complete(7).build().unwrap()));
    }

    #[test]
    fn heawood_line_root() {
        let d = root_of(NamedGraph::Line(Box::new(NamedGraph::Heawood)));
        assert!(d.bipartite);
        assert!(are_isomorphic(&d.root, &NamedGraph::Heawood.build().unwrap()));
    }

    #[test]
    fn non_line_graphs() {
        for name in [NamedGraph::Shrikhande, NamedGraph::Petersen, NamedGraph::Clebsch] {
            assert!(krausz(&name.build().unwrap()).unwrap().is_none(), "{name}");
        }
        // the claw itself
        let claw = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(krausz(&claw).unwrap().is_none());
    }

    #[test]
    fn exceptions_and_preconditions() {
        let k3 = NamedGraph::Complete(3).build().unwrap();
        assert!(matches!(krausz(&k3), Err(Error::WhitneyException(_))));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(krausz(&two_edges), Err(Error::Disconnected)));
    }

    #[test]
    fn paths_and_stars() {
        let path = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = krausz(&path).unwrap().unwrap();
        assert!(d.verify(&path));
        assert_eq!(d.root.n(), 6);
        let k5 = NamedGraph::Complete(5).build().unwrap();
        let d = krausz(&k5).unwrap().unwrap();
        assert!(d.verify(&k5));
        assert_eq!(d.root.edge_count(), 5);
    }
}
