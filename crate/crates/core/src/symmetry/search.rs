//! Individualization–refinement search: automorphism groups and canonical
//! forms.

use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigUint;

use super::partition::Partition;
use super::perm::{self, Perm};
use super::schreier::PermutationGroup;
use crate::graphs::{graph6, Graph};

/// Outcome of the automorphism search.
#[derive(Debug, Clone)]
pub struct AutomorphismSearch {
    pub group: PermutationGroup,
    /// Vertices individualized along the first path of the search tree.
    pub base: Vec<usize>,
    /// Orbit of each base point under the automorphisms fixing the earlier
    /// ones, as found by the search itself.
    pub orbit_sizes: Vec<usize>,
    /// Search-tree nodes visited.
    pub nodes: usize,
}

impl AutomorphismSearch {
    /// Product of the orbit sizes; must equal the stabilizer-chain order.
    pub fn orbit_product(&self) -> BigUint {
        self.orbit_sizes.iter().fold(BigUint::from(1u32), |a, &s| a * s)
    }
}

struct FirstPath {
    levels: Vec<Partition>,
    traces: Vec<u64>,
    base: Vec<usize>,
}

fn first_path(g: &Graph) -> FirstPath {
    let mut p = Partition::unit(g.n());
    let t = p.refine_all(g);
    let mut path = FirstPath { levels: vec![p.clone()], traces: vec![t], base: Vec::new() };
    while let Some(c) = p.target_cell() {
        let v = p.lab[c];
        let t = p.individualize(g, v);
        path.base.push(v);
        path.levels.push(p.clone());
        path.traces.push(t);
    }
    path
}

struct AutState<'a> {
    g: &'a Graph,
    traces: &'a [u64],
    leaf: &'a [usize],
    nodes: usize,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl AutState<'_> {
    /// Looks below `part` (at `depth`) for a leaf equivalent to the first
    /// leaf.
    fn descend(&mut self, part: Partition, depth: usize) -> Option<Perm> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
        }
        if self.timed_out {
            return None;
        }
        let Some(c) = part.target_cell() else {
            if depth + 1 != self.traces.len() {
                return None;
            }
            let mut gamma = vec![0; self.g.n()];
            for (p, &v) in self.leaf.iter().enumerate() {
                gamma[v] = part.lab[p];
            }
            return self.g.is_automorphism(&gamma).then_some(gamma);
        };
        if depth + 1 >= self.traces.len() {
            return None;
        }
        for &w in part.cell(c) {
            let mut child = part.clone();
            if child.individualize(self.g, w) != self.traces[depth + 1] {
                continue;
            }
            if let Some(gamma) = self.descend(child, depth + 1) {
                return Some(gamma);
            }
        }
        None
    }
}

/// Generators of `Aut(g)` from the search tree, with the exact order from a
/// stabilizer chain on the search base.
pub fn automorphism_search(g: &Graph) -> AutomorphismSearch {
    automorphism_search_until(g, None).expect("no deadline")
}

/// As [`automorphism_search`], giving up with `None` at `deadline`.
pub fn automorphism_search_until(g: &Graph, deadline: Option<Instant>) -> Option<AutomorphismSearch> {
    let n = g.n();
    let path = first_path(g);
    let leaf = path.levels.last().unwrap().lab.clone();
    let k = path.base.len();
    let mut state = AutState {
        g,
        traces: &path.traces,
        leaf: &leaf,
        nodes: k + 1,
        deadline,
        timed_out: false,
    };
    let mut gens: Vec<Perm> = Vec::new();
    let mut orbit_sizes = vec![1; k];
    for i in (0..k).rev() {
        let part = &path.levels[i];
        let b = path.base[i];
        let cell = part.cell(part.cell_of(b)).to_vec();
        let mut reps = perm::orbit_representatives(n, &gens);
        let mut failed: Vec<usize> = Vec::new();
        for &w in &cell {
            if reps[w] == reps[b] || failed.iter().any(|&f| reps[f] == reps[w]) {
                continue;
            }
            let mut child = part.clone();
            let found = if child.individualize(g, w) == path.traces[i + 1] {
                state.descend(child, i + 1)
            } else {
                None
            };
            match found {
                Some(gamma) => {
                    gens.push(gamma);
                    reps = perm::orbit_representatives(n, &gens);
                }
                None if state.timed_out => return None,
                None => failed.push(w),
            }
        }
        orbit_sizes[i] = reps.iter().filter(|&&r| r == reps[b]).count();
    }
    let group = PermutationGroup::with_base(n, gens, &path.base);
    let search = AutomorphismSearch { group, base: path.base, orbit_sizes, nodes: state.nodes };
    assert_eq!(
        search.group.order(),
        search.orbit_product(),
        "search orbits disagree with the stabilizer chain"
    );
    Some(search)
}

pub fn automorphism_group(g: &Graph) -> PermutationGroup {
    automorphism_search(g).group
}

/// Canonical relabeling of a graph.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
    /// The graph relabeled by `labeling`.
    pub graph: Graph,
    /// graph6 of the canonical graph; equal iff the inputs are isomorphic.
    pub certificate: String,
}

struct Best {
    traces: Vec<u64>,
    bits: Vec<u64>,
    lab: Vec<usize>,
}

struct CanonState<'a> {
    g: &'a Graph,
    best: Option<Best>,
}

impl CanonState<'_> {
    fn leaf_bits(&self, lab: &[usize]) -> Vec<u64> {
        let n = self.g.n();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if self.g.has_edge(lab[i], lab[j]) {
                    bits[i * words + j / 64] |= 1 << (63 - j % 64);
                }
            }
        }
        bits
    }

    fn visit(&mut self, part: Partition, traces: &mut Vec<u64>, stab: PermutationGroup) {
        if let Some(best) = &self.best {
            let k = traces.len().min(best.traces.len());
            if traces[..k] < best.traces[..k] {
                return;
            }
        }
        let Some(c) = part.target_cell() else {
            let bits = self.leaf_bits(&part.lab);
            let better = match &self.best {
                None => true,
                Some(b) => match traces.as_slice().cmp(&b.traces) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => bits > b.bits,
                },
            };
            if better {
                self.best = Some(Best { traces: traces.clone(), bits, lab: part.lab.clone() });
            }
            return;
        };
        let reps = stab.orbit_representatives();
        let mut seen: Vec<usize> = Vec::new();
        for &w in part.cell(c) {
            if seen.contains(&reps[w]) {
                continue;
            }
            seen.push(reps[w]);
            let mut child = part.clone();
            traces.push(child.individualize(self.g, w));
            let child_stab = stab.stabilizer(w);
            self.visit(child, traces, child_stab);
            traces.pop();
        }
    }
}

/// Canonical form by a full search of the refinement tree. Children of a
/// node are explored once per orbit of the automorphisms fixing the node's
/// path, which is exact because the full automorphism group is known.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_with(g, &automorphism_group(g))
}

pub fn canonical_form_with(g: &Graph, aut: &PermutationGroup) -> CanonicalForm {
    let n = g.n();
    let mut root = Partition::unit(n);
    let mut traces = vec![root.refine_all(g)];
    let mut state = CanonState { g, best: None };
    state.visit(root, &mut traces, aut.clone());
    let lab = state.best.expect("the tree has a leaf").lab;
    let labeling = perm::inverse(&lab);
    let graph = g.relabel(&labeling);
    let certificate = graph6::encode(&graph);
    CanonicalForm { labeling, graph, certificate }
}

/// An isomorphism `g1 -> g2` if one exists, verified edge by edge.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let mut d1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let c1 = canonical_form(g1);
    let c2 = canonical_form(g2);
    if c1.certificate != c2.certificate {
        return None;
    }
    let back = perm::inverse(&c2.labeling);
    let map: Vec<usize> = c1.labeling.iter().map(|&l| back[l]).collect();
    assert!(g1.is_isomorphism_to(g2, &map), "equal certificates without an isomorphism");
    Some(map)
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    isomorphism(g1, g2).is_some()
}

/// As [`are_isomorphic`], giving up with `None` when either automorphism
/// search passes `deadline`.
pub fn are_isomorphic_until(g1: &Graph, g2: &Graph, deadline: Instant) -> Option<bool> {
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Some(false);
    }
    let a1 = automorphism_search_until(g1, Some(deadline))?;
    let a2 = automorphism_search_until(g2, Some(deadline))?;
    if a1.group.order() != a2.group.order() {
        return Some(false);
    }
    let c1 = canonical_form_with(g1, &a1.group);
    let c2 = canonical_form_with(g2, &a2.group);
    Some(c1.certificate == c2.certificate)
}
