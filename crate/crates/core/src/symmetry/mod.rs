//! Automorphism groups, canonical forms, orbits and the Cayley decision.

mod partition;
pub mod perm;
mod regular;
mod schreier;
mod search;

use serde::Serialize;

use crate::graphs::Graph;

pub use perm::Perm;
pub use regular::{regular_subgroup_search, CayleyCertificate, RegularSearch, RegularSearchOutcome};
pub use schreier::{GroupSummary, PermutationGroup};
pub use search::{
    are_isomorphic, are_isomorphic_until, automorphism_group, automorphism_search,
    automorphism_search_until, canonical_form, canonical_form_with, isomorphism, AutomorphismSearch,
    CanonicalForm,
};

/// Vertex and edge orbits of a group acting on a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbits {
    pub vertex_orbits: Vec<Vec<usize>>,
    pub edge_orbits: Vec<Vec<(usize, usize)>>,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
}

fn group_classes(reps: &[usize]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; reps.len()];
    for (x, &r) in reps.iter().enumerate() {
        if index[r] == usize::MAX {
            index[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[index[r]].push(x);
    }
    classes
}

/// Orbits of `group` on the vertices and edges of `g`. Every generator must
/// be an automorphism of `g`.
pub fn orbits(g: &Graph, group: &PermutationGroup) -> Orbits {
    assert_eq!(group.degree(), g.n());
    let vertex_orbits = group_classes(&group.orbit_representatives());
    let edges = g.edges();
    let index_of = |u: usize, v: usize| {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).expect("generator is not an automorphism")
    };
    let edge_gens: Vec<Perm> = group
        .generators()
        .iter()
        .map(|p| edges.iter().map(|&(u, v)| index_of(p[u], p[v])).collect())
        .collect();
    let edge_orbits: Vec<Vec<(usize, usize)>> =
        group_classes(&perm::orbit_representatives(edges.len(), &edge_gens))
            .into_iter()
            .map(|c| c.into_iter().map(|i| edges[i]).collect())
            .collect();
    Orbits {
        vertex_transitive: vertex_orbits.len() <= 1,
        edge_transitive: edge_orbits.len() <= 1,
        vertex_orbits,
        edge_orbits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraph;

    fn transitivity(g: NamedGraph) -> (bool, bool) {
        let g = g.build().unwrap();
        let o = orbits(&g, &automorphism_group(&g));
        (o.vertex_transitive, o.edge_transitive)
    }

    #[test]
    fn transitivity_flags() {
        assert_eq!(transitivity(NamedGraph::Heawood), (true, true));
        assert_eq!(transitivity(NamedGraph::Cycle(6)), (true, true));
        assert_eq!(transitivity(NamedGraph::CompleteBipartite(2, 3)), (false, true));
        // triangular prism: vertex- but not edge-transitive
        let prism = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        let o = orbits(&prism, &automorphism_group(&prism));
        assert!(o.vertex_transitive && !o.edge_transitive);
        assert_eq!(o.edge_orbits.len(), 2);
    }
}
