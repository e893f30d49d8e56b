use super::Graph;
use crate::groups::{ConnectionSet, Element, FiniteGroup};

/// `Cay(G, S)`: vertex `x` is adjacent to `y` iff `x y^-1 ∈ S`. Vertex `i`
/// is group element `i`.
pub fn cayley_graph(group: &FiniteGroup, set: &ConnectionSet) -> Graph {
    assert_eq!(group.order(), set.group_order(), "connection set from another group");
    let edges = (0..group.order()).flat_map(|x| {
        set.elements()
            .iter()
            .map(move |&s| (x, group.mul(group.inv(s), x)))
    });
    Graph::from_edges(group.order(), edges).expect("Cayley edges are valid")
}

/// The map `x -> x g`, an automorphism of every `Cay(G, S)`.
pub fn right_translation(group: &FiniteGroup, g: Element) -> Vec<usize> {
    (0..group.order()).map(|x| group.mul(x, g)).collect()
}
