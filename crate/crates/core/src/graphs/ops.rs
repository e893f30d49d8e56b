use super::Graph;

impl Graph {
    /// `L(G)`: one vertex per edge of `G` (edges in lexicographic order),
    /// adjacent when the edges share an endpoint. Vertex labels record the
    /// originating edge as `u-v`.
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let pairs = incident.iter().flat_map(|inc| {
            inc.iter()
                .enumerate()
                .flat_map(move |(a, &x)| inc[a + 1..].iter().map(move |&y| (x, y)))
        });
        let labels = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        Graph::from_edges(edges.len(), pairs)
            .expect("line graph edges are valid")
            .with_labels(labels)
    }
}

#[cfg(test)]
mod tests {
    use crate::graphs::NamedGraph;

    #[test]
    fn regular_line_graph_degree() {
        let p = NamedGraph::Kneser(5, 2).build().unwrap();
        let l = p.line_graph();
        assert_eq!(l.n(), 15);
        assert_eq!(l.regular_degree(), Some(4));
        assert_eq!(l.labels().unwrap()[0], "0-7");
    }

    #[test]
    fn cycles_are_self_line() {
        for m in 3..9 {
            let c = NamedGraph::Cycle(m).build().unwrap();
            let l = c.line_graph();
            assert_eq!(l.n(), m);
            assert_eq!(l.regular_degree(), Some(2));
        }
    }

    #[test]
    fn triangular_is_line_of_complete_in_same_order() {
        for n in 2..8 {
            let t = NamedGraph::Triangular(n).build().unwrap();
            assert_eq!(NamedGraph::Complete(n).build().unwrap().line_graph(), t);
        }
    }
}
