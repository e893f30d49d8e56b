//! Ordered partitions and equitable refinement.
//!
//! Cells are contiguous ranges of `lab` named by their start position. Every
//! step depends only on cell positions and neighbour counts, never on vertex
//! names, so the refinement commutes with relabeling the graph.

use crate::graphs::Graph;

#[derive(Debug, Clone)]
pub struct Partition {
    /// Vertices in cell order.
    pub lab: Vec<usize>,
    /// Position of each vertex in `lab`.
    pos: Vec<usize>,
    /// Start of the cell containing each vertex.
    start_of: Vec<usize>,
    /// Length of the cell starting at each position (unused elsewhere).
    len_at: Vec<usize>,
    cells: usize,
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Partition {
    pub fn unit(n: usize) -> Self {
        let mut len_at = vec![0; n.max(1)];
        len_at[0] = n;
        Self {
            lab: (0..n).collect(),
            pos: (0..n).collect(),
            start_of: vec![0; n],
            len_at,
            cells: usize::from(n > 0),
        }
    }

    pub fn n(&self) -> usize {
        self.lab.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    #[cfg(test)]
    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.n() {
            out.push(s);
            s += self.len_at[s];
        }
        out
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.len_at[start]]
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.start_of[v]
    }

    /// First smallest cell with more than one vertex.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let len = self.len_at[s];
            if len > 1 && best.is_none_or(|(_, l)| len < l) {
                best = Some((s, len));
            }
            s += len;
        }
        best.map(|b| b.0)
    }

    /// Splits `v` off the front of its cell and refines; returns the trace.
    pub fn individualize(&mut self, g: &Graph, v: usize) -> u64 {
        let s = self.start_of[v];
        let len = self.len_at[s];
        assert!(len > 1, "individualizing a singleton");
        let p = self.pos[v];
        let u = self.lab[s];
        self.lab.swap(s, p);
        self.pos[u] = p;
        self.pos[v] = s;
        self.len_at[s] = 1;
        self.len_at[s + 1] = len - 1;
        for i in s + 1..s + len {
            self.start_of[self.lab[i]] = s + 1;
        }
        self.cells += 1;
        self.refine(g, vec![s], mix(0x5eed, s as u64))
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// starting with every cell as a splitter.
    pub fn refine_all(&mut self, g: &Graph) -> u64 {
        let queue = self.cell_starts();
        self.refine(g, queue, 0x0123_4567)
    }

    fn refine(&mut self, g: &Graph, mut queue: Vec<usize>, mut trace: u64) -> u64 {
        let n = self.n();
        let mut in_queue = vec![false; n];
        for &s in &queue {
            in_queue[s] = true;
        }
        let mut count = vec![0usize; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut head = 0;
        while head < queue.len() && !self.is_discrete() {
            let w_start = queue[head];
            head += 1;
            in_queue[w_start] = false;
            let splitter: Vec<usize> = self.cell(w_start).to_vec();
            touched.clear();
            for &w in &splitter {
                for &v in g.neighbors(w) {
                    let v = v as usize;
                    if count[v] == 0 {
                        touched.push(v);
                    }
                    count[v] += 1;
                }
            }
            let mut cells: Vec<usize> = touched
                .iter()
                .map(|&v| self.start_of[v])
                .filter(|&s| self.len_at[s] > 1)
                .collect();
            cells.sort_unstable();
            cells.dedup();
            trace = mix(trace, (w_start as u64) << 32 | touched.len() as u64);
            for s in cells {
                let len = self.len_at[s];
                let members = &mut self.lab[s..s + len];
                let first = count[members[0]];
                if members.iter().all(|&v| count[v] == first) {
                    trace = mix(trace, (s as u64) << 32 | first as u64);
                    continue;
                }
                members.sort_unstable_by_key(|&v| (count[v], v));
                let was_queued = in_queue[s];
                let mut fragments: Vec<(usize, usize)> = Vec::new();
                let mut i = s;
                while i < s + len {
                    let c = count[self.lab[i]];
                    let mut j = i;
                    while j < s + len && count[self.lab[j]] == c {
                        j += 1;
                    }
                    fragments.push((i, j - i));
                    trace = mix(trace, (i as u64) << 40 | (c as u64) << 20 | (j - i) as u64);
                    i = j;
                }
                for &(fs, fl) in &fragments {
                    self.len_at[fs] = fl;
                    for k in fs..fs + fl {
                        let v = self.lab[k];
                        self.pos[v] = k;
                        self.start_of[v] = fs;
                    }
                }
                self.cells += fragments.len() - 1;
                let largest = fragments
                    .iter()
                    .enumerate()
                    .max_by_key(|&(i, f)| (f.1, std::cmp::Reverse(i)))
                    .map(|(i, _)| i)
                    .unwrap();
                for (i, &(fs, _)) in fragments.iter().enumerate() {
                    if (was_queued || i != largest) && !in_queue[fs] {
                        in_queue[fs] = true;
                        queue.push(fs);
                    }
                }
            }
            for &v in &touched {
                count[v] = 0;
            }
        }
        mix(trace, self.cells as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraph;

    #[test]
    fn regular_graphs_stay_unit() {
        let g = NamedGraph::Petersen.build().unwrap();
        let mut p = Partition::unit(10);
        p.refine_all(&g);
        assert_eq!(p.cell_count(), 1);
        p.individualize(&g, 0);
        // {0}, then the six non-neighbours (count 0), then the three neighbours
        assert_eq!(p.cell_count(), 3);
        assert_eq!(p.cell(1).len(), 6);
        assert_eq!(p.cell(7).len(), 3);
    }

    #[test]
    fn path_splits_by_degree_and_distance() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut p = Partition::unit(5);
        p.refine_all(&g);
        // ends, next-to-ends, middle
        assert_eq!(p.cell_count(), 3);
        assert_eq!(p.target_cell(), Some(0));
    }

    #[test]
    fn traces_are_label_independent() {
        let g = NamedGraph::Chang(2).build().unwrap();
        let perm: Vec<usize> = (0..28).map(|i| (i * 5 + 3) % 28).collect();
        let h = g.relabel(&perm);
        let (mut p, mut q) = (Partition::unit(28), Partition::unit(28));
        assert_eq!(p.refine_all(&g), q.refine_all(&h));
        assert_eq!(p.individualize(&g, 4), q.individualize(&h, perm[4]));
        assert_eq!(p.cell_starts(), q.cell_starts());
    }
}
