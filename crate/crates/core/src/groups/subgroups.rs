use std::collections::HashSet;

use serde::Serialize;

use super::{Element, FiniteGroup};
use crate::error::{Error, Result};

/// Upper bound on intermediate subgroups kept while joining cyclic ones.
const WORK_LIMIT: usize = 50_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupSearch {
    /// Each subgroup as a sorted element list; the list itself is sorted.
    pub subgroups: Vec<Vec<Element>>,
    /// False when the search hit its work limit and may have missed some.
    pub complete: bool,
}

struct Candidate {
    elements: Vec<Element>,
    gens: Vec<Element>,
}

impl FiniteGroup {
    /// All subgroups of order `k`.
    ///
    /// Every subgroup is reachable as a chain of joins `<c1> <= <c1,c2> <= ...`
    /// of cyclic subgroups whose orders divide `k`, so growing such joins while
    /// the order still divides `k` enumerates them all. The search reports
    /// `complete = false` instead of truncating silently if it exceeds its
    /// work limit.
    pub fn subgroups_of_order(&self, k: usize) -> Result<SubgroupSearch> {
        let n = self.order();
        if k == 0 || !n.is_multiple_of(k) {
            return Err(Error::NotADivisor(k as u64, n as u64));
        }
        let mut seen: HashSet<Vec<Element>> = HashSet::new();
        let mut cyclics: Vec<Candidate> = Vec::new();
        for a in 0..n {
            if !k.is_multiple_of(self.element_order(a)) {
                continue;
            }
            let mut c = self.cyclic_subgroup(a);
            c.sort_unstable();
            if seen.insert(c.clone()) {
                cyclics.push(Candidate { elements: c, gens: vec![a] });
            }
        }
        let mut found: Vec<Vec<Element>> = Vec::new();
        let mut complete = true;
        let mut frontier: Vec<usize> = (0..cyclics.len()).collect();
        let mut all: Vec<Candidate> = Vec::new();
        for c in &cyclics {
            all.push(Candidate { elements: c.elements.clone(), gens: c.gens.clone() });
            if c.elements.len() == k {
                found.push(c.elements.clone());
            }
        }
        while let Some(idx) = frontier.pop() {
            if all[idx].elements.len() == k {
                continue;
            }
            let member: HashSet<Element> = all[idx].elements.iter().copied().collect();
            for c in &cyclics {
                if member.contains(&c.gens[0]) {
                    continue;
                }
                let mut gens = all[idx].gens.clone();
                gens.push(c.gens[0]);
                let join = self.subgroup_closure(&gens);
                if !k.is_multiple_of(join.len()) || !seen.insert(join.clone()) {
                    continue;
                }
                if join.len() == k {
                    found.push(join.clone());
                }
                if all.len() >= WORK_LIMIT {
                    complete = false;
                    break;
                }
                all.push(Candidate { elements: join, gens });
                frontier.push(all.len() - 1);
            }
            if !complete {
                break;
            }
        }
        found.sort();
        Ok(SubgroupSearch { subgroups: found, complete })
    }
}
