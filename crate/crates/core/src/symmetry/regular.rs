//! Regular subgroups of automorphism groups, i.e. deciding whether a graph is
//! a Cayley graph.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::perm::{self, Perm};
use super::schreier::PermutationGroup;
use crate::graphs::{cayley_graph, Graph};
use crate::groups::{ConnectionSet, FiniteGroup};

/// Candidate first-level elements are reduced up to conjugacy only when the
/// two-point stabilizer is at most this large.
const CONJUGACY_LIMIT: usize = 20_000;
/// Refuse to enumerate point stabilizers larger than this.
const STABILIZER_LIMIT: usize = 2_000_000;

/// A graph isomorphism onto an explicit Cayley graph.
#[derive(Debug, Clone)]
pub struct CayleyCertificate {
    pub group: FiniteGroup,
    pub connection_set: ConnectionSet,
    /// `isomorphism[v]` is the group element assigned to vertex `v`.
    pub isomorphism: Vec<usize>,
}

#[derive(Serialize)]
struct CertificateJson<'a> {
    group_order: usize,
    group_table_sha256: String,
    group_abelian: bool,
    element_orders: Vec<usize>,
    connection_set: &'a [usize],
    isomorphism: &'a [usize],
}

impl CayleyCertificate {
    /// Rebuilds `Cay(group, connection_set)` and checks the bijection.
    pub fn verify(&self, g: &Graph) -> bool {
        g.is_isomorphism_to(&cayley_graph(&self.group, &self.connection_set), &self.isomorphism)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut orders = self.group.order_statistics();
        orders.sort_unstable();
        serde_json::to_value(CertificateJson {
            group_order: self.group.order(),
            group_table_sha256: self.group.table_digest(),
            group_abelian: self.group.is_abelian(),
            element_orders: orders,
            connection_set: self.connection_set.elements(),
            isomorphism: &self.isomorphism,
        })
        .expect("serializable")
    }
}

#[derive(Debug, Clone)]
pub enum RegularSearchOutcome {
    Found(CayleyCertificate),
    /// The search was exhaustive: no regular subgroup exists.
    None,
    /// The budget ran out (or the stabilizer was too large to enumerate);
    /// nothing is decided.
    Timeout(String),
}

#[derive(Debug, Clone)]
pub struct RegularSearch {
    pub outcome: RegularSearchOutcome,
    pub nodes: usize,
    pub reason: String,
}

struct Closure {
    /// The element taking vertex 0 to `v`, if present.
    slots: Vec<Option<Perm>>,
    elements: Vec<usize>,
    gens: Vec<Perm>,
}

impl Closure {
    fn trivial(n: usize) -> Self {
        let mut slots = vec![None; n];
        slots[0] = Some(perm::identity(n));
        Closure { slots, elements: vec![0], gens: Vec::new() }
    }

    /// `<self, x>` if it is still semiregular with order dividing `n`.
    fn extend(&self, x: &Perm, n: usize) -> Option<Closure> {
        let mut slots = self.slots.clone();
        let mut elements = self.elements.clone();
        let mut gens = self.gens.clone();
        gens.push(x.clone());
        let mut i = 0;
        while i < elements.len() {
            let y = slots[elements[i]].clone().unwrap();
            for s in &gens {
                let z = perm::then(&y, s);
                match &slots[z[0]] {
                    Some(existing) if *existing != z => return None,
                    Some(_) => {}
                    None => {
                        let at = z[0];
                        elements.push(at);
                        slots[at] = Some(z);
                    }
                }
            }
            i += 1;
        }
        n.is_multiple_of(elements.len()).then_some(Closure { slots, elements, gens })
    }

    fn key(&self, base: &[usize]) -> Vec<u32> {
        let mut key = Vec::with_capacity(self.elements.len() * base.len());
        for p in self.slots.iter().flatten() {
            key.extend(base.iter().map(|&b| p[b] as u32));
        }
        key
    }
}

struct Search<'a> {
    n: usize,
    stab: &'a [Perm],
    transversal: &'a [Option<Perm>],
    base: Vec<usize>,
    visited: HashSet<Vec<u32>>,
    deadline: Instant,
    nodes: usize,
    timed_out: bool,
}

impl Search<'_> {
    /// Elements of `Aut` mapping 0 to `v` that could lie in a regular
    /// subgroup.
    fn candidates(&self, v: usize) -> Vec<Perm> {
        let u = self.transversal[v].as_ref().expect("transitive");
        self.stab
            .iter()
            .map(|h| perm::then(h, u))
            .filter(|x| perm::fixed_points(x) == 0 && self.n.is_multiple_of(perm::order(x)))
            .collect()
    }

    fn run(&mut self, state: &Closure, first: Option<(usize, Vec<Perm>)>) -> Option<Closure> {
        if state.elements.len() == self.n {
            return Some(Closure {
                slots: state.slots.clone(),
                elements: state.elements.clone(),
                gens: state.gens.clone(),
            });
        }
        self.nodes += 1;
        if self.nodes % 64 == 1 && Instant::now() >= self.deadline {
            self.timed_out = true;
        }
        if self.timed_out {
            return None;
        }
        let (v, cands) = match first {
            Some(f) => f,
            None => {
                let v = (0..self.n).find(|&v| state.slots[v].is_none()).unwrap();
                (v, self.candidates(v))
            }
        };
        debug_assert!(state.slots[v].is_none());
        for x in cands {
            let Some(next) = state.extend(&x, self.n) else { continue };
            if !self.visited.insert(next.key(&self.base)) {
                continue;
            }
            if let Some(found) = self.run(&next, None) {
                return Some(found);
            }
            if self.timed_out {
                return None;
            }
        }
        None
    }
}

/// Searches `aut` (the full automorphism group of `g`) for a regular
/// subgroup. Every regular subgroup contains, for each vertex `v`, exactly
/// one element taking vertex 0 to `v`, and that element lies in the coset
/// of the stabilizer of 0 mapping 0 to `v`. The search picks such elements
/// one vertex at a time and keeps only those whose joint closure stays
/// semiregular with order dividing `n`, so exhaustion is a proof that none
/// exists.
pub fn regular_subgroup_search(g: &Graph, aut: &PermutationGroup, budget: Duration) -> RegularSearch {
    let n = g.n();
    let deadline = Instant::now() + budget;
    let done = |outcome, reason: &str| RegularSearch { outcome, nodes: 0, reason: reason.into() };
    if n == 0 {
        return done(RegularSearchOutcome::None, "empty graph");
    }
    if n == 1 {
        let cert = certificate(g, &Closure::trivial(1).slots);
        return done(RegularSearchOutcome::Found(cert), "single vertex");
    }
    if !aut.is_transitive() {
        return done(RegularSearchOutcome::None, "automorphism group is not vertex-transitive");
    }
    if aut.order() % n != 0u32.into() {
        return done(RegularSearchOutcome::None, "vertex count does not divide |Aut|");
    }
    let chain = PermutationGroup::with_base(n, aut.generators().to_vec(), &[0]);
    let Some(stab) = chain.stabilizer_elements(1, STABILIZER_LIMIT) else {
        return done(
            RegularSearchOutcome::Timeout("vertex stabilizer too large to enumerate".into()),
            "vertex stabilizer too large to enumerate",
        );
    };
    let (_, transversal) = chain.first_level().expect("nontrivial chain");

    // first branch vertex: smallest orbit of the stabilizer of 0
    let stab_group = chain.stabilizer(0);
    let reps = stab_group.orbit_representatives();
    let v0 = (1..n)
        .min_by_key(|&v| (reps.iter().filter(|&&r| r == reps[v]).count(), v))
        .unwrap_or(0);

    let mut search = Search {
        n,
        stab: &stab,
        transversal,
        base: chain.base(),
        visited: HashSet::new(),
        deadline,
        nodes: 0,
        timed_out: false,
    };
    let root = Closure::trivial(n);
    let found = {
        let mut first = search.candidates(v0);
        let pair = PermutationGroup::with_base(n, aut.generators().to_vec(), &[0, v0]);
        if let Some(fixers) = pair.stabilizer_elements(2, CONJUGACY_LIMIT) {
            let canon = |x: &Perm| {
                fixers
                    .iter()
                    .map(|h| {
                        let hi = perm::inverse(h);
                        perm::then(&perm::then(&hi, x), h)
                    })
                    .min()
                    .unwrap()
            };
            let mut seen = HashSet::new();
            first.retain(|x| seen.insert(canon(x)));
        }
        search.run(&root, Some((v0, first)))
    };
    let nodes = search.nodes;
    if search.timed_out {
        return RegularSearch {
            outcome: RegularSearchOutcome::Timeout("time budget exhausted".into()),
            nodes,
            reason: "time budget exhausted".into(),
        };
    }
    match found {
        None => RegularSearch {
            outcome: RegularSearchOutcome::None,
            nodes,
            reason: "exhaustive search found no regular subgroup".into(),
        },
        Some(closure) => {
            let cert = certificate(g, &closure.slots);
            assert!(cert.verify(g), "regular subgroup certificate failed to verify");
            RegularSearch {
                outcome: RegularSearchOutcome::Found(cert),
                nodes,
                reason: "regular subgroup found".into(),
            }
        }
    }
}

/// Turns a regular subgroup `{r_v}` (with `r_v(0) = v`) into a Cayley
/// certificate. Element `v` is `r_v`, multiplication is composition
/// (`r_x r_y = r_{r_x(y)}`), and vertex `v` is sent to `r_v^-1`, so that
/// adjacency becomes `x y^-1 ∈ S` with `S = {v : v ~ 0}`.
fn certificate(g: &Graph, slots: &[Option<Perm>]) -> CayleyCertificate {
    let n = g.n();
    let r: Vec<&Perm> = slots.iter().map(|s| s.as_ref().unwrap()).collect();
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            table.push(r[x][y] as u32);
        }
    }
    let group = FiniteGroup::from_table(n, table, Vec::new(), "regular subgroup of Aut")
        .expect("a regular permutation group is a group");
    let set = ConnectionSet::new(&group, g.neighbors(0).iter().map(|&v| v as usize))
        .expect("neighbourhood of a vertex-transitive graph is inverse-closed");
    let isomorphism = (0..n).map(|v| group.inv(v)).collect();
    CayleyCertificate { group, connection_set: set, isomorphism }
}
