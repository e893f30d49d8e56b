//! Group-order arithmetic for non-existence arguments: Sylow counting,
//! orders at which every group is abelian, abelian group enumeration and the
//! abelian obstruction for line graphs.

use serde::Serialize;

use crate::algebra::is_prime;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::groups::{cyclic, direct, Element, FiniteGroup};

/// Prime factorization in increasing order of primes.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let large: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&d| d * d != n).collect();
    out.extend(large);
    out
}

/// Possible numbers of Sylow `p`-subgroups of a group of order `n`: the
/// divisors of `n / p^a` that are `1 mod p`.
pub fn sylow_candidates(n: u64, p: u64) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 || !n.is_multiple_of(p) {
        return Err(Error::NotADivisor(p, n));
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    Ok(divisors(m).into_iter().filter(|d| d % p == 1).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AllAbelian {
    Yes,
    No,
    Unknown,
}

/// Whether every group of order `n` is abelian, with the argument. Only
/// orders `p`, `p^2`, `pq` and `p^2 q` are ever answered `yes`; `no` needs an
/// explicit nonabelian construction.
pub fn all_groups_abelian_with_reason(n: u64) -> (AllAbelian, String) {
    let f = factorize(n);
    if n.is_multiple_of(2) && n >= 6 {
        return (AllAbelian::No, format!("the dihedral group of order {n} is nonabelian"));
    }
    for &(p, a) in &f {
        if a >= 3 {
            return (
                AllAbelian::No,
                format!("a nonabelian group of order {p}^3 times a cyclic group of order {}", n / p.pow(3)),
            );
        }
    }
    for &(p, _) in &f {
        for &(q, b) in &f {
            if p != q && (q - 1) % p == 0 {
                return (
                    AllAbelian::No,
                    format!("{p} divides {q} - 1, so Z{q} ⋊ Z{p} times Z{} is nonabelian", n / (p * q)),
                );
            }
            if p != q && b == 2 && (q * q - 1) % p == 0 {
                return (
                    AllAbelian::No,
                    format!(
                        "{p} divides {q}^2 - 1, so (Z{q} x Z{q}) ⋊ Z{p} times Z{} is nonabelian",
                        n / (p * q * q)
                    ),
                );
            }
        }
    }
    match f.as_slice() {
        [] => (AllAbelian::Yes, "the trivial group".into()),
        [(p, 1)] => (AllAbelian::Yes, format!("groups of prime order {p} are cyclic")),
        [(p, 2)] => (AllAbelian::Yes, format!("groups of order {p}^2 are abelian")),
        [(p, 1), (q, 1)] => (
            AllAbelian::Yes,
            format!("{p} does not divide {q} - 1, so both Sylow subgroups are normal and G = Z{p} x Z{q}"),
        ),
        [(p, a), (q, b)] if a + b == 3 => {
            let np = sylow_candidates(n, *p).expect("p | n");
            let nq = sylow_candidates(n, *q).expect("q | n");
            if np == [1] && nq == [1] {
                (
                    AllAbelian::Yes,
                    format!(
                        "n_{p} and n_{q} are forced to 1, so G is the direct product of its Sylow \
                         subgroups, each of order p or p^2"
                    ),
                )
            } else {
                (AllAbelian::Unknown, "a Sylow count is not forced".into())
            }
        }
        _ => (AllAbelian::Unknown, "order pattern not handled".into()),
    }
}

pub fn all_groups_abelian(n: u64) -> AllAbelian {
    all_groups_abelian_with_reason(n).0
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Invariant factors `d1 | d2 | ... | dr` of every abelian group of order
/// `n`, one list per group.
pub fn abelian_invariants(n: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![Vec::new()];
    for (p, a) in factorize(n) {
        let mut next = Vec::new();
        for current in &out {
            for part in partitions(a, a) {
                // largest invariant factor first while combining
                let mut merged = current.clone();
                for (i, &e) in part.iter().enumerate() {
                    let pe = p.pow(e);
                    if i < merged.len() {
                        merged[i] *= pe;
                    } else {
                        merged.push(pe);
                    }
                }
                next.push(merged);
            }
        }
        out = next;
    }
    for inv in &mut out {
        inv.reverse();
    }
    out.sort();
    out
}

/// One group per isomorphism type of abelian group of order `n`, as direct
/// products of cyclic groups of the invariant factors.
pub fn abelian_groups(n: u64) -> Result<Vec<FiniteGroup>> {
    if n == 0 || n > 2000 {
        return Err(Error::Precondition(format!("order {n} outside 1..=2000")));
    }
    let mut groups = Vec::new();
    for inv in abelian_invariants(n) {
        let mut g = cyclic(inv.first().copied().unwrap_or(1) as usize)?;
        for &d in inv.iter().skip(1) {
            g = direct(&g, &cyclic(d as usize)?)?;
        }
        groups.push(g);
    }
    let mut stats: Vec<Vec<usize>> = groups
        .iter()
        .map(|g| {
            let mut s = g.order_statistics();
            s.sort_unstable();
            s
        })
        .collect();
    stats.sort();
    stats.dedup();
    assert_eq!(stats.len(), groups.len(), "abelian groups of order {n} are not pairwise distinct");
    Ok(groups)
}

#[derive(Debug, Clone, Serialize)]
pub struct SylowEntry {
    pub p: u64,
    pub exponent: u32,
    pub candidates: Vec<u64>,
    pub forced_normal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderAnalysis {
    pub n: u64,
    pub factorization: Vec<(u64, u32)>,
    pub sylow: Vec<SylowEntry>,
    pub all_abelian: AllAbelian,
    pub reason: String,
    pub abelian_invariants: Vec<Vec<u64>>,
}

pub fn analyze_order(n: u64) -> OrderAnalysis {
    let factorization = factorize(n);
    let sylow = factorization
        .iter()
        .map(|&(p, exponent)| {
            let candidates = sylow_candidates(n, p).expect("p | n");
            SylowEntry { p, exponent, forced_normal: candidates == [1], candidates }
        })
        .collect();
    let (all_abelian, reason) = all_groups_abelian_with_reason(n);
    OrderAnalysis {
        n,
        factorization,
        sylow,
        all_abelian,
        reason,
        abelian_invariants: abelian_invariants(n),
    }
}

/// Outcome of the abelian obstruction for `L(root)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Obstruction {
    /// `L(root)` is not a Cayley graph; `steps` is the argument in order.
    NotCayley { edges: usize, vertices: usize, steps: Vec<String> },
    Inapplicable { reason: String },
}

/// Regular subgroups of `Aut(L(root))` act regularly on the edges of
/// `root`. When every group of that order is abelian and `root` is not
/// bipartite, such a group would act regularly on the vertices too, which
/// is impossible unless `|V| = |E|`.
pub fn line_graph_abelian_obstruction(root: &Graph) -> Result<Obstruction> {
    let v = root.n();
    let m = root.edge_count();
    if !root.is_connected() {
        return Err(Error::Disconnected);
    }
    let Some(k) = root.regular_degree() else {
        return Err(Error::Precondition("root graph is not regular".into()));
    };
    if (v == 2 && k == 1) || (v == 4 && k == 3) {
        return Err(Error::WhitneyException(format!(
            "K{v}: its line graph has automorphisms not induced by the root"
        )));
    }
    let inapplicable = |reason: String| Ok(Obstruction::Inapplicable { reason });
    if root.is_bipartite() {
        return inapplicable("root is bipartite, so an edge-transitive group need not be vertex-transitive".into());
    }
    if v == m {
        return inapplicable(format!("root has as many vertices as edges ({v})"));
    }
    let (verdict, reason) = all_groups_abelian_with_reason(m as u64);
    if verdict != AllAbelian::Yes {
        return inapplicable(format!("not every group of order {m} is known to be abelian: {reason}"));
    }
    let steps = vec![
        format!("if L(root) were a Cayley graph, Aut(L(root)) would contain a regular subgroup G of order {m}"),
        format!(
            "root is connected, {k}-regular and neither K2 nor K4, so Aut(L(root)) = Aut(root) acting on \
             edges, and G acts regularly on the {m} edges of root"
        ),
        format!("every group of order {m} is abelian: {reason}"),
        "root is not bipartite, so the edge-transitive group G is vertex-transitive on root".into(),
        "a transitive abelian permutation group is regular, so |V(root)| = |G|".into(),
        format!("but root has {v} vertices, not {m}: L(root) is not a Cayley graph"),
    ];
    Ok(Obstruction::NotCayley { edges: m, vertices: v, steps })
}

#[derive(Debug, Clone, Serialize)]
pub struct HkWitness {
    pub group: String,
    pub h: Vec<Element>,
    pub k: Vec<Element>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HkScan {
    /// Pairs of order-`k` subgroups with trivial intersection generating the
    /// whole group.
    Witnesses { witnesses: Vec<HkWitness>, pairs_checked: usize },
    /// No group of order `n` has such a pair.
    Impossible { pairs_checked: usize },
}

/// Over every group of order `n` (all abelian), looks for subgroups `H != K`
/// of order `k` with `H ∩ K = {e}` and `<H ∪ K> = G`.
pub fn hk_generation_scan(n: u64, k: u64) -> Result<HkScan> {
    if all_groups_abelian(n) != AllAbelian::Yes {
        return Err(Error::Precondition(format!("groups of order {n} are not known to be all abelian")));
    }
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::NotADivisor(k, n));
    }
    let mut witnesses = Vec::new();
    let mut pairs_checked = 0;
    for g in abelian_groups(n)? {
        let search = g.subgroups_of_order(k as usize)?;
        if !search.complete {
            return Err(Error::Precondition(format!(
                "subgroup enumeration of {} incomplete",
                g.descriptor()
            )));
        }
        let subs = &search.subgroups;
        for (i, h) in subs.iter().enumerate() {
            for kk in &subs[i + 1..] {
                if h.iter().filter(|x| kk.binary_search(x).is_ok()).count() != 1 {
                    continue;
                }
                pairs_checked += 1;
                let seed: Vec<Element> = h.iter().chain(kk).copied().collect();
                if g.subgroup_closure(&seed).len() == g.order() {
                    witnesses.push(HkWitness { group: g.descriptor().to_string(), h: h.clone(), k: kk.clone() });
                }
            }
        }
    }
    Ok(if witnesses.is_empty() {
        HkScan::Impossible { pairs_checked }
    } else {
        HkScan::Witnesses { witnesses, pairs_checked }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraph;

    #[test]
    fn sylow() {
        assert_eq!(sylow_candidates(45, 3).unwrap(), vec![1]);
        assert_eq!(sylow_candidates(45, 5).unwrap(), vec![1]);
        assert_eq!(sylow_candidates(175, 7).unwrap(), vec![1]);
        assert_eq!(sylow_candidates(175, 5).unwrap(), vec![1]);
        assert_eq!(sylow_candidates(12, 2).unwrap(), vec![1, 3]);
        assert!(sylow_candidates(12, 5).is_err());
        assert!(sylow_candidates(12, 4).is_err());
    }

    #[test]
    fn abelian_orders() {
        for n in [1, 2, 9, 15, 45, 175, 35, 99] {
            assert_eq!(all_groups_abelian(n), AllAbelian::Yes, "{n}");
        }
        for n in [6, 8, 21, 27, 39, 55, 75] {
            assert_eq!(all_groups_abelian(n), AllAbelian::No, "{n}");
        }
        // 3 * 5 * 17: abelian in fact, but outside the handled patterns
        assert_eq!(all_groups_abelian(255), AllAbelian::Unknown);
    }

    #[test]
    fn abelian_group_lists() {
        assert_eq!(abelian_invariants(45), vec![vec![3, 15], vec![45]]);
        assert_eq!(abelian_groups(175).unwrap().len(), 2);
        assert_eq!(abelian_invariants(8), vec![vec![2, 2, 2], vec![2, 4], vec![8]]);
        assert_eq!(abelian_groups(72).unwrap().len(), 6);
        assert_eq!(abelian_groups(1).unwrap()[0].order(), 1);
    }

    #[test]
    fn obstruction() {
        let petersen = NamedGraph::Petersen.build().unwrap();
        match line_graph_abelian_obstruction(&petersen).unwrap() {
            Obstruction::NotCayley { edges, vertices, steps } => {
                assert_eq!((edges, vertices), (15, 10));
                assert_eq!(steps.len(), 6);
            }
            other => panic!("{other:?}"),
        }
        let hs = NamedGraph::HoffmanSingleton.build().unwrap();
        assert!(matches!(
            line_graph_abelian_obstruction(&hs).unwrap(),
            Obstruction::NotCayley { edges: 175, vertices: 50, .. }
        ));
        let heawood = NamedGraph::Heawood.build().unwrap();
        assert!(matches!(line_graph_abelian_obstruction(&heawood).unwrap(), Obstruction::Inapplicable { .. }));
        let k4 = NamedGraph::Complete(4).build().unwrap();
        assert!(matches!(line_graph_abelian_obstruction(&k4), Err(Error::WhitneyException(_))));
    }

    #[test]
    fn hk_scan() {
        assert!(matches!(hk_generation_scan(45, 3).unwrap(), HkScan::Impossible { .. }));
        match hk_generation_scan(9, 3).unwrap() {
            HkScan::Witnesses { witnesses, .. } => assert_eq!(witnesses.len(), 6),
            other => panic!("{other:?}"),
        }
        assert!(hk_generation_scan(21, 3).is_err());
    }
}
