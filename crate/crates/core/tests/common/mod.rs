//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;
use std::sync::OnceLock;

use cayley_drg::graphs::{cayley_graph, right_translation, Graph};
use cayley_drg::groups::{ConnectionSet, Element, FiniteGroup, GroupSpec};
use cayley_drg::spectral::spectrum;
use cayley_drg::structure::krausz;
use cayley_drg::symmetry::{automorphism_group, orbits};
use rand::seq::SliceRandom;
use rand::Rng;

pub const GROUP_SPECS: &[&str] = &[
    "Z1", "Z2", "Z5", "Z8", "Z12", "Z2 x Z2", "Z2 x Z4", "Z3 x Z3", "E(2,3)", "E(2,4)",
    "SD(3,2,2)", "SD(4,2,3)", "SD(5,4,2)", "SD(7,3,2)", "SD(9,3,7)", "SD(4,4,3)", "SD(8,2,3)",
    "SD(8,2,5)", "SD(13,3,3)", "HEIS(3)", "AFFSQ(7)", "Z2 x SD(3,2,2)", "Z3 x SD(4,2,3)",
];

pub fn sample_groups() -> &'static [FiniteGroup] {
    static GROUPS: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    GROUPS.get_or_init(|| {
        GROUP_SPECS
            .iter()
            .map(|s| GroupSpec::parse(s).unwrap().build().unwrap())
            .collect()
    })
}

/// Identity at 0, every row and column a permutation, and `(xy)z = x(yz)`
/// on `triples` random triples (all triples when the group is small).
pub fn group_axioms_hold(g: &FiniteGroup, rng: &mut impl Rng, triples: usize) -> bool {
    let n = g.order();
    let latin = (0..n).all(|x| {
        let mut row = vec![false; n];
        let mut col = vec![false; n];
        for y in 0..n {
            row[g.mul(x, y)] = true;
            col[g.mul(y, x)] = true;
        }
        row.iter().all(|&b| b) && col.iter().all(|&b| b)
    });
    let identity = (0..n).all(|x| g.mul(0, x) == x && g.mul(x, 0) == x);
    let assoc = |x, y, z| g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z));
    let associative = if n <= 24 {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| assoc(x, y, z))))
    } else {
        (0..triples).all(|_| assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
    };
    latin && identity && associative
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `Σλ = 0` and `Σλ² = 2m` within the acceptance tolerances.
pub fn trace_identities_hold(g: &Graph) -> bool {
    let s = spectrum(g);
    let m = g.edge_count() as f64;
    let sum: f64 = s.eigenvalues.iter().map(|&(x, k)| x * k as f64).sum();
    let sq: f64 = s.eigenvalues.iter().map(|&(x, k)| x * x * k as f64).sum();
    sum.abs() < 1e-6 && (sq - 2.0 * m).abs() <= 1e-4 * m.max(1.0)
}

/// Random inverse-closed subset of `G \ {e}`.
pub fn random_connection_set(g: &FiniteGroup, rng: &mut impl Rng) -> ConnectionSet {
    let picks: Vec<Element> = (1..g.order()).filter(|_| rng.gen_bool(0.3)).collect();
    ConnectionSet::inverse_closure(g, picks).unwrap()
}

/// Right translations `x -> xa` preserve `x y^-1`, hence `Cay(G, S)`.
pub fn translations_are_automorphisms(g: &FiniteGroup, s: &ConnectionSet) -> bool {
    let cay = cayley_graph(g, s);
    (0..g.order()).all(|a| {
        let t = right_translation(g, a);
        (0..g.order()).all(|x| t[x] == g.mul(x, a)) && cay.is_automorphism(&t)
    })
}

/// Pairs of distinct subgroups of equal order at least 2 with trivial
/// intersection that generate the group.
pub fn generating_pairs(g: &FiniteGroup) -> Vec<(Vec<Element>, Vec<Element>)> {
    let n = g.order();
    let mut out = Vec::new();
    for k in 2..n {
        if !n.is_multiple_of(k) || k * k < n {
            continue;
        }
        let subs = g.subgroups_of_order(k).unwrap().subgroups;
        for (i, h) in subs.iter().enumerate() {
            for kk in &subs[i + 1..] {
                let meet = h.iter().filter(|x| kk.contains(x)).count();
                let seed: Vec<Element> = h.iter().chain(kk).copied().collect();
                if meet == 1 && g.subgroup_closure(&seed).len() == n {
                    out.push((h.clone(), kk.clone()));
                }
            }
        }
    }
    out
}

/// `Cay(G, (H ∪ K) \ {e})` is a line graph with a bipartite root.
pub fn hk_round_trip(g: &FiniteGroup, h: &[Element], k: &[Element]) -> bool {
    let s = ConnectionSet::from_union(g, &[h, k]).unwrap();
    let cay = cayley_graph(g, &s);
    match krausz(&cay) {
        Ok(Some(d)) => d.verify(&cay) && d.bipartite,
        _ => false,
    }
}

/// Random connected `k`-regular graph by the configuration model, or a
/// connected circulant when `circulant` is set.
pub fn random_regular(rng: &mut impl Rng, circulant: bool) -> Graph {
    loop {
        let n = rng.gen_range(6..=14);
        let g = if circulant {
            let mut jumps: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.4)).collect();
            if jumps.is_empty() {
                jumps.push(1);
            }
            Graph::from_fn(n, |u, v| {
                let d = (u + n - v) % n;
                jumps.contains(&d) || jumps.contains(&(n - d))
            })
        } else {
            let k = if n % 2 == 1 { 4 } else { rng.gen_range(3..=4) };
            let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
            stubs.shuffle(rng);
            let pairs: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
            let mut seen = std::collections::HashSet::new();
            if pairs.iter().any(|&(a, b)| a == b || !seen.insert((a.min(b), a.max(b)))) {
                continue;
            }
            Graph::from_edges(n, pairs).unwrap()
        };
        if g.is_connected() && g.regular_degree().is_some_and(|k| k >= 2) {
            return g;
        }
    }
}

pub fn edge_transitive_iff_line_vertex_transitive(g: &Graph) -> bool {
    let aut = automorphism_group(g);
    let edge_transitive = orbits(g, &aut).edge_transitive;
    let line_vt = automorphism_group(&g.line_graph()).is_transitive();
    edge_transitive == line_vt
}

/// Counts automorphisms by trying every permutation (Heap's algorithm).
pub fn brute_force_aut_count(g: &Graph) -> u64 {
    let n = g.n();
    let edges = g.edges();
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let is_aut = |p: &[usize]| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v]));
    let mut count = u64::from(is_aut(&p));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            count += u64::from(is_aut(&p));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// `(v, k, λ, μ)` by counting common neighbours of every pair.
pub fn srg_by_counting(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|u| (0..n).filter(|&v| adj[u][v]).collect()).collect();
    let k = nbrs.first()?.len();
    if nbrs.iter().any(|x| x.len() != k) {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let common = nbrs[u].iter().filter(|&&w| adj[v][w]).count();
            let slot = if adj[u][v] { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
}

fn bfs(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for v in 0..g.n() {
            if g.has_edge(u, v) && d[v] == usize::MAX {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
    }
    d
}

/// Intersection array from the full distance matrix, if distance-regular.
pub fn ia_by_bfs(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let dist: Vec<Vec<usize>> = (0..n).map(|s| bfs(g, s)).collect();
    let diam = *dist.iter().flatten().max()?;
    if diam == usize::MAX || diam == 0 {
        return None;
    }
    let mut b: Vec<Option<usize>> = vec![None; diam + 1];
    let mut c: Vec<Option<usize>> = vec![None; diam + 1];
    for x in 0..n {
        for y in 0..n {
            let i = dist[x][y];
            let (mut ci, mut bi) = (0, 0);
            for z in 0..n {
                if g.has_edge(y, z) {
                    if dist[x][z] + 1 == i {
                        ci += 1;
                    } else if dist[x][z] == i + 1 {
                        bi += 1;
                    }
                }
            }
            for (slot, val) in [(&mut b[i], bi), (&mut c[i], ci)] {
                match *slot {
                    None => *slot = Some(val),
                    Some(v) if v != val => return None,
                    _ => {}
                }
            }
        }
    }
    let b = b[..diam].iter().map(|x| x.unwrap()).collect();
    let c = c[1..].iter().map(|x| x.unwrap()).collect();
    Some((b, c))
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Every group of order `n = Π p_i^{a_i}` is abelian iff every `a_i <= 2`
/// and no `p_i` divides `p_j^{a_j} - 1`.
pub fn all_abelian_by_formula(n: u64) -> bool {
    let f = factor(n);
    f.iter().all(|&(_, a)| a <= 2)
        && f.iter().all(|&(p, _)| f.iter().all(|&(q, b)| (q.pow(b) - 1) % p != 0))
}
