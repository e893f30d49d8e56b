mod common;

use std::time::Instant;

use cayley_drg::algebra::FiniteField;
use cayley_drg::analysis::{abelian_groups, all_groups_abelian, AllAbelian};
use cayley_drg::catalog::{catalog_cases, Check};
use cayley_drg::graphs::{graph6, Graph, NamedGraph};
use cayley_drg::groups::{cyclic, direct, FiniteGroup, GroupSpec};
use cayley_drg::spectral::{ia_eigenvalues, spectrum, IntersectionArray};
use cayley_drg::structure::lattice_check;
use cayley_drg::symmetry::automorphism_group;

use common::*;

#[test]
fn petersen_aut_by_brute_force() {
    let g = NamedGraph::Petersen.build().unwrap();
    let start = Instant::now();
    assert_eq!(brute_force_aut_count(&g), 120);
    assert!(start.elapsed().as_secs() < 60);
    assert_eq!(automorphism_group(&g).order_u64(), Some(120));
}

#[test]
fn small_aut_orders_by_brute_force() {
    for (name, order) in [
        (NamedGraph::Cycle(7), 14),
        (NamedGraph::Cube(3), 48),
        (NamedGraph::CompleteBipartite(3, 4), 144),
        (NamedGraph::Line(Box::new(NamedGraph::Complete(4))), 48),
    ] {
        let g = name.build().unwrap();
        assert_eq!(brute_force_aut_count(&g), order, "{name}");
        assert_eq!(automorphism_group(&g).order_u64(), Some(order), "{name}");
    }
}

#[test]
fn catalog_srg_parameters_match_counting() {
    let mut checked = 0;
    for case in catalog_cases() {
        let Some(g) = case.graph().unwrap() else { continue };
        for e in &case.expectations {
            let (graph, p) = match &e.check {
                Check::Srg(p) => (g.clone(), p),
                Check::ComplementSrg(p) => (g.complement(), p),
                _ => continue,
            };
            assert_eq!(srg_by_counting(&graph), Some((p.v, p.k, p.lambda, p.mu)), "{}", case.name);
            checked += 1;
        }
    }
    assert!(checked >= 20, "{checked}");
}

#[test]
fn catalog_intersection_arrays_match_bfs() {
    let mut checked = 0;
    for case in catalog_cases() {
        let Some(g) = case.graph().unwrap() else { continue };
        for e in &case.expectations {
            let Check::IntersectionArray(b, c) = &e.check else { continue };
            assert_eq!(ia_by_bfs(&g), Some((b.clone(), c.clone())), "{}", case.name);
            let arr = IntersectionArray::new(b.clone(), c.clone()).unwrap();
            let s = spectrum(&g);
            let ev = ia_eigenvalues(&arr);
            assert_eq!(ev.len(), s.eigenvalues.len(), "{}", case.name);
            for x in ev {
                assert!(s.contains(x, 1e-6), "{}: {x} not in {s}", case.name);
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 5);
}

/// Independent graph6 encoder for the fixed Shrikhande construction.
#[test]
fn shrikhande_graph6_matches_hand_encoding() {
    let g = NamedGraph::Shrikhande.build().unwrap();
    let n = g.n();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut text = String::from((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | u8::from(b));
        text.push((63 + v) as char);
    }
    assert_eq!(graph6::encode(&g), text);
}

fn groups_of_square_order(n: usize) -> Vec<FiniteGroup> {
    let mut gs = abelian_groups((n * n) as u64).unwrap();
    let extra: &[&str] = match n {
        4 => &["SD(8,2,3)", "SD(8,2,5)", "SD(8,2,7)", "SD(4,4,3)", "Z2 x SD(4,2,3)"],
        6 => &["SD(9,4,8)", "Z2 x SD(9,2,8)", "SD(3,2,2) x SD(3,2,2)", "Z6 x SD(3,2,2)"],
        _ => &[],
    };
    gs.extend(extra.iter().map(|s| GroupSpec::parse(s).unwrap().build().unwrap()));
    gs
}

/// Every pair of order-`n` subgroups meeting trivially is a general product
/// and gives `L_2(n)`.
#[test]
fn lattice_theorem_forward_scan() {
    for n in 2..=6 {
        let mut pairs = 0;
        for g in groups_of_square_order(n) {
            let subs = g.subgroups_of_order(n).unwrap();
            assert!(subs.complete);
            for (i, h) in subs.subgroups.iter().enumerate() {
                for k in &subs.subgroups[i + 1..] {
                    if h.iter().filter(|x| k.contains(x)).count() != 1 {
                        continue;
                    }
                    let check = lattice_check(&g, h, k).unwrap();
                    assert!(check.general_product && check.holds(), "{} {h:?} {k:?}", g.descriptor());
                    pairs += 1;
                }
            }
        }
        assert!(pairs > 0, "no pairs for n = {n}");
    }
}

/// `F_{q^2} ⋊ C_p` with `C_p` acting by multiplication by an element of
/// order `p`.
fn field_semidirect(q: u64, p: usize) -> FiniteGroup {
    let f = FiniteField::of_order(q * q).unwrap();
    let size = (q * q) as usize;
    let w = f.pow(f.primitive_element(), (q * q - 1) / p as u64);
    let powers: Vec<_> = (0..p).map(|i| f.pow(w, i as u64)).collect();
    let n = size * p;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (a, i) = (x % size, x / size);
            let (b, j) = (y % size, y / size);
            let sum = f.add(f.element(a), f.mul(powers[i], f.element(b)));
            table.push((((i + j) % p) * size + f.index(sum)) as u32);
        }
    }
    FiniteGroup::from_table(n, table, Vec::new(), format!("F{} x| C{p}", q * q)).unwrap()
}

/// A nonabelian group of order `n`, built from a small nonabelian factor.
fn nonabelian_witness(n: usize) -> Option<FiniteGroup> {
    let mut seeds: Vec<FiniteGroup> = Vec::new();
    for m in 3..=n / 2 {
        if n.is_multiple_of(2 * m) {
            seeds.push(GroupSpec::parse(&format!("SD({m},2,{})", m - 1)).unwrap().build().unwrap());
            break;
        }
    }
    for p in [3usize, 5, 7] {
        if n.is_multiple_of(p * p * p) {
            seeds.push(GroupSpec::parse(&format!("HEIS({p})")).unwrap().build().unwrap());
        }
    }
    for q in [3usize, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        for p in [3usize, 5, 7, 11] {
            if n.is_multiple_of(p * q) && (q - 1) % p == 0 {
                let r = (2..q).find(|&r| (1..p).all(|e| r.pow(e as u32) % q != 1) && r.pow(p as u32) % q == 1);
                if let Some(r) = r {
                    seeds.push(GroupSpec::parse(&format!("SD({q},{p},{r})")).unwrap().build().unwrap());
                }
            }
            if n.is_multiple_of(p * q * q) && (q * q - 1) % p == 0 && q * q * p <= 2000 {
                seeds.push(field_semidirect(q as u64, p));
            }
        }
    }
    seeds.into_iter().find(|g| !g.is_abelian()).map(|g| {
        let rest = n / g.order();
        if rest == 1 { g } else { direct(&g, &cyclic(rest).unwrap()).unwrap() }
    })
}

#[test]
fn all_groups_abelian_is_consistent_up_to_100() {
    let mut unknown = Vec::new();
    for n in 1..=100u64 {
        let formula = all_abelian_by_formula(n);
        match all_groups_abelian(n) {
            AllAbelian::Yes => assert!(formula, "{n}: yes contradicts the order formula"),
            AllAbelian::No => {
                assert!(!formula, "{n}: no contradicts the order formula");
                let w = nonabelian_witness(n as usize).unwrap_or_else(|| panic!("{n}: no witness"));
                assert_eq!(w.order(), n as usize);
                assert!(!w.is_abelian());
            }
            AllAbelian::Unknown => unknown.push(n),
        }
        if formula {
            for g in abelian_groups(n).unwrap() {
                assert!(g.is_abelian());
            }
        }
    }
    assert!(unknown.is_empty(), "undecided orders: {unknown:?}");
}

#[test]
fn folded_cube_is_the_clebsch_complement() {
    let folded = NamedGraph::FoldedCube(5).build().unwrap();
    let clebsch = NamedGraph::Clebsch.build().unwrap();
    assert_eq!(srg_by_counting(&folded), Some((16, 5, 0, 2)));
    assert_eq!(srg_by_counting(&clebsch), Some((16, 10, 6, 6)));
    let complement: Graph = folded.complement();
    assert!(cayley_drg::symmetry::are_isomorphic(&complement, &clebsch));
}
