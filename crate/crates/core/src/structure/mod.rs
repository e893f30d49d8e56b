//! Structure of Cayley line graphs: Krausz decompositions, connection sets
//! that split into two subgroups, and the lattice, cocktail-party and
//! triangular characterizations.

mod krausz;

use serde::Serialize;

use crate::algebra::FiniteField;
use crate::error::{Error, Result};
use crate::graphs::{cayley_graph, Graph, NamedGraph};
use crate::groups::{affine_square, ConnectionSet, Element, FiniteGroup};
use crate::symmetry::are_isomorphic;

pub use krausz::{krausz, KrauszDecomposition, KrauszSummary};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementVerdict {
    pub element: Element,
    pub holds: bool,
}

/// `S = (K ∪ Ka) \ {e}` for a maximal clique `K` through `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetForm {
    pub k: Vec<Element>,
    pub a: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionStructureReport {
    pub d: usize,
    /// Subgroups `H`, `K` of equal order with `H ∩ K = {e}` and
    /// `S = (H ∪ K) \ {e}`.
    pub hk: Option<(Vec<Element>, Vec<Element>)>,
    /// For each `a ∈ S` of order `2d`: is `<a> ⊆ S ∪ {e}`?
    pub order2d_condition: Vec<ElementVerdict>,
    /// For each `a ∈ S` of order `2d`: is there `s ∈ S \ {a, a^-1}` with
    /// `s a s^-1 ∈ S`?
    pub corollary_condition: Vec<ElementVerdict>,
    pub coset_form: Option<CosetForm>,
    /// Maximal cliques of `Cay(G, S)` through `e`.
    pub cliques_through_identity: Vec<Vec<Element>>,
    /// Those cliques that are subgroups.
    pub subgroup_cliques: Vec<Vec<Element>>,
}

impl ConnectionStructureReport {
    pub fn order2d_holds(&self) -> bool {
        self.order2d_condition.iter().all(|v| v.holds)
    }

    pub fn corollary_holds(&self) -> bool {
        self.corollary_condition.iter().all(|v| v.holds)
    }
}

/// Bron–Kerbosch with pivoting over `verts`.
fn maximal_cliques(verts: &[usize], adj: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    fn bk(
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        adj: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = *p
            .iter()
            .chain(&x)
            .max_by_key(|&&u| p.iter().filter(|&&v| adj(u, v)).count())
            .unwrap();
        let mut p = p;
        let mut x = x;
        for v in p.clone() {
            if adj(pivot, v) {
                continue;
            }
            r.push(v);
            let np = p.iter().copied().filter(|&w| adj(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| adj(v, w)).collect();
            bk(r, np, nx, adj, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    bk(&mut Vec::new(), verts.to_vec(), Vec::new(), adj, &mut out);
    out
}

/// Checks the subgroup conditions on `S` for a line graph of the incidence
/// graph of a generalized `d`-gon. Only the maximal cliques through `e` are
/// candidates for `H` and `K`.
pub fn connection_structure(
    group: &FiniteGroup,
    s: &ConnectionSet,
    d: usize,
) -> Result<ConnectionStructureReport> {
    if d < 2 {
        return Err(Error::Precondition(format!("d = {d}, need d >= 2")));
    }
    let adj = |x: usize, y: usize| x != y && s.contains(group.mul(x, group.inv(y)));
    let mut cliques: Vec<Vec<Element>> = maximal_cliques(s.elements(), &adj)
        .into_iter()
        .map(|mut c| {
            c.push(0);
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    let subgroup_cliques: Vec<Vec<Element>> =
        cliques.iter().filter(|c| group.is_subgroup(c)).cloned().collect();

    let mut hk = None;
    'pairs: for (i, h) in subgroup_cliques.iter().enumerate() {
        for k in &subgroup_cliques[i + 1..] {
            let meet = h.iter().filter(|x| k.binary_search(x).is_ok()).count();
            let mut union: Vec<Element> = h.iter().chain(k).copied().filter(|&x| x != 0).collect();
            union.sort_unstable();
            union.dedup();
            if h.len() == k.len() && meet == 1 && union == s.elements() {
                hk = Some((h.clone(), k.clone()));
                break 'pairs;
            }
        }
    }

    let of_order: Vec<Element> = s
        .elements()
        .iter()
        .copied()
        .filter(|&a| group.element_order(a) == 2 * d)
        .collect();
    let order2d_condition = of_order
        .iter()
        .map(|&a| ElementVerdict {
            element: a,
            holds: group.cyclic_subgroup(a).iter().all(|&x| x == 0 || s.contains(x)),
        })
        .collect();
    let corollary_condition = of_order
        .iter()
        .map(|&a| ElementVerdict {
            element: a,
            holds: s.elements().iter().any(|&t| {
                t != a && t != group.inv(a) && s.contains(group.mul(group.mul(t, a), group.inv(t)))
            }),
        })
        .collect();

    let mut coset_form = None;
    'coset: for k in &cliques {
        for &a in s.elements() {
            if k.binary_search(&a).is_ok() {
                continue;
            }
            let mut union: Vec<Element> = k
                .iter()
                .flat_map(|&x| [x, group.mul(x, a)])
                .filter(|&x| x != 0)
                .collect();
            union.sort_unstable();
            union.dedup();
            if union == s.elements() {
                coset_form = Some(CosetForm { k: k.clone(), a });
                break 'coset;
            }
        }
    }

    Ok(ConnectionStructureReport {
        d,
        hk,
        order2d_condition,
        corollary_condition,
        coset_form,
        cliques_through_identity: cliques,
        subgroup_cliques,
    })
}

#[derive(Debug, Clone)]
pub struct LatticeCheck {
    pub graph: Graph,
    pub n: usize,
    pub general_product: bool,
    pub isomorphic_to_lattice: bool,
    /// When the graph is a lattice graph and every order-4 element `a ∈ S`
    /// has `<a> ⊆ S ∪ {e}`: the subgroup pair recovered from `S`.
    pub recovered: Option<(Vec<Element>, Vec<Element>)>,
}

impl LatticeCheck {
    /// A general product always gives a lattice graph.
    pub fn holds(&self) -> bool {
        !self.general_product || self.isomorphic_to_lattice
    }
}

/// `Cay(G, (H ∪ K) \ {e})` compared with `L_2(n)`, `n = |H| = |K|`.
pub fn lattice_check(group: &FiniteGroup, h: &[Element], k: &[Element]) -> Result<LatticeCheck> {
    if h.len() != k.len() {
        return Err(Error::OrderMismatch(h.len(), k.len()));
    }
    let general_product = group.is_general_product(h, k)?;
    let n = h.len();
    let s = ConnectionSet::from_union(group, &[h, k])?;
    let graph = cayley_graph(group, &s);
    let isomorphic_to_lattice =
        graph.n() == n * n && are_isomorphic(&graph, &NamedGraph::Lattice(n).build()?);
    let mut recovered = None;
    if isomorphic_to_lattice && n >= 2 {
        let report = connection_structure(group, &s, 2)?;
        if report.order2d_holds() {
            let (h2, k2) = report.hk.expect("lattice graph with the order-4 condition");
            assert!(group.is_general_product(&h2, &k2)?, "recovered pair is not a general product");
            recovered = Some((h2, k2));
        }
    }
    Ok(LatticeCheck { graph, n, general_product, isomorphic_to_lattice, recovered })
}

/// `|G| / 2` if `S = G \ <a>` for an involution `a`, in which case
/// `Cay(G, S)` is the cocktail party graph `CP(|G| / 2)`.
pub fn cocktail_check(group: &FiniteGroup, s: &ConnectionSet) -> Option<usize> {
    let order = group.order();
    if order < 2 || s.len() != order - 2 {
        return None;
    }
    let a = (1..order).find(|&a| !s.contains(a) && group.element_order(a) == 2)?;
    // the non-neighbours of x are exactly x and ax
    let mut map = vec![usize::MAX; order];
    let mut next = 0;
    for x in 0..order {
        if map[x] == usize::MAX {
            map[x] = next;
            map[group.mul(a, x)] = next + 1;
            next += 2;
        }
    }
    let n = order / 2;
    let cp = NamedGraph::CocktailParty(n).build().expect("n >= 1");
    assert!(
        cayley_graph(group, s).is_isomorphism_to(&cp, &map),
        "coset map is not an isomorphism onto CP({n})"
    );
    Some(n)
}

#[derive(Debug, Clone)]
pub struct GodsilTriangular {
    pub group: FiniteGroup,
    pub connection_set: ConnectionSet,
    pub graph: Graph,
    /// `isomorphism[x]` is the `T(q)` vertex of `x`: the pair `{x^-1(0), x^-1(1)}`.
    pub isomorphism: Vec<usize>,
}

/// The maps `x -> ax + b` (`a` a nonzero square) sending 0 or 1 into
/// `{0, 1}`, as a connection set whose Cayley graph is `T(q)`.
pub fn godsil_triangular(q: usize) -> Result<GodsilTriangular> {
    if q % 4 != 3 || q > 27 {
        return Err(Error::Precondition(format!("q = {q}, need q ≡ 3 (mod 4) and q <= 27")));
    }
    let field = FiniteField::of_order(q as u64)?;
    let group = affine_square(q)?;
    let squares = field.nonzero_squares();
    let (zero, one) = (field.index(field.zero()), field.index(field.one()));
    // images of 0 and 1 under element u
    let ends = |u: usize| {
        let (a, b) = (squares[u / q], field.element(u % q));
        (field.index(b), field.index(field.add(a, b)))
    };
    let in01 = |x: usize| x == zero || x == one;
    let set = (1..group.order()).filter(|&u| {
        let (t0, t1) = ends(u);
        in01(t0) || in01(t1)
    });
    let connection_set = ConnectionSet::new(&group, set)?;
    assert_eq!(connection_set.len(), 2 * (q - 2));
    let graph = cayley_graph(&group, &connection_set);
    let isomorphism: Vec<usize> = (0..group.order())
        .map(|x| {
            let (t0, t1) = ends(group.inv(x));
            crate::graphs::pair_index(q, t0, t1)
        })
        .collect();
    let t = NamedGraph::Triangular(q).build()?;
    assert!(graph.is_isomorphism_to(&t, &isomorphism), "pair map is not an isomorphism onto T({q})");
    Ok(GodsilTriangular { group, connection_set, graph, isomorphism })
}
