//! Finite groups given by complete multiplication tables.
//!
//! Every group has its identity at index 0. Constructors for the families
//! used throughout the crate live in [`build`]; the text grammar for group
//! specifications is in [`spec`], connection-set words in [`word`].

mod build;
mod spec;
mod subgroups;
mod word;

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub use build::{
    affine_square, cyclic, direct, elementary_abelian, heisenberg, semidirect,
};
pub use spec::GroupSpec;
pub use subgroups::SubgroupSearch;
pub use word::{parse_word_list, Word};

/// Index of a group element in `0..order`.
pub type Element = usize;

/// Above this order associativity is checked on random triples only.
const EXHAUSTIVE_ASSOCIATIVITY_LIMIT: usize = 300;
const RANDOM_ASSOCIATIVITY_TRIPLES: usize = 100_000;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<(String, Element)>,
    descriptor: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("descriptor", &self.descriptor)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a row-major `order x order` table with identity at
    /// index 0. Checks the identity, the Latin-square property and
    /// associativity before returning.
    pub fn from_table(
        order: usize,
        table: Vec<u32>,
        generators: Vec<(String, Element)>,
        descriptor: impl Into<String>,
    ) -> Result<Self> {
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidGroup("table has the wrong shape".into()));
        }
        let mut inverse = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b as u32;
                }
            }
        }
        if inverse.contains(&u32::MAX) {
            return Err(Error::InvalidGroup("some element has no inverse".into()));
        }
        let group = Self {
            order,
            table,
            inverse,
            generators,
            descriptor: descriptor.into(),
        };
        group.check_axioms()?;
        Ok(group)
    }

    pub(crate) fn from_fn(
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        generators: Vec<(String, Element)>,
        descriptor: impl Into<String>,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u32);
            }
        }
        Self::from_table(order, table, generators, descriptor)
    }

    /// Latin square, two-sided identity and associativity (exhaustive for
    /// small orders, sampled otherwise).
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        let bad = |msg: &str| Err(Error::InvalidGroup(format!("{}: {msg}", self.descriptor)));
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return bad("element 0 is not the identity");
            }
            if self.mul(self.inv(a), a) != 0 {
                return bad("left inverse mismatch");
            }
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(a, b);
                if c >= n || seen[c] == a {
                    return bad("rows are not permutations");
                }
                seen[c] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let c = self.mul(a, b);
                if seen[c] == b {
                    return bad("columns are not permutations");
                }
                seen[c] = b;
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return bad("not associative");
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            for _ in 0..RANDOM_ASSOCIATIVITY_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return bad("not associative");
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn generators(&self) -> &[(String, Element)] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<Element> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, g)| g)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a] as usize
    }

    /// `s a s^-1`.
    pub fn conj(&self, s: Element, a: Element) -> Element {
        self.mul(self.mul(s, a), self.inv(s))
    }

    pub fn pow(&self, a: Element, exp: i64) -> Element {
        let base = if exp < 0 { self.inv(a) } else { a };
        let mut e = exp.unsigned_abs() % self.element_order(a) as u64;
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// Least `k > 0` with `a^k = e`.
    pub fn element_order(&self, a: Element) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `<a>` as the list `e, a, a^2, ...`.
    pub fn cyclic_subgroup(&self, a: Element) -> Vec<Element> {
        let mut out = vec![0];
        let mut x = a;
        while x != 0 {
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted multiset of element orders; an isomorphism invariant.
    pub fn order_statistics(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Evaluates a word left to right.
    pub fn evaluate(&self, word: &Word) -> Result<Element> {
        word.factors().iter().try_fold(0, |acc, (name, exp)| {
            let g = self
                .generator(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            Ok(self.mul(acc, self.pow(g, *exp)))
        })
    }

    /// Least subgroup containing `seed`, sorted.
    pub fn subgroup_closure(&self, seed: &[Element]) -> Vec<Element> {
        let gens: Vec<Element> = seed.iter().copied().filter(|&g| g != 0).collect();
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut queue = vec![0];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| member[x]).collect()
    }

    /// True iff `set` contains the identity and is closed under products.
    pub fn is_subgroup(&self, set: &[Element]) -> bool {
        let mut member = vec![false; self.order];
        for &x in set {
            member[x] = true;
        }
        member[0] && set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// `G = HK` with `H ∩ K = {e}`. Checks both the order identity and that
    /// the product map `H x K -> G` is a bijection.
    pub fn is_general_product(&self, h: &[Element], k: &[Element]) -> Result<bool> {
        if !self.is_subgroup(h) || !self.is_subgroup(k) {
            return Err(Error::NotASubgroup);
        }
        let hs: HashSet<Element> = h.iter().copied().collect();
        let trivial_meet = k.iter().all(|x| *x == 0 || !hs.contains(x));
        let by_order = hs.len() * k.len() == self.order && trivial_meet;
        let mut hit = vec![false; self.order];
        let mut distinct = 0;
        for &a in h {
            for &b in k {
                let c = self.mul(a, b);
                if !hit[c] {
                    hit[c] = true;
                    distinct += 1;
                }
            }
        }
        let bijective = distinct == self.order && h.len() * k.len() == self.order;
        debug_assert_eq!(by_order, bijective);
        Ok(by_order && bijective)
    }

    /// Hex SHA-256 of the table as little-endian `u32`s.
    pub fn table_digest(&self) -> String {
        let mut hasher = Sha256::new();
        for &x in &self.table {
            hasher.update(x.to_le_bytes());
        }
        hex::encode(hasher.finalize())
    }
}

/// Inverse-closed subset of a group avoiding the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectionSet {
    group_order: usize,
    elements: Vec<Element>,
    #[serde(skip)]
    member: Vec<bool>,
}

impl ConnectionSet {
    pub fn new(group: &FiniteGroup, elements: impl IntoIterator<Item = Element>) -> Result<Self> {
        let mut member = vec![false; group.order()];
        for x in elements {
            if x >= group.order() {
                return Err(Error::InvalidConnectionSet(format!("{x} is not a group element")));
            }
            member[x] = true;
        }
        if member[0] {
            return Err(Error::InvalidConnectionSet("contains the identity".into()));
        }
        if let Some(x) = (0..group.order()).find(|&x| member[x] && !member[group.inv(x)]) {
            return Err(Error::InvalidConnectionSet(format!(
                "not inverse-closed: element {x} present but {} missing",
                group.inv(x)
            )));
        }
        let elements = (0..group.order()).filter(|&x| member[x]).collect();
        Ok(Self {
            group_order: group.order(),
            elements,
            member,
        })
    }

    /// Adds inverses, then validates.
    pub fn inverse_closure(
        group: &FiniteGroup,
        elements: impl IntoIterator<Item = Element>,
    ) -> Result<Self> {
        let base: Vec<Element> = elements.into_iter().collect();
        let all = base.iter().flat_map(|&x| [x, group.inv(x)]).collect::<Vec<_>>();
        Self::new(group, all)
    }

    /// `(H ∪ K) \ {e}`, or more generally the union of several subsets.
    pub fn from_union(group: &FiniteGroup, parts: &[&[Element]]) -> Result<Self> {
        Self::new(
            group,
            parts.iter().flat_map(|p| p.iter().copied()).filter(|&x| x != 0),
        )
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }
}
