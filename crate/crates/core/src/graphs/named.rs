//! Named graph families with fixed, documented vertex orderings.

use std::fmt;
use std::str::FromStr;

use super::{cayley_graph, Graph};
use crate::algebra::{prime_power, FiniteField};
use crate::error::{Error, Result};
use crate::groups::{parse_word_list, ConnectionSet, FiniteGroup, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    /// `K_n`.
    Complete(usize),
    /// `K_{m,n}`: the `m` left vertices first.
    CompleteBipartite(usize, usize),
    /// `C_m`: `i ~ i + 1 mod m`.
    Cycle(usize),
    /// `Q_d` on bit strings read as integers.
    Cube(usize),
    /// `Q_{d-1}` plus the antipodal matching.
    FoldedCube(usize),
    /// `K(n, m)`: `m`-subsets in lexicographic order, adjacent when disjoint.
    Kneser(usize, usize),
    /// `T(n)`: 2-subsets in lexicographic order, adjacent when they meet.
    Triangular(usize),
    /// `L_2(n)`: cell `(i, j)` is vertex `i n + j`; same row or column.
    Lattice(usize),
    /// `CP(n)`: vertices `2t, 2t + 1` form the missing matching.
    CocktailParty(usize),
    Petersen,
    /// Incidence graph of the Fano plane.
    Heawood,
    /// Desarguesian plane of order `q`: points, then lines.
    PgIncidence(usize),
    /// 15 duads of a 6-set, then 15 synthemes.
    TutteCoxeter,
    /// Five pentagons, then five pentagrams.
    HoffmanSingleton,
    /// Seidel switches of `T(8)`, `i` in `1..=3`.
    Chang(usize),
    Shrikhande,
    /// Complement of the folded 5-cube, SRG(16,10,6,6).
    Clebsch,
    /// Complement of the ℤ9 ⋊ ℤ3 construction, SRG(27,16,10,8).
    Schlafli,
    Line(Box<NamedGraph>),
    Complement(Box<NamedGraph>),
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// Index of the pair `{a, b}` among the lexicographically ordered 2-subsets
/// of an `n`-set.
pub(crate) fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    a * (2 * n - a - 1) / 2 + (b - a - 1)
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidGraph(msg.into()))
}

/// Edge sets of `K_8` whose line-graph vertices are switched to obtain the
/// three Chang graphs.
pub fn chang_switching_set(i: usize) -> Result<Vec<(usize, usize)>> {
    Ok(match i {
        // 4 K_2
        1 => vec![(0, 1), (2, 3), (4, 5), (6, 7)],
        // C_3 + C_5
        2 => vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
        // C_8
        3 => (0..8).map(|k| (k, (k + 1) % 8)).collect(),
        _ => return invalid(format!("chang({i}): index must be 1, 2 or 3")),
    })
}

/// `Cay(ℤ4 x ℤ4, {±(0,1), ±(1,0), ±(1,-1)})`.
pub fn shrikhande_construction() -> (FiniteGroup, ConnectionSet) {
    construction("Z4 x Z4", "a, -a, b, -b, a -b, -a b")
}

/// `Cay(ℤ9 ⋊ ℤ3, S)` with `b^-1 a b = a^7`, the complement of the Schläfli
/// graph.
pub fn schlafli_complement_semidirect() -> (FiniteGroup, ConnectionSet) {
    construction(
        "SD(9,3,7)",
        "a, a^8, a^3, a^6, b, b^2, a^7 b, a^5 b^2, a^2 b, a^4 b^2",
    )
}

/// `Cay(HEIS(3), S')`, the complement of the Schläfli graph again.
pub fn schlafli_complement_heisenberg() -> (FiniteGroup, ConnectionSet) {
    construction(
        "HEIS(3)",
        "a, a^2, b, b^2, c, c^2, cba, a^2 b^2 c^2, aba, bab",
    )
}

fn construction(group: &str, words: &str) -> (FiniteGroup, ConnectionSet) {
    let g = GroupSpec::parse(group).and_then(|s| s.build()).expect("fixed group");
    let elems = parse_word_list(words)
        .expect("fixed words")
        .iter()
        .map(|w| g.evaluate(w).expect("fixed words evaluate"))
        .collect::<Vec<_>>();
    let s = ConnectionSet::new(&g, elems).expect("fixed set is a connection set");
    (g, s)
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph> {
        use NamedGraph::*;
        Ok(match *self {
            Complete(n) => Graph::from_fn(n, |_, _| true),
            CompleteBipartite(m, n) => Graph::from_fn(m + n, |u, v| (u < m) != (v < m)),
            Cycle(m) => {
                if m < 3 {
                    return invalid("cycle needs at least 3 vertices");
                }
                Graph::from_edges(m, (0..m).map(|i| (i, (i + 1) % m)))?
            }
            Cube(d) => {
                if d == 0 || d > 12 {
                    return invalid("cube dimension must be in 1..=12");
                }
                Graph::from_fn(1 << d, |u, v| (u ^ v).count_ones() == 1)
            }
            FoldedCube(d) => {
                if !(2..=13).contains(&d) {
                    return invalid("folded cube dimension must be in 2..=13");
                }
                let all = (1usize << (d - 1)) - 1;
                Graph::from_fn(1 << (d - 1), |u, v| (u ^ v).count_ones() == 1 || u ^ v == all)
            }
            Kneser(n, m) => {
                if m == 0 || n < 2 * m + 1 {
                    return invalid(format!("kneser({n},{m}) needs m >= 1 and n >= 2m+1"));
                }
                let sets = subsets(n, m);
                Graph::from_fn(sets.len(), |u, v| sets[u].iter().all(|x| !sets[v].contains(x)))
            }
            Triangular(n) => {
                if n < 2 {
                    return invalid("triangular(n) needs n >= 2");
                }
                let sets = subsets(n, 2);
                Graph::from_fn(sets.len(), |u, v| sets[u].iter().any(|x| sets[v].contains(x)))
            }
            Lattice(n) => {
                if n == 0 {
                    return invalid("lattice(n) needs n >= 1");
                }
                Graph::from_fn(n * n, |u, v| u / n == v / n || u % n == v % n)
            }
            CocktailParty(n) => Graph::from_fn(2 * n, |u, v| u / 2 != v / 2),
            Petersen => Kneser(5, 2).build()?,
            Heawood => PgIncidence(2).build()?,
            PgIncidence(q) => projective_plane_incidence(q)?,
            TutteCoxeter => tutte_coxeter(),
            HoffmanSingleton => hoffman_singleton(),
            Chang(i) => {
                let t8 = Triangular(8).build()?;
                let w: Vec<usize> = chang_switching_set(i)?
                    .into_iter()
                    .map(|(a, b)| pair_index(8, a, b))
                    .collect();
                t8.seidel_switch(&w)
            }
            Shrikhande => {
                let (g, s) = shrikhande_construction();
                cayley_graph(&g, &s)
            }
            Clebsch => FoldedCube(5).build()?.complement(),
            Schlafli => {
                let (g, s) = schlafli_complement_semidirect();
                cayley_graph(&g, &s).complement()
            }
            Line(ref inner) => {
                let g = inner.build()?;
                if g.edge_count() == 0 {
                    return invalid("line graph of an edgeless graph");
                }
                g.line_graph()
            }
            Complement(ref inner) => inner.build()?.complement(),
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut p = NameParser { src: text.as_bytes(), pos: 0 };
        let g = p.graph()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(g)
    }
}

fn projective_plane_incidence(q: usize) -> Result<Graph> {
    if q > 8 || prime_power(q as u64).is_none() {
        return invalid(format!("pg_incidence({q}) needs a prime power q <= 8"));
    }
    let f = FiniteField::of_order(q as u64)?;
    // normalized representatives: first nonzero coordinate equal to 1
    let mut reps: Vec<[usize; 3]> = Vec::new();
    for x in 0..q * q * q {
        let v = [x / (q * q), (x / q) % q, x % q];
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            reps.push(v);
        }
    }
    let n = reps.len();
    debug_assert_eq!(n, q * q + q + 1);
    let dot = |a: &[usize; 3], b: &[usize; 3]| {
        (0..3).fold(f.zero(), |acc, i| f.add(acc, f.mul(f.element(a[i]), f.element(b[i]))))
    };
    let mut edges = Vec::new();
    for (i, p) in reps.iter().enumerate() {
        for (j, l) in reps.iter().enumerate() {
            if dot(p, l) == f.zero() {
                edges.push((i, n + j));
            }
        }
    }
    let labels = reps
        .iter()
        .map(|v| format!("P{v:?}"))
        .chain(reps.iter().map(|v| format!("L{v:?}")))
        .collect();
    Ok(Graph::from_edges(2 * n, edges)?.with_labels(labels))
}

fn tutte_coxeter() -> Graph {
    let duads = subsets(6, 2);
    let mut synthemes: Vec<[usize; 3]> = Vec::new();
    for a in 0..duads.len() {
        for b in a + 1..duads.len() {
            for c in b + 1..duads.len() {
                let mut pts: Vec<usize> = [a, b, c].iter().flat_map(|&d| duads[d].clone()).collect();
                pts.sort_unstable();
                pts.dedup();
                if pts.len() == 6 {
                    synthemes.push([a, b, c]);
                }
            }
        }
    }
    let edges = synthemes
        .iter()
        .enumerate()
        .flat_map(|(s, ds)| ds.iter().map(move |&d| (d, 15 + s)));
    Graph::from_edges(30, edges).expect("valid incidence")
}

fn hoffman_singleton() -> Graph {
    // P_h vertex j -> 5h + j, Q_i vertex j -> 25 + 5i + j
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((5 * h + j, 5 * h + (j + 1) % 5));
            edges.push((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5));
        }
    }
    for h in 0..5 {
        for j in 0..5 {
            for i in 0..5 {
                edges.push((5 * h + j, 25 + 5 * i + (h * i + j) % 5));
            }
        }
    }
    Graph::from_edges(50, edges).expect("valid construction")
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedGraph::*;
        match self {
            Complete(n) => write!(f, "complete({n})"),
            CompleteBipartite(m, n) => write!(f, "complete_bipartite({m},{n})"),
            Cycle(m) => write!(f, "cycle({m})"),
            Cube(d) => write!(f, "cube({d})"),
            FoldedCube(d) => write!(f, "folded_cube({d})"),
            Kneser(n, m) => write!(f, "kneser({n},{m})"),
            Triangular(n) => write!(f, "triangular({n})"),
            Lattice(n) => write!(f, "lattice({n})"),
            CocktailParty(n) => write!(f, "cocktail_party({n})"),
            Petersen => write!(f, "petersen"),
            Heawood => write!(f, "heawood"),
            PgIncidence(q) => write!(f, "pg_incidence({q})"),
            TutteCoxeter => write!(f, "tutte_coxeter"),
            HoffmanSingleton => write!(f, "hoffman_singleton"),
            Chang(i) => write!(f, "chang({i})"),
            Shrikhande => write!(f, "shrikhande"),
            Clebsch => write!(f, "clebsch"),
            Schlafli => write!(f, "schlafli"),
            Line(g) => write!(f, "line({g})"),
            Complement(g) => write!(f, "complement({g})"),
        }
    }
}

struct NameParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl NameParser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || *c == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a graph name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "expected a number".into() })
    }

    fn numbers(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        if self.eat(b'(') {
            out.push(self.number()?);
            while self.eat(b',') {
                out.push(self.number()?);
            }
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
        }
        Ok(out)
    }

    fn graph(&mut self) -> Result<NamedGraph> {
        use NamedGraph::*;
        let start = self.pos;
        let name = self.ident()?;
        if name == "line" || name == "complement" {
            if !self.eat(b'(') {
                return Err(self.error("expected `(`"));
            }
            let inner = Box::new(self.graph()?);
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(if name == "line" { Line(inner) } else { Complement(inner) });
        }
        if let Some(base) = name.strip_suffix("_line") {
            let mut sub = NameParser { src: base.as_bytes(), pos: 0 };
            let inner = sub.graph().map_err(|_| Error::Parse { pos: start, msg: format!("unknown graph `{name}`") })?;
            if sub.pos == base.len() {
                return Ok(Line(Box::new(inner)));
            }
        }
        let args = self.numbers()?;
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(Error::Parse { pos: start, msg: format!("`{name}` takes {k} argument(s)") })
            }
        };
        Ok(match name.as_str() {
            "complete" => { arity(1)?; Complete(args[0]) }
            "complete_bipartite" => { arity(2)?; CompleteBipartite(args[0], args[1]) }
            "cycle" => { arity(1)?; Cycle(args[0]) }
            "cube" => { arity(1)?; Cube(args[0]) }
            "folded_cube" => { arity(1)?; FoldedCube(args[0]) }
            "kneser" => { arity(2)?; Kneser(args[0], args[1]) }
            "triangular" => { arity(1)?; Triangular(args[0]) }
            "lattice" => { arity(1)?; Lattice(args[0]) }
            "cocktail_party" => { arity(1)?; CocktailParty(args[0]) }
            "pg_incidence" => { arity(1)?; PgIncidence(args[0]) }
            "chang" => { arity(1)?; Chang(args[0]) }
            "petersen" => { arity(0)?; Petersen }
            "heawood" => { arity(0)?; Heawood }
            "tutte_coxeter" => { arity(0)?; TutteCoxeter }
            "hoffman_singleton" => { arity(0)?; HoffmanSingleton }
            "shrikhande" => { arity(0)?; Shrikhande }
            "clebsch" => { arity(0)?; Clebsch }
            "schlafli" => { arity(0)?; Schlafli }
            _ => return Err(Error::Parse { pos: start, msg: format!("unknown graph `{name}`") }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_matches_enumeration() {
        for (i, s) in subsets(8, 2).iter().enumerate() {
            assert_eq!(pair_index(8, s[0], s[1]), i);
            assert_eq!(pair_index(8, s[1], s[0]), i);
        }
    }

    #[test]
    fn sizes() {
        let cases = [
            (NamedGraph::Petersen, 10, 15),
            (NamedGraph::Heawood, 14, 21),
            (NamedGraph::TutteCoxeter, 30, 45),
            (NamedGraph::HoffmanSingleton, 50, 175),
            (NamedGraph::PgIncidence(8), 146, 657),
            (NamedGraph::FoldedCube(5), 16, 40),
            (NamedGraph::Triangular(8), 28, 168),
            (NamedGraph::CocktailParty(3), 6, 12),
            (NamedGraph::Lattice(4), 16, 48),
        ];
        for (g, n, m) in cases {
            let built = g.build().unwrap();
            assert_eq!((built.n(), built.edge_count()), (n, m), "{g}");
        }
    }

    #[test]
    fn chang_graphs_stay_regular() {
        for i in 1..=3 {
            let g = NamedGraph::Chang(i).build().unwrap();
            assert_eq!(g.regular_degree(), Some(12), "chang({i})");
        }
        assert!(NamedGraph::Chang(4).build().is_err());
    }

    #[test]
    fn invalid_parameters() {
        assert!(NamedGraph::Kneser(4, 2).build().is_err());
        assert!(NamedGraph::PgIncidence(6).build().is_err());
        assert!(NamedGraph::Cycle(2).build().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "kneser(5,2)",
            "line(heawood)",
            "complement(folded_cube(5))",
            "chang(2)",
            "complete_bipartite(3,3)",
            "pg_incidence(8)",
        ] {
            assert_eq!(NamedGraph::parse(text).unwrap().to_string(), text);
        }
        assert_eq!(
            NamedGraph::parse("heawood_line").unwrap(),
            NamedGraph::Line(Box::new(NamedGraph::Heawood))
        );
        assert!(NamedGraph::parse("kneser(5)").is_err());
        assert!(NamedGraph::parse("moebius").is_err());
    }
}
