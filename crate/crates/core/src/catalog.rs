//! Registry of the graphs, groups and claims that the verifier replays,
//! each with typed expectations and a provenance tag.

use std::cell::OnceCell;
use std::f64::consts::SQRT_2;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::prime_power;
use crate::analysis::{hk_generation_scan, line_graph_abelian_obstruction};
use crate::error::{Error, Result};
use crate::graphs::{cayley_graph, Graph, NamedGraph};
use crate::groups::{cyclic, parse_word_list, ConnectionSet, Element, FiniteGroup, GroupSpec};
use crate::spectral::{
    ia_eigenvalues, intersection_array, report_value, spectrum, srg_parameters, Spectrum, SrgParams,
};
use crate::structure::{
    cocktail_check, connection_structure, godsil_triangular, krausz, lattice_check, KrauszDecomposition,
};
use crate::symmetry::{
    are_isomorphic_until, automorphism_search_until, regular_subgroup_search, AutomorphismSearch,
    RegularSearchOutcome,
};

const SPECTRUM_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    /// Stated in the source literature.
    Paper,
    /// Computed independently of the code under test.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Timeout,
    Error,
    /// Optional expectation not run.
    Skipped,
    /// A note, recorded rather than computed.
    Recorded,
}

impl Verdict {
    pub fn is_ok(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::Skipped | Verdict::Recorded)
    }
}

/// How a case builds its graph.
#[derive(Debug, Clone)]
pub enum Recipe {
    Named(NamedGraph),
    /// `Cay(group, set)` with `set` in the word grammar.
    Cayley { group: &'static str, set: &'static str },
    /// `Cay(group, (<h> ∪ <k>) \ {e})`.
    Union { group: &'static str, h: &'static str, k: &'static str },
    /// `Cay(ℤ_2n, ℤ_2n \ <n>)`.
    Cocktail(usize),
    /// Affine maps `x -> ax + b` over `GF(q)` with `a` a nonzero square.
    Godsil(usize),
    /// Nothing is built.
    Note,
}

impl Recipe {
    pub fn describe(&self) -> String {
        match self {
            Recipe::Named(n) => n.to_string(),
            Recipe::Cayley { group, set } => format!("Cay({group}, {{{set}}})"),
            Recipe::Union { group, h, k } => format!("Cay({group}, (<{h}> ∪ <{k}>) \\ {{e}})"),
            Recipe::Cocktail(n) => format!("Cay(Z{}, Z{} \\ <a^{n}>)", 2 * n, 2 * n),
            Recipe::Godsil(q) => format!("Cay(AFFSQ({q}), maps sending 0 or 1 into {{0, 1}})"),
            Recipe::Note => "none".into(),
        }
    }
}

#[derive(Clone)]
struct Built {
    graph: Graph,
    construction: Option<(FiniteGroup, ConnectionSet)>,
    pair: Option<(Vec<Element>, Vec<Element>)>,
}

fn parse_group(spec: &str) -> Result<FiniteGroup> {
    GroupSpec::parse(spec)?.build()
}

fn word_element(group: &FiniteGroup, word: &str) -> Result<Element> {
    let words = parse_word_list(word)?;
    match words.as_slice() {
        [w] => group.evaluate(w),
        _ => Err(Error::Precondition(format!("expected a single word, got `{word}`"))),
    }
}

fn build(recipe: &Recipe) -> Result<Option<Built>> {
    let cayley = |group: FiniteGroup, set: ConnectionSet, pair| Built {
        graph: cayley_graph(&group, &set),
        construction: Some((group, set)),
        pair,
    };
    Ok(Some(match recipe {
        Recipe::Note => return Ok(None),
        Recipe::Named(n) => Built { graph: n.build()?, construction: None, pair: None },
        Recipe::Cayley { group, set } => {
            let g = parse_group(group)?;
            let elems = parse_word_list(set)?
                .iter()
                .map(|w| g.evaluate(w))
                .collect::<Result<Vec<_>>>()?;
            let s = ConnectionSet::new(&g, elems)?;
            cayley(g, s, None)
        }
        Recipe::Union { group, h, k } => {
            let g = parse_group(group)?;
            let h = g.cyclic_subgroup(word_element(&g, h)?);
            let k = g.cyclic_subgroup(word_element(&g, k)?);
            let s = ConnectionSet::from_union(&g, &[&h, &k])?;
            cayley(g, s, Some((h, k)))
        }
        Recipe::Cocktail(n) => {
            let g = cyclic(2 * n)?;
            let s = ConnectionSet::new(&g, (1..2 * n).filter(|&x| x != *n))?;
            cayley(g, s, None)
        }
        Recipe::Godsil(q) => {
            let t = godsil_triangular(*q)?;
            Built { graph: t.graph, construction: Some((t.group, t.connection_set)), pair: None }
        }
    }))
}

/// Expected structure of the maximal cliques through `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueStructure {
    pub d: usize,
    pub cliques: usize,
    pub subgroup_cliques: usize,
    /// `S = (H ∪ K) \ {e}` for subgroups `H`, `K`.
    pub hk: bool,
    /// `S = (K ∪ Ka) \ {e}` for a maximal clique `K`.
    pub coset_form: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootExpectation {
    pub vertices: usize,
    pub edges: usize,
    pub degree: usize,
    pub girth: usize,
    pub bipartite: bool,
    /// Named graph the root must be isomorphic to.
    pub isomorphic_to: Option<String>,
}

#[derive(Debug, Clone)]
pub enum Check {
    Vertices(usize),
    Edges(usize),
    Srg(SrgParams),
    ComplementSrg(SrgParams),
    IntersectionArray(Vec<usize>, Vec<usize>),
    /// Distinct eigenvalues with multiplicities, descending.
    Spectrum(Vec<(f64, usize)>),
    LeastEigenvalue(f64),
    /// Quotient-matrix eigenvalues are exactly the distinct eigenvalues.
    IaEigenvaluesInSpectrum,
    AutOrder(u64),
    VertexTransitive(bool),
    /// Whether `|V|` divides `|Aut|`, a necessary condition for transitivity.
    VertexCountDividesAut(bool),
    Isomorphic(NamedGraph, bool),
    /// Outcome of the exhaustive regular-subgroup search.
    Cayley(bool),
    /// `T(n)` is Cayley iff `n ∈ {2, 3, 4}` or `n ≡ 3 (mod 4)` is a prime power.
    TriangularCriterion(usize, bool),
    LineGraph(bool),
    KrauszRoot(RootExpectation),
    /// The abelian-order argument applied to the Krausz root.
    AbelianObstruction,
    ConnectionStructure(CliqueStructure),
    HkScanImpossible(u64, u64),
    /// General product of the recipe's pair, lattice graph, and the pair
    /// recovered from `S` alone.
    LatticeTheorem,
    /// `S = G \ <a>` for an involution `a`, giving `CP(n)`.
    CocktailForward(usize),
    /// A regular subgroup of `Aut(CP(n))` always has this form.
    CocktailConverse(usize),
    Note(&'static str),
}

impl Check {
    pub fn kind(&self) -> &'static str {
        match self {
            Check::Vertices(_) => "vertices",
            Check::Edges(_) => "edges",
            Check::Srg(_) => "srg_parameters",
            Check::ComplementSrg(_) => "complement_srg_parameters",
            Check::IntersectionArray(..) => "intersection_array",
            Check::Spectrum(_) => "spectrum",
            Check::LeastEigenvalue(_) => "least_eigenvalue",
            Check::IaEigenvaluesInSpectrum => "ia_eigenvalues_in_spectrum",
            Check::AutOrder(_) => "aut_order",
            Check::VertexTransitive(_) => "vertex_transitive",
            Check::VertexCountDividesAut(_) => "vertex_count_divides_aut_order",
            Check::Isomorphic(..) => "isomorphic",
            Check::Cayley(_) => "cayley_status",
            Check::TriangularCriterion(..) => "triangular_criterion",
            Check::LineGraph(_) => "line_graph",
            Check::KrauszRoot(_) => "krausz_root",
            Check::AbelianObstruction => "abelian_obstruction",
            Check::ConnectionStructure(_) => "connection_structure",
            Check::HkScanImpossible(..) => "hk_generation_scan",
            Check::LatticeTheorem => "lattice_theorem",
            Check::CocktailForward(_) => "cocktail_forward",
            Check::CocktailConverse(_) => "cocktail_converse",
            Check::Note(_) => "note",
        }
    }

    pub fn expected(&self) -> Value {
        match self {
            Check::Vertices(n) | Check::Edges(n) => json!(n),
            Check::Srg(p) | Check::ComplementSrg(p) => json!(p),
            Check::IntersectionArray(b, c) => json!({"b": b, "c": c}),
            Check::Spectrum(s) => json!(s.iter().map(|&(v, m)| json!([report_value(v), m])).collect::<Vec<_>>()),
            Check::LeastEigenvalue(x) => json!(x),
            Check::IaEigenvaluesInSpectrum => json!({"contained": true}),
            Check::AutOrder(n) => json!(n),
            Check::VertexTransitive(b) | Check::VertexCountDividesAut(b) | Check::LineGraph(b) => json!(b),
            Check::Isomorphic(target, b) => json!({"target": target.to_string(), "isomorphic": b}),
            Check::Cayley(b) => json!(if *b { "cayley" } else { "not_cayley" }),
            Check::TriangularCriterion(n, b) => json!({"n": n, "cayley": b}),
            Check::KrauszRoot(r) => json!(r),
            Check::AbelianObstruction => json!({"status": "not_cayley"}),
            Check::ConnectionStructure(c) => json!(c),
            Check::HkScanImpossible(n, k) => json!({"n": n, "k": k, "status": "impossible"}),
            Check::LatticeTheorem => {
                json!({"general_product": true, "isomorphic_to_lattice": true, "recovered": true})
            }
            Check::CocktailForward(n) | Check::CocktailConverse(n) => json!({"cocktail_party": n}),
            Check::Note(text) => json!(text),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Expectation {
    pub check: Check,
    pub provenance: Provenance,
    /// Run only when extended checks are requested.
    pub optional: bool,
}

#[derive(Debug, Clone)]
pub struct CaseSpec {
    pub name: String,
    pub recipe: Recipe,
    pub expectations: Vec<Expectation>,
    pub time_budget: Duration,
}

impl CaseSpec {
    /// The case's graph, or `None` for notes.
    pub fn graph(&self) -> Result<Option<Graph>> {
        Ok(build(&self.recipe)?.map(|b| b.graph))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExpectationReport {
    pub kind: String,
    pub expected: Value,
    pub observed: Value,
    pub provenance: Provenance,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: String,
    pub construction: String,
    pub expectations: Vec<ExpectationReport>,
    pub runtime_ms: u64,
    pub pass: bool,
}

impl CaseReport {
    pub fn timed_out(&self) -> bool {
        self.expectations.iter().any(|e| e.verdict == Verdict::Timeout)
    }

    /// JSON with sorted keys.
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    /// Also run optional expectations.
    pub extended: bool,
    /// Report wall-clock time; when false `runtime_ms` is 0 and reports are
    /// byte-identical across runs.
    pub record_runtime: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { extended: false, record_runtime: true }
    }
}

enum Halt {
    Timeout(String),
    Error(String),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Error(e.to_string())
    }
}

struct Ctx {
    built: Built,
    deadline: Instant,
    aut: OnceCell<Option<AutomorphismSearch>>,
    spectrum: OnceCell<Spectrum>,
    krausz: OnceCell<Result<Option<KrauszDecomposition>>>,
}

impl Ctx {
    fn g(&self) -> &Graph {
        &self.built.graph
    }

    fn aut(&self) -> std::result::Result<&AutomorphismSearch, Halt> {
        self.aut
            .get_or_init(|| automorphism_search_until(self.g(), Some(self.deadline)))
            .as_ref()
            .ok_or_else(|| Halt::Timeout("automorphism search exceeded the case budget".into()))
    }

    fn aut_order(&self) -> std::result::Result<u64, Halt> {
        self.aut()?.group.order_u64().ok_or_else(|| Halt::Error("|Aut| exceeds u64".into()))
    }

    fn spectrum(&self) -> &Spectrum {
        self.spectrum.get_or_init(|| spectrum(self.g()))
    }

    fn krausz(&self) -> std::result::Result<Option<&KrauszDecomposition>, Halt> {
        match self.krausz.get_or_init(|| krausz(self.g())) {
            Ok(d) => Ok(d.as_ref()),
            Err(e) => Err(Halt::Error(e.to_string())),
        }
    }

    fn construction(&self) -> std::result::Result<&(FiniteGroup, ConnectionSet), Halt> {
        self.built
            .construction
            .as_ref()
            .ok_or_else(|| Halt::Error("recipe is not a Cayley construction".into()))
    }

    fn remaining(&self) -> Duration {
        self.deadline.saturating_duration_since(Instant::now())
    }

    fn isomorphic(&self, a: &Graph, b: &Graph) -> std::result::Result<bool, Halt> {
        are_isomorphic_until(a, b, self.deadline)
            .ok_or_else(|| Halt::Timeout("isomorphism test exceeded the case budget".into()))
    }
}

/// Every key of `expected` is present in `observed` with the same value.
fn subset_match(expected: &Value, observed: &Value) -> bool {
    match (expected, observed) {
        (Value::Object(e), Value::Object(o)) => e.iter().all(|(k, v)| o.get(k) == Some(v)),
        _ => expected == observed,
    }
}

fn spectra_match(expected: &[(f64, usize)], observed: &Spectrum) -> bool {
    expected.len() == observed.eigenvalues.len()
        && expected
            .iter()
            .zip(&observed.eigenvalues)
            .all(|(&(x, m), &(y, k))| (x - y).abs() < SPECTRUM_TOL && m == k)
}

fn cayley_status(g: &Graph, ctx: &Ctx) -> std::result::Result<(Value, Option<(FiniteGroup, ConnectionSet)>), Halt> {
    let aut = automorphism_search_until(g, Some(ctx.deadline))
        .ok_or_else(|| Halt::Timeout("automorphism search exceeded the case budget".into()))?;
    let search = regular_subgroup_search(g, &aut.group, ctx.remaining());
    match search.outcome {
        RegularSearchOutcome::Found(cert) => {
            if !cert.verify(g) {
                return Err(Halt::Error("certificate does not verify".into()));
            }
            Ok((json!("cayley"), Some((cert.group, cert.connection_set))))
        }
        RegularSearchOutcome::None => Ok((json!("not_cayley"), None)),
        RegularSearchOutcome::Timeout(reason) => Err(Halt::Timeout(reason)),
    }
}

fn evaluate(check: &Check, ctx: &Ctx) -> std::result::Result<(Value, bool), Halt> {
    let expected = check.expected();
    let same = |observed: Value| {
        let ok = subset_match(&expected, &observed);
        (observed, ok)
    };
    let g = ctx.g();
    Ok(match check {
        Check::Vertices(_) => same(json!(g.n())),
        Check::Edges(_) => same(json!(g.edge_count())),
        Check::Srg(_) => same(json!(srg_parameters(g))),
        Check::ComplementSrg(_) => same(json!(srg_parameters(&g.complement()))),
        Check::IntersectionArray(..) => {
            let arr = intersection_array(g)?;
            same(arr.map_or(Value::Null, |a| json!({"b": a.b, "c": a.c})))
        }
        Check::Spectrum(exp) => {
            let s = ctx.spectrum();
            (json!(s), spectra_match(exp, s))
        }
        Check::LeastEigenvalue(x) => {
            let min = ctx.spectrum().min();
            (json!(report_value(min)), (min - x).abs() < SPECTRUM_TOL)
        }
        Check::IaEigenvaluesInSpectrum => {
            let Some(arr) = intersection_array(g)? else {
                return Err(Halt::Error("graph is not distance-regular".into()));
            };
            let ev = ia_eigenvalues(&arr);
            let s = ctx.spectrum();
            let contained = ev.len() == s.eigenvalues.len()
                && ev.iter().all(|&x| s.contains(x, SPECTRUM_TOL));
            let shown: Vec<f64> = ev.iter().map(|&x| report_value(x)).collect();
            same(json!({"contained": contained, "ia_eigenvalues": shown}))
        }
        Check::AutOrder(_) => same(json!(ctx.aut_order()?)),
        Check::VertexTransitive(_) => same(json!(ctx.aut()?.group.is_transitive())),
        Check::VertexCountDividesAut(_) => same(json!(ctx.aut_order()? % g.n() as u64 == 0)),
        Check::Isomorphic(target, _) => {
            let other = target.build()?;
            same(json!({"target": target.to_string(), "isomorphic": ctx.isomorphic(g, &other)?}))
        }
        Check::Cayley(_) => same(cayley_status(g, ctx)?.0),
        Check::TriangularCriterion(n, _) => {
            let cayley = (2..=4).contains(n) || (n % 4 == 3 && prime_power(*n as u64).is_some());
            same(json!({"n": n, "cayley": cayley}))
        }
        Check::LineGraph(_) => same(json!(ctx.krausz()?.is_some())),
        Check::KrauszRoot(exp) => {
            let Some(d) = ctx.krausz()? else {
                return Ok((json!("not a line graph"), false));
            };
            if !d.verify(g) {
                return Err(Halt::Error("Krausz decomposition failed to verify".into()));
            }
            let root = &d.root;
            let isomorphic_to = match &exp.isomorphic_to {
                None => None,
                Some(name) => {
                    let target = NamedGraph::parse(name)?.build()?;
                    Some(if ctx.isomorphic(root, &target)? { name.clone() } else { format!("not {name}") })
                }
            };
            let observed = RootExpectation {
                vertices: root.n(),
                edges: root.edge_count(),
                degree: root.regular_degree().unwrap_or(0),
                girth: root.girth().finite().unwrap_or(0),
                bipartite: d.bipartite,
                isomorphic_to,
            };
            let ok = observed == *exp;
            (json!(observed), ok)
        }
        Check::AbelianObstruction => {
            let Some(d) = ctx.krausz()? else {
                return Err(Halt::Error("not a line graph".into()));
            };
            same(json!(line_graph_abelian_obstruction(&d.root)?))
        }
        Check::ConnectionStructure(exp) => {
            let (group, set) = ctx.construction()?;
            let r = connection_structure(group, set, exp.d)?;
            let observed = CliqueStructure {
                d: exp.d,
                cliques: r.cliques_through_identity.len(),
                subgroup_cliques: r.subgroup_cliques.len(),
                hk: r.hk.is_some(),
                coset_form: r.coset_form.is_some(),
            };
            let mut value = json!(observed);
            value["witness"] = json!({"hk": r.hk, "coset_form": r.coset_form});
            (value, observed == *exp)
        }
        Check::HkScanImpossible(n, k) => {
            let mut value = json!(hk_generation_scan(*n, *k)?);
            value["n"] = json!(n);
            value["k"] = json!(k);
            same(value)
        }
        Check::LatticeTheorem => {
            let (group, _) = ctx.construction()?;
            let Some((h, k)) = &ctx.built.pair else {
                return Err(Halt::Error("recipe has no subgroup pair".into()));
            };
            let l = lattice_check(group, h, k)?;
            same(json!({
                "general_product": l.general_product,
                "isomorphic_to_lattice": l.isomorphic_to_lattice,
                "recovered": l.recovered.is_some(),
            }))
        }
        Check::CocktailForward(_) => {
            let (group, set) = ctx.construction()?;
            same(json!({"cocktail_party": cocktail_check(group, set)}))
        }
        Check::CocktailConverse(n) => {
            let cp = NamedGraph::CocktailParty(*n).build()?;
            let (status, cert) = cayley_status(&cp, ctx)?;
            let form = cert.and_then(|(group, set)| cocktail_check(&group, &set));
            same(json!({"cayley_status": status, "cocktail_party": form}))
        }
        Check::Note(text) => (json!(text), true),
    })
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

/// Runs one case; expectation failures, errors and panics are reported, not
/// propagated.
pub fn run_spec(case: &CaseSpec, opts: &RunOptions) -> CaseReport {
    let start = Instant::now();
    let built = catch_unwind(AssertUnwindSafe(|| build(&case.recipe)));
    let built = match built {
        Ok(Ok(b)) => Ok(b),
        Ok(Err(e)) => Err(e.to_string()),
        Err(p) => Err(panic_message(p)),
    };
    let mut ctx = None;
    let mut expectations = Vec::with_capacity(case.expectations.len());
    for exp in &case.expectations {
        let (observed, verdict) = if exp.optional && !opts.extended {
            (Value::Null, Verdict::Skipped)
        } else if let Check::Note(text) = exp.check {
            (json!(text), Verdict::Recorded)
        } else {
            match &built {
                Err(msg) => (json!(format!("construction failed: {msg}")), Verdict::Error),
                Ok(None) => (json!("nothing to check"), Verdict::Error),
                Ok(Some(_)) => {
                    let ctx = ctx.get_or_insert_with(|| Ctx {
                        built: built.clone().unwrap().unwrap(),
                        deadline: start + case.time_budget,
                        aut: OnceCell::new(),
                        spectrum: OnceCell::new(),
                        krausz: OnceCell::new(),
                    });
                    match catch_unwind(AssertUnwindSafe(|| evaluate(&exp.check, ctx))) {
                        Ok(Ok((v, true))) => (v, Verdict::Pass),
                        Ok(Ok((v, false))) => (v, Verdict::Fail),
                        Ok(Err(Halt::Timeout(msg))) => (json!(msg), Verdict::Timeout),
                        Ok(Err(Halt::Error(msg))) => (json!(msg), Verdict::Error),
                        Err(p) => (json!(panic_message(p)), Verdict::Error),
                    }
                }
            }
        };
        expectations.push(ExpectationReport {
            kind: exp.check.kind().into(),
            expected: exp.check.expected(),
            observed,
            provenance: exp.provenance,
            verdict,
        });
    }
    let pass = expectations.iter().all(|e| e.verdict.is_ok());
    CaseReport {
        case: case.name.clone(),
        construction: case.recipe.describe(),
        expectations,
        runtime_ms: if opts.record_runtime { start.elapsed().as_millis() as u64 } else { 0 },
        pass,
    }
}

/// Runs a registered case by name.
pub fn run_case(name: &str, opts: &RunOptions) -> Result<CaseReport> {
    let case = catalog_cases()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnregisteredCase(name.into()))?;
    Ok(run_spec(&case, opts))
}

/// Cases whose names match a glob pattern, in registry order.
pub fn select_cases(pattern: &str) -> Result<Vec<CaseSpec>> {
    let pat = glob::Pattern::new(pattern)
        .map_err(|e| Error::Precondition(format!("bad case pattern `{pattern}`: {e}")))?;
    let cases: Vec<CaseSpec> = catalog_cases().into_iter().filter(|c| pat.matches(&c.name)).collect();
    if cases.is_empty() {
        return Err(Error::UnregisteredCase(pattern.into()));
    }
    Ok(cases)
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub timed_out: usize,
    pub reports: Vec<CaseReport>,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `cases`, on the current rayon pool when `parallel`. Reports keep the
/// order of `cases` either way.
pub fn run_cases(cases: &[CaseSpec], parallel: bool, opts: &RunOptions) -> Summary {
    let reports: Vec<CaseReport> = if parallel {
        cases.par_iter().map(|c| run_spec(c, opts)).collect()
    } else {
        cases.iter().map(|c| run_spec(c, opts)).collect()
    };
    let passed = reports.iter().filter(|r| r.pass).count();
    Summary {
        cases: reports.len(),
        passed,
        failed: reports.len() - passed,
        timed_out: reports.iter().filter(|r| r.timed_out()).count(),
        reports,
    }
}

pub fn run_all(parallel: bool, opts: &RunOptions) -> Summary {
    run_cases(&catalog_cases(), parallel, opts)
}

struct CaseBuilder {
    case: CaseSpec,
}

fn case(name: impl Into<String>, recipe: Recipe, secs: u64) -> CaseBuilder {
    CaseBuilder {
        case: CaseSpec {
            name: name.into(),
            recipe,
            expectations: Vec::new(),
            time_budget: Duration::from_secs(secs),
        },
    }
}

impl CaseBuilder {
    fn push(mut self, provenance: Provenance, check: Check, optional: bool) -> Self {
        self.case.expectations.push(Expectation { check, provenance, optional });
        self
    }

    fn paper(self, check: Check) -> Self {
        self.push(Provenance::Paper, check, false)
    }

    fn derived(self, check: Check) -> Self {
        self.push(Provenance::Derived, check, false)
    }

    fn trivial(self, check: Check) -> Self {
        self.push(Provenance::Trivial, check, false)
    }

    fn done(self) -> CaseSpec {
        self.case
    }
}

fn srg(v: usize, k: usize, lambda: usize, mu: usize) -> SrgParams {
    SrgParams { v, k, lambda, mu }
}

fn line(g: NamedGraph) -> NamedGraph {
    NamedGraph::Line(Box::new(g))
}

fn complement(g: NamedGraph) -> NamedGraph {
    NamedGraph::Complement(Box::new(g))
}

fn root(vertices: usize, edges: usize, degree: usize, girth: usize, bipartite: bool, iso: Option<&str>) -> Check {
    Check::KrauszRoot(RootExpectation {
        vertices,
        edges,
        degree,
        girth,
        bipartite,
        isomorphic_to: iso.map(str::to_string),
    })
}

fn cliques(d: usize, cliques: usize, subgroup_cliques: usize, hk: bool, coset_form: bool) -> Check {
    Check::ConnectionStructure(CliqueStructure { d, cliques, subgroup_cliques, hk, coset_form })
}

const SCHLAFLI_S: &str = "a, a^8, a^3, a^6, b, b^2, a^7 b, a^5 b^2, a^2 b, a^4 b^2";
const SCHLAFLI_S2: &str = "a, a^2, b, b^2, c, c^2, cba, a^2 b^2 c^2, aba, bab";

const LATTICE_GROUPS: [&str; 5] = ["Z2 x Z2", "Z3 x Z3", "Z4 x Z4", "Z5 x Z5", "Z6 x Z6"];

/// Every registered case, in a fixed order.
pub fn catalog_cases() -> Vec<CaseSpec> {
    use Check::*;
    use NamedGraph as N;
    let mut cases = vec![
        case("petersen", Recipe::Named(N::Petersen), 60)
            .trivial(Vertices(10))
            .paper(Srg(srg(10, 3, 0, 1)))
            .derived(Spectrum(vec![(3.0, 1), (1.0, 5), (-2.0, 4)]))
            .paper(Isomorphic(complement(N::Triangular(5)), true))
            .paper(Isomorphic(N::Kneser(5, 2), true))
            .derived(AutOrder(120))
            .derived(VertexTransitive(true))
            .paper(Cayley(false))
            .paper(TriangularCriterion(5, false))
            .done(),
        case("clebsch", Recipe::Cayley { group: "E(2,4)", set: "a, b, c, d, abcd" }, 10)
            .paper(Srg(srg(16, 5, 0, 2)))
            .trivial(Isomorphic(N::FoldedCube(5), true))
            .paper(Isomorphic(complement(N::Clebsch), true))
            .derived(ComplementSrg(srg(16, 10, 6, 6)))
            .derived(AutOrder(1920))
            .paper(Cayley(true))
            .done(),
        case("shrikhande", Recipe::Cayley { group: "Z4 x Z4", set: "a, -a, b, -b, a -b, -a b" }, 10)
            .paper(Srg(srg(16, 6, 2, 2)))
            .trivial(Isomorphic(N::Shrikhande, true))
            .paper(Isomorphic(N::Lattice(4), false))
            .derived(AutOrder(192))
            .derived(LineGraph(false))
            .paper(Cayley(true))
            .done(),
        case("schlafli_a", Recipe::Cayley { group: "SD(9,3,7)", set: SCHLAFLI_S }, 20)
            .derived(Srg(srg(27, 10, 1, 5)))
            .paper(ComplementSrg(srg(27, 16, 10, 8)))
            .trivial(Isomorphic(complement(N::Schlafli), true))
            .derived(AutOrder(51840))
            .paper(cliques(2, 5, 2, false, false))
            .done(),
        case("schlafli_b", Recipe::Cayley { group: "HEIS(3)", set: SCHLAFLI_S2 }, 20)
            .paper(ComplementSrg(srg(27, 16, 10, 8)))
            .paper(Isomorphic(complement(N::Schlafli), true))
            .paper(cliques(2, 5, 5, false, false))
            .done(),
    ];
    for (i, order) in [(1, 384), (2, 360), (3, 96)] {
        let mut c = case(format!("chang_{i}"), Recipe::Named(N::Chang(i)), 20)
            .paper(Srg(srg(28, 12, 6, 4)))
            .paper(AutOrder(order))
            .paper(VertexCountDividesAut(false))
            .paper(VertexTransitive(false))
            .paper(Cayley(false))
            .paper(Isomorphic(N::Triangular(8), false));
        for j in (1..=3).filter(|&j| j != i) {
            c = c.paper(Isomorphic(N::Chang(j), false));
        }
        cases.push(c.done());
    }
    for n in 1..=6 {
        let mut c = case(format!("cocktail({n})"), Recipe::Cocktail(n), 10)
            .trivial(Vertices(2 * n))
            .trivial(Isomorphic(N::CocktailParty(n), true))
            .paper(CocktailForward(n))
            .paper(CocktailConverse(n));
        if n >= 2 {
            c = c.derived(Srg(srg(2 * n, 2 * n - 2, 2 * n - 4, 2 * n - 2)));
        }
        if n == 3 {
            c = c.paper(Isomorphic(N::Triangular(4), true));
        }
        cases.push(c.done());
    }
    for q in [7, 11] {
        cases.push(
            case(format!("triangular_cayley({q})"), Recipe::Godsil(q), 30)
                .paper(Isomorphic(N::Triangular(q), true))
                .derived(Srg(srg(q * (q - 1) / 2, 2 * (q - 2), q - 2, 4)))
                .paper(TriangularCriterion(q, true))
                .done(),
        );
    }
    for (n, group) in (2..=6).zip(LATTICE_GROUPS) {
        let mut c = case(format!("lattice_cayley({n})"), Recipe::Union { group, h: "a", k: "b" }, 30)
            .paper(Isomorphic(N::Lattice(n), true))
            .derived(Srg(srg(n * n, 2 * (n - 1), n - 2, 2)))
            .paper(LatticeTheorem);
        if n == 2 {
            c = c.trivial(Isomorphic(N::Cycle(4), true));
        }
        cases.push(c.done());
    }
    cases.extend([
        case("c4_exception", Recipe::Cayley { group: "Z4", set: "a, a^3" }, 10)
            .trivial(Isomorphic(N::Cycle(4), true))
            .paper(Isomorphic(N::Lattice(2), true))
            .paper(cliques(2, 2, 0, false, true))
            .done(),
        case("heawood_line", Recipe::Union { group: "SD(7,3,2)", h: "b", k: "a^-1 b a" }, 30)
            .trivial(Vertices(21))
            .paper(Spectrum(vec![(4.0, 1), (1.0 + SQRT_2, 6), (1.0 - SQRT_2, 6), (-2.0, 8)]))
            .paper(LeastEigenvalue(-2.0))
            .derived(IntersectionArray(vec![4, 2, 2], vec![1, 1, 2]))
            .derived(IaEigenvaluesInSpectrum)
            .paper(Isomorphic(line(N::Heawood), true))
            .paper(root(14, 21, 3, 6, true, Some("heawood")))
            .paper(cliques(3, 2, 2, true, false))
            .derived(AutOrder(336))
            .paper(Cayley(true))
            .done(),
        case("pg8_line", Recipe::Union { group: "SD(73,9,2)", h: "b", k: "a^-1 b a" }, 120)
            .paper(Vertices(657))
            .derived(IntersectionArray(vec![16, 8, 8], vec![1, 1, 2]))
            .paper(LeastEigenvalue(-2.0))
            .derived(IaEigenvaluesInSpectrum)
            .paper(root(146, 657, 9, 6, true, None))
            .paper(cliques(3, 2, 2, true, false))
            .push(Provenance::Paper, Isomorphic(line(N::PgIncidence(8)), true), true)
            .done(),
        case("tutte_coxeter_line", Recipe::Named(line(N::TutteCoxeter)), 120)
            .trivial(Vertices(45))
            .paper(root(30, 45, 3, 8, true, Some("tutte_coxeter")))
            .derived(IntersectionArray(vec![4, 2, 2, 2], vec![1, 1, 1, 2]))
            .derived(IaEigenvaluesInSpectrum)
            .derived(LeastEigenvalue(-2.0))
            .derived(AutOrder(1440))
            .paper(Cayley(false))
            .paper(HkScanImpossible(45, 3))
            .done(),
        case("l_petersen", Recipe::Named(line(N::Petersen)), 60)
            .trivial(Vertices(15))
            .derived(IntersectionArray(vec![4, 2, 1], vec![1, 1, 4]))
            .derived(IaEigenvaluesInSpectrum)
            .derived(LeastEigenvalue(-2.0))
            .paper(root(10, 15, 3, 5, false, Some("petersen")))
            .derived(AutOrder(120))
            .paper(AbelianObstruction)
            .paper(Cayley(false))
            .done(),
        case("hoffman_singleton", Recipe::Named(line(N::HoffmanSingleton)), 60)
            .trivial(Vertices(175))
            .derived(IntersectionArray(vec![12, 6, 5], vec![1, 1, 4]))
            .derived(IaEigenvaluesInSpectrum)
            .derived(LeastEigenvalue(-2.0))
            .paper(root(50, 175, 7, 5, false, Some("hoffman_singleton")))
            .derived(AutOrder(252_000))
            .paper(AbelianObstruction)
            .done(),
        case("moore_3250_note", Recipe::Note, 1)
            .paper(Note(
                "recorded out of scope: a (3250,57,0,1) graph is not known to exist; its line graph \
                 is not a Cayley graph because such a graph is not vertex-transitive \
                 (Brouwer and Haemers, Spectra of Graphs), while a non-bipartite edge-transitive \
                 graph is (Godsil and Royle, Algebraic Graph Theory)",
            ))
            .done(),
        case("thas_zagier_note", Recipe::Note, 1)
            .paper(Note(
                "recorded out of scope: a non-Desarguesian projective plane with a collineation \
                 group acting regularly on flags has order at least 2 x 10^11 (Thas and Zagier); \
                 cited, not computed",
            ))
            .done(),
    ]);
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> RunOptions {
        RunOptions { extended: false, record_runtime: false }
    }

    #[test]
    fn names_are_unique_and_tagged() {
        let cases = catalog_cases();
        let mut names: Vec<&str> = cases.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), cases.len());
        assert!(cases.iter().all(|c| !c.expectations.is_empty()));
    }

    #[test]
    fn unregistered_case() {
        assert!(matches!(run_case("nope", &quick()), Err(Error::UnregisteredCase(_))));
        assert_eq!(select_cases("chang_*").unwrap().len(), 3);
    }

    #[test]
    fn petersen_case_passes() {
        let r = run_case("petersen", &quick()).unwrap();
        assert!(r.pass, "{}", serde_json::to_string_pretty(&r).unwrap());
        let status = r.expectations.iter().find(|e| e.kind == "cayley_status").unwrap();
        assert_eq!(status.observed, json!("not_cayley"));
    }

    #[test]
    fn failing_expectation_is_reported() {
        let c = case("bad", Recipe::Named(NamedGraph::Cycle(5)), 5)
            .trivial(Check::Vertices(6))
            .trivial(Check::Edges(5))
            .done();
        let r = run_spec(&c, &quick());
        assert!(!r.pass);
        assert_eq!(r.expectations[0].verdict, Verdict::Fail);
        assert_eq!(r.expectations[1].verdict, Verdict::Pass);
    }

    #[test]
    fn zero_budget_is_a_timeout() {
        let mut c = case("slow", Recipe::Named(line(NamedGraph::Petersen)), 0)
            .paper(Check::Cayley(false))
            .done();
        c.time_budget = Duration::ZERO;
        let r = run_spec(&c, &quick());
        assert_eq!(r.expectations[0].verdict, Verdict::Timeout);
        assert!(!r.pass && r.timed_out());
    }

    #[test]
    fn notes_are_recorded() {
        let r = run_case("moore_3250_note", &quick()).unwrap();
        assert!(r.pass);
        assert_eq!(r.expectations[0].verdict, Verdict::Recorded);
    }

    #[test]
    fn reruns_are_byte_identical() {
        let a = serde_json::to_string(&run_case("c4_exception", &quick()).unwrap()).unwrap();
        let b = serde_json::to_string(&run_case("c4_exception", &quick()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
