//! Spectra, strong regularity and distance-regularity.

mod jacobi;

use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::{distances_from, Graph};

pub use jacobi::jacobi_eigenvalues;

/// Off-diagonal norm at which the Jacobi iteration stops.
pub const ITERATION_TOL: f64 = 1e-10;
/// Tolerance for clustering, integrality and eigenvalue comparisons.
pub const REPORT_TOL: f64 = 1e-6;

/// Eigenvalues with multiplicities, in descending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<(f64, usize)>,
}

impl Spectrum {
    /// Clusters raw eigenvalues lying within `REPORT_TOL` of their
    /// neighbour; each cluster is represented by its mean.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        let mut eigenvalues: Vec<(f64, usize)> = Vec::new();
        let mut sum = 0.0;
        let mut last = f64::NAN;
        for v in values {
            match eigenvalues.last_mut() {
                Some((mean, mult)) if (last - v).abs() < REPORT_TOL => {
                    *mult += 1;
                    sum += v;
                    *mean = sum / *mult as f64;
                }
                _ => {
                    eigenvalues.push((v, 1));
                    sum = v;
                }
            }
            last = v;
        }
        Spectrum { eigenvalues }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.last().map_or(f64::NAN, |e| e.0)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.first().map_or(f64::NAN, |e| e.0)
    }

    /// Multiplicity of the eigenvalue within `tol` of `x` (0 if absent).
    pub fn multiplicity(&self, x: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .filter(|e| (e.0 - x).abs() < tol)
            .map(|e| e.1)
            .sum()
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.multiplicity(x, tol) > 0
    }

    /// Sum of eigenvalues counted with multiplicity (the trace of A).
    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().map(|(v, m)| v * *m as f64).sum()
    }

    /// Sum of squared eigenvalues (the trace of A², i.e. twice the edge count).
    pub fn trace_of_square(&self) -> f64 {
        self.eigenvalues.iter().map(|(v, m)| v * v * *m as f64).sum()
    }

    /// True iff every eigenvalue is within `REPORT_TOL` of an integer.
    pub fn is_integral(&self) -> bool {
        self.eigenvalues.iter().all(|e| (e.0 - e.0.round()).abs() < REPORT_TOL)
    }
}

/// Rounds away the last few bits of noise so reports print cleanly.
pub fn report_value(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() < REPORT_TOL {
        return r + 0.0;
    }
    (x * 1e10).round() / 1e10
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.eigenvalues.len()))?;
        for &(v, m) in &self.eigenvalues {
            seq.serialize_element(&(report_value(v), m))?;
        }
        seq.end()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .eigenvalues
            .iter()
            .map(|&(v, m)| format!("{}^{m}", report_value(v)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Adjacency spectrum via cyclic Jacobi.
pub fn spectrum(g: &Graph) -> Spectrum {
    spectrum_with_tol(g, ITERATION_TOL)
}

pub fn spectrum_with_tol(g: &Graph, tol: f64) -> Spectrum {
    let n = g.n();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            a[u * n + v as usize] = 1.0;
        }
    }
    Spectrum::from_values(jacobi_eigenvalues(a, n, tol))
}

pub fn least_eigenvalue_at_least(g: &Graph, bound: f64, tol: f64) -> bool {
    g.n() == 0 || spectrum(g).min() >= bound - tol
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k (k - λ - 1) = (v - k - 1) μ`.
    pub fn is_feasible(&self) -> bool {
        self.k * (self.k - self.lambda - 1) == (self.v - self.k - 1) * self.mu
    }

    pub fn complement(&self) -> SrgParams {
        let SrgParams { v, k, lambda, mu } = *self;
        SrgParams { v, k: v - k - 1, lambda: v - 2 * k + mu - 2, mu: v - 2 * k + lambda }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Parameters of a strongly regular graph. Complete and edgeless graphs, and
/// disconnected ones, are not counted as strongly regular.
pub fn srg_parameters(g: &Graph) -> Option<SrgParams> {
    let v = g.n();
    let k = g.regular_degree()?;
    if k == 0 || k == v - 1 {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for x in 0..v {
        for y in x + 1..v {
            let c = g.common_neighbors(x, y);
            let slot = if g.has_edge(x, y) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                _ => {}
            }
        }
    }
    let (lambda, mu) = (lambda?, mu?);
    if mu == 0 {
        return None;
    }
    let p = SrgParams { v, k, lambda, mu };
    assert!(p.is_feasible(), "counted parameters {p} violate the feasibility identity");
    Some(p)
}

/// `{b_0, ..., b_{d-1}; c_1, ..., c_d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl IntersectionArray {
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        let shaped = !b.is_empty() && b.len() == c.len() && c[0] == 1 && b[0] > 0;
        let arr = Self { b, c };
        if shaped && arr.checked_a().is_some() {
            Ok(arr)
        } else {
            Err(Error::Precondition(format!("invalid intersection array {arr}")))
        }
    }

    fn checked_a(&self) -> Option<Vec<usize>> {
        let d = self.diameter();
        let k = self.degree();
        (0..=d)
            .map(|i| {
                let bi = if i < d { self.b[i] } else { 0 };
                let ci = if i > 0 { self.c[i - 1] } else { 0 };
                k.checked_sub(bi)?.checked_sub(ci)
            })
            .collect()
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn degree(&self) -> usize {
        self.b[0]
    }

    /// `a_i = k - b_i - c_i` for `i = 0..=d`, with `c_0 = b_d = 0`.
    pub fn a(&self) -> Vec<usize> {
        self.checked_a().expect("validated on construction")
    }

    /// Number of vertices at each distance `0..=d` from a fixed vertex.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut k = vec![1usize];
        for i in 0..self.diameter() {
            k.push(k[i] * self.b[i] / self.c[i]);
        }
        k
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", j(&self.b), j(&self.c))
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IntersectionArray", 2)?;
        st.serialize_field("b", &self.b)?;
        st.serialize_field("c", &self.c)?;
        st.end()
    }
}

/// Counts `(c_i, a_i, b_i)` seen from base vertex `x`, or `None` if two
/// vertices at the same distance disagree.
fn local_array(g: &Graph, x: usize) -> Option<Vec<[usize; 3]>> {
    let dist = distances_from(g, x);
    let d = *dist.iter().max()?;
    let mut rows: Vec<Option<[usize; 3]>> = vec![None; d + 1];
    for y in 0..g.n() {
        let i = dist[y];
        let mut counts = [0usize; 3];
        for &z in g.neighbors(y) {
            let j = dist[z as usize];
            counts[j + 1 - i] += 1;
        }
        match rows[i] {
            None => rows[i] = Some(counts),
            Some(prev) if prev != counts => return None,
            _ => {}
        }
    }
    rows.into_iter().collect()
}

/// The intersection array, if `g` is distance-regular. Every vertex is used
/// as a base, so a returned array is a proof, not a sample.
pub fn intersection_array(g: &Graph) -> Result<Option<IntersectionArray>> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let locals: Vec<Option<Vec<[usize; 3]>>> =
        (0..g.n()).into_par_iter().map(|x| local_array(g, x)).collect();
    let first = match &locals[0] {
        Some(r) => r.clone(),
        None => return Ok(None),
    };
    if locals.iter().any(|l| l.as_ref() != Some(&first)) {
        return Ok(None);
    }
    let d = first.len() - 1;
    if d == 0 {
        return Ok(None);
    }
    let b = (0..d).map(|i| first[i][2]).collect();
    let c = (1..=d).map(|i| first[i][0]).collect();
    IntersectionArray::new(b, c).map(Some)
}

/// Eigenvalues of the tridiagonal quotient matrix, descending. The matrix is
/// symmetrized by a diagonal similarity (off-diagonals `sqrt(b_i c_{i+1})`),
/// which keeps the eigenvalues.
pub fn ia_eigenvalues(arr: &IntersectionArray) -> Vec<f64> {
    let d = arr.diameter();
    let n = d + 1;
    let a = arr.a();
    let mut m = vec![0.0; n * n];
    for i in 0..n {
        m[i * n + i] = a[i] as f64;
        if i < d {
            let off = ((arr.b[i] * arr.c[i]) as f64).sqrt();
            m[i * n + i + 1] = off;
            m[(i + 1) * n + i] = off;
        }
    }
    let mut ev = jacobi_eigenvalues(m, n, 1e-14);
    ev.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    ev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::NamedGraph;

    fn build(g: NamedGraph) -> Graph {
        g.build().unwrap()
    }

    #[test]
    fn small_spectra() {
        let s = spectrum(&build(NamedGraph::Complete(2)));
        assert_eq!(s.eigenvalues.len(), 2);
        assert!((s.max() - 1.0).abs() < 1e-9 && (s.min() + 1.0).abs() < 1e-9);
        let p = spectrum(&build(NamedGraph::Petersen));
        assert_eq!(p.multiplicity(3.0, 1e-6), 1);
        assert_eq!(p.multiplicity(1.0, 1e-6), 5);
        assert_eq!(p.multiplicity(-2.0, 1e-6), 4);
        assert!(p.is_integral());
        assert_eq!(p.to_string(), "{3^1, 1^5, -2^4}");
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[3.0,1],[1.0,5],[-2.0,4]]");
    }

    #[test]
    fn srg_examples() {
        let c5 = srg_parameters(&build(NamedGraph::Cycle(5))).unwrap();
        assert_eq!(c5, SrgParams { v: 5, k: 2, lambda: 0, mu: 1 });
        let fc = srg_parameters(&build(NamedGraph::FoldedCube(5))).unwrap();
        assert_eq!(fc.to_string(), "(16,5,0,2)");
        let cl = srg_parameters(&build(NamedGraph::Clebsch)).unwrap();
        assert_eq!(cl.to_string(), "(16,10,6,6)");
        assert_eq!(fc.complement(), cl);
        assert!(srg_parameters(&build(NamedGraph::Complete(5))).is_none());
        assert!(srg_parameters(&build(NamedGraph::Cycle(6))).is_none());
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(srg_parameters(&two_triangles).is_none());
    }

    #[test]
    fn intersection_arrays() {
        let ia = intersection_array(&build(NamedGraph::Cycle(6))).unwrap().unwrap();
        assert_eq!(ia.to_string(), "{2,1,1;1,1,2}");
        assert_eq!(ia.layer_sizes(), vec![1, 2, 2, 1]);
        let ia = intersection_array(&build(NamedGraph::Petersen)).unwrap().unwrap();
        assert_eq!(ia.to_string(), "{3,2;1,1}");
        assert_eq!(ia.a(), vec![0, 0, 2]);
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(intersection_array(&path).unwrap(), None);
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(intersection_array(&split), Err(Error::Disconnected));
        assert_eq!(
            serde_json::to_string(&ia).unwrap(),
            r#"{"b":[3,2],"c":[1,1]}"#
        );
    }

    #[test]
    fn quotient_eigenvalues() {
        let ia = IntersectionArray::new(vec![4, 2, 2], vec![1, 1, 2]).unwrap();
        let ev = ia_eigenvalues(&ia);
        let r2 = 2f64.sqrt();
        for (x, y) in ev.iter().zip([4.0, 1.0 + r2, 1.0 - r2, -2.0]) {
            assert!((x - y).abs() < 1e-9, "{ev:?}");
        }
        let ev = ia_eigenvalues(&IntersectionArray::new(vec![2, 1], vec![1, 1]).unwrap());
        let r5 = 5f64.sqrt();
        for (x, y) in ev.iter().zip([2.0, (r5 - 1.0) / 2.0, (-1.0 - r5) / 2.0]) {
            assert!((x - y).abs() < 1e-9, "{ev:?}");
        }
        let ev = ia_eigenvalues(&IntersectionArray::new(vec![16, 8, 8], vec![1, 1, 2]).unwrap());
        assert!((ev[3] + 2.0).abs() < 1e-9);
        assert!(IntersectionArray::new(vec![2, 3], vec![1, 1]).is_err());
    }

    #[test]
    fn least_eigenvalue() {
        assert!(least_eigenvalue_at_least(&build(NamedGraph::Lattice(5)), -2.0, REPORT_TOL));
        assert!(least_eigenvalue_at_least(&build(NamedGraph::Petersen), -2.0, REPORT_TOL));
        assert!(least_eigenvalue_at_least(&build(NamedGraph::Cycle(7)), -2.0, REPORT_TOL));
        assert!(!least_eigenvalue_at_least(&build(NamedGraph::Cube(3)), -2.0, REPORT_TOL));
    }
}
