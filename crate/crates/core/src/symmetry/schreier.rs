use num_bigint::BigUint;
use serde::Serialize;

use super::perm::{self, Perm};

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// strong generators fixing all earlier base points, with coset
/// representatives `transversal[x]` mapping `base` to `x`.
#[derive(Debug, Clone)]
struct Level {
    base: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(degree: usize, base: usize, gens: Vec<Perm>) -> Self {
        let mut level = Level { base, gens, orbit: Vec::new(), transversal: Vec::new() };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        let mut transversal: Vec<Option<Perm>> = vec![None; degree];
        transversal[self.base] = Some(perm::identity(degree));
        let mut orbit = vec![self.base];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.gens {
                let y = g[x];
                if transversal[y].is_none() {
                    transversal[y] = Some(perm::then(transversal[x].as_ref().unwrap(), g));
                    orbit.push(y);
                }
            }
            i += 1;
        }
        self.orbit = orbit;
        self.transversal = transversal;
    }
}

/// Permutation group given by generators, with a stabilizer chain built by
/// the deterministic Schreier–Sims algorithm.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Perm>,
    levels: Vec<Level>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub order: String,
    pub base: Vec<usize>,
    pub basic_orbit_sizes: Vec<usize>,
    pub generators: usize,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Self {
        Self::with_base(degree, generators, &[])
    }

    /// Builds the chain with `prefix` as the first base points.
    pub fn with_base(degree: usize, generators: Vec<Perm>, prefix: &[usize]) -> Self {
        for g in &generators {
            assert!(g.len() == degree && perm::is_permutation(g), "generator is not a permutation");
        }
        let generators: Vec<Perm> = generators.into_iter().filter(|g| !perm::is_identity(g)).collect();
        let mut base: Vec<usize> = prefix.to_vec();
        for g in &generators {
            if base.iter().all(|&b| g[b] == b) {
                base.push((0..degree).find(|&x| g[x] != x).unwrap());
            }
        }
        let mut levels: Vec<Level> = Vec::new();
        for (i, &b) in base.iter().enumerate() {
            let gens = generators
                .iter()
                .filter(|g| base[..i].iter().all(|&x| g[x] == x))
                .cloned()
                .collect();
            levels.push(Level::new(degree, b, gens));
        }
        let mut group = Self { degree, generators, levels };
        group.complete_chain();
        group
    }

    fn complete_chain(&mut self) {
        let degree = self.degree;
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let iu = i as usize;
            let orbit = self.levels[iu].orbit.clone();
            let gens = self.levels[iu].gens.clone();
            for &beta in &orbit {
                for g in &gens {
                    let u_beta = self.levels[iu].transversal[beta].as_ref().unwrap();
                    let moved = perm::then(u_beta, g);
                    let u_img = self.levels[iu].transversal[g[beta]].as_ref().unwrap();
                    if moved == *u_img {
                        continue;
                    }
                    let schreier = perm::then(&moved, &perm::inverse(u_img));
                    let (h, j) = self.strip(schreier, iu + 1);
                    let failed_at = if j < self.levels.len() {
                        j
                    } else if !perm::is_identity(&h) {
                        let moved_point = (0..degree).find(|&x| h[x] != x).unwrap();
                        self.levels.push(Level::new(degree, moved_point, Vec::new()));
                        self.levels.len() - 1
                    } else {
                        continue;
                    };
                    for l in iu + 1..=failed_at {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild(degree);
                    }
                    i = failed_at as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` through the levels from `start`; returns the residue and the
    /// level at which it left the chain (`levels.len()` if it passed all).
    fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g[level.base];
            match &level.transversal[beta] {
                None => return (g, l),
                Some(u) => {
                    if beta != level.base {
                        g = perm::then(&g, &perm::inverse(u));
                    }
                }
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact order, the product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    /// Order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    pub fn contains(&self, g: &[usize]) -> bool {
        if g.len() != self.degree || !perm::is_permutation(g) {
            return false;
        }
        let (h, j) = self.strip(g.to_vec(), 0);
        j == self.levels.len() && perm::is_identity(&h)
    }

    /// Orbit representative (least point) of every point.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        perm::orbit_representatives(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_representatives().iter().all(|&r| r == 0)
    }

    /// The pointwise stabilizer of `point`.
    pub fn stabilizer(&self, point: usize) -> PermutationGroup {
        let Some(top) = self.levels.first() else {
            return self.clone();
        };
        let chain = Self::with_base(self.degree, top.gens.clone(), &[point]);
        let levels: Vec<Level> = chain.levels.into_iter().skip(1).collect();
        let generators = levels.first().map(|l| l.gens.clone()).unwrap_or_default();
        PermutationGroup { degree: self.degree, generators, levels }
    }

    /// Coset representatives of the first-level stabilizer; `None` for points
    /// outside the orbit of the first base point.
    pub fn first_level(&self) -> Option<(usize, &[Option<Perm>])> {
        self.levels.first().map(|l| (l.base, l.transversal.as_slice()))
    }

    /// All elements of the pointwise stabilizer of the first `depth` base
    /// points, or `None` if there are more than `limit`.
    pub fn stabilizer_elements(&self, depth: usize, limit: usize) -> Option<Vec<Perm>> {
        let mut out = vec![perm::identity(self.degree)];
        for level in self.levels[depth.min(self.levels.len())..].iter().rev() {
            let size = out.len().checked_mul(level.orbit.len())?;
            if size > limit {
                return None;
            }
            let mut next = Vec::with_capacity(size);
            for g in &out {
                for &x in &level.orbit {
                    next.push(perm::then(g, level.transversal[x].as_ref().unwrap()));
                }
            }
            out = next;
        }
        Some(out)
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            degree: self.degree,
            order: self.order().to_string(),
            base: self.base(),
            basic_orbit_sizes: self.basic_orbit_sizes(),
            generators: self.generators.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Perm {
        (0..n).map(|i| (i + 1) % n).collect()
    }

    fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = perm::identity(n);
        p.swap(a, b);
        p
    }

    #[test]
    fn symmetric_and_alternating() {
        for n in 2..8usize {
            let s = PermutationGroup::new(n, vec![cycle(n), transposition(n, 0, 1)]);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(s.order_u64(), Some(fact));
        }
        // A5 from two 3-cycles
        let a = vec![1, 2, 0, 3, 4];
        let b = vec![0, 1, 3, 4, 2];
        let g = PermutationGroup::new(5, vec![a, b]);
        assert_eq!(g.order_u64(), Some(60));
        assert!(g.contains(&[2, 0, 1, 3, 4]));
        assert!(!g.contains(&transposition(5, 0, 1)));
    }

    #[test]
    fn trivial_and_prefix() {
        let g = PermutationGroup::new(4, vec![perm::identity(4)]);
        assert_eq!(g.order_u64(), Some(1));
        assert!(g.contains(&perm::identity(4)));
        let d8 = PermutationGroup::with_base(4, vec![cycle(4), vec![0, 3, 2, 1]], &[2]);
        assert_eq!(d8.base()[0], 2);
        assert_eq!(d8.order_u64(), Some(8));
        let stab = d8.stabilizer_elements(1, 100).unwrap();
        assert_eq!(stab.len(), 2);
        assert!(stab.iter().all(|p| p[2] == 2));
        assert_eq!(d8.stabilizer_elements(0, 100).unwrap().len(), 8);
    }

    #[test]
    fn large_symmetric_order_is_exact() {
        let n = 30;
        let s = PermutationGroup::new(n, vec![cycle(n), transposition(n, 0, 1)]);
        let fact = (1..=n as u32).fold(BigUint::from(1u32), |a, k| a * k);
        assert_eq!(s.order(), fact);
    }
}
