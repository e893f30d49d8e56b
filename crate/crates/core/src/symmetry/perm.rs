//! Permutations of `0..n` stored as image arrays.

/// `p[x]` is the image of `x`.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// `p` followed by `q`: `x -> q[p[x]]`.
pub fn then(p: &[usize], q: &[usize]) -> Perm {
    p.iter().map(|&x| q[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

pub fn order(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut lcm = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        lcm = lcm / gcd(lcm, len) * len;
    }
    lcm
}

pub fn fixed_points(p: &[usize]) -> usize {
    p.iter().enumerate().filter(|&(i, &x)| i == x).count()
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Orbits of the group generated by `gens`, as a representative (the least
/// point) for every point.
pub fn orbit_representatives(n: usize, gens: &[Perm]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let p = vec![1, 2, 0, 4, 3];
        assert_eq!(order(&p), 6);
        assert!(is_identity(&then(&p, &inverse(&p))));
        assert_eq!(then(&p, &p), vec![2, 0, 1, 3, 4]);
        assert_eq!(fixed_points(&then(&p, &p)), 2);
        assert!(is_permutation(&p) && !is_permutation(&[0, 0]));
        assert_eq!(orbit_representatives(6, &[p.iter().copied().chain([5]).collect()]), vec![0, 0, 0, 3, 3, 5]);
    }
}
