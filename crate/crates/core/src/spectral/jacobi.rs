use rayon::prelude::*;

/// Sweeps after which the cyclic Jacobi iteration gives up; convergence is
/// quadratic, so real inputs finish in well under twenty.
const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the dense symmetric `n x n` matrix `a` (row-major), by the
/// cyclic Jacobi method, iterated until the off-diagonal Frobenius norm drops
/// below `tol`. Returned unsorted, in diagonal order.
///
/// Each sweep visits every off-diagonal pair once in round-robin order: a
/// round is `n / 2` disjoint rotations, applied together as `J^T A J`, first
/// to the rows and then to the columns. The column pass runs row by row,
/// which keeps memory access contiguous and lets rows be processed in
/// parallel without changing the result.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize, tol: f64) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let rounds = round_robin(n);
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a, n) < tol {
            break;
        }
        for pairs in &rounds {
            let rots: Vec<Rotation> = pairs
                .iter()
                .filter_map(|&(p, q)| Rotation::annihilating(&a, n, p, q))
                .collect();
            if rots.is_empty() {
                continue;
            }
            apply_round(&mut a, n, &rots);
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

/// Pairings of `0..n` into rounds of disjoint pairs covering every pair once.
fn round_robin(n: usize) -> Vec<Vec<(usize, usize)>> {
    let m = n + n % 2;
    if m < 2 {
        return Vec::new();
    }
    (0..m - 1)
        .map(|r| {
            let seat = |i: usize| if i == 0 { 0 } else { 1 + (i - 1 + r) % (m - 1) };
            (0..m / 2)
                .map(|i| (seat(i), seat(m - 1 - i)))
                .filter(|&(x, y)| x < n && y < n)
                .map(|(x, y)| (x.min(y), x.max(y)))
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy)]
struct Rotation {
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    /// New diagonal entries at `p` and `q`.
    app: f64,
    aqq: f64,
}

impl Rotation {
    fn annihilating(a: &[f64], n: usize, p: usize, q: usize) -> Option<Rotation> {
        let apq = a[p * n + q];
        if apq == 0.0 {
            return None;
        }
        let app = a[p * n + p];
        let aqq = a[q * n + q];
        let theta = (aqq - app) / (2.0 * apq);
        let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
        let c = 1.0 / (t * t + 1.0).sqrt();
        Some(Rotation { p, q, c, s: t * c, app: app - t * apq, aqq: aqq + t * apq })
    }
}

fn off_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    (2.0 * s).sqrt()
}

/// `a <- J^T a J` for the disjoint rotations `rots`.
fn apply_round(a: &mut [f64], n: usize, rots: &[Rotation]) {
    for r in rots {
        let (lo, hi) = a.split_at_mut(r.q * n);
        let row_p = &mut lo[r.p * n..r.p * n + n];
        let row_q = &mut hi[..n];
        for (x, y) in row_p.iter_mut().zip(row_q.iter_mut()) {
            let (u, v) = (*x, *y);
            *x = r.c * u - r.s * v;
            *y = r.s * u + r.c * v;
        }
    }
    a.par_chunks_mut(n).for_each(|row| {
        for r in rots {
            let (x, y) = (row[r.p], row[r.q]);
            row[r.p] = r.c * x - r.s * y;
            row[r.q] = r.s * x + r.c * y;
        }
    });
    for r in rots {
        a[r.p * n + r.p] = r.app;
        a[r.q * n + r.q] = r.aqq;
        a[r.p * n + r.q] = 0.0;
        a[r.q * n + r.p] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| a.partial_cmp(b).unwrap());
        v
    }

    #[test]
    fn two_by_two() {
        let ev = sorted(jacobi_eigenvalues(vec![0.0, 1.0, 1.0, 0.0], 2, 1e-12));
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
        let ev = sorted(jacobi_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2, 1e-12));
        assert!((ev[0] - 1.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn path_graph_closed_form() {
        // eigenvalues of the path on n vertices are 2 cos(k pi / (n + 1))
        let n = 9;
        let mut a = vec![0.0; n * n];
        for i in 0..n - 1 {
            a[i * n + i + 1] = 1.0;
            a[(i + 1) * n + i] = 1.0;
        }
        let ev = sorted(jacobi_eigenvalues(a, n, 1e-12));
        let mut expect: Vec<f64> = (1..=n)
            .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (n + 1) as f64).cos())
            .collect();
        expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (x, y) in ev.iter().zip(&expect) {
            assert!((x - y).abs() < 1e-10, "{x} vs {y}");
        }
    }

    #[test]
    fn diagonal_input_is_untouched() {
        let ev = jacobi_eigenvalues(vec![3.0, 0.0, 0.0, -1.0], 2, 1e-12);
        assert_eq!(ev, vec![3.0, -1.0]);
    }
}
