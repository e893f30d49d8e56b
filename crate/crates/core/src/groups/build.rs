//! Constructors for the group families used by the catalog.

use super::{Element, FiniteGroup};
use crate::algebra::FiniteField;
use crate::error::{Error, Result};

const MAX_ORDER: usize = 2000;

fn gen_name(i: usize) -> String {
    // a..y, skipping e (reserved for the identity in words), then g26, g27...
    const NAMES: &[u8] = b"abcdfghijklmnopqrstuvwyz";
    NAMES
        .get(i)
        .map(|&c| (c as char).to_string())
        .unwrap_or_else(|| format!("g{i}"))
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidGroup(format!("order {n} outside 1..={MAX_ORDER}")));
    }
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

/// `Z_n` with generator `a = 1`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    check_order(n)?;
    let gens = if n > 1 { vec![(gen_name(0), 1)] } else { vec![] };
    FiniteGroup::from_fn(n, |a, b| (a + b) % n, gens, format!("Z{n}"))
}

/// `G x H`; the pair `(g, h)` has index `g * |H| + h`. Generators of both
/// factors are renamed consecutively `a, b, c, ...`.
pub fn direct(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    check_order(ng * nh)?;
    let gens = g
        .generators()
        .iter()
        .map(|&(_, x)| x * nh)
        .chain(h.generators().iter().map(|&(_, y)| y))
        .enumerate()
        .map(|(i, x)| (gen_name(i), x))
        .collect();
    FiniteGroup::from_fn(
        ng * nh,
        |x, y| g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh),
        gens,
        format!("{} x {}", g.descriptor(), h.descriptor()),
    )
}

/// `(Z_p)^k`; coordinate vectors in lexicographic order, generators are the
/// unit vectors.
pub fn elementary_abelian(p: usize, k: u32) -> Result<FiniteGroup> {
    if !crate::algebra::is_prime(p as u64) || k == 0 {
        return Err(Error::InvalidGroup(format!("E({p},{k}) needs p prime and k >= 1")));
    }
    let n = p.checked_pow(k).filter(|&n| n <= MAX_ORDER).ok_or_else(|| {
        Error::InvalidGroup(format!("E({p},{k}) exceeds order {MAX_ORDER}"))
    })?;
    let gens = (0..k as usize)
        .map(|i| (gen_name(i), p.pow(k - 1 - i as u32)))
        .collect();
    FiniteGroup::from_fn(
        n,
        |x, y| {
            let (mut x, mut y, mut out, mut place) = (x, y, 0, 1);
            for _ in 0..k {
                out += ((x % p + y % p) % p) * place;
                x /= p;
                y /= p;
                place *= p;
            }
            out
        },
        gens,
        format!("E({p},{k})"),
    )
}

/// `<a, b | a^n = b^m = e, b^-1 a b = a^r>`.
///
/// The element `a^i b^j` has index `j * n + i`. With `t = r^-1 mod n` the
/// product is `(i, j)(i', j') = (i + t^j i', j + j')`, so `b a b^-1 = a^t`
/// and therefore `b^-1 a b = a^r`.
pub fn semidirect(n: usize, m: usize, r: usize) -> Result<FiniteGroup> {
    check_order(n * m)?;
    let (nu, ru) = (n as u64, r as u64 % n.max(1) as u64);
    if n > 1 && (gcd(ru, nu) != 1 || mod_pow(ru, m as u64, nu) != 1 % nu) {
        return Err(Error::InvalidGroup(format!(
            "SD({n},{m},{r}): need gcd(r,n) = 1 and r^m = 1 mod n"
        )));
    }
    let t = if n > 1 {
        (1..nu).find(|&t| t * ru % nu == 1).unwrap()
    } else {
        0
    };
    let tpow: Vec<usize> = (0..m).map(|j| mod_pow(t, j as u64, nu) as usize).collect();
    let mut gens = Vec::new();
    if n > 1 {
        gens.push((gen_name(0), 1));
    }
    if m > 1 {
        gens.push((gen_name(gens.len()), n));
    }
    let g = FiniteGroup::from_fn(
        n * m,
        |x, y| {
            let (i, j) = (x % n, x / n);
            let (i2, j2) = (y % n, y / n);
            ((j + j2) % m) * n + (i + tpow[j] * i2) % n
        },
        gens,
        format!("SD({n},{m},{r})"),
    )?;
    if n > 1 && m > 1 {
        let (a, b) = (1, n);
        let lhs = g.mul(g.mul(g.inv(b), a), b);
        if lhs != g.pow(a, r as i64) {
            return Err(Error::InvalidGroup("b^-1 a b != a^r".into()));
        }
    }
    Ok(g)
}

/// Upper unitriangular 3x3 matrices over GF(p). The matrix with entries
/// `x = (1,2)`, `y = (2,3)`, `z = (1,3)` has index `x p^2 + y p + z`.
/// Generators `a = I + E12`, `b = I + E23`, `c = (ab)^-1 ba`, so `abc = ba`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if !crate::algebra::is_prime(p as u64) {
        return Err(Error::InvalidGroup(format!("HEIS({p}) needs p prime")));
    }
    check_order(p * p * p)?;
    let split = |v: usize| (v / (p * p), (v / p) % p, v % p);
    let join = |x: usize, y: usize, z: usize| x * p * p + y * p + z;
    let a = join(1, 0, 0);
    let b = join(0, 1, 0);
    let mul = |u: usize, v: usize| {
        let (x, y, z) = split(u);
        let (x2, y2, z2) = split(v);
        join((x + x2) % p, (y + y2) % p, (z + z2 + x * y2) % p)
    };
    let inv = |u: usize| {
        let (x, y, z) = split(u);
        join((p - x) % p, (p - y) % p, (z * (p - 1) + x * y) % p)
    };
    let c = mul(inv(mul(a, b)), mul(b, a));
    let g = FiniteGroup::from_fn(
        p * p * p,
        mul,
        vec![(gen_name(0), a), (gen_name(1), b), (gen_name(2), c)],
        format!("HEIS({p})"),
    )?;
    if g.mul(g.mul(a, b), c) != g.mul(b, a) {
        return Err(Error::InvalidGroup("abc != ba".into()));
    }
    Ok(g)
}

/// Maps `x -> ax + b` on GF(q), `a` a nonzero square, composed as functions:
/// `(f g)(x) = f(g(x))`. The map `(a, b)` has index
/// `rank(a) * q + index(b)` with squares ranked in canonical field order.
pub fn affine_square(q: usize) -> Result<FiniteGroup> {
    if q.is_multiple_of(2) {
        return Err(Error::InvalidGroup(format!("AFFSQ({q}) needs odd q")));
    }
    let field = FiniteField::of_order(q as u64)?;
    let squares = field.nonzero_squares();
    let mut rank = vec![usize::MAX; q];
    for (i, s) in squares.iter().enumerate() {
        rank[field.index(*s)] = i;
    }
    let order = squares.len() * q;
    check_order(order)?;
    let decode = |u: usize| (squares[u / q], field.element(u % q));
    let encode = |a, b| rank[field.index(a)] * q + field.index(b);
    let mul = |u: usize, v: usize| {
        let (a, b) = decode(u);
        let (c, d) = decode(v);
        encode(field.mul(a, c), field.add(field.mul(a, d), b))
    };
    let omega = field.primitive_element();
    let mut gens: Vec<(String, Element)> = Vec::new();
    if squares.len() > 1 {
        gens.push((gen_name(0), encode(field.mul(omega, omega), field.zero())));
    }
    // translations by the additive basis 1, x, x^2, ...
    for i in 0..field.degree() as usize {
        let t = field.element((field.characteristic() as usize).pow(i as u32));
        gens.push((gen_name(gens.len()), encode(field.one(), t)));
    }
    FiniteGroup::from_fn(order, mul, gens, format!("AFFSQ({q})"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semidirect_orders_and_relation() {
        for (n, m, r, order) in [(7, 3, 2, 21), (73, 9, 2, 657), (9, 3, 7, 27), (4, 4, 3, 16)] {
            let g = semidirect(n, m, r).unwrap();
            assert_eq!(g.order(), order);
            let (a, b) = (g.generator("a").unwrap(), g.generator("b").unwrap());
            assert_eq!(g.element_order(a), n);
            assert_eq!(g.element_order(b), m);
            assert_eq!(g.mul(g.mul(g.inv(b), a), b), g.pow(a, r as i64));
        }
        assert!(semidirect(7, 3, 3).is_err());
        assert!(semidirect(9, 3, 3).is_err());
    }

    #[test]
    fn heisenberg_three() {
        let g = heisenberg(3).unwrap();
        assert_eq!(g.order(), 27);
        assert!((1..27).all(|x| g.element_order(x) == 3));
        assert!(!g.is_abelian());
        let (a, b, c) = (
            g.generator("a").unwrap(),
            g.generator("b").unwrap(),
            g.generator("c").unwrap(),
        );
        assert_eq!(g.mul(a, c), g.mul(c, a));
        assert_eq!(g.mul(b, c), g.mul(c, b));
    }

    #[test]
    fn affine_square_orders() {
        assert_eq!(affine_square(7).unwrap().order(), 21);
        assert_eq!(affine_square(11).unwrap().order(), 55);
        assert_eq!(affine_square(9).unwrap().order(), 36);
        assert!(affine_square(8).is_err());
        let g = affine_square(7).unwrap();
        assert_eq!(g.subgroup_closure(&g.generators().iter().map(|x| x.1).collect::<Vec<_>>()).len(), 21);
    }

    #[test]
    fn elementary_abelian_generators() {
        let g = elementary_abelian(2, 4).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.generators().len(), 4);
        assert!((1..16).all(|x| g.element_order(x) == 2));
    }

    #[test]
    fn direct_product_renames_generators() {
        let g = direct(&cyclic(4).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert_eq!(g.generator("a"), Some(4));
        assert_eq!(g.generator("b"), Some(1));
        assert_eq!(g.descriptor(), "Z4 x Z4");
    }
}
