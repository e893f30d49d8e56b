//! Finite field arithmetic over GF(p^k).
//!
//! Elements are stored as canonical coefficient vectors `c_0 + c_1 x + ...`
//! reduced modulo a fixed monic irreducible polynomial. Two elements are
//! equal exactly when their coefficient vectors are equal, so elements can be
//! used directly as keys when building group tables.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 4;
/// Largest supported field order.
pub const MAX_ORDER: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: [u16; MAX_DEGREE as usize],
}

impl FieldElement {
    pub fn coefficients(&self) -> &[u16] {
        &self.coeffs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: u32,
    order: u32,
    /// Monic modulus, lowest degree first, length `k + 1`.
    modulus: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// If `n` is a prime power `p^k`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

// Polynomials over GF(p), lowest degree first, no trailing zeros.
fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead = *b.last().expect("division by zero polynomial");
    let lead_inv = pow_mod(lead, p - 2, p);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().copied().unwrap() * lead_inv % p;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Monic polynomial of degree `deg` whose non-leading coefficients are the
/// base-`p` digits of `t` (constant term least significant).
fn monic_from_index(t: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    let mut t = t;
    for _ in 0..deg {
        c.push(t % p);
        t /= p;
    }
    c.push(1);
    c
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let poly = trim(poly.to_vec());
    let deg = poly.len().saturating_sub(1) as u32;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for t in 0..p.pow(d) {
            let divisor = monic_from_index(t, d, p);
            if poly_rem(&poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds GF(p^k) with the first irreducible modulus in the scan order
    /// `x^k + c_{k-1} x^{k-1} + ... + c_0`, ordered by the base-`p` number
    /// `c_{k-1} ... c_0`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 || k > MAX_DEGREE || p.checked_pow(k).is_none_or(|q| q > MAX_ORDER) {
            return Err(Error::FieldTooLarge { p, k });
        }
        let modulus = (0..p.pow(k))
            .map(|t| monic_from_index(t, k, p))
            .find(|m| is_irreducible(m, p))
            .ok_or(Error::NoIrreducible { p, k })?;
        Ok(Self {
            p: p as u32,
            k,
            order: p.pow(k) as u32,
            modulus: modulus.into_iter().map(|c| c as u32).collect(),
        })
    }

    /// Field of prime-power order `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrime(q))?;
        Self::new(p, k)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Modulus coefficients, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: [0; 4] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under the prime-field embedding.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = n.rem_euclid(self.p as i64) as u16;
        e
    }

    /// Canonical index `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` in `0..q`.
    pub fn index(&self, x: FieldElement) -> usize {
        let p = self.p as usize;
        x.coeffs[..self.k as usize]
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * p + c as usize)
    }

    pub fn element(&self, index: usize) -> FieldElement {
        assert!(index < self.order as usize, "field index out of range");
        let mut e = self.zero();
        let mut t = index;
        for c in e.coeffs.iter_mut().take(self.k as usize) {
            *c = (t % self.p as usize) as u16;
            t /= self.p as usize;
        }
        e
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order as usize).map(move |i| self.element(i))
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let mut r = self.zero();
        for i in 0..self.k as usize {
            r.coeffs[i] = ((x.coeffs[i] as u32 + y.coeffs[i] as u32) % self.p) as u16;
        }
        r
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let mut r = self.zero();
        for i in 0..self.k as usize {
            r.coeffs[i] = ((self.p - x.coeffs[i] as u32) % self.p) as u16;
        }
        r
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let k = self.k as usize;
        let p = self.p as u64;
        let mut prod = [0u64; 2 * MAX_DEGREE as usize - 1];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x.coeffs[i] as u64 * y.coeffs[j] as u64) % p;
            }
        }
        // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        for top in (k..2 * k - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for i in 0..k {
                let sub = c * self.modulus[i] as u64 % p;
                prod[top - k + i] = (prod[top - k + i] + p - sub) % p;
            }
        }
        let mut r = self.zero();
        for i in 0..k {
            r.coeffs[i] = prod[i] as u16;
        }
        r
    }

    pub fn pow(&self, x: FieldElement, mut exp: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = x;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x == self.zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(self.pow(x, self.order as u64 - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, x: FieldElement) -> Option<u64> {
        if x == self.zero() {
            return None;
        }
        let mut y = x;
        let mut n = 1;
        while y != self.one() {
            y = self.mul(y, x);
            n += 1;
        }
        Some(n)
    }

    /// First element, in index order, generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        let target = self.order as u64 - 1;
        self.elements()
            .find(|&x| self.element_order(x) == Some(target))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// `{x^2 : x != 0}` sorted by canonical index.
    pub fn nonzero_squares(&self) -> Vec<FieldElement> {
        let mut seen = vec![false; self.order as usize];
        for x in self.elements().skip(1) {
            seen[self.index(self.mul(x, x))] = true;
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| self.element(i))
            .collect()
    }

    pub fn is_square(&self, x: FieldElement) -> bool {
        x == self.zero()
            || self.order.is_multiple_of(2)
            || self.pow(x, (self.order as u64 - 1) / 2) == self.one()
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pairs(f: &FiniteField) -> impl Iterator<Item = (FieldElement, FieldElement)> + '_ {
        f.elements().flat_map(move |x| f.elements().map(move |y| (x, y)))
    }

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 7);
    }

    #[test]
    fn inverse_in_gf7() {
        let f = FiniteField::new(7, 1).unwrap();
        let inv = f.inv(f.from_int(3)).unwrap();
        assert_eq!(inv, f.from_int(5));
        assert_eq!(f.inv(f.zero()), Err(Error::InverseOfZero));
    }

    #[test]
    fn gf8_every_nonzero_element_invertible_and_lagrange() {
        let f = FiniteField::new(2, 3).unwrap();
        assert_eq!(f.elements().count(), 8);
        for x in f.elements().skip(1) {
            let y = f.inv(x).unwrap();
            assert_eq!(f.mul(x, y), f.one());
            assert_eq!(f.pow(x, 7), f.one());
        }
    }

    #[test]
    fn gf27_modulus_is_first_irreducible_cubic() {
        // Brute-force scan: a monic cubic over GF(3) is irreducible iff it
        // has no root.
        let f = FiniteField::new(3, 3).unwrap();
        let has_root = |c: &[u64]| (0..3u64).any(|x| (c[0] + c[1] * x + c[2] * x * x + x * x * x).is_multiple_of(3));
        let expected = (0..27u64)
            .map(|t| vec![t % 3, (t / 3) % 3, t / 9])
            .find(|c| !has_root(c))
            .unwrap();
        let got: Vec<u64> = f.modulus()[..3].iter().map(|&c| c as u64).collect();
        assert_eq!(got, expected);
        assert_eq!(f.modulus()[3], 1);
    }

    #[test]
    fn field_laws_exhaustive_small() {
        for (p, k) in [(2, 1), (3, 2), (2, 4), (5, 2), (7, 1), (2, 3), (11, 1)] {
            let f = FiniteField::new(p, k).unwrap();
            for (x, y) in all_pairs(&f) {
                assert_eq!(f.add(x, y), f.add(y, x));
                assert_eq!(f.mul(x, y), f.mul(y, x));
                for z in f.elements() {
                    assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
            for x in f.elements() {
                assert_eq!(f.add(x, f.zero()), x);
                assert_eq!(f.add(x, f.neg(x)), f.zero());
            }
        }
    }

    #[test]
    fn squares() {
        let f7 = FiniteField::new(7, 1).unwrap();
        let s: Vec<usize> = f7.nonzero_squares().into_iter().map(|x| f7.index(x)).collect();
        assert_eq!(s, vec![1, 2, 4]);

        let f11 = FiniteField::new(11, 1).unwrap();
        let s = f11.nonzero_squares();
        assert_eq!(s.len(), 5);
        assert!(!s.contains(&f11.from_int(-1)));

        let f2 = FiniteField::new(2, 1).unwrap();
        assert_eq!(f2.nonzero_squares(), vec![f2.one()]);
    }

    #[test]
    fn minus_one_non_square_when_q_is_3_mod_4() {
        for q in [3u64, 7, 11, 19, 23, 27, 31, 43] {
            let f = FiniteField::of_order(q).unwrap();
            let sq = f.nonzero_squares();
            assert_eq!(sq.len() as u64, (q - 1) / 2);
            assert!(!sq.contains(&f.neg(f.one())), "q = {q}");
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FiniteField::new(6, 1), Err(Error::NotPrime(6)));
        assert!(matches!(FiniteField::new(2, 5), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FiniteField::new(101, 3), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn primitive_element_generates() {
        let f = FiniteField::new(3, 2).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.element_order(g), Some(8));
    }
}
