//! Arithmetic in 𝔽_q, q = p^d.
//!
//! An element is stored as its integer code in `[0, q)`: the base-p digits of
//! the code are the coefficients of the element in the basis `1, z, …, z^(d-1)`
//! where `z` is a root of the context's modulus (least significant digit
//! first). Equality of codes is equality of elements.
//!
//! For small fields the context precomputes full addition and multiplication
//! tables; larger fields fall back to digit-wise polynomial arithmetic.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Fields up to this order get precomputed operation tables.
const TABLE_LIMIT: u64 = 256;

/// A value of 𝔽_q. Only meaningful together with the [`FieldCtx`] that made it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Integer code in `[0, q)`.
    pub fn code(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct Inner {
    p: u64,
    d: u32,
    q: u64,
    /// Monic, little-endian, length d + 1.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// The field 𝔽_q together with its defining modulus. Cheap to clone.
#[derive(Clone)]
pub struct FieldCtx {
    inner: Arc<Inner>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.inner.p)
            .field("d", &self.inner.d)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldCtx {}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut f = 3u64;
    while f.saturating_mul(f) <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// Splits a prime power `q` into `(p, d)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|f| q.is_multiple_of(*f) || f.saturating_mul(*f) > q)?;
    let p = if q.is_multiple_of(p) { p } else { q };
    let (mut rest, mut d) = (q, 0u32);
    while rest % p == 0 {
        rest /= p;
        d += 1;
    }
    (rest == 1).then_some((p, d))
}

impl FieldCtx {
    /// Builds 𝔽_{p^d}. For `d > 1` the modulus is the lexicographically
    /// smallest monic irreducible polynomial of degree `d`, comparing the
    /// coefficient tuples `(c_0, …, c_{d-1})` from the constant term upwards.
    pub fn new(p: u64, d: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if d < 1 {
            return Err(Error::InvalidDegree(d));
        }
        let q = p
            .checked_pow(d)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::FieldTooLarge { p, d })?;
        let modulus = if d == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, d as usize)
        };
        let mut inner = Inner {
            p,
            d,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FieldCtx {
            inner: Arc::new(inner),
        })
    }

    /// Builds 𝔽_q from a prime power `q`.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, d) = prime_power(q)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
        Self::new(p, d)
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.d
    }

    pub fn order(&self) -> u64 {
        self.inner.q
    }

    /// Monic modulus, little-endian.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// Decodes an integer code in `[0, q)`.
    pub fn decode(&self, code: u64) -> Result<FieldElement> {
        if code < self.inner.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::OutOfRange {
                value: code,
                bound: self.inner.q,
            })
        }
    }

    pub fn encode(&self, e: FieldElement) -> u64 {
        e.0
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.inner.p as i64) as u64)
    }

    /// Coefficients of `e` in the basis `1, z, …, z^(d-1)`.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u64> {
        digits(e.0, self.inner.p, self.inner.d as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.inner.d as usize {
            return Err(Error::DimensionMismatch(coeffs.len(), self.inner.d as usize));
        }
        let p = self.inner.p;
        if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::OutOfRange { value: c, bound: p });
        }
        Ok(FieldElement(undigits(coeffs, p)))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.inner.q + b.0) as usize] as u64),
            None => raw_add(&self.inner, a.0, b.0).into(),
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize] as u64),
            None => raw_neg(&self.inner, a.0).into(),
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.inner.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.inner.q + b.0) as usize] as u64),
            None => raw_mul(&self.inner, a.0, b.0).into(),
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.inner.tables {
            Some(t) => FieldElement(t.inv[a.0 as usize] as u64),
            None => self.pow(a, self.inner.q - 2),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn pow_big(&self, a: FieldElement, e: &BigUint) -> FieldElement {
        // a^(q-1) = 1 for a ≠ 0, so the exponent can be reduced.
        if a.is_zero() {
            return if e.bits() == 0 { FieldElement::ONE } else { a };
        }
        let r = e % BigUint::from(self.inner.q - 1);
        self.pow(a, r.try_into().unwrap_or(0))
    }
}

impl From<u64> for FieldElement {
    fn from(v: u64) -> Self {
        FieldElement(v)
    }
}

fn digits(mut v: u64, p: u64, d: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(d);
    for _ in 0..d {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn raw_add(f: &Inner, a: u64, b: u64) -> u64 {
    let (da, db) = (digits(a, f.p, f.d as usize), digits(b, f.p, f.d as usize));
    let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % f.p).collect();
    undigits(&s, f.p)
}

fn raw_neg(f: &Inner, a: u64) -> u64 {
    let s: Vec<u64> = digits(a, f.p, f.d as usize)
        .into_iter()
        .map(|x| (f.p - x) % f.p)
        .collect();
    undigits(&s, f.p)
}

fn raw_mul(f: &Inner, a: u64, b: u64) -> u64 {
    let d = f.d as usize;
    let prod = fp_poly::mul(&digits(a, f.p, d), &digits(b, f.p, d), f.p);
    let mut r = fp_poly::rem(&prod, &f.modulus, f.p);
    r.resize(d, 0);
    undigits(&r, f.p)
}

fn build_tables(f: &Inner) -> Tables {
    let q = f.q as usize;
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    for a in 0..q {
        for b in a..q {
            let s = raw_add(f, a as u64, b as u64) as u32;
            let m = raw_mul(f, a as u64, b as u64) as u32;
            add[a * q + b] = s;
            add[b * q + a] = s;
            mul[a * q + b] = m;
            mul[b * q + a] = m;
        }
    }
    let neg = (0..q).map(|a| raw_neg(f, a as u64) as u32).collect();
    let mut inv = vec![0u32; q];
    for a in 1..q {
        if let Some(b) = (1..q).find(|&b| mul[a * q + b] == 1) {
            inv[a] = b as u32;
        }
    }
    Tables { add, mul, neg, inv }
}

fn smallest_irreducible(p: u64, d: usize) -> Vec<u64> {
    let total = p.pow(d as u32);
    (0..total)
        .map(|idx| {
            // c_0 is the most significant digit of idx.
            let mut c = digits(idx, p, d);
            c.reverse();
            c.push(1);
            c
        })
        .find(|f| fp_poly::is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

/// Dense polynomials over the prime field 𝔽_p, used only to pick and check
/// the extension modulus.
mod fp_poly {
    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv_mod(m[dm], p);
        while r.len() > dm {
            let shift = r.len() - 1 - dm;
            let c = r[r.len() - 1] * lead_inv % p;
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * mi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    /// z^(p^k) mod f.
    fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
        let mut x = rem(&[0, 1], f, p);
        for _ in 0..k {
            // x <- x^p mod f
            let (mut base, mut e, mut acc) = (x.clone(), p, vec![1u64]);
            while e > 0 {
                if e & 1 == 1 {
                    acc = rem(&mul(&acc, &base, p), f, p);
                }
                base = rem(&mul(&base, &base, p), f, p);
                e >>= 1;
            }
            x = acc;
        }
        x
    }

    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let d = f.len() - 1;
        if d == 1 {
            return true;
        }
        if d <= 3 {
            // No roots ⟺ irreducible for degree ≤ 3.
            return (0..p).all(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) != 0);
        }
        let z = vec![0u64, 1];
        if !sub(&frobenius_power(f, p, d), &z, p).is_empty() {
            return false;
        }
        let mut rest = d;
        let mut r = 2;
        while rest > 1 {
            if rest.is_multiple_of(r) {
                while rest.is_multiple_of(r) {
                    rest /= r;
                }
                let h = sub(&frobenius_power(f, p, d / r), &z, p);
                if gcd(f, &h, p).len() != 1 {
                    return false;
                }
            }
            r += 1;
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_z() {
        let f = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn f4_modulus_and_product() {
        let f = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // z * (z + 1) = 1
        let z = f.from_coeffs(&[0, 1]).unwrap();
        let z1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(z, z1), f.one());
    }

    #[test]
    fn f9_modulus_by_exhaustive_scan() {
        let f = FieldCtx::new(3, 2).unwrap();
        // z^2 + 1: scan of (c0, c1) tuples in lexicographic order.
        let mut first = None;
        'outer: for c0 in 0..3u64 {
            for c1 in 0..3u64 {
                let roots = (0..3u64).any(|x| (x * x + c1 * x + c0) % 3 == 0);
                if !roots {
                    first = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        assert_eq!(first.unwrap(), f.modulus());
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn degree_four_modulus_is_irreducible() {
        let f = FieldCtx::new(2, 4).unwrap();
        // (1,0,0,0) is (z+1)^4; the next tuple (1,0,0,1) is z^4 + z^3 + 1.
        assert_eq!(f.modulus(), &[1, 0, 0, 1, 1]);
        let g = f.from_coeffs(&[0, 1, 0, 0]).unwrap();
        // z generates F_16^*: order 15.
        assert_ne!(f.pow(g, 3), f.one());
        assert_ne!(f.pow(g, 5), f.one());
        assert_eq!(f.pow(g, 15), f.one());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldCtx::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::new(3, 0).unwrap_err(), Error::InvalidDegree(0));
        assert!(FieldCtx::from_order(6).is_err());
    }

    #[test]
    fn small_arithmetic() {
        let f3 = FieldCtx::new(3, 1).unwrap();
        assert_eq!(f3.mul(2.into(), 2.into()), f3.one());
        let f5 = FieldCtx::new(5, 1).unwrap();
        assert_eq!(f5.inv(3.into()).unwrap(), 2.into());
        assert_eq!(f5.inv(0.into()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn encode_decode() {
        let f9 = FieldCtx::new(3, 2).unwrap();
        let e = f9.decode(5).unwrap();
        assert_eq!(f9.coeffs(e), vec![2, 1]);
        assert_eq!(f9.decode(0).unwrap(), f9.zero());
        assert!(f9.decode(9).is_err());
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f2.decode(1).unwrap(), f2.one());
        for c in 0..9 {
            assert_eq!(f9.encode(f9.decode(c).unwrap()), c);
        }
    }

    #[test]
    fn frobenius_fixes_every_element() {
        for (p, d) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4), (3, 3), (3, 4)] {
            let f = FieldCtx::new(p, d).unwrap();
            assert!(f.order() <= 81);
            for a in f.elements() {
                assert_eq!(f.pow(a, f.order()), a, "p={p} d={d} a={a}");
            }
        }
    }

    #[test]
    fn untabled_field_agrees_with_axioms() {
        // 2^9 = 512 is above the table limit.
        let f = FieldCtx::new(2, 9).unwrap();
        let a = f.decode(300).unwrap();
        let b = f.decode(77).unwrap();
        let c = f.decode(511).unwrap();
        assert_eq!(
            f.mul(a, f.add(b, c)),
            f.add(f.mul(a, b), f.mul(a, c))
        );
        assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        assert_eq!(f.pow(a, 512), a);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
