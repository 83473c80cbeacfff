//! Polynomials over 𝔽_q.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// A polynomial in `y`; `coeffs[i]` is the coefficient of `y^i`.
///
/// Always normalized: the zero polynomial has no coefficients, otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c·y^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// `None` for the zero polynomial, which orders below every degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `y^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FieldElement::ONE)
    }

    /// Integer codes of the coefficients, low degree first.
    pub fn codes(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.code()).collect()
    }
}

/// Renders as `y^4+y^3+2*y+2`: descending degree, coefficient codes, unit
/// coefficients omitted; `0` for the zero polynomial.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c.code()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "y")?,
                (1, v) => write!(f, "{v}*y")?,
                (k, 1) => write!(f, "y^{k}")?,
                (k, v) => write!(f, "{v}*y^{k}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial arithmetic over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: FieldCtx,
}

impl PolyRing {
    pub fn new(field: FieldCtx) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn from_codes(&self, codes: &[u64]) -> Result<Poly> {
        let coeffs = codes
            .iter()
            .map(|&c| self.field.decode(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    /// `y`.
    pub fn var(&self) -> Poly {
        Poly::monomial(FieldElement::ONE, 1)
    }

    /// `y^n − 1`.
    pub fn xn_minus_1(&self, n: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[0] = self.field.neg(FieldElement::ONE);
        coeffs[n] = self.field.add(coeffs[n], FieldElement::ONE);
        Poly::from_coeffs(coeffs)
    }

    /// `1 + y + … + y^(n-1)`.
    pub fn all_ones(&self, n: usize) -> Poly {
        Poly::from_coeffs(vec![FieldElement::ONE; n])
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.field.add(a.coeff(i), b.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&c| self.field.neg(c)).collect())
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.field.sub(a.coeff(i), b.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, a: &Poly, c: FieldElement) -> Poly {
        Poly::from_coeffs(a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = &self.field;
        let mut out = vec![FieldElement::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division: `a = q·b + r` with `deg r < deg b`.
    pub fn div_rem(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv(b.coeffs[db])?;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut q = vec![FieldElement::ZERO; r.len() - db];
        for k in (db..r.len()).rev() {
            let c = f.mul(r[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = k - db;
            q[shift] = c;
            for (i, &bi) in b.coeffs.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, bi));
            }
        }
        r.truncate(db);
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.degree() < b.degree() && !b.is_zero() {
            return Ok(a.clone());
        }
        Ok(self.div_rem(a, b)?.1)
    }

    pub fn mul_mod(&self, a: &Poly, b: &Poly, m: &Poly) -> Result<Poly> {
        self.rem(&self.mul(a, b), m)
    }

    pub fn monic(&self, a: &Poly) -> Result<Poly> {
        let lead = a.leading().ok_or(Error::DivisionByZero)?;
        Ok(self.scale(a, self.field.inv(lead)?))
    }

    /// Monic gcd; `gcd(a, 0) = monic(a)`.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b)?;
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Inverse of `a` modulo `m`, if it exists.
    pub fn inv_mod(&self, a: &Poly, m: &Poly) -> Result<Poly> {
        // Extended Euclid tracking only the coefficient of a.
        let (mut r0, mut r1) = (m.clone(), self.rem(a, m)?);
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1)?;
            let s = self.sub(&s0, &self.mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return Err(Error::NotAUnit);
        }
        let c = self.field.inv(r0.coeffs[0])?;
        self.rem(&self.scale(&s0, c), m)
    }

    /// `a^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, a: &Poly, e: &BigUint, m: &Poly) -> Result<Poly> {
        if m.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidArgument(
                "modulus must have degree at least 1".into(),
            ));
        }
        let base = self.rem(a, m)?;
        let mut acc = Poly::one();
        for i in (0..e.bits()).rev() {
            acc = self.mul_mod(&acc, &acc, m)?;
            if e.bit(i) {
                acc = self.mul_mod(&acc, &base, m)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, a: &Poly, mut e: u64) -> Poly {
        let mut base = a.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, a: &Poly, x: FieldElement) -> FieldElement {
        a.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// Largest `k ≤ cap` such that `factor^k` divides `a`; the zero
    /// polynomial has valuation `cap`.
    pub fn valuation(&self, a: &Poly, factor: &Poly, cap: u32) -> Result<u32> {
        let mut a = a.clone();
        let mut k = 0;
        while k < cap {
            if a.is_zero() {
                return Ok(cap);
            }
            let (q, r) = self.div_rem(&a, factor)?;
            if !r.is_zero() {
                break;
            }
            a = q;
            k += 1;
        }
        Ok(k)
    }

    /// Parses `+`-separated monomials `c*y^k`, `y^k`, `c*y`, `y` or `c`, in
    /// any order. Coefficients are field codes in `[0, q)`; repeating a degree
    /// is an error.
    pub fn parse(&self, s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::parse(s, "empty polynomial"));
        }
        let mut terms: BTreeMap<usize, FieldElement> = BTreeMap::new();
        for raw in s.split('+') {
            let token = raw.trim();
            let (coeff, degree) = self.parse_monomial(token)?;
            if terms.insert(degree, coeff).is_some() {
                return Err(Error::parse(token, format!("duplicate term of degree {degree}")));
            }
        }
        let max = *terms.keys().next_back().expect("at least one term");
        let mut coeffs = vec![FieldElement::ZERO; max + 1];
        for (k, c) in terms {
            coeffs[k] = c;
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    fn parse_monomial(&self, token: &str) -> Result<(FieldElement, usize)> {
        let bad = |reason: &str| Error::parse(token, reason);
        if token.is_empty() {
            return Err(bad("empty term"));
        }
        let (coeff_part, var_part) = match token.split_once('*') {
            Some((c, v)) => (Some(c.trim()), Some(v.trim())),
            None if token.starts_with('y') => (None, Some(token)),
            None => (Some(token), None),
        };
        let coeff = match coeff_part {
            Some(c) => {
                let v: u64 = c.parse().map_err(|_| bad("coefficient is not an integer"))?;
                self.field
                    .decode(v)
                    .map_err(|_| bad("coefficient out of field range"))?
            }
            None => FieldElement::ONE,
        };
        let degree = match var_part {
            None => 0,
            Some("y") => 1,
            Some(v) => {
                let exp = v
                    .strip_prefix("y^")
                    .ok_or_else(|| bad("expected `y` or `y^k`"))?;
                exp.trim()
                    .parse()
                    .map_err(|_| bad("exponent is not a nonnegative integer"))?
            }
        };
        Ok((coeff, degree))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(q: u64) -> PolyRing {
        PolyRing::new(FieldCtx::from_order(q).unwrap())
    }

    #[test]
    fn product_expansion_over_f2() {
        let r = ring(2);
        let a = r.parse("y+1").unwrap();
        let b = r.parse("y^2+y+1").unwrap();
        assert_eq!(r.mul(&a, &b), r.parse("y^3+1").unwrap());
    }

    #[test]
    fn remainder_and_square_over_f3() {
        let r = ring(3);
        let ym1 = r.parse("y+2").unwrap();
        assert!(r.rem(&r.xn_minus_1(5), &ym1).unwrap().is_zero());
        assert_eq!(r.mul(&ym1, &ym1), r.parse("y^2+y+1").unwrap());
    }

    #[test]
    fn div_rem_degree_bound_and_reconstruction() {
        let r = ring(5);
        let a = r.parse("3*y^7+y^3+4*y+2").unwrap();
        let b = r.parse("2*y^3+y+1").unwrap();
        let (q, rem) = r.div_rem(&a, &b).unwrap();
        assert!(rem.degree() < b.degree());
        assert_eq!(r.add(&r.mul(&q, &b), &rem), a);
        assert_eq!(r.div_rem(&a, &Poly::zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn gcd_cases() {
        let r3 = ring(3);
        let ones = r3.all_ones(7);
        assert!(r3.gcd(&Poly::one(), &ones).unwrap().is_one());
        let g = r3
            .gcd(&r3.parse("y+2").unwrap(), &r3.parse("y^2+2").unwrap())
            .unwrap();
        assert_eq!(g, r3.parse("y+2").unwrap());
        let yy = r3.parse("y^2+y").unwrap();
        assert!(r3.gcd(&yy, &r3.xn_minus_1(5)).unwrap().is_one());

        // Over F_2, y+1 divides both y + y^2 and y^5 + 1.
        let r2 = ring(2);
        let g = r2
            .gcd(&r2.parse("y^2+y").unwrap(), &r2.xn_minus_1(5))
            .unwrap();
        assert_eq!(g, r2.parse("y+1").unwrap());

        assert!(r2.gcd(&Poly::zero(), &Poly::zero()).is_err());
        let a = r3.parse("2*y+1").unwrap();
        assert_eq!(r3.gcd(&a, &Poly::zero()).unwrap(), r3.monic(&a).unwrap());
    }

    #[test]
    fn modpow_from_worked_example() {
        let r = ring(3);
        let ym1 = r.parse("y+2").unwrap();
        let m = r.parse("y^2+2*y+1").unwrap(); // (y+1)^2
        assert!(r.pow_mod(&ym1, &3u32.into(), &m).unwrap().is_one());
        assert!(!r.pow_mod(&ym1, &2u32.into(), &m).unwrap().is_one());
        assert!(r.pow_mod(&ym1, &0u32.into(), &m).unwrap().is_one());
    }

    #[test]
    fn inverse_mod() {
        let r = ring(3);
        let m = r.parse("y^2+1").unwrap();
        let a = r.parse("y+2").unwrap();
        let inv = r.inv_mod(&a, &m).unwrap();
        assert!(r.mul_mod(&a, &inv, &m).unwrap().is_one());
        let m2 = r.xn_minus_1(4);
        assert_eq!(r.inv_mod(&a, &m2).unwrap_err(), Error::NotAUnit);
    }

    #[test]
    fn valuation_counts_powers() {
        let r = ring(3);
        let p = r.parse("y+1").unwrap();
        let a = r.mul(&r.pow(&p, 2), &r.parse("y^2+1").unwrap());
        assert_eq!(r.valuation(&a, &p, 5).unwrap(), 2);
        assert_eq!(r.valuation(&a, &p, 1).unwrap(), 1);
        assert_eq!(r.valuation(&Poly::zero(), &p, 3).unwrap(), 3);
    }

    #[test]
    fn parse_and_render() {
        let r = ring(3);
        let p = r.parse("2 + y^4 + y^3").unwrap();
        assert_eq!(p.to_string(), "y^4+y^3+2");
        assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        assert_eq!(r.parse("2*y^2+y").unwrap().to_string(), "2*y^2+y");
        assert_eq!(r.parse("0").unwrap(), Poly::zero());
        assert_eq!(Poly::zero().to_string(), "0");
        assert!(matches!(r.parse("y^2+2*y^2"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("3*y"), Err(Error::Parse { token, .. }) if token == "3*y"));
        assert!(matches!(r.parse("x^2"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn degree_sentinel_orders_below_integers() {
        assert!(Poly::zero().degree() < Poly::one().degree());
        assert_eq!(Poly::one().degree(), Some(0));
    }
}
