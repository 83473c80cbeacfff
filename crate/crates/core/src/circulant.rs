//! Circulant matrices as residues modulo `y^n − 1`.
//!
//! A circulant `A` is identified with a polynomial in one of two ways:
//!
//! * column convention: `A(y) = Σ a_i y^(i−1)` from the first column;
//! * row convention: `A(y) = Σ a_i y^i` from the first row.
//!
//! Both are algebra isomorphisms onto `𝔽_q[y]/(y^n − 1)`, related by the
//! involution `A(y) ↦ y^n·A(1/y)`. Row convention is canonical here, so the
//! cyclic shift `δ` is `y` and the difference operator `Δ = δ − I` is `y − 1`.
//! State vectors always enter through the column convention, because the
//! circulant built from a vector has that vector as its first column.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{is_prime_u64, FieldCtx, FieldElement};
use crate::poly::{Poly, PolyRing};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    Row,
    Column,
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "row" => Ok(Convention::Row),
            "column" | "col" => Ok(Convention::Column),
            _ => Err(Error::parse(s, "expected `row` or `column`")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Row => "row",
            Convention::Column => "column",
        })
    }
}

/// An element of `𝔽_q[y]/(y^n − 1)` tagged with the convention it encodes a
/// circulant in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycPoly {
    n: usize,
    poly: Poly,
    convention: Convention,
}

impl CycPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// A vector `(x_1, …, x_n)` of field values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StateVector(Vec<FieldElement>);

impl StateVector {
    pub fn new(entries: Vec<FieldElement>) -> Self {
        StateVector(entries)
    }

    pub fn from_codes(field: &FieldCtx, codes: &[u64]) -> Result<Self> {
        codes
            .iter()
            .map(|&c| field.decode(c))
            .collect::<Result<Vec<_>>>()
            .map(StateVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn codes(&self) -> Vec<u64> {
        self.0.iter().map(|e| e.code()).collect()
    }
}

/// The algebra `𝔽_q[y]/(y^n − 1)`.
#[derive(Clone, Debug)]
pub struct CirculantAlgebra {
    ring: PolyRing,
    n: usize,
    modulus: Poly,
}

impl CirculantAlgebra {
    pub fn new(field: FieldCtx, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let ring = PolyRing::new(field);
        let modulus = ring.xn_minus_1(n);
        Ok(CirculantAlgebra { ring, n, modulus })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> &FieldCtx {
        self.ring.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `y^n − 1`.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Reduces `poly` modulo `y^n − 1` by folding exponents mod n.
    pub fn element(&self, poly: &Poly, convention: Convention) -> CycPoly {
        let f = self.field();
        let mut coeffs = vec![FieldElement::ZERO; self.n];
        for (i, &c) in poly.coeffs().iter().enumerate() {
            let k = i % self.n;
            coeffs[k] = f.add(coeffs[k], c);
        }
        CycPoly {
            n: self.n,
            poly: Poly::from_coeffs(coeffs),
            convention,
        }
    }

    pub fn one(&self, convention: Convention) -> CycPoly {
        self.element(&Poly::one(), convention)
    }

    /// `Δ = δ − I`, i.e. `y − 1` in row convention.
    pub fn delta(&self) -> CycPoly {
        let y = self.ring.var();
        self.element(&self.ring.sub(&y, &Poly::one()), Convention::Row)
    }

    /// The cyclic shift `δ`, i.e. `y` in row convention.
    pub fn shift(&self) -> CycPoly {
        self.element(&self.ring.var(), Convention::Row)
    }

    /// `I + δ + … + δ^(n−1)`, the all-ones matrix.
    pub fn all_ones(&self) -> CycPoly {
        self.element(&self.ring.all_ones(self.n), Convention::Row)
    }

    /// Parses an operator: `delta`, `shift`, `allones`, or a polynomial
    /// string read in the given convention.
    pub fn parse_operator(&self, s: &str, convention: Convention) -> Result<CycPoly> {
        match s.trim() {
            "delta" => Ok(self.delta()),
            "shift" => Ok(self.shift()),
            "allones" => Ok(self.all_ones()),
            other => {
                let p = self.ring.parse(other)?;
                Ok(self.element(&p, convention))
            }
        }
    }

    /// The automorphism `A(y) ↦ y^n·A(1/y) mod (y^n − 1)`: coefficient `k`
    /// moves to `−k mod n`. An involution.
    fn flip(&self, p: &Poly) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; self.n];
        for (k, &c) in p.coeffs().iter().enumerate() {
            coeffs[(self.n - k % self.n) % self.n] = c;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn convert(&self, a: &CycPoly, to: Convention) -> CycPoly {
        if a.convention == to {
            return a.clone();
        }
        CycPoly {
            n: a.n,
            poly: self.flip(&a.poly),
            convention: to,
        }
    }

    pub fn to_row(&self, a: &CycPoly) -> CycPoly {
        self.convert(a, Convention::Row)
    }

    pub fn to_column(&self, a: &CycPoly) -> CycPoly {
        self.convert(a, Convention::Column)
    }

    fn check(&self, a: &CycPoly) -> Result<()> {
        if a.n != self.n {
            return Err(Error::DimensionMismatch(a.n, self.n));
        }
        Ok(())
    }

    /// Product of circulants as `A(y)·B(y) mod (y^n − 1)`.
    pub fn mul(&self, a: &CycPoly, b: &CycPoly) -> Result<CycPoly> {
        self.check(a)?;
        self.check(b)?;
        if a.convention != b.convention {
            return Err(Error::ConventionMismatch);
        }
        Ok(self.element(&self.ring.mul(&a.poly, &b.poly), a.convention))
    }

    pub fn add(&self, a: &CycPoly, b: &CycPoly) -> Result<CycPoly> {
        if a.convention != b.convention {
            return Err(Error::ConventionMismatch);
        }
        Ok(self.element(&self.ring.add(&a.poly, &b.poly), a.convention))
    }

    pub fn vector_to_cycpoly(&self, x: &StateVector, convention: Convention) -> Result<CycPoly> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(x.len(), self.n));
        }
        let column = CycPoly {
            n: self.n,
            poly: Poly::from_coeffs(x.0.clone()),
            convention: Convention::Column,
        };
        Ok(self.convert(&column, convention))
    }

    pub fn cycpoly_to_vector(&self, a: &CycPoly) -> StateVector {
        let column = self.to_column(a);
        StateVector((0..self.n).map(|i| column.poly.coeff(i)).collect())
    }

    /// `x ↦ A·x` through the column-convention product.
    pub fn apply_operator(&self, op: &CycPoly, x: &StateVector) -> Result<StateVector> {
        self.check(op)?;
        let xs = self.vector_to_cycpoly(x, Convention::Column)?;
        let image = self.mul(&self.to_column(op), &xs)?;
        Ok(self.cycpoly_to_vector(&image))
    }

    /// `true` iff the circulant is invertible, i.e. `gcd(A(y), y^n − 1) = 1`.
    pub fn is_nondegenerate(&self, a: &CycPoly) -> Result<bool> {
        self.check(a)?;
        if a.is_zero() {
            return Ok(false);
        }
        Ok(self.ring.gcd(&a.poly, &self.modulus)?.is_one())
    }

    /// The explicit `n × n` matrix, `m[i][j]`.
    pub fn matrix(&self, a: &CycPoly) -> Vec<Vec<FieldElement>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match a.convention {
                        Convention::Column => a.poly.coeff((i + n - j) % n),
                        Convention::Row => a.poly.coeff((j + n - i) % n),
                    })
                    .collect()
            })
            .collect()
    }

    /// Reads a circulant back from its first row or column.
    pub fn from_matrix(&self, m: &[Vec<FieldElement>], convention: Convention) -> CycPoly {
        let coeffs = match convention {
            Convention::Column => m.iter().map(|row| row[0]).collect(),
            Convention::Row => m[0].clone(),
        };
        CycPoly {
            n: self.n,
            poly: Poly::from_coeffs(coeffs),
            convention,
        }
    }

    /// Product computed by explicit matrix multiplication; an oracle for
    /// [`CirculantAlgebra::mul`].
    pub fn matrix_oracle_product(&self, a: &CycPoly, b: &CycPoly) -> Result<CycPoly> {
        if a.convention != b.convention {
            return Err(Error::ConventionMismatch);
        }
        let f = self.field();
        let (ma, mb) = (self.matrix(a), self.matrix(b));
        let n = self.n;
        let prod: Vec<Vec<FieldElement>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(FieldElement::ZERO, |acc, k| {
                            f.add(acc, f.mul(ma[i][k], mb[k][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(self.from_matrix(&prod, a.convention))
    }

    /// Rank of the explicit circulant by Gaussian elimination over 𝔽_q.
    pub fn matrix_rank(&self, a: &CycPoly) -> usize {
        rank(self.field(), self.matrix(a))
    }
}

pub fn rank(f: &FieldCtx, mut m: Vec<Vec<FieldElement>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = f.inv(m[r][c]).expect("pivot is nonzero");
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = f.mul(m[i][c], inv);
            let pivot_row = m[r].clone();
            for (x, &pv) in m[i][c..].iter_mut().zip(&pivot_row[c..]) {
                *x = f.sub(*x, f.mul(factor, pv));
            }
        }
        r += 1;
    }
    r
}

/// Exact determinant of the integer circulant with the given first column,
/// by fraction-free (Bareiss) elimination.
pub fn circulant_det_integer(column: &[i64]) -> BigInt {
    let n = column.len();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(column[(i + n - j) % n])).collect())
        .collect();
    bareiss_det(&mut m)
}

pub fn bareiss_det(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Closed form for the determinant of the circulant whose first column is
/// the quadratic-non-residue indicator mod `n` (zero at `n`):
/// `k^((n−1)/2)·2k` for `n = 4k+1`, `(k+1)^((n−1)/2)·(2k+1)` for `n = 4k+3`.
pub fn legendre_det_formula(n: u64) -> Result<BigInt> {
    if n < 3 || !is_prime_u64(n) {
        return Err(Error::InvalidArgument(format!("{n} is not an odd prime")));
    }
    let k = BigInt::from(n / 4);
    let half = ((n - 1) / 2) as u32;
    Ok(if n % 4 == 1 {
        num_traits::pow(k.clone(), half as usize) * (k * 2)
    } else {
        num_traits::pow(&k + 1, half as usize) * (k * 2 + 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(q: u64, n: usize) -> CirculantAlgebra {
        CirculantAlgebra::new(FieldCtx::from_order(q).unwrap(), n).unwrap()
    }

    fn qnr_column(n: u64) -> Vec<i64> {
        // Brute-force squares.
        let squares: Vec<u64> = (1..n).map(|i| i * i % n).collect();
        (1..=n)
            .map(|i| i64::from(i != n && !squares.contains(&i)))
            .collect()
    }

    #[test]
    fn column_indexing() {
        let a = algebra(3, 5);
        let x = StateVector::from_codes(a.field(), &[0, 1, 1, 0, 0]).unwrap();
        let f = a.vector_to_cycpoly(&x, Convention::Column).unwrap();
        assert_eq!(f.poly().to_string(), "y^2+y");
        let e1 = StateVector::from_codes(a.field(), &[1, 0, 0, 0, 0]).unwrap();
        assert!(a.vector_to_cycpoly(&e1, Convention::Column).unwrap().poly().is_one());
        let zero = StateVector::from_codes(a.field(), &[0; 5]).unwrap();
        assert!(a.vector_to_cycpoly(&zero, Convention::Column).unwrap().is_zero());
    }

    #[test]
    fn products_reduce_mod_xn_minus_1() {
        let a = algebra(2, 3);
        let y1 = a.element(&a.ring().parse("y+1").unwrap(), Convention::Row);
        assert_eq!(a.mul(&y1, &y1).unwrap().poly().to_string(), "y^2+1");
        let one = a.one(Convention::Row);
        assert_eq!(a.mul(&y1, &one).unwrap(), y1);
        let col = a.to_column(&y1);
        assert_eq!(a.mul(&y1, &col).unwrap_err(), Error::ConventionMismatch);
    }

    #[test]
    fn twelfth_power_matches_modpow() {
        let a = algebra(3, 12);
        let b = a.element(&a.ring().parse("y+2").unwrap(), Convention::Row);
        let mut acc = a.one(Convention::Row);
        for _ in 0..12 {
            acc = a.mul(&acc, &b).unwrap();
        }
        let oracle = a
            .ring()
            .pow_mod(b.poly(), &12u32.into(), a.modulus())
            .unwrap();
        assert_eq!(acc.poly(), &oracle);
    }

    #[test]
    fn named_operators_as_matrices() {
        let a = algebra(5, 6);
        let id = a.matrix(&a.one(Convention::Row));
        for (i, row) in id.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, if i == j { FieldElement::ONE } else { FieldElement::ZERO });
            }
        }
        // δ x = (x_2, …, x_n, x_1): row i has its 1 in column i+1.
        let shift = a.matrix(&a.shift());
        for (i, row) in shift.iter().enumerate() {
            assert_eq!(row[(i + 1) % 6], FieldElement::ONE);
        }
        assert_eq!(a.from_matrix(&shift, Convention::Row), a.shift());
    }

    #[test]
    fn convention_flip_is_involution() {
        let a = algebra(3, 7);
        let p = a.element(&a.ring().parse("2*y^5+y^2+1").unwrap(), Convention::Column);
        let row = a.to_row(&p);
        assert_eq!(a.to_column(&row), p);
        // δ in column convention is y^(n-1).
        assert_eq!(a.to_column(&a.shift()).poly().to_string(), "y^6");
    }

    #[test]
    fn difference_operator_on_vectors() {
        let a = algebra(2, 5);
        let x = StateVector::from_codes(a.field(), &[0, 1, 1, 0, 0]).unwrap();
        let y = a.apply_operator(&a.delta(), &x).unwrap();
        assert_eq!(y.codes(), vec![1, 0, 1, 0, 0]);
        let c = StateVector::from_codes(a.field(), &[1; 5]).unwrap();
        assert_eq!(a.apply_operator(&a.delta(), &c).unwrap().codes(), vec![0; 5]);
        assert_eq!(a.apply_operator(&a.one(Convention::Row), &x).unwrap(), x);
    }

    #[test]
    fn nondegeneracy_examples() {
        let a3 = algebra(3, 5);
        let f = a3.element(&a3.ring().parse("y+y^2").unwrap(), Convention::Column);
        assert!(a3.is_nondegenerate(&f).unwrap());
        let a2 = algebra(2, 5);
        let f = a2.element(&a2.ring().parse("y+y^2").unwrap(), Convention::Column);
        assert!(!a2.is_nondegenerate(&f).unwrap());
        assert!(!a2.is_nondegenerate(&a2.element(&Poly::zero(), Convention::Row)).unwrap());
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(circulant_det_integer(&[0, 1, 1, 0, 0]), BigInt::from(2));
        assert_eq!(circulant_det_integer(&qnr_column(7)), BigInt::from(24));
        assert_eq!(circulant_det_integer(&[0, 0, 0]), BigInt::zero());
        assert_eq!(circulant_det_integer(&[3]), BigInt::from(3));
        // Permutation matrix of a 2-cycle has determinant −1.
        assert_eq!(circulant_det_integer(&[0, 1]), BigInt::from(-1));
    }

    #[test]
    fn determinant_formula_values() {
        assert_eq!(legendre_det_formula(5).unwrap(), BigInt::from(2));
        assert_eq!(legendre_det_formula(7).unwrap(), BigInt::from(24));
        assert_eq!(legendre_det_formula(13).unwrap(), BigInt::from(4374));
        assert_eq!(
            circulant_det_integer(&qnr_column(13)),
            legendre_det_formula(13).unwrap()
        );
        assert!(legendre_det_formula(9).is_err());
        assert!(legendre_det_formula(2).is_err());
    }
}
