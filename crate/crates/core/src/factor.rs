//! Factorization of `y^n − 1` over 𝔽_q.
//!
//! With `n = p^m·n'` and `n' ⊥ p`, `y^n − 1 = (y^{n'} − 1)^{p^m}` and
//! `y^{n'} − 1` is squarefree, so it is split by distinct-degree factorization
//! followed by Cantor–Zassenhaus equal-degree splitting. Every irreducible
//! factor then carries the same exponent `p^m`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{Poly, PolyRing};

/// `y^n − 1 = Π P_j^{β_j}` with monic irreducible, pairwise distinct `P_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factors back out.
    pub fn expand(&self, ring: &PolyRing) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(), |acc, (p, e)| ring.mul(&acc, &ring.pow(p, *e as u64)))
    }
}

/// Sort key: degree first, then coefficient codes from the constant term up.
fn factor_order(a: &Poly, b: &Poly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.codes().cmp(&b.codes()))
}

pub fn factor_xn_minus_1(ring: &PolyRing, n: usize) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let p = ring.field().characteristic() as usize;
    let (mut n_prime, mut beta) = (n, 1u32);
    while n_prime % p == 0 {
        n_prime /= p;
        beta *= p as u32;
    }
    let squarefree = ring.xn_minus_1(n_prime);
    let mut irreducibles = Vec::new();
    for (block, degree) in distinct_degree(ring, &squarefree)? {
        let seed = seed_for(ring.field().order(), n, degree);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        equal_degree(ring, block, degree, &mut rng, &mut irreducibles)?;
    }
    irreducibles.sort_by(factor_order);
    let factors = irreducibles.into_iter().map(|f| (f, beta)).collect();
    let fact = Factorization { n, factors };
    debug_assert_eq!(fact.expand(ring), ring.xn_minus_1(n));
    Ok(fact)
}

fn seed_for(q: u64, n: usize, degree: usize) -> u64 {
    q.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (n as u64).wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
        ^ (degree as u64).wrapping_mul(0x1656_67B1_9E37_79F9)
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree: `(block, degree)` pairs.
fn distinct_degree(ring: &PolyRing, f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let q = BigUint::from(ring.field().order());
    let y = ring.var();
    let mut rest = ring.monic(f)?;
    let mut out = Vec::new();
    let mut h = ring.rem(&y, &rest)?;
    let mut i = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * i {
        // h = y^(q^i) mod rest
        h = ring.pow_mod(&h, &q, &rest)?;
        let g = ring.gcd(&ring.sub(&h, &y), &rest)?;
        if !g.is_one() {
            rest = ring.div_rem(&rest, &g)?.0;
            h = ring.rem(&h, &rest)?;
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, d));
    }
    Ok(out)
}

fn random_poly(ring: &PolyRing, below: usize, rng: &mut ChaCha8Rng) -> Poly {
    let q = ring.field().order();
    Poly::from_coeffs(
        (0..below)
            .map(|_| FieldElement::from(rng.gen_range(0..q)))
            .collect(),
    )
}

fn equal_degree(
    ring: &PolyRing,
    f: Poly,
    degree: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly>,
) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if n == degree {
        out.push(f);
        return Ok(());
    }
    let field = ring.field();
    let q = BigUint::from(field.order());
    loop {
        let a = random_poly(ring, n, rng);
        if a.degree().unwrap_or(0) < 1 {
            continue;
        }
        let candidate = if field.characteristic() == 2 {
            // Absolute trace Σ a^(2^i), i < log2(q)·degree.
            let steps = field.degree() as usize * degree;
            let mut term = ring.rem(&a, &f)?;
            let mut trace = term.clone();
            for _ in 1..steps {
                term = ring.mul_mod(&term, &term, &f)?;
                trace = ring.add(&trace, &term);
            }
            trace
        } else {
            let e = (q.pow(degree as u32) - 1u32) / 2u32;
            ring.sub(&ring.pow_mod(&a, &e, &f)?, &Poly::one())
        };
        if candidate.is_zero() {
            continue;
        }
        let g = ring.gcd(&candidate, &f)?;
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let other = ring.div_rem(&f, &g)?.0;
            equal_degree(ring, g, degree, rng, out)?;
            equal_degree(ring, other, degree, rng, out)?;
            return Ok(());
        }
    }
}
