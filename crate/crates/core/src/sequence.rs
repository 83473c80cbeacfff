//! Distinguished sequences `x_i = f(i)`, `i = 1..n`.

use std::fmt;

use num_integer::Integer;

use crate::circulant::StateVector;
use crate::error::{Error, Result};
use crate::field::{is_prime_u64, FieldCtx, FieldElement};
use crate::poly::{Poly, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// `0` at position `k`, `1` elsewhere.
    Delta(usize),
    /// Indicator of quadratic non-residues mod `n`, with `f(n) = 0`.
    ArithmeticLog,
    /// The multiplicative function with `f(a) = g` at the smallest primitive
    /// root `a` mod `n`, and `f(n) = 0`.
    Multiplicative(FieldElement),
    /// `f ≡ 1` on `1..n−1`, `f(n) = 0`.
    TrivialMultiplicative,
    Explicit(StateVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    pub kind: SequenceKind,
    pub n: usize,
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SequenceKind::Delta(k) => write!(f, "delta:{k}"),
            SequenceKind::ArithmeticLog => write!(f, "arithlog"),
            SequenceKind::Multiplicative(g) => write!(f, "mult:{g}"),
            SequenceKind::TrivialMultiplicative => write!(f, "trivial"),
            SequenceKind::Explicit(x) => {
                let codes: Vec<String> = x.codes().iter().map(|c| c.to_string()).collect();
                write!(f, "explicit:{}", codes.join(","))
            }
        }
    }
}

impl SequenceSpec {
    pub fn new(kind: SequenceKind, n: usize) -> Self {
        SequenceSpec { kind, n }
    }

    /// Parses `delta:k`, `arithlog`, `mult:g`, `trivial` or
    /// `explicit:c1,c2,…` (field codes).
    pub fn parse(s: &str, n: usize, field: &FieldCtx) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let int_arg = |a: Option<&str>| -> Result<u64> {
            let a = a.ok_or_else(|| Error::parse(s, "missing argument"))?;
            a.trim()
                .parse()
                .map_err(|_| Error::parse(a, "expected a nonnegative integer"))
        };
        let kind = match head {
            "delta" => SequenceKind::Delta(int_arg(arg)? as usize),
            "arithlog" => SequenceKind::ArithmeticLog,
            "trivial" => SequenceKind::TrivialMultiplicative,
            "mult" => SequenceKind::Multiplicative(field.decode(int_arg(arg)?).map_err(|_| {
                Error::parse(arg.unwrap_or_default(), "value outside the field")
            })?),
            "explicit" => {
                let arg = arg.ok_or_else(|| Error::parse(s, "missing entries"))?;
                let codes = arg
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::parse(t, "expected a field code"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let x = StateVector::from_codes(field, &codes)
                    .map_err(|e| Error::parse(arg, e.to_string()))?;
                SequenceKind::Explicit(x)
            }
            _ => return Err(Error::parse(head, "unknown sequence kind")),
        };
        Ok(SequenceSpec { kind, n })
    }

    pub fn is_trivial_multiplicative(&self, field: &FieldCtx) -> bool {
        match self.kind {
            SequenceKind::TrivialMultiplicative => true,
            SequenceKind::Multiplicative(g) => g == field.one(),
            _ => false,
        }
    }

    pub fn is_multiplicative(&self) -> bool {
        matches!(
            self.kind,
            SequenceKind::Multiplicative(_) | SequenceKind::TrivialMultiplicative
        )
    }
}

fn require_odd_prime(n: usize, what: &str) -> Result<()> {
    if n < 3 || !is_prime_u64(n as u64) {
        return Err(Error::InvalidSequence(format!(
            "{what} needs n to be an odd prime, got n = {n}"
        )));
    }
    Ok(())
}

/// Smallest generator of `(ℤ/n)^*` for an odd prime `n`.
pub fn smallest_primitive_root(n: u64) -> u64 {
    let m = n - 1;
    let mut primes = Vec::new();
    let mut rest = m;
    let mut f = 2;
    while f * f <= rest {
        if rest.is_multiple_of(f) {
            primes.push(f);
            while rest.is_multiple_of(f) {
                rest /= f;
            }
        }
        f += 1;
    }
    if rest > 1 {
        primes.push(rest);
    }
    (2..n)
        .find(|&a| primes.iter().all(|&l| pow_mod_u64(a, m / l, n) != 1))
        .unwrap_or(1)
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

pub fn is_quadratic_residue(i: u64, n: u64) -> bool {
    !i.is_multiple_of(n) && pow_mod_u64(i, (n - 1) / 2, n) == 1
}

/// Values `f(1), …, f(n−1)` of the multiplicative function sending the
/// smallest primitive root to `g`.
fn multiplicative_values(n: usize, g: FieldElement, field: &FieldCtx) -> Vec<FieldElement> {
    let a = smallest_primitive_root(n as u64);
    let mut values = vec![FieldElement::ZERO; n];
    let (mut power, mut value) = (1u64, field.one());
    for _ in 0..n - 1 {
        values[power as usize] = value;
        power = power * a % n as u64;
        value = field.mul(value, g);
    }
    values[1..].to_vec()
}

/// Builds the vector `(f(1), …, f(n))`.
pub fn realize(spec: &SequenceSpec, field: &FieldCtx) -> Result<StateVector> {
    let n = spec.n;
    let (zero, one) = (field.zero(), field.one());
    let entries = match &spec.kind {
        SequenceKind::Delta(k) => {
            if *k < 1 || *k > n {
                return Err(Error::InvalidSequence(format!(
                    "delta position must satisfy 1 <= k <= n, got k = {k}, n = {n}"
                )));
            }
            (1..=n).map(|i| if i == *k { zero } else { one }).collect()
        }
        SequenceKind::ArithmeticLog => {
            require_odd_prime(n, "the arithmetic logarithm")?;
            (1..=n)
                .map(|i| {
                    if i == n || is_quadratic_residue(i as u64, n as u64) {
                        zero
                    } else {
                        one
                    }
                })
                .collect()
        }
        SequenceKind::Multiplicative(g) => {
            check_multiplicative(n, field)?;
            if field.pow(*g, (n - 1) as u64) != one {
                return Err(Error::InvalidSequence(format!(
                    "g = {g} does not satisfy g^(n-1) = 1 in F_{}",
                    field.order()
                )));
            }
            let mut v = multiplicative_values(n, *g, field);
            v.push(zero);
            v
        }
        SequenceKind::TrivialMultiplicative => {
            require_odd_prime(n, "a multiplicative function")?;
            let mut v = vec![one; n - 1];
            v.push(zero);
            v
        }
        SequenceKind::Explicit(x) => {
            if x.len() != n {
                return Err(Error::InvalidSequence(format!(
                    "explicit vector has {} entries, expected n = {n}",
                    x.len()
                )));
            }
            x.entries().to_vec()
        }
    };
    Ok(StateVector::new(entries))
}

fn check_multiplicative(n: usize, field: &FieldCtx) -> Result<()> {
    require_odd_prime(n, "a multiplicative function")?;
    if n as u64 == field.characteristic() {
        return Err(Error::InvalidSequence(format!(
            "multiplicative functions need n != p, got n = p = {n}"
        )));
    }
    Ok(())
}

/// All multiplicative functions `{1..n−1} → 𝔽_q`, one per `(n−1)`-th root of
/// unity; the trivial one comes first as [`SequenceKind::TrivialMultiplicative`].
pub fn enumerate_multiplicative(n: usize, field: &FieldCtx) -> Result<Vec<SequenceSpec>> {
    check_multiplicative(n, field)?;
    let mut out = vec![SequenceSpec::new(SequenceKind::TrivialMultiplicative, n)];
    out.extend(
        field
            .elements()
            .filter(|&g| g != field.one() && field.pow(g, (n - 1) as u64) == field.one())
            .map(|g| SequenceSpec::new(SequenceKind::Multiplicative(g), n)),
    );
    debug_assert_eq!(
        out.len() as u64,
        ((n - 1) as u64).gcd(&(field.order() - 1))
    );
    Ok(out)
}

/// Whether the quadratic-non-residue indicator is most complicated for every
/// translation-invariant operator: with `n = 4k+1`, `p ∤ 2k`; with
/// `n = 4k+3`, `p ∤ (k+1)` and `p ∤ (2k+1)`.
pub fn theorem1_condition(n: usize, field: &FieldCtx) -> Result<bool> {
    require_odd_prime(n, "the criterion")?;
    let p = field.characteristic();
    let k = n as u64 / 4;
    Ok(if n % 4 == 1 {
        !(2 * k).is_multiple_of(p)
    } else {
        !(k + 1).is_multiple_of(p) && !(2 * k + 1).is_multiple_of(p)
    })
}

/// `H(y) = F(y)·F⁻(y) mod (y^n − 1)` for a nontrivial multiplicative `f`,
/// with `F = Σ_{i=1}^{n−1} f(i) y^i` and `F⁻` built from `1/f(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductInvariants {
    /// `h(0), …, h(n−1)`.
    pub h: Vec<FieldElement>,
    /// `f(n−1)`.
    pub f_minus_one: FieldElement,
}

/// Computes `H` and checks `h(1) = … = h(n−1)`, `h(1) = −f(−1)`,
/// `h(0) − h(1) = n·f(−1) ≠ 0` and `Σ h(i) = 0`.
pub fn mult_proof_invariants(spec: &SequenceSpec, field: &FieldCtx) -> Result<ProductInvariants> {
    let SequenceKind::Multiplicative(g) = spec.kind else {
        return Err(Error::InvalidSequence(format!(
            "{spec} is not a multiplicative function"
        )));
    };
    if g == field.one() {
        return Err(Error::InvalidSequence(
            "the trivial multiplicative function has no such invariants".into(),
        ));
    }
    let n = spec.n;
    let x = realize(spec, field)?;
    let ring = PolyRing::new(field.clone());
    let values = &x.entries()[..n - 1];
    let mut fc = vec![FieldElement::ZERO];
    fc.extend_from_slice(values);
    let mut gc = vec![FieldElement::ZERO];
    for &v in values {
        gc.push(field.inv(v)?);
    }
    let prod = ring.mul(&Poly::from_coeffs(fc), &Poly::from_coeffs(gc));
    let mut h = vec![FieldElement::ZERO; n];
    for (i, &c) in prod.coeffs().iter().enumerate() {
        h[i % n] = field.add(h[i % n], c);
    }

    let f_minus_one = values[n - 2];
    let fail = |what: &str| Err(Error::Internal(format!("{what} fails for {spec}")));
    if h[1..].iter().any(|&v| v != h[1]) {
        return fail("h(1) = ... = h(n-1)");
    }
    if h[1] != field.neg(f_minus_one) {
        return fail("h(1) = -f(-1)");
    }
    let diff = field.sub(h[0], h[1]);
    if diff != field.mul(field.from_int(n as i64), f_minus_one) || diff.is_zero() {
        return fail("h(0) - h(1) = n f(-1) != 0");
    }
    if h.iter().fold(field.zero(), |acc, &v| field.add(acc, v)) != field.zero() {
        return fail("sum of h(i) = 0");
    }
    Ok(ProductInvariants { h, f_minus_one })
}

pub fn odd_primes_up_to(limit: usize) -> Vec<usize> {
    (3..=limit).filter(|&n| is_prime_u64(n as u64)).collect()
}
