//! Integer factorization for unit-group orders.
//!
//! Trial division strips every prime below [`TRIAL_BOUND`]; whatever is left
//! is certified prime with Miller–Rabin or split with Pollard's rho (Brent's
//! cycle detection), recursively.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

pub const TRIAL_BOUND: u64 = 1_000_000;

/// The first thirteen primes as Miller–Rabin bases are a deterministic test
/// for every n < 3.3·10^24.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Prime factorization as strictly increasing `(prime, exponent)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntFactorization {
    pairs: Vec<(BigUint, u32)>,
}

impl IntFactorization {
    pub fn pairs(&self) -> &[(BigUint, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.pairs.iter().map(|(p, _)| p)
    }

    pub fn product(&self) -> BigUint {
        self.pairs
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }
}

impl fmt::Display for IntFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Complete factorization of `n ≥ 1`; `1` gives the empty product.
pub fn factor(n: &BigUint) -> IntFactorization {
    assert!(!n.is_zero(), "cannot factor 0");
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();

    let mut push_small = |rest: &mut BigUint, f: u64| {
        let fb = BigUint::from(f);
        while (&*rest % &fb).is_zero() {
            *rest /= &fb;
            primes.push(fb.clone());
        }
    };
    push_small(&mut rest, 2);
    let mut f = 3u64;
    while f < TRIAL_BOUND {
        if rest.is_one() {
            break;
        }
        if BigUint::from(f) * BigUint::from(f) > rest {
            break;
        }
        push_small(&mut rest, f);
        f += 2;
    }

    if !rest.is_one() {
        split_large(rest, &mut primes);
    }
    primes.sort();
    let mut pairs: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match pairs.last_mut() {
            Some((last, e)) if *last == p => *e += 1,
            _ => pairs.push((p, 1)),
        }
    }
    IntFactorization { pairs }
}

fn split_large(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let mut c = 1u64;
    let d = loop {
        if let Some(d) = pollard_brent(&n, c) {
            break d;
        }
        c += 1;
    };
    let other = &n / &d;
    split_large(d, out);
    split_large(other, out);
}

/// Brent's variant of Pollard's rho with `x ↦ x² + c`. Returns a proper
/// divisor, or `None` when this `c` degenerates.
fn pollard_brent(n: &BigUint, c: u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let batch = 128u64;
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut g = BigUint::one();
    let mut q = BigUint::one();
    let mut r = 1u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        r *= 2;
    }
    if &g == n {
        // Backtrack one step at a time from the saved point.
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for &b in &MR_BASES {
            if small == b {
                return true;
            }
            if small % b == 0 {
                return false;
            }
        }
    } else if MR_BASES.iter().any(|&b| (n % b).is_zero()) {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
