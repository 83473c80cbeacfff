//! Preperiod and period of the orbit `seed, op·seed, op²·seed, …`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::circulant::{CirculantAlgebra, CycPoly};
use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::order::lifted_orders;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitStats {
    pub preperiod: u64,
    /// At least 1.
    pub period: BigUint,
}

impl OrbitStats {
    pub fn new(preperiod: u64, period: impl Into<BigUint>) -> Self {
        OrbitStats {
            preperiod,
            period: period.into(),
        }
    }
}

impl fmt::Display for OrbitStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "preperiod {} period {}", self.preperiod, self.period)
    }
}

/// Brent cycle detection on `op^m·seed mod (y^n − 1)`. Fails with
/// [`Error::BudgetExceeded`] after `budget` applications of `op`.
pub fn orbit_stats_iterative(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    seed: &CycPoly,
    budget: u64,
) -> Result<OrbitStats> {
    let mut steps = 0u64;
    let mut step = |x: &CycPoly| -> Result<CycPoly> {
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExceeded(budget));
        }
        alg.mul(op, x)
    };

    let (mut power, mut lam) = (1u64, 1u64);
    let mut tortoise = seed.clone();
    let mut hare = step(seed)?;
    while tortoise != hare {
        if power == lam {
            tortoise = hare.clone();
            power *= 2;
            lam = 0;
        }
        hare = step(&hare)?;
        lam += 1;
    }

    let mut tortoise = seed.clone();
    let mut hare = seed.clone();
    for _ in 0..lam {
        hare = step(&hare)?;
    }
    let mut mu = 0u64;
    while tortoise != hare {
        tortoise = step(&tortoise)?;
        hare = step(&hare)?;
        mu += 1;
    }
    Ok(OrbitStats::new(mu, lam))
}

/// Orbit statistics of one block `𝔽_q[y]/(P^β)`.
pub(crate) fn local_stats(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    seed: &CycPoly,
    factor: &crate::poly::Poly,
    beta: u32,
) -> Result<OrbitStats> {
    let ring = alg.ring();
    let v = ring.valuation(op.poly(), factor, beta)?;
    let w = ring.valuation(seed.poly(), factor, beta)?;
    if v >= 1 {
        return Ok(OrbitStats::new((beta - w).div_ceil(v) as u64, 1u32));
    }
    if w == beta {
        return Ok(OrbitStats::new(0, 1u32));
    }
    let orders = lifted_orders(ring, op.poly(), factor, beta - w)?;
    let period = orders.last().cloned().unwrap_or_else(BigUint::one);
    Ok(OrbitStats::new(0, period))
}

/// Exact stats from the factorization: per block `P^β` the seed lives in
/// `P^w·(𝔽_q[y]/P^β)`; nilpotent blocks contribute a transient of
/// `⌈(β − w)/v⌉`, unit blocks a period equal to the order of `op` modulo
/// `P^(β−w)`. Blocks combine by max and lcm.
pub fn orbit_stats_algebraic(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    seed: &CycPoly,
    fact: &Factorization,
) -> Result<OrbitStats> {
    if op.convention() != seed.convention() {
        return Err(Error::ConventionMismatch);
    }
    if op.n() != alg.n() || seed.n() != alg.n() {
        return Err(Error::DimensionMismatch(op.n().max(seed.n()), alg.n()));
    }
    let mut total = OrbitStats::new(0, 1u32);
    for (factor, beta) in fact.factors() {
        let local = local_stats(alg, op, seed, factor, *beta)?;
        total.preperiod = total.preperiod.max(local.preperiod);
        total.period = total.period.lcm(&local.period);
    }
    Ok(total)
}

/// Stats of the identity seed, which dominate every other orbit.
pub fn max_orbit_stats(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    fact: &Factorization,
) -> Result<OrbitStats> {
    orbit_stats_algebraic(alg, op, &alg.one(op.convention()), fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::Convention;
    use crate::factor::factor_xn_minus_1;
    use crate::field::FieldCtx;

    fn setup(q: u64, n: usize) -> (CirculantAlgebra, Factorization) {
        let alg = CirculantAlgebra::new(FieldCtx::from_order(q).unwrap(), n).unwrap();
        let fact = factor_xn_minus_1(alg.ring(), n).unwrap();
        (alg, fact)
    }

    #[test]
    fn difference_operator_q3_n12() {
        let (alg, fact) = setup(3, 12);
        let d = alg.delta();
        let one = alg.one(Convention::Row);
        let want = OrbitStats::new(3, 24u32);
        assert_eq!(orbit_stats_iterative(&alg, &d, &one, DEFAULT_BUDGET).unwrap(), want);
        assert_eq!(orbit_stats_algebraic(&alg, &d, &one, &fact).unwrap(), want);
        let locals: Vec<OrbitStats> = fact
            .factors()
            .iter()
            .map(|(p, b)| local_stats(&alg, &d, &one, p, *b).unwrap())
            .collect();
        // Factors sorted as y+1, y+2, y^2+1.
        assert_eq!(
            locals,
            vec![
                OrbitStats::new(0, 3u32),
                OrbitStats::new(3, 1u32),
                OrbitStats::new(0, 24u32)
            ]
        );
    }

    #[test]
    fn small_cases() {
        let (alg, fact) = setup(2, 3);
        let one = alg.one(Convention::Row);
        assert_eq!(
            orbit_stats_iterative(&alg, &alg.delta(), &one, 100).unwrap(),
            OrbitStats::new(1, 3u32)
        );
        assert_eq!(
            orbit_stats_algebraic(&alg, &one, &alg.delta(), &fact).unwrap(),
            OrbitStats::new(0, 1u32)
        );
        let (alg, fact) = setup(2, 5);
        assert_eq!(
            max_orbit_stats(&alg, &alg.delta(), &fact).unwrap(),
            OrbitStats::new(1, 15u32)
        );
        assert_eq!(
            max_orbit_stats(&alg, &alg.shift(), &fact).unwrap().preperiod,
            0
        );
    }

    #[test]
    fn degenerate_operators_and_seeds() {
        let (alg, fact) = setup(3, 4);
        let zero = alg.element(&crate::poly::Poly::zero(), Convention::Row);
        let one = alg.one(Convention::Row);
        assert_eq!(
            orbit_stats_algebraic(&alg, &zero, &one, &fact).unwrap(),
            OrbitStats::new(1, 1u32)
        );
        assert_eq!(
            orbit_stats_algebraic(&alg, &zero, &zero, &fact).unwrap(),
            OrbitStats::new(0, 1u32)
        );
        let wrapped = alg.element(alg.modulus(), Convention::Row);
        assert!(wrapped.is_zero());
        assert_eq!(
            orbit_stats_algebraic(&alg, &alg.delta(), &wrapped, &fact).unwrap(),
            OrbitStats::new(0, 1u32)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let (alg, _) = setup(3, 12);
        let one = alg.one(Convention::Row);
        assert_eq!(
            orbit_stats_iterative(&alg, &alg.delta(), &one, 10).unwrap_err(),
            Error::BudgetExceeded(10)
        );
    }

    #[test]
    fn convention_must_agree() {
        let (alg, fact) = setup(2, 3);
        let col = alg.one(Convention::Column);
        assert_eq!(
            orbit_stats_algebraic(&alg, &alg.delta(), &col, &fact).unwrap_err(),
            Error::ConventionMismatch
        );
    }
}
