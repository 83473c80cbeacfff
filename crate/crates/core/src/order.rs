//! Multiplicative orders in `𝔽_q[y]/(m)`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intfactor;
use crate::poly::{Poly, PolyRing};

/// Unit-group order of `𝔽_q[y]/(P^i)` for irreducible `P` of degree `deg`:
/// `q^(i·deg) − q^((i−1)·deg)`.
pub fn unit_group_order(q: u64, deg: usize, i: u32) -> BigUint {
    assert!(i >= 1);
    let q = BigUint::from(q);
    let hi = q.pow(i * deg as u32);
    let lo = q.pow((i - 1) * deg as u32);
    hi - lo
}

/// Exact order of the unit `a` modulo `modulus`, given the order of the unit
/// group. Starts from `group_order` and strips each prime factor while the
/// power stays `1`.
pub fn multiplicative_order(
    ring: &PolyRing,
    a: &Poly,
    modulus: &Poly,
    group_order: &BigUint,
) -> Result<BigUint> {
    let a = ring.rem(a, modulus)?;
    if a.is_zero() || !ring.gcd(&a, modulus)?.is_one() {
        return Err(Error::NotAUnit);
    }
    if modulus.degree() == Some(0) {
        return Ok(BigUint::one());
    }
    if !ring.pow_mod(&a, group_order, modulus)?.is_one() {
        return Err(Error::InvalidArgument(format!(
            "{group_order} is not a multiple of the order of {a} mod {modulus}"
        )));
    }
    let mut order = group_order.clone();
    for (prime, exp) in intfactor::factor(group_order).pairs() {
        for _ in 0..*exp {
            let candidate = &order / prime;
            if ring.pow_mod(&a, &candidate, modulus)?.is_one() {
                order = candidate;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

/// Order modulo `P^j` from the order modulo `P`:
/// `base_order · p^⌈log_p j⌉`.
///
/// Exact when `a^base_order − 1` is divisible by `P` exactly once, which holds
/// for `y − 1` and for `y` modulo factors of `y^n − 1`.
pub fn order_lift(base_order: &BigUint, j: u32, p: u64) -> BigUint {
    order_lift_with_excess(base_order, j, 1, p)
}

/// General lift: if `a^base_order = 1 + P^e·u` with `P ∤ u`, the order
/// modulo `P^j` is `base_order · p^t` with `t` minimal such that `p^t·e ≥ j`.
pub fn order_lift_with_excess(base_order: &BigUint, j: u32, excess: u32, p: u64) -> BigUint {
    assert!(j >= 1 && excess >= 1);
    let mut factor = BigUint::one();
    let mut reach = excess as u64;
    while reach < j as u64 {
        factor *= p;
        reach *= p;
    }
    base_order * factor
}

/// Orders of `a` modulo `P, P^2, …, P^β` computed once at exponent 1 and
/// lifted. `a` must be a unit modulo `P`.
pub fn lifted_orders(
    ring: &PolyRing,
    a: &Poly,
    factor: &Poly,
    beta: u32,
) -> Result<Vec<BigUint>> {
    let q = ring.field().order();
    let deg = factor.degree().unwrap_or(0);
    let base = multiplicative_order(ring, a, factor, &unit_group_order(q, deg, 1))?;
    if beta == 1 {
        return Ok(vec![base]);
    }
    let full = ring.pow(factor, beta as u64);
    let residue = ring.sub(&ring.pow_mod(a, &base, &full)?, &Poly::one());
    let excess = ring.valuation(&residue, factor, beta)?;
    let p = ring.field().characteristic();
    Ok((1..=beta)
        .map(|j| {
            if j <= excess {
                base.clone()
            } else {
                order_lift_with_excess(&base, j, excess, p)
            }
        })
        .collect())
}

/// Orders modulo `P^j` computed directly in each quotient ring.
pub fn direct_orders(
    ring: &PolyRing,
    a: &Poly,
    factor: &Poly,
    beta: u32,
) -> Result<Vec<BigUint>> {
    let q = ring.field().order();
    let deg = factor.degree().unwrap_or(0);
    (1..=beta)
        .map(|j| {
            let m = ring.pow(factor, j as u64);
            multiplicative_order(ring, a, &m, &unit_group_order(q, deg, j))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;

    fn ring(q: u64) -> PolyRing {
        PolyRing::new(FieldCtx::from_order(q).unwrap())
    }

    #[test]
    fn worked_example_orders() {
        let r = ring(3);
        let ym1 = r.parse("y+2").unwrap();
        let y2p1 = r.parse("y^2+1").unwrap();
        assert_eq!(multiplicative_order(&r, &ym1, &y2p1, &8u32.into()).unwrap(), 8u32.into());
        let yp1 = r.parse("y+1").unwrap();
        assert_eq!(multiplicative_order(&r, &ym1, &yp1, &2u32.into()).unwrap(), 1u32.into());
        let quartic = r.parse("y^4+y^3+y^2+y+1").unwrap();
        assert_eq!(
            multiplicative_order(&r, &ym1, &quartic, &80u32.into()).unwrap(),
            80u32.into()
        );
    }

    #[test]
    fn worked_example_full_chains() {
        let r = ring(3);
        let ym1 = r.parse("y+2").unwrap();
        let to_u = |v: Vec<BigUint>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let yp1 = r.parse("y+1").unwrap();
        assert_eq!(to_u(direct_orders(&r, &ym1, &yp1, 3).unwrap()), ["1", "3", "3"]);
        assert_eq!(to_u(lifted_orders(&r, &ym1, &yp1, 3).unwrap()), ["1", "3", "3"]);
        let y2p1 = r.parse("y^2+1").unwrap();
        assert_eq!(to_u(direct_orders(&r, &ym1, &y2p1, 3).unwrap()), ["8", "24", "24"]);
        assert_eq!(to_u(lifted_orders(&r, &ym1, &y2p1, 3).unwrap()), ["8", "24", "24"]);
    }

    #[test]
    fn refinement_steps_for_72() {
        // Order of y-1 mod (y^2+1)^2 over F_3 is 24: 72/2 fails, 72/3 works.
        let r = ring(3);
        let ym1 = r.parse("y+2").unwrap();
        let m = r.pow(&r.parse("y^2+1").unwrap(), 2);
        assert!(!r.pow_mod(&ym1, &36u32.into(), &m).unwrap().is_one());
        assert!(r.pow_mod(&ym1, &24u32.into(), &m).unwrap().is_one());
        assert!(!r.pow_mod(&ym1, &8u32.into(), &m).unwrap().is_one());
        assert_eq!(multiplicative_order(&r, &ym1, &m, &72u32.into()).unwrap(), 24u32.into());
    }

    #[test]
    fn lift_formula() {
        assert_eq!(order_lift(&1u32.into(), 2, 3), 3u32.into());
        assert_eq!(order_lift(&8u32.into(), 3, 3), 24u32.into());
        assert_eq!(order_lift(&5u32.into(), 1, 7), 5u32.into());
        assert_eq!(order_lift(&1u32.into(), 4, 2), 4u32.into());
        assert_eq!(order_lift(&1u32.into(), 5, 2), 8u32.into());
        assert_eq!(order_lift_with_excess(&1u32.into(), 4, 2, 2), 2u32.into());
    }

    #[test]
    fn lift_with_excess_handles_deep_units() {
        // a = 1 + (y+1)^2 is trivial mod (y+1) and deep in the filtration.
        let r = ring(2);
        let p1 = r.parse("y+1").unwrap();
        let a = r.add(&Poly::one(), &r.pow(&p1, 2));
        let lifted = lifted_orders(&r, &a, &p1, 4).unwrap();
        let direct = direct_orders(&r, &a, &p1, 4).unwrap();
        assert_eq!(lifted, direct);
        assert_eq!(order_lift(&1u32.into(), 4, 2), 4u32.into()); // naive lift differs
        assert_eq!(direct[3], 2u32.into());
    }

    #[test]
    fn non_units_are_rejected() {
        let r = ring(3);
        let m = r.parse("y^2+2").unwrap();
        let a = r.parse("y+2").unwrap();
        assert_eq!(
            multiplicative_order(&r, &a, &m, &8u32.into()).unwrap_err(),
            Error::NotAUnit
        );
    }

    #[test]
    fn group_order_closed_form() {
        assert_eq!(unit_group_order(3, 1, 1), 2u32.into());
        assert_eq!(unit_group_order(3, 1, 3), 18u32.into());
        assert_eq!(unit_group_order(3, 2, 2), 72u32.into());
        assert_eq!(unit_group_order(3, 2, 3), 648u32.into());
    }
}
