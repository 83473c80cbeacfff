use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

use ffdyn::dynamics::{
    cycle_sum_product, decompose_with, max_orbit_stats, orbit_stats_algebraic,
    orbit_stats_iterative, CycleSum, GraphDecomposition, DEFAULT_BUDGET,
};
use ffdyn::order::{direct_orders, lifted_orders};
use ffdyn::sequence::{enumerate_multiplicative, realize};
use ffdyn::{
    factor_xn_minus_1, CirculantAlgebra, Convention, CycPoly, FieldCtx, FieldElement, Poly,
    StateVector,
};

const ORDERS: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 25];

fn field(q: u64) -> FieldCtx {
    FieldCtx::from_order(q).unwrap()
}

fn poly(f: &FieldCtx, raw: &[u64]) -> Poly {
    Poly::from_coeffs(raw.iter().map(|&c| FieldElement::from(c % f.order())).collect())
}

fn element(alg: &CirculantAlgebra, raw: &[u64], conv: Convention) -> CycPoly {
    alg.element(&poly(alg.field(), raw), conv)
}

/// `(q, n, three coefficient vectors of length n)`.
fn setup(qs: &'static [u64], max_n: usize) -> impl Strategy<Value = (u64, usize, Vec<u64>, Vec<u64>, Vec<u64>)> {
    (prop::sample::select(qs), 1..=max_n).prop_flat_map(|(q, n)| {
        let v = || prop::collection::vec(any::<u64>(), n);
        (Just(q), Just(n), v(), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn circulant_product_is_polynomial_product((q, n, a, b, x) in setup(&ORDERS, 10)) {
        let alg = CirculantAlgebra::new(field(q), n).unwrap();
        for conv in [Convention::Row, Convention::Column] {
            let (a, b) = (element(&alg, &a, conv), element(&alg, &b, conv));
            prop_assert_eq!(alg.mul(&a, &b).unwrap(), alg.matrix_oracle_product(&a, &b).unwrap());
            prop_assert_eq!(alg.mul(&a, &b).unwrap(), alg.mul(&b, &a).unwrap());
        }
        let a = element(&alg, &a, Convention::Row);
        let b = element(&alg, &b, Convention::Row);
        let x = StateVector::new(poly(alg.field(), &x).coeffs().iter().copied()
            .chain(std::iter::repeat(FieldElement::ZERO)).take(n).collect());
        let ab = alg.mul(&a, &b).unwrap();
        let lhs = alg.apply_operator(&ab, &x).unwrap();
        let rhs = alg.apply_operator(&a, &alg.apply_operator(&b, &x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(alg.to_row(&alg.to_column(&a)), a);
    }

    #[test]
    fn algebraic_orbit_matches_iteration((q, n, op, seed, _) in setup(&[2, 3], 12)) {
        let alg = CirculantAlgebra::new(field(q), n).unwrap();
        let fact = factor_xn_minus_1(alg.ring(), n).unwrap();
        let op = element(&alg, &op, Convention::Column);
        let seed = element(&alg, &seed, Convention::Column);
        let fast = orbit_stats_algebraic(&alg, &op, &seed, &fact).unwrap();
        let slow = orbit_stats_iterative(&alg, &op, &seed, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(&fast, &slow);
        let max = max_orbit_stats(&alg, &op, &fact).unwrap();
        prop_assert!(fast.preperiod <= max.preperiod);
        prop_assert!(max.period.is_multiple_of(&fast.period));
    }

    #[test]
    fn decomposition_agrees_with_identity_orbit((q, n, op, _, _) in setup(&ORDERS, 14)) {
        let alg = CirculantAlgebra::new(field(q), n).unwrap();
        let fact = factor_xn_minus_1(alg.ring(), n).unwrap();
        prop_assert_eq!(fact.expand(alg.ring()), alg.modulus().clone());
        let op = element(&alg, &op, Convention::Row);
        let d = decompose_with(&alg, &op, &fact).unwrap();
        let max = max_orbit_stats(&alg, &op, &fact).unwrap();
        prop_assert_eq!(d.cycles.max_len(), Some(&max.period));
        prop_assert_eq!(d.tree.levels, max.preperiod);
        prop_assert_eq!(
            d.cycles.points() * d.tree.size(),
            BigUint::from(q).pow(n as u32)
        );
        prop_assert!(d.tree.cum_counts.windows(2).all(|w| w[0] < w[1]));
        let back = GraphDecomposition::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn row_and_column_readings_give_isomorphic_graphs((q, n, op, _, _) in setup(&ORDERS, 12)) {
        let alg = CirculantAlgebra::new(field(q), n).unwrap();
        let fact = factor_xn_minus_1(alg.ring(), n).unwrap();
        let row = element(&alg, &op, Convention::Row);
        let col = alg.to_column(&row);
        let a = decompose_with(&alg, &row, &fact).unwrap();
        let b = decompose_with(&alg, &col, &fact).unwrap();
        prop_assert_eq!(a.cycles, b.cycles);
        prop_assert_eq!(a.tree, b.tree);
    }

    #[test]
    fn lifted_orders_match_direct((q, n, op, _, _) in setup(&[2, 3, 4, 5], 18)) {
        let alg = CirculantAlgebra::new(field(q), n).unwrap();
        let ring = alg.ring();
        let fact = factor_xn_minus_1(ring, n).unwrap();
        let op = poly(alg.field(), &op);
        for (p, beta) in fact.factors() {
            if ring.valuation(&op, p, 1).unwrap() == 0 {
                prop_assert_eq!(
                    lifted_orders(ring, &op, p, *beta).unwrap(),
                    direct_orders(ring, &op, p, *beta).unwrap()
                );
            }
        }
    }

    #[test]
    fn polynomial_division((q, _n, a, b, _) in setup(&ORDERS, 12)) {
        let f = field(q);
        let ring = ffdyn::PolyRing::new(f.clone());
        let (a, b) = (poly(&f, &a), poly(&f, &b));
        prop_assume!(!b.is_zero());
        let (quo, rem) = ring.div_rem(&a, &b).unwrap();
        prop_assert_eq!(ring.add(&ring.mul(&quo, &b), &rem), a.clone());
        prop_assert!(rem.degree() < b.degree() || rem.is_zero());
        let g = ring.gcd(&a, &b).unwrap();
        prop_assert!(ring.rem(&a, &g).unwrap().is_zero());
        prop_assert!(ring.rem(&b, &g).unwrap().is_zero());
        prop_assert!(g.is_monic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(q in prop::sample::select(&ORDERS[..]), a: u64, b: u64, c: u64) {
        let f = field(q);
        let (a, b, c) = (f.decode(a % q).unwrap(), f.decode(b % q).unwrap(), f.decode(c % q).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.pow(a, q - 1), f.one());
        }
    }

    #[test]
    fn cycle_sums_multiply_point_counts(
        a in prop::collection::vec((1u64..50, 1u64..20), 1..5),
        b in prop::collection::vec((1u64..50, 1u64..20), 1..5),
    ) {
        let build = |v: &[(u64, u64)]| {
            let mut s = CycleSum::new();
            for &(m, c) in v {
                s.add(m.into(), c.into());
            }
            s
        };
        let (a, b) = (build(&a), build(&b));
        let ab = cycle_sum_product(&a, &b);
        prop_assert_eq!(&ab, &cycle_sum_product(&b, &a));
        prop_assert_eq!(ab.points(), a.points() * b.points());
        prop_assert_eq!(cycle_sum_product(&a, &CycleSum::unit()), a);
    }

    #[test]
    fn multiplicative_functions(
        q in prop::sample::select(&[2u64, 3, 4, 5, 7, 8, 9][..]),
        n in prop::sample::select(&[3usize, 5, 7, 11, 13, 17, 19][..]),
    ) {
        let f = field(q);
        prop_assume!(n as u64 != f.characteristic());
        let specs = enumerate_multiplicative(n, &f).unwrap();
        prop_assert_eq!(specs.len() as u64, ((n - 1) as u64).gcd(&(q - 1)));
        for spec in specs {
            let v = realize(&spec, &f).unwrap();
            let x = |i: usize| v.entries()[i - 1];
            prop_assert_eq!(x(1), f.one());
            for i in 1..n {
                for j in 1..n {
                    prop_assert_eq!(x(i * j % n), f.mul(x(i), x(j)));
                }
            }
        }
    }
}
