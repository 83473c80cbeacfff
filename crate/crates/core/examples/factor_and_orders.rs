// Factor `y^n − 1` over 𝔽_q and read off the orders of the difference
// operator `y − 1` on every factor.

use std::fmt::Write;

use ffdyn::dynamics::factor_orders;
use ffdyn::{factor_xn_minus_1, CirculantAlgebra, FieldCtx};

pub fn run_example() -> ffdyn::Result<String> {
    let alg = CirculantAlgebra::new(FieldCtx::from_order(3)?, 12)?;
    let fact = factor_xn_minus_1(alg.ring(), 12)?;
    let mut out = String::new();
    for (p, beta) in fact.factors() {
        writeln!(out, "factor ({p})^{beta}").unwrap();
    }
    assert_eq!(fact.expand(alg.ring()), *alg.modulus());

    for fo in factor_orders(&alg, &alg.delta(), &fact)? {
        writeln!(out, "{fo}").unwrap();
    }

    // Factorizations over other fields: y^15 − 1 over 𝔽_4 splits into
    // linear and quadratic factors since 4^2 ≡ 1 (mod 15).
    let f4 = CirculantAlgebra::new(FieldCtx::from_order(4)?, 15)?;
    let fact = factor_xn_minus_1(f4.ring(), 15)?;
    let degrees: Vec<usize> = fact.factors().iter().map(|(p, _)| p.degree().unwrap()).collect();
    writeln!(out, "y^15-1 over F_4: factor degrees {degrees:?}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
