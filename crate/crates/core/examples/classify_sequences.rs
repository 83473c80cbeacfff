// Is a sequence the most complicated one for an operator? Compares its
// orbit with the identity orbit, which has the largest preperiod and period.

use std::fmt::Write;

use ffdyn::dynamics::classify;
use ffdyn::sequence::{SequenceKind, SequenceSpec};
use ffdyn::{CirculantAlgebra, Convention, FieldCtx};

pub fn run_example() -> ffdyn::Result<String> {
    let mut out = String::new();
    let alg = CirculantAlgebra::new(FieldCtx::from_order(3)?, 7)?;
    let f = SequenceSpec::new(SequenceKind::Multiplicative(2.into()), 7);

    let r = classify(&alg, &alg.delta(), &f)?;
    writeln!(out, "q=3 n=7 op=delta f=mult:2 -> {}", r.verdict).unwrap();

    // B·Δ with B sharing a factor with 1 + y + … + y^6.
    let b = alg.parse_operator("y^6+y^5+y^4+y^3+y^2+y+1", Convention::Column)?;
    let op = alg.mul(&b, &alg.to_column(&alg.delta()))?;
    let r = classify(&alg, &op, &f)?;
    writeln!(out, "q=3 n=7 op=B*delta f=mult:2 -> {}", r.verdict).unwrap();

    for q in [2u64, 3] {
        let alg = CirculantAlgebra::new(FieldCtx::from_order(q)?, 5)?;
        let r = classify(&alg, &alg.delta(), &SequenceSpec::new(SequenceKind::ArithmeticLog, 5))?;
        writeln!(out, "q={q} n=5 op=delta f=arithlog ->").unwrap();
        writeln!(out, "{r}").unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
