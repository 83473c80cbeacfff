// Delta functions, the quadratic-non-residue indicator and the
// multiplicative functions `{1, …, n−1} → 𝔽_q`.

use std::fmt::Write;

use ffdyn::sequence::{
    enumerate_multiplicative, mult_proof_invariants, realize, theorem1_condition, SequenceKind,
    SequenceSpec,
};
use ffdyn::FieldCtx;

pub fn run_example() -> ffdyn::Result<String> {
    let f3 = FieldCtx::from_order(3)?;
    let mut out = String::new();

    let delta = realize(&SequenceSpec::new(SequenceKind::Delta(2), 5), &f3)?;
    writeln!(out, "delta:2, n=5 -> {:?}", delta.codes()).unwrap();
    let log = realize(&SequenceSpec::new(SequenceKind::ArithmeticLog, 7), &f3)?;
    writeln!(out, "arithlog, n=7 -> {:?}", log.codes()).unwrap();

    for spec in enumerate_multiplicative(7, &f3)? {
        let x = realize(&spec, &f3)?;
        writeln!(out, "{spec}, n=7 -> {:?}", x.codes()).unwrap();
    }

    let inv = mult_proof_invariants(&SequenceSpec::new(SequenceKind::Multiplicative(2.into()), 7), &f3)?;
    let h: Vec<u64> = inv.h.iter().map(|e| e.code()).collect();
    writeln!(out, "H = F*F^-1 mod y^7-1 has coefficients {h:?}").unwrap();

    for q in [2u64, 3, 4, 5] {
        let fq = FieldCtx::from_order(q)?;
        let holds: Vec<usize> = [5usize, 7, 11, 13]
            .into_iter()
            .filter(|&n| theorem1_condition(n, &fq).unwrap_or(false))
            .collect();
        writeln!(out, "q={q}: non-residue indicator invertible for n in {holds:?}").unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
