// Circulant matrices as polynomials modulo `y^n − 1`, in both the row and
// the column convention, and the integer determinant of the
// quadratic-non-residue circulant.

use std::fmt::Write;

use ffdyn::circulant::{circulant_det_integer, legendre_det_formula};
use ffdyn::sequence::{realize, SequenceKind, SequenceSpec};
use ffdyn::{CirculantAlgebra, Convention, FieldCtx, StateVector};

pub fn run_example() -> ffdyn::Result<String> {
    let f = FieldCtx::from_order(5)?;
    let alg = CirculantAlgebra::new(f.clone(), 4)?;
    let mut out = String::new();

    let a = alg.parse_operator("2*y^3+y+1", Convention::Row)?;
    let b = alg.parse_operator("3*y^2+4", Convention::Row)?;
    let prod = alg.mul(&a, &b)?;
    assert_eq!(prod, alg.matrix_oracle_product(&a, &b)?);
    writeln!(out, "A*B = {prod} (row convention)").unwrap();
    writeln!(out, "same product in column convention: {}", alg.to_column(&prod)).unwrap();

    for row in alg.matrix(&a) {
        let codes: Vec<u64> = row.iter().map(|e| e.code()).collect();
        writeln!(out, "  {codes:?}").unwrap();
    }

    let x = StateVector::from_codes(&f, &[1, 2, 3, 4])?;
    writeln!(out, "A x = {:?}", alg.apply_operator(&a, &x)?.codes()).unwrap();
    writeln!(out, "A invertible: {}", alg.is_nondegenerate(&a)?).unwrap();
    writeln!(out, "delta invertible: {}", alg.is_nondegenerate(&alg.delta())?).unwrap();

    for n in [5u64, 7, 11, 13] {
        let spec = SequenceSpec::new(SequenceKind::ArithmeticLog, n as usize);
        let column: Vec<i64> = realize(&spec, &FieldCtx::from_order(2)?)?
            .codes()
            .iter()
            .map(|&c| c as i64)
            .collect();
        let det = circulant_det_integer(&column);
        assert_eq!(det, legendre_det_formula(n)?);
        writeln!(out, "det of the non-residue circulant, n={n}: {det}").unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
