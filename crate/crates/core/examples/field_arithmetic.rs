// Arithmetic in 𝔽_9 = 𝔽_3[x]/(x² + 1): elements are integer codes
// `c0 + 3·c1` for `c0 + c1·x`.

use std::fmt::Write;

use ffdyn::FieldCtx;

pub fn run_example() -> ffdyn::Result<String> {
    let f = FieldCtx::new(3, 2)?;
    let mut out = String::new();
    writeln!(out, "F_{} with modulus coefficients {:?}", f.order(), f.modulus()).unwrap();

    let x = f.from_coeffs(&[0, 1])?;
    writeln!(out, "x = {x}, x^2 = {}", f.mul(x, x)).unwrap();

    let a = f.decode(5)?;
    let inv = f.inv(a)?;
    writeln!(out, "{a}^-1 = {inv}, check {a}*{inv} = {}", f.mul(a, inv)).unwrap();

    // The multiplicative group is cyclic of order 8.
    let generator = f
        .elements()
        .find(|&g| !g.is_zero() && (1..8).all(|k| f.pow(g, k) != f.one()))
        .expect("F_9^* is cyclic");
    writeln!(out, "smallest generator of F_9^*: {generator}").unwrap();

    // Frobenius a -> a^3 is an automorphism of order 2.
    let frob: Vec<u64> = f.elements().map(|e| f.pow(e, 3).code()).collect();
    writeln!(out, "Frobenius: {frob:?}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
