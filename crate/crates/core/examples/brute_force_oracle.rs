// Enumerate all `q^n` states of a small operator and compare with the
// decomposition computed from the factorization of `y^n − 1`.

use std::fmt::Write;

use ffdyn::dynamics::{brute_force_graph, decompose, TermOrder, DEFAULT_BRUTE_CAP};
use ffdyn::{CirculantAlgebra, Convention, FieldCtx};

pub fn run_example() -> ffdyn::Result<String> {
    let mut out = String::new();
    for (q, n, op) in [(2u64, 8usize, "delta"), (3, 6, "y^2+2*y"), (2, 12, "y^3+y+1")] {
        let alg = CirculantAlgebra::new(FieldCtx::from_order(q)?, n)?;
        let op = alg.parse_operator(op, Convention::Row)?;
        let fast = decompose(&alg, &op)?;
        let slow = brute_force_graph(&alg, &op, DEFAULT_BRUTE_CAP)?;
        let agree = fast.cycles == slow.cycles && fast.tree == slow.tree;
        writeln!(
            out,
            "q={q} n={n} op={op}: {} agree={agree}",
            fast.render(TermOrder::Ascending)
        )
        .unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
