// Components of the graph of `Δ` on 𝔽_q^n for prime `n`, rows computed in
// parallel.

use std::fmt::Write;

use ffdyn::cli::table_row;
use ffdyn::dynamics::TermOrder;
use ffdyn::FieldCtx;
use rayon::prelude::*;

pub fn run_example() -> ffdyn::Result<String> {
    let mut out = String::new();
    for q in [2u64, 3] {
        let field = FieldCtx::from_order(q)?;
        let ns = [5usize, 7, 11, 13, 17, 41];
        let rows = ns
            .par_iter()
            .map(|&n| table_row(&field, n))
            .collect::<ffdyn::Result<Vec<_>>>()?;
        writeln!(out, "q={q}").unwrap();
        for (n, (count, d)) in ns.iter().zip(rows) {
            writeln!(out, "{n} {count} {}", d.render(TermOrder::Descending)).unwrap();
        }
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
