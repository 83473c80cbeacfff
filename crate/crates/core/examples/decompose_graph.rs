// The functional graph of `Δ = δ − I` on 𝔽_3^12: cycles, trees and the
// JSON form.

use std::fmt::Write;

use ffdyn::dynamics::{decompose, GraphDecomposition, TermOrder};
use ffdyn::{CirculantAlgebra, FieldCtx};

pub fn run_example() -> ffdyn::Result<String> {
    let alg = CirculantAlgebra::new(FieldCtx::from_order(3)?, 12)?;
    let d = decompose(&alg, &alg.delta())?;
    let mut out = String::new();
    writeln!(out, "{}", d.render(TermOrder::Ascending)).unwrap();
    writeln!(out, "components: {}", d.component_count()).unwrap();
    writeln!(out, "tree levels: {}, cumulative sizes: {:?}", d.tree.levels, d.tree.cum_counts).unwrap();
    let sizes: Vec<String> = d.tree.level_sizes().iter().map(|s| s.to_string()).collect();
    writeln!(out, "vertices per level: {}", sizes.join(", ")).unwrap();

    let json = d.to_json();
    let back = GraphDecomposition::from_json(&json)?;
    assert_eq!(back.render(TermOrder::Ascending), d.render(TermOrder::Ascending));
    writeln!(out, "{json}").unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> ffdyn::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
