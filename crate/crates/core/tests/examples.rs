macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(field_arithmetic, "field_arithmetic.rs");
example!(factor_and_orders, "factor_and_orders.rs");
example!(circulant_algebra, "circulant_algebra.rs");
example!(sequences, "sequences.rs");
example!(decompose_graph, "decompose_graph.rs");
example!(classify_sequences, "classify_sequences.rs");
example!(brute_force_oracle, "brute_force_oracle.rs");
example!(difference_tables, "difference_tables.rs");

#[test]
fn field_arithmetic_runs() {
    let out = field_arithmetic::run_example().unwrap();
    assert!(out.contains("x^2 = 2"));
}

#[test]
fn factor_and_orders_runs() {
    let out = factor_and_orders::run_example().unwrap();
    assert!(out.contains("(y^2+1)^3 orders=8,24,24"));
    assert!(out.contains("factor degrees [1, 1, 1, 2, 2, 2, 2, 2, 2]"));
}

#[test]
fn circulant_algebra_runs() {
    let out = circulant_algebra::run_example().unwrap();
    assert!(out.contains("delta invertible: false"));
    assert!(out.contains("n=13: 4374"));
}

#[test]
fn sequences_runs() {
    let out = sequences::run_example().unwrap();
    assert!(out.contains("mult:2, n=7 -> [1, 1, 2, 1, 2, 2, 0]"));
}

#[test]
fn decompose_graph_runs() {
    let out = decompose_graph::run_example().unwrap();
    assert!(out.starts_with("3(O_1*T_27)+8(O_3*T_27)+3(O_8*T_27)+818(O_24*T_27)\n"));
    assert!(out.contains("vertices per level: 1, 2, 6, 18"));
}

#[test]
fn classify_sequences_runs() {
    let out = classify_sequences::run_example().unwrap();
    assert!(out.contains("op=delta f=mult:2 -> almost_most"));
    assert!(out.contains("op=B*delta f=mult:2 -> most"));
}

#[test]
fn brute_force_oracle_runs() {
    let out = brute_force_oracle::run_example().unwrap();
    assert_eq!(out.matches("agree=true").count(), 3);
}

#[test]
fn difference_tables_runs() {
    let out = difference_tables::run_example().unwrap();
    assert!(out.contains("41 26214476 26214400(O_41943*T_2)+75(O_13981*T_2)+(O_1*T_2)"));
}
