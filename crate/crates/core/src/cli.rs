//! The `ffdyn` command line.
//!
//! Exit codes: 0 success, 1 a verification case or table row failed, 2 usage
//! or parse error, 3 internal invariant violation.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::json;

use crate::circulant::{CirculantAlgebra, Convention, CycPoly};
use crate::dynamics::{
    brute_cap_from_env, classify_with, decompose_with, factor_orders, max_orbit_stats,
    orbit_stats_iterative, ComplexityReport, GraphDecomposition, TermOrder,
};
use crate::error::{Error, Result};
use crate::factor::factor_xn_minus_1;
use crate::field::FieldCtx;
use crate::sequence::SequenceSpec;
use crate::verify::{self, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ffdyn",
    version,
    about = "Dynamics of translation-invariant linear operators over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cycles and trees of the functional graph of an operator.
    Decompose(DecomposeArgs),
    /// Factorization of y^n-1 with the operator's orders on each factor.
    Orders(OperatorArgs),
    /// Whether a sequence is most / almost most complicated for an operator.
    Classify(ClassifyArgs),
    /// Decompositions of the difference operator for a list of n.
    Table(TableArgs),
    /// Runs a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Field order (a prime power).
    #[arg(long, conflicts_with_all = ["p", "d"])]
    q: Option<u64>,
    /// Field characteristic.
    #[arg(long, requires = "d")]
    p: Option<u64>,
    /// Extension degree.
    #[arg(long, requires = "p")]
    d: Option<u32>,
}

impl FieldArgs {
    fn field(&self) -> Result<FieldCtx> {
        match (self.q, self.p, self.d) {
            (Some(q), _, _) => FieldCtx::from_order(q),
            (None, Some(p), Some(d)) => FieldCtx::new(p, d),
            _ => Err(Error::InvalidArgument("give --q, or --p with --d".into())),
        }
    }
}

#[derive(Args, Debug)]
struct OperatorArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Dimension.
    #[arg(long)]
    n: usize,
    /// `delta`, `shift`, `allones`, or a polynomial such as `2*y^3+y+1`.
    #[arg(long, default_value = "delta")]
    op: String,
    /// How a polynomial operator encodes its circulant.
    #[arg(long, default_value = "row")]
    convention: String,
}

impl OperatorArgs {
    fn build(&self) -> Result<(CirculantAlgebra, CycPoly)> {
        let field = self.field.field()?;
        let alg = CirculantAlgebra::new(field, self.n)?;
        let convention: Convention = self.convention.parse()?;
        let op = alg.parse_operator(&self.op, convention)?;
        Ok((alg, op))
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Asc,
    Desc,
}

impl From<OrderArg> for TermOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Asc => TermOrder::Ascending,
            OrderArg::Desc => TermOrder::Descending,
        }
    }
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[command(flatten)]
    operator: OperatorArgs,
    /// Term order by cycle length.
    #[arg(long, value_enum, default_value = "asc")]
    order: OrderArg,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    operator: OperatorArgs,
    /// `delta:k`, `arithlog`, `mult:g`, `trivial` or `explicit:c1,c2,...`.
    #[arg(long)]
    seq: String,
    /// Also iterate the orbits up to this many steps and compare.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Comma-separated dimensions; defaults to the odd primes up to 47.
    #[arg(long, value_delimiter = ',')]
    n_list: Option<Vec<usize>>,
    /// Worker threads; defaults to the number of processors.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "desc")]
    order: OrderArg,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Theorem1,
    Theorem2,
    Remark4,
    Oracle,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// Comma-separated field orders.
    #[arg(long, value_delimiter = ',')]
    q_set: Option<Vec<u64>>,
    /// Largest dimension.
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest state space for enumeration; overrides FFDYN_BRUTE_CAP.
    #[arg(long)]
    cap: Option<u64>,
    /// Random operators per case.
    #[arg(long)]
    draws: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// `q:n` pairs for remark4.
    #[arg(long, value_delimiter = ',')]
    pairs: Option<Vec<String>>,
    #[arg(long)]
    jobs: Option<usize>,
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Decompose(a) => cmd_decompose(&a, out),
        Command::Orders(a) => cmd_orders(&a, out),
        Command::Classify(a) => cmd_classify(&a, out),
        Command::Table(a) => cmd_table(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
    }
}

fn cmd_decompose(a: &DecomposeArgs, out: &mut dyn Write) -> Result<i32> {
    let (alg, op) = a.operator.build()?;
    let fact = factor_xn_minus_1(alg.ring(), alg.n())?;
    let mut d = decompose_with(&alg, &op, &fact)?;
    d.op = a.operator.op.clone();
    if a.json {
        writeln!(out, "{}", d.to_json()).map_err(io)?;
    } else {
        writeln!(out, "{}", d.render(a.order.into())).map_err(io)?;
    }
    Ok(EXIT_OK)
}

fn cmd_orders(a: &OperatorArgs, out: &mut dyn Write) -> Result<i32> {
    let (alg, op) = a.build()?;
    let fact = factor_xn_minus_1(alg.ring(), alg.n())?;
    let factors: Vec<String> = fact
        .factors()
        .iter()
        .map(|(p, b)| if *b == 1 { format!("({p})") } else { format!("({p})^{b}") })
        .collect();
    writeln!(out, "y^{}-1 = {}", alg.n(), factors.join("*")).map_err(io)?;
    for fo in factor_orders(&alg, &op, &fact)? {
        writeln!(out, "{fo}").map_err(io)?;
    }
    let max = max_orbit_stats(&alg, &op, &fact)?;
    writeln!(out, "max {max}").map_err(io)?;
    Ok(EXIT_OK)
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<i32> {
    let (alg, op) = a.operator.build()?;
    let spec = SequenceSpec::parse(&a.seq, alg.n(), alg.field())?;
    let fact = factor_xn_minus_1(alg.ring(), alg.n())?;
    let report = classify_with(&alg, &fact, &op, &spec)?;
    let iterative = match a.budget {
        Some(budget) => Some(iterative_check(&alg, &op, &spec, &report, budget)?),
        None => None,
    };
    if a.json {
        let j = json!({
            "q": alg.field().order(),
            "n": alg.n(),
            "op": a.operator.op,
            "seq": spec.to_string(),
            "max_preperiod": report.max.preperiod.to_string(),
            "max_period": report.max.period.to_string(),
            "f_preperiod": report.f.preperiod.to_string(),
            "f_period": report.f.period.to_string(),
            "verdict": report.verdict.to_string(),
            "within_hypotheses": report.within_hypotheses,
            "iterative_check": iterative,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("json value")).map_err(io)?;
    } else {
        writeln!(out, "{report}").map_err(io)?;
        if let Some(note) = iterative {
            writeln!(out, "iterative check: {note}").map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

/// Recomputes both orbits by iteration. Disagreement is an internal error.
fn iterative_check(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    spec: &SequenceSpec,
    report: &ComplexityReport,
    budget: u64,
) -> Result<String> {
    let op = alg.to_column(op);
    let x = crate::sequence::realize(spec, alg.field())?;
    let seed = alg.vector_to_cycpoly(&x, Convention::Column)?;
    let one = alg.one(Convention::Column);
    let stats = orbit_stats_iterative(alg, &op, &one, budget)
        .and_then(|m| orbit_stats_iterative(alg, &op, &seed, budget).map(|f| (m, f)));
    match stats {
        Ok((m, f)) if m == report.max && f == report.f => Ok("agrees".into()),
        Ok((m, f)) => Err(Error::Internal(format!(
            "iteration gives max ({m}) and f ({f}), factorization gives max ({}) and f ({})",
            report.max, report.f
        ))),
        Err(Error::BudgetExceeded(b)) => Ok(format!("skipped, budget of {b} steps exceeded")),
        Err(e) => Err(e),
    }
}

fn default_table_ns() -> Vec<usize> {
    crate::sequence::odd_primes_up_to(47)
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        Some(0) => Err(Error::InvalidArgument("--jobs must be positive".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::Internal(e.to_string())),
        None => Ok(f()),
    }
}

/// One table row: `(n, count, decomposition)`.
pub fn table_row(field: &FieldCtx, n: usize) -> Result<(BigUint, GraphDecomposition)> {
    let alg = CirculantAlgebra::new(field.clone(), n)?;
    let fact = factor_xn_minus_1(alg.ring(), n)?;
    let mut d = decompose_with(&alg, &alg.delta(), &fact)?;
    d.op = "delta".into();
    Ok((d.component_count(), d))
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let field = a.field.field()?;
    let ns = a.n_list.clone().unwrap_or_else(default_table_ns);
    let order: TermOrder = a.order.into();
    let rows = with_pool(a.jobs, || {
        ns.par_iter()
            .map(|&n| table_row(&field, n))
            .collect::<Vec<_>>()
    })?;
    let mut failed = false;
    if a.json {
        let items: Vec<serde_json::Value> = ns
            .iter()
            .zip(&rows)
            .map(|(n, row)| match row {
                Ok((count, d)) => json!({
                    "n": n,
                    "count": count.to_string(),
                    "decomposition": d.render(order),
                }),
                Err(e) => {
                    failed = true;
                    json!({ "n": n, "error": e.to_string() })
                }
            })
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&items).expect("json value"))
            .map_err(io)?;
    } else {
        for (n, row) in ns.iter().zip(&rows) {
            match row {
                Ok((count, d)) => writeln!(out, "{n} {count} {}", d.render(order)),
                Err(e) => {
                    failed = true;
                    writeln!(out, "{n} error: {e}")
                }
            }
            .map_err(io)?;
        }
    }
    Ok(if failed { EXIT_FAILED } else { EXIT_OK })
}

fn parse_pair(s: &str) -> Result<(u64, usize)> {
    let bad = || Error::parse(s, "expected q:n");
    let (q, n) = s.split_once(':').ok_or_else(bad)?;
    Ok((
        q.trim().parse().map_err(|_| bad())?,
        n.trim().parse().map_err(|_| bad())?,
    ))
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let report: VerifyReport = with_pool(a.jobs, || -> Result<VerifyReport> {
        match a.suite {
            Suite::Theorem1 => verify::theorem1(
                a.q_set.as_deref().unwrap_or(&[2, 3, 4, 5, 7, 8, 9]),
                a.n_max.unwrap_or(23),
            ),
            Suite::Theorem2 => verify::theorem2(
                a.q_set.as_deref().unwrap_or(&[3, 4, 5, 9]),
                a.n_max.unwrap_or(13),
                a.draws.unwrap_or(50),
                a.seed,
            ),
            Suite::Remark4 => {
                let pairs = match &a.pairs {
                    Some(ps) => ps.iter().map(|s| parse_pair(s)).collect::<Result<Vec<_>>>()?,
                    None => vec![(3, 7), (3, 13), (4, 13), (5, 11)],
                };
                verify::remark4(&pairs)
            }
            Suite::Oracle => verify::oracle(
                a.q_set.as_deref().unwrap_or(&[2, 3]),
                a.cap.unwrap_or_else(brute_cap_from_env),
                a.draws.unwrap_or(20),
                a.seed,
            ),
        }
    })??;
    writeln!(out, "{report}").map_err(io)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}
