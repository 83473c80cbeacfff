//! Most / almost most complicated sequences of an operator.

use std::fmt;

use crate::circulant::{CirculantAlgebra, Convention, CycPoly};
use crate::error::{Error, Result};
use crate::factor::{factor_xn_minus_1, Factorization};
use crate::sequence::{enumerate_multiplicative, realize, SequenceSpec};

use super::orbit::{max_orbit_stats, orbit_stats_algebraic, OrbitStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Maximal period and maximal preperiod.
    Most,
    /// Maximal period, preperiod one below the maximum.
    AlmostMost,
    Neither,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Most => "most",
            Verdict::AlmostMost => "almost_most",
            Verdict::Neither => "neither",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexityReport {
    /// Stats of the identity seed, the maximum over all orbits.
    pub max: OrbitStats,
    pub f: OrbitStats,
    pub verdict: Verdict,
    /// Whether `n` is prime to `q`.
    pub within_hypotheses: bool,
}

impl ComplexityReport {
    pub fn from_stats(max: OrbitStats, f: OrbitStats, within_hypotheses: bool) -> Self {
        let verdict = if f.period != max.period {
            Verdict::Neither
        } else if f.preperiod == max.preperiod {
            Verdict::Most
        } else if max.preperiod >= 1 && f.preperiod == max.preperiod - 1 {
            Verdict::AlmostMost
        } else {
            Verdict::Neither
        };
        ComplexityReport {
            max,
            f,
            verdict,
            within_hypotheses,
        }
    }
}

impl fmt::Display for ComplexityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max_preperiod: {}", self.max.preperiod)?;
        writeln!(f, "max_period: {}", self.max.period)?;
        writeln!(f, "f_preperiod: {}", self.f.preperiod)?;
        writeln!(f, "f_period: {}", self.f.period)?;
        write!(f, "verdict: {}", self.verdict)?;
        if !self.within_hypotheses {
            write!(f, "\nnote: n is not prime to q, outside theorem hypotheses")?;
        }
        Ok(())
    }
}

/// Classifies the sequence `spec` for `op`. The sequence enters as a
/// column-convention polynomial, so `op` is converted to column convention.
pub fn classify(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    spec: &SequenceSpec,
) -> Result<ComplexityReport> {
    let fact = factor_xn_minus_1(alg.ring(), alg.n())?;
    classify_with(alg, &fact, op, spec)
}

pub fn classify_with(
    alg: &CirculantAlgebra,
    fact: &Factorization,
    op: &CycPoly,
    spec: &SequenceSpec,
) -> Result<ComplexityReport> {
    if spec.n != alg.n() {
        return Err(Error::DimensionMismatch(spec.n, alg.n()));
    }
    let x = realize(spec, alg.field())?;
    let seed = alg.vector_to_cycpoly(&x, Convention::Column)?;
    let op = alg.to_column(op);
    let max = max_orbit_stats(alg, &op, fact)?;
    let f = orbit_stats_algebraic(alg, &op, &seed, fact)?;
    let within = !(alg.n() as u64).is_multiple_of(alg.field().characteristic());
    Ok(ComplexityReport::from_stats(max, f, within))
}

/// Reports for every nontrivial multiplicative function under the all-ones
/// operator `I + δ + … + δ^(n−1)`.
pub fn remark4_reports(
    alg: &CirculantAlgebra,
) -> Result<Vec<(SequenceSpec, ComplexityReport)>> {
    let field = alg.field();
    let specs: Vec<SequenceSpec> = enumerate_multiplicative(alg.n(), field)?
        .into_iter()
        .filter(|s| !s.is_trivial_multiplicative(field))
        .collect();
    if specs.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "no nontrivial multiplicative functions for n={} q={}",
            alg.n(),
            field.order()
        )));
    }
    let fact = factor_xn_minus_1(alg.ring(), alg.n())?;
    let op = alg.all_ones();
    specs
        .into_iter()
        .map(|s| classify_with(alg, &fact, &op, &s).map(|r| (s, r)))
        .collect()
}

/// Whether every nontrivial multiplicative function has period strictly
/// below the maximal one for the all-ones operator.
pub fn remark4_check(alg: &CirculantAlgebra) -> Result<bool> {
    Ok(remark4_reports(alg)?
        .iter()
        .all(|(_, r)| r.f.period < r.max.period))
}
