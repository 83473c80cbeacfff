//! Exhaustive checks of the classification criteria and of the algebraic
//! decomposition against enumeration.

use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::circulant::{legendre_det_formula, CirculantAlgebra, Convention, CycPoly};
use crate::dynamics::{brute_force_graph, classify_with, decompose_with, remark4_reports, Verdict};
use crate::error::Result;
use crate::factor::factor_xn_minus_1;
use crate::field::{FieldCtx, FieldElement};
use crate::poly::Poly;
use crate::sequence::{
    enumerate_multiplicative, odd_primes_up_to, realize, theorem1_condition, SequenceKind,
    SequenceSpec,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CaseResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.label, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> String {
        let ok = self.cases.iter().filter(|c| c.passed).count();
        format!("{}: {}/{} cases passed", self.suite, ok, self.cases.len())
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            writeln!(f, "{c}")?;
        }
        write!(f, "{}", self.summary())
    }
}

fn case(label: String, passed: bool, detail: String) -> CaseResult {
    CaseResult {
        label,
        passed,
        detail,
    }
}

fn fields(q_set: &[u64]) -> Result<Vec<FieldCtx>> {
    q_set.iter().map(|&q| FieldCtx::from_order(q)).collect()
}

/// Deterministic per-case generator.
fn case_rng(seed: u64, q: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (q << 32) ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn random_poly(field: &FieldCtx, n: usize, rng: &mut impl Rng) -> Poly {
    let q = field.order();
    Poly::from_coeffs((0..n).map(|_| FieldElement::from(rng.gen_range(0..q))).collect())
}

/// For each odd prime `n ≤ n_max` and each `q`: the gcd criterion holds iff
/// the circulant of the quadratic-non-residue indicator is invertible, iff
/// the integer determinant is nonzero mod `p`.
pub fn theorem1(q_set: &[u64], n_max: usize) -> Result<VerifyReport> {
    let mut cases = Vec::new();
    for field in fields(q_set)? {
        let p = BigUint::from(field.characteristic());
        for n in odd_primes_up_to(n_max) {
            let alg = CirculantAlgebra::new(field.clone(), n)?;
            let x = realize(&SequenceSpec::new(SequenceKind::ArithmeticLog, n), &field)?;
            let nondegenerate = alg.is_nondegenerate(&alg.vector_to_cycpoly(&x, Convention::Column)?)?;
            let condition = theorem1_condition(n, &field)?;
            let det = legendre_det_formula(n as u64)?;
            let det_nonzero = (det.magnitude() % &p) != BigUint::default();
            cases.push(case(
                format!("n={n} q={}", field.order()),
                condition == nondegenerate && condition == det_nonzero,
                format!(
                    "criterion={condition} nondegenerate={nondegenerate} det_nonzero_mod_p={det_nonzero}"
                ),
            ));
        }
    }
    Ok(VerifyReport {
        suite: "theorem1".into(),
        cases,
    })
}

/// For each odd prime `n ≤ n_max` with `n ≠ p`, each nontrivial
/// multiplicative `f` and each `A = B·Δ` (`B = 1` plus `draws` random `B`):
/// the verdict is most or almost most, and most iff
/// `gcd(B, 1 + y + … + y^(n−1)) ≠ 1`.
pub fn theorem2(q_set: &[u64], n_max: usize, draws: usize, seed: u64) -> Result<VerifyReport> {
    let mut cases = Vec::new();
    for field in fields(q_set)? {
        let q = field.order();
        for n in odd_primes_up_to(n_max) {
            if n as u64 == field.characteristic() {
                continue;
            }
            let alg = CirculantAlgebra::new(field.clone(), n)?;
            let ring = alg.ring();
            let fact = factor_xn_minus_1(ring, n)?;
            let all_ones = ring.all_ones(n);
            let delta = alg.to_column(&alg.delta());
            let mut rng = case_rng(seed, q, n);
            let mut multipliers = vec![Poly::one()];
            multipliers.extend((0..draws).map(|_| random_poly(&field, n, &mut rng)));
            let ops: Vec<(bool, CycPoly)> = multipliers
                .iter()
                .map(|b| {
                    let shares = !ring.gcd(b, &all_ones)?.is_one();
                    let op = alg.mul(&alg.element(b, Convention::Column), &delta)?;
                    Ok((shares, op))
                })
                .collect::<Result<_>>()?;
            let nontrivial: Vec<SequenceSpec> = enumerate_multiplicative(n, &field)?
                .into_iter()
                .filter(|s| !s.is_trivial_multiplicative(&field))
                .collect();
            if nontrivial.is_empty() {
                cases.push(case(
                    format!("n={n} q={q}"),
                    true,
                    "no nontrivial multiplicative functions".into(),
                ));
                continue;
            }
            for spec in nontrivial {
                let (mut most, mut almost, mut mismatches) = (0usize, 0usize, 0usize);
                for (shares, op) in &ops {
                    let r = classify_with(&alg, &fact, op, &spec)?;
                    match r.verdict {
                        Verdict::Most => most += 1,
                        Verdict::AlmostMost => almost += 1,
                        Verdict::Neither => {}
                    }
                    let dichotomy = r.verdict != Verdict::Neither;
                    if !dichotomy || (r.verdict == Verdict::Most) != *shares {
                        mismatches += 1;
                    }
                }
                cases.push(case(
                    format!("n={n} q={q} f={spec}"),
                    mismatches == 0,
                    format!(
                        "operators={} most={most} almost_most={almost} mismatches={mismatches}",
                        ops.len()
                    ),
                ));
            }
        }
    }
    Ok(VerifyReport {
        suite: "theorem2".into(),
        cases,
    })
}

/// For the all-ones operator: every nontrivial multiplicative function has
/// period strictly below the maximal one.
pub fn remark4(pairs: &[(u64, usize)]) -> Result<VerifyReport> {
    let mut cases = Vec::new();
    for &(q, n) in pairs {
        let alg = CirculantAlgebra::new(FieldCtx::from_order(q)?, n)?;
        let label = format!("n={n} q={q}");
        match remark4_reports(&alg) {
            Ok(reports) => {
                let passed = reports.iter().all(|(_, r)| r.f.period < r.max.period);
                let detail = reports
                    .iter()
                    .map(|(s, r)| {
                        format!(
                            "{s}: f=({},{}) max=({},{})",
                            r.f.preperiod, r.f.period, r.max.preperiod, r.max.period
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("; ");
                cases.push(case(label, passed, detail));
            }
            Err(e) => cases.push(case(label, false, e.to_string())),
        }
    }
    Ok(VerifyReport {
        suite: "remark4".into(),
        cases,
    })
}

/// Compares the algebraic decomposition with enumeration for every `(q, n)`
/// with `q^n ≤ cap`, on `Δ`, the shift and `random_ops` random operators.
pub fn oracle(q_set: &[u64], cap: u64, random_ops: usize, seed: u64) -> Result<VerifyReport> {
    let mut jobs = Vec::new();
    for field in fields(q_set)? {
        let q = field.order();
        let mut n = 1usize;
        let mut states = q;
        while states <= cap {
            jobs.push((field.clone(), n));
            n += 1;
            states = states.saturating_mul(q);
        }
    }
    let cases = jobs
        .par_iter()
        .map(|(field, n)| oracle_case(field, *n, cap, random_ops, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        suite: "oracle".into(),
        cases,
    })
}

fn oracle_case(
    field: &FieldCtx,
    n: usize,
    cap: u64,
    random_ops: usize,
    seed: u64,
) -> Result<CaseResult> {
    let q = field.order();
    let alg = CirculantAlgebra::new(field.clone(), n)?;
    let fact = factor_xn_minus_1(alg.ring(), n)?;
    let mut rng = case_rng(seed, q, n);
    let mut ops = vec![alg.delta(), alg.shift()];
    ops.extend((0..random_ops).map(|_| alg.element(&random_poly(field, n, &mut rng), Convention::Row)));
    let mut mismatched = Vec::new();
    for op in &ops {
        let algebraic = decompose_with(&alg, op, &fact);
        let brute = brute_force_graph(&alg, op, cap);
        let agree = match (&algebraic, &brute) {
            (Ok(a), Ok(b)) => a.cycles == b.cycles && a.tree == b.tree,
            _ => false,
        };
        if !agree {
            mismatched.push(op.to_string());
        }
    }
    let detail = if mismatched.is_empty() {
        format!("operators={} all agree", ops.len())
    } else {
        format!("operators={} mismatched: {}", ops.len(), mismatched.join(", "))
    };
    Ok(case(format!("q={q} n={n}"), mismatched.is_empty(), detail))
}
