//! Cycle multiplicities and tree shapes of the functional graph `x ↦ op·x`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::circulant::{CirculantAlgebra, CycPoly};
use crate::error::{Error, Result};
use crate::factor::{factor_xn_minus_1, Factorization};
use crate::order::{lifted_orders, unit_group_order};
use crate::poly::Poly;

/// Formal sum `Σ c_m·O_m` of cycles, keyed by length. Every multiplicity is
/// positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CycleSum {
    terms: BTreeMap<BigUint, BigUint>,
}

impl CycleSum {
    pub fn new() -> Self {
        CycleSum::default()
    }

    /// `O_1`, the neutral element of [`cycle_sum_product`].
    pub fn unit() -> Self {
        let mut s = CycleSum::new();
        s.add(BigUint::one(), BigUint::one());
        s
    }

    pub fn add(&mut self, len: BigUint, mult: BigUint) {
        assert!(!len.is_zero(), "cycle length must be positive");
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(len).or_default() += mult;
    }

    /// `(length, multiplicity)` in ascending length.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&BigUint, &BigUint)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, len: &BigUint) -> BigUint {
        self.terms.get(len).cloned().unwrap_or_default()
    }

    pub fn max_len(&self) -> Option<&BigUint> {
        self.terms.keys().next_back()
    }

    /// Number of cycles, `Σ c_m`.
    pub fn count(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Number of periodic points, `Σ c_m·m`.
    pub fn points(&self) -> BigUint {
        self.terms.iter().map(|(m, c)| m * c).sum()
    }
}

impl fmt::Display for CycleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    format!("O_{m}")
                } else {
                    format!("{c}O_{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// Bilinear extension of `O_m·O_l = gcd(m, l)·O_lcm(m, l)`: the cycles of a
/// direct product of permutations.
pub fn cycle_sum_product(a: &CycleSum, b: &CycleSum) -> CycleSum {
    let mut out = CycleSum::new();
    for (m, c) in a.iter() {
        for (l, d) in b.iter() {
            out.add(m.lcm(l), m.gcd(l) * c * d);
        }
    }
    out
}

/// Shape of the tree hanging off every periodic point: `cum_counts[i]` is the
/// number of vertices within distance `i` of the root, `q^{r_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeShape {
    pub levels: u64,
    /// Strictly increasing, starting at 1.
    pub cum_counts: Vec<BigUint>,
    pub r: Vec<u64>,
}

impl TreeShape {
    /// The trivial tree of a permutation.
    pub fn point() -> Self {
        TreeShape {
            levels: 0,
            cum_counts: vec![BigUint::one()],
            r: vec![0],
        }
    }

    pub fn size(&self) -> &BigUint {
        self.cum_counts.last().expect("cum_counts is never empty")
    }

    /// Vertices at exactly distance `i` from the root.
    pub fn level_sizes(&self) -> Vec<BigUint> {
        let mut prev = BigUint::zero();
        self.cum_counts
            .iter()
            .map(|c| {
                let d = c - &prev;
                prev = c.clone();
                d
            })
            .collect()
    }

    fn from_r(q: u64, r: Vec<u64>) -> Self {
        let q = BigUint::from(q);
        TreeShape {
            levels: r.len() as u64 - 1,
            cum_counts: r.iter().map(|&ri| q.pow(ri as u32)).collect(),
            r,
        }
    }
}

fn valuations(alg: &CirculantAlgebra, op: &CycPoly, fact: &Factorization) -> Result<Vec<u32>> {
    fact.factors()
        .iter()
        .map(|(p, beta)| alg.ring().valuation(op.poly(), p, *beta))
        .collect()
}

/// Tree from the factors dividing `op`: with `v_j` the valuation of `op` at
/// `P_j`, `l = max ⌈β_j/v_j⌉` and `r_i = Σ min(β_j, i·v_j)·deg P_j`.
pub fn tree_shape(alg: &CirculantAlgebra, op: &CycPoly, fact: &Factorization) -> Result<TreeShape> {
    let vals = valuations(alg, op, fact)?;
    let dividing: Vec<(usize, u32, u32)> = fact
        .factors()
        .iter()
        .zip(&vals)
        .filter(|(_, &v)| v >= 1)
        .map(|((p, beta), &v)| (p.degree().unwrap_or(0), *beta, v))
        .collect();
    let levels = dividing
        .iter()
        .map(|&(_, beta, v)| beta.div_ceil(v) as u64)
        .max()
        .unwrap_or(0);
    let r = (0..=levels)
        .map(|i| {
            dividing
                .iter()
                .map(|&(deg, beta, v)| (beta as u64).min(i * v as u64) * deg as u64)
                .sum()
        })
        .collect();
    Ok(TreeShape::from_r(alg.field().order(), r))
}

/// Per-factor data behind [`cycle_structure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorOrders {
    pub factor: Poly,
    pub beta: u32,
    /// Valuation of `op` at the factor, capped at `beta`.
    pub valuation: u32,
    /// `s_i`: order of `op` modulo `factor^i`, `i = 1..β`; empty when the
    /// factor divides `op`.
    pub orders: Vec<BigUint>,
    /// `d_i`: unit-group order modulo `factor^i`.
    pub group_orders: Vec<BigUint>,
    /// `O_1 + Σ (d_i/s_i)·O_{s_i}`, or `O_1` when the factor divides `op`.
    pub cycles: CycleSum,
}

impl fmt::Display for FactorOrders {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BigUint]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({})^{}", self.factor, self.beta)?;
        if self.valuation >= 1 {
            write!(f, " valuation={} nilpotent", self.valuation)
        } else {
            write!(
                f,
                " orders={} groups={} cycles={}",
                join(&self.orders),
                join(&self.group_orders),
                self.cycles
            )
        }
    }
}

pub fn factor_orders(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    fact: &Factorization,
) -> Result<Vec<FactorOrders>> {
    let q = alg.field().order();
    let ring = alg.ring();
    fact.factors()
        .iter()
        .map(|(p, beta)| {
            let beta = *beta;
            let valuation = ring.valuation(op.poly(), p, beta)?;
            let deg = p.degree().unwrap_or(0);
            let mut cycles = CycleSum::unit();
            let (orders, group_orders) = if valuation >= 1 {
                (Vec::new(), Vec::new())
            } else {
                let orders = lifted_orders(ring, op.poly(), p, beta)?;
                let groups: Vec<BigUint> =
                    (1..=beta).map(|i| unit_group_order(q, deg, i)).collect();
                for (s, d) in orders.iter().zip(&groups) {
                    cycles.add(s.clone(), d / s);
                }
                (orders, groups)
            };
            Ok(FactorOrders {
                factor: p.clone(),
                beta,
                valuation,
                orders,
                group_orders,
                cycles,
            })
        })
        .collect()
}

/// `Π_j (O_1 + Σ_i (d_ij/s_ij)·O_{s_ij})` over the factors coprime to `op`.
pub fn cycle_structure(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    fact: &Factorization,
) -> Result<CycleSum> {
    Ok(factor_orders(alg, op, fact)?
        .iter()
        .fold(CycleSum::unit(), |acc, fo| cycle_sum_product(&acc, &fo.cycles)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TermOrder {
    #[default]
    Ascending,
    Descending,
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "asc" | "ascending" => Ok(TermOrder::Ascending),
            "desc" | "descending" => Ok(TermOrder::Descending),
            _ => Err(Error::parse(s, "expected `asc` or `desc`")),
        }
    }
}

/// Every connected component is a cycle with a copy of `tree` rooted at each
/// of its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDecomposition {
    pub q: u64,
    pub n: usize,
    pub op: String,
    pub cycles: CycleSum,
    pub tree: TreeShape,
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    levels: u64,
    cum_counts: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct CycleJson {
    len: String,
    mult: String,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    q: u64,
    n: usize,
    op: String,
    tree: TreeJson,
    cycles: Vec<CycleJson>,
}

fn parse_big(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::parse(s, "expected a decimal integer"))
}

impl GraphDecomposition {
    /// Fails with [`Error::Internal`] unless `(Σ c_m·m)·|T| = q^n`.
    pub fn new(q: u64, n: usize, op: String, cycles: CycleSum, tree: TreeShape) -> Result<Self> {
        let d = GraphDecomposition {
            q,
            n,
            op,
            cycles,
            tree,
        };
        d.check_conservation()?;
        Ok(d)
    }

    pub fn check_conservation(&self) -> Result<()> {
        let total = self.cycles.points() * self.tree.size();
        let states = BigUint::from(self.q).pow(self.n as u32);
        if total != states {
            return Err(Error::Internal(format!(
                "conservation fails for q={} n={}: {} states counted, {} expected",
                self.q, self.n, total, states
            )));
        }
        Ok(())
    }

    /// Number of connected components, `Σ c_m`.
    pub fn component_count(&self) -> BigUint {
        self.cycles.count()
    }

    /// `c(O_m*T_s)` terms joined by `+`, with `c` omitted when 1.
    pub fn render(&self, order: TermOrder) -> String {
        let s = self.tree.size();
        let term = |(m, c): (&BigUint, &BigUint)| {
            if c.is_one() {
                format!("(O_{m}*T_{s})")
            } else {
                format!("{c}(O_{m}*T_{s})")
            }
        };
        let terms: Vec<String> = match order {
            TermOrder::Ascending => self.cycles.iter().map(term).collect(),
            TermOrder::Descending => self.cycles.iter().rev().map(term).collect(),
        };
        terms.join("+")
    }

    pub fn to_json(&self) -> String {
        let j = DecompositionJson {
            q: self.q,
            n: self.n,
            op: self.op.clone(),
            tree: TreeJson {
                levels: self.tree.levels,
                cum_counts: self.tree.cum_counts.iter().map(|c| c.to_string()).collect(),
            },
            cycles: self
                .cycles
                .iter()
                .map(|(m, c)| CycleJson {
                    len: m.to_string(),
                    mult: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: DecompositionJson =
            serde_json::from_str(s).map_err(|e| Error::parse(s, e.to_string()))?;
        let mut cycles = CycleSum::new();
        for c in &j.cycles {
            cycles.add(parse_big(&c.len)?, parse_big(&c.mult)?);
        }
        let cum_counts = j
            .tree
            .cum_counts
            .iter()
            .map(|c| parse_big(c))
            .collect::<Result<Vec<_>>>()?;
        let r = cum_counts
            .iter()
            .map(|c| exact_log(c, j.q))
            .collect::<Result<Vec<_>>>()?;
        if cum_counts.len() as u64 != j.tree.levels + 1 {
            return Err(Error::parse(
                j.tree.levels.to_string(),
                "levels disagrees with cum_counts",
            ));
        }
        let tree = TreeShape {
            levels: j.tree.levels,
            cum_counts,
            r,
        };
        GraphDecomposition::new(j.q, j.n, j.op, cycles, tree)
    }
}

/// `e` with `q^e = x`.
pub(crate) fn exact_log(x: &BigUint, q: u64) -> Result<u64> {
    let q = BigUint::from(q);
    let (mut x, mut e) = (x.clone(), 0u64);
    while !x.is_one() {
        let (d, r) = x.div_rem(&q);
        if !r.is_zero() || d.is_zero() {
            return Err(Error::Internal(format!("{x} is not a power of {q}")));
        }
        x = d;
        e += 1;
    }
    Ok(e)
}

/// Cycles and trees of `x ↦ op·x` from the factorization of `y^n − 1`.
pub fn decompose(alg: &CirculantAlgebra, op: &CycPoly) -> Result<GraphDecomposition> {
    let fact = factor_xn_minus_1(alg.ring(), alg.n())?;
    decompose_with(alg, op, &fact)
}

pub fn decompose_with(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    fact: &Factorization,
) -> Result<GraphDecomposition> {
    let cycles = cycle_structure(alg, op, fact)?;
    let tree = tree_shape(alg, op, fact)?;
    GraphDecomposition::new(alg.field().order(), alg.n(), op.to_string(), cycles, tree)
}
