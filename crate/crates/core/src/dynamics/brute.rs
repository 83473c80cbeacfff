//! Exhaustive functional graph of `x ↦ A·x` on all `q^n` states.

use std::collections::VecDeque;

use num_bigint::BigUint;

use crate::circulant::{CirculantAlgebra, CycPoly, StateVector};
use crate::error::{Error, Result};
use crate::field::FieldElement;

use super::structure::{exact_log, CycleSum, GraphDecomposition, TreeShape};

pub const DEFAULT_BRUTE_CAP: u64 = 1 << 16;
pub const BRUTE_CAP_ENV: &str = "FFDYN_BRUTE_CAP";

/// The cap from `FFDYN_BRUTE_CAP`, else [`DEFAULT_BRUTE_CAP`].
pub fn brute_cap_from_env() -> u64 {
    std::env::var(BRUTE_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&c| c > 0)
        .unwrap_or(DEFAULT_BRUTE_CAP)
}

/// Number of states `q^n`, if it fits under `cap`.
fn state_count(q: u64, n: usize, cap: u64) -> Result<usize> {
    let states = BigUint::from(q).pow(n as u32);
    if states > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            states: states.to_string(),
            cap,
        });
    }
    Ok(u64::try_from(&states).expect("below cap") as usize)
}

/// `next[s]` for every state code `s = Σ x_i·q^i`.
fn transition_table(alg: &CirculantAlgebra, op: &CycPoly, states: usize) -> Result<Vec<u32>> {
    let f = alg.field();
    let (q, n) = (f.order() as usize, alg.n());
    let columns: Vec<Vec<FieldElement>> = (0..n)
        .map(|k| {
            let mut e = vec![FieldElement::ZERO; n];
            e[k] = f.one();
            alg.apply_operator(op, &StateVector::new(e))
                .map(|v| v.entries().to_vec())
        })
        .collect::<Result<_>>()?;

    let encode = |v: &[FieldElement]| v.iter().rev().fold(0usize, |acc, x| acc * q + x.code() as usize);
    let mut next = vec![0u32; states];
    let mut image = vec![FieldElement::ZERO; n];
    let mut top = 0usize;
    let mut place = 1usize;
    // Image of s = t + c·q^top with t < q^top is image(t) + c·A e_top.
    for s in 1..states {
        if s == place * q {
            top += 1;
            place *= q;
        }
        let c = f.decode((s / place) as u64)?;
        let t = s % place;
        let mut code = next[t] as usize;
        for x in image.iter_mut() {
            *x = f.decode((code % q) as u64)?;
            code /= q;
        }
        for (x, &a) in image.iter_mut().zip(&columns[top]) {
            *x = f.add(*x, f.mul(c, a));
        }
        next[s] = encode(&image) as u32;
    }
    Ok(next)
}

/// Enumerates every state, extracts all cycles and the tree hanging off
/// every periodic point, and checks that those trees share one level profile.
pub fn brute_force_graph(
    alg: &CirculantAlgebra,
    op: &CycPoly,
    cap: u64,
) -> Result<GraphDecomposition> {
    let q = alg.field().order();
    let states = state_count(q, alg.n(), cap)?;
    let next = transition_table(alg, op, states)?;

    // 0 unvisited, 1 on the current walk, 2 finished.
    let mut mark = vec![0u8; states];
    let mut on_cycle = vec![false; states];
    let mut cycles = CycleSum::new();
    let mut walk = Vec::new();
    for start in 0..states {
        if mark[start] != 0 {
            continue;
        }
        walk.clear();
        let mut s = start;
        while mark[s] == 0 {
            mark[s] = 1;
            walk.push(s);
            s = next[s] as usize;
        }
        if mark[s] == 1 {
            let pos = walk.iter().position(|&w| w == s).expect("on the walk");
            for &w in &walk[pos..] {
                on_cycle[w] = true;
            }
            cycles.add(BigUint::from(walk.len() - pos), BigUint::from(1u32));
        }
        for &w in &walk {
            mark[w] = 2;
        }
    }

    let mut first = vec![0u32; states + 1];
    for &t in &next {
        first[t as usize + 1] += 1;
    }
    for i in 0..states {
        first[i + 1] += first[i];
    }
    let mut fill = first.clone();
    let mut preds = vec![0u32; states];
    for (s, &t) in next.iter().enumerate() {
        preds[fill[t as usize] as usize] = s as u32;
        fill[t as usize] += 1;
    }

    let mut profile: Option<Vec<u64>> = None;
    let mut queue = VecDeque::new();
    for root in (0..states).filter(|&s| on_cycle[s]) {
        let mut counts = vec![1u64];
        queue.clear();
        queue.push_back((root, 0usize));
        while let Some((s, depth)) = queue.pop_front() {
            for &p in &preds[first[s] as usize..first[s + 1] as usize] {
                let p = p as usize;
                if on_cycle[p] {
                    continue;
                }
                if counts.len() <= depth + 1 {
                    counts.push(0);
                }
                counts[depth + 1] += 1;
                queue.push_back((p, depth + 1));
            }
        }
        match &profile {
            None => profile = Some(counts),
            Some(p) if *p != counts => {
                return Err(Error::Internal(format!(
                    "trees differ between periodic points: {p:?} and {counts:?}"
                )))
            }
            Some(_) => {}
        }
    }

    let profile = profile.ok_or_else(|| Error::Internal("no periodic point".into()))?;
    let mut cum = 0u64;
    let cum_counts: Vec<BigUint> = profile
        .iter()
        .map(|c| {
            cum += c;
            BigUint::from(cum)
        })
        .collect();
    let r = cum_counts
        .iter()
        .map(|c| exact_log(c, q))
        .collect::<Result<Vec<_>>>()?;
    let tree = TreeShape {
        levels: profile.len() as u64 - 1,
        cum_counts,
        r,
    };
    GraphDecomposition::new(q, alg.n(), op.to_string(), cycles, tree)
}
