//! Exact `E{N⁻¹ Tr A^s}` at finite `N`.
//!
//! A closed index sequence `x_1 … x_s x_1` contributes
//! `Π_t A_{x_t x_{t+1}}`, whose expectation is `(p/N)^{#distinct edges}`
//! when no step stays put and zero otherwise.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Intensity, Result};

pub const MAX_EXACT_N: usize = 6;
pub const MAX_EXACT_POWER: usize = 6;
/// Cap for [`expected_normalized_trace`]; the work grows like the Bell number
/// of `s`.
pub const MAX_SHAPE_POWER: usize = 12;

fn edge_probability(n: u64, intensity: &Intensity) -> Result<BigRational> {
    let n_rat = BigRational::from_integer(BigInt::from(n));
    if *intensity.value() > n_rat {
        return Err(Error::IntensityOutOfRange {
            intensity: intensity.to_f64(),
            n: n as usize,
        });
    }
    Ok(intensity.value() / n_rat)
}

fn distinct_edges(seq: &[usize]) -> usize {
    let s = seq.len();
    let mut edges: Vec<(usize, usize)> = (0..s)
        .map(|t| {
            let (a, b) = (seq[t], seq[(t + 1) % s]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges.len()
}

/// Brute force over all `n^s` index sequences.
pub fn exact_finite_moment(n: usize, intensity: &Intensity, s: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::TooSmall { what: "n", value: 0, min: 1 });
    }
    if n > MAX_EXACT_N {
        return Err(Error::Guard { what: "n", value: n as u64, limit: MAX_EXACT_N as u64 });
    }
    if s > MAX_EXACT_POWER {
        return Err(Error::Guard { what: "power s", value: s as u64, limit: MAX_EXACT_POWER as u64 });
    }
    let q = edge_probability(n as u64, intensity)?;
    if s == 0 {
        return Ok(BigRational::one());
    }
    let mut total = BigRational::zero();
    let mut seq = alloc::vec![0usize; s];
    let count = n.pow(s as u32);
    for code in 0..count {
        let mut c = code;
        for slot in seq.iter_mut() {
            *slot = c % n;
            c /= n;
        }
        if (0..s).any(|t| seq[t] == seq[(t + 1) % s]) {
            continue;
        }
        total += num_traits::pow(q.clone(), distinct_edges(&seq));
    }
    Ok(total / BigRational::from_integer(BigInt::from(n)))
}

/// The same expectation for any `n`, summing over walk shapes instead of
/// index sequences: each shape with `t` distinct vertices and `e` distinct
/// edges stands for `n (n-1) ⋯ (n-t+1)` sequences of weight `(p/n)^e`.
pub fn expected_normalized_trace(n: u64, intensity: &Intensity, s: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::TooSmall { what: "n", value: 0, min: 1 });
    }
    if s > MAX_SHAPE_POWER {
        return Err(Error::Guard { what: "power s", value: s as u64, limit: MAX_SHAPE_POWER as u64 });
    }
    let q = edge_probability(n, intensity)?;
    if s == 0 {
        return Ok(BigRational::one());
    }
    // Shapes only matter through (distinct vertices, distinct edges).
    let mut classes: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut seq = Vec::with_capacity(s);
    seq.push(0);
    shapes(s, &mut seq, 0, &mut |shape, labels| {
        *classes.entry((labels, distinct_edges(shape))).or_insert(0) += 1;
    });
    let mut total = BigRational::zero();
    for ((labels, edges), count) in classes {
        if labels as u64 > n {
            continue;
        }
        let falling = (0..labels as u64).fold(BigInt::one(), |acc, a| acc * BigInt::from(n - a));
        total += BigRational::from_integer(falling * BigInt::from(count)) * num_traits::pow(q.clone(), edges);
    }
    Ok(total / BigRational::from_integer(BigInt::from(n)))
}

/// Restricted-growth strings of length `s` with no two cyclically adjacent
/// entries equal.
fn shapes(s: usize, seq: &mut Vec<usize>, max: usize, emit: &mut dyn FnMut(&[usize], usize)) {
    if seq.len() == s {
        if seq[s - 1] != seq[0] {
            emit(seq, max + 1);
        }
        return;
    }
    let prev = *seq.last().expect("seeded with 0");
    for label in 0..=max + 1 {
        if label == prev {
            continue;
        }
        seq.push(label);
        shapes(s, seq, max.max(label), emit);
        seq.pop();
    }
}
