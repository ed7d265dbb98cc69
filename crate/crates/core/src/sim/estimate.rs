use alloc::vec::Vec;

use super::ecdf::{ecdf_and_histogram, EcdfPoint};
use super::graph::sample_graph;
use super::spectrum::{spectrum, MatrixKind};
use crate::{Error, Result};

/// Finite-size allowance `c` in `|estimate − limit| ≤ 3·stderr + c/n`.
///
/// Pinned from the exact finite-`N` bias of `E{N⁻¹ Tr A^s}` at `p = 1`,
/// `s ≤ 6`, `n ∈ {500, 1000, 2000}`, whose largest `n·|bias|` is ≈ 32.09
/// (at `s = 6`).
pub const FINITE_SIZE_ALLOWANCE: f64 = 33.0;

/// Whether `estimate` is within `3·stderr + c/n` of `limit`.
pub fn within_limit_tolerance(estimate: &MomentRecord, limit: f64, n: usize) -> bool {
    libm::fabs(estimate.mean - limit) <= 3.0 * estimate.stderr + FINITE_SIZE_ALLOWANCE / n as f64
}

/// Mean of `N⁻¹ Tr A^s` over the samples and its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentRecord {
    pub s: u32,
    pub mean: f64,
    pub stderr: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEstimate {
    pub n: usize,
    pub intensity: f64,
    pub sample_count: usize,
    pub base_seed: u64,
    /// `s = 0 ..= max_s`.
    pub moments: Vec<MomentRecord>,
    /// Counting function of all adjacency eigenvalues pooled over samples.
    pub ecdf: Vec<EcdfPoint>,
    pub pooled_eigenvalues: Vec<f64>,
}

impl SpectralEstimate {
    pub fn moment(&self, s: u32) -> Option<&MomentRecord> {
        self.moments.iter().find(|r| r.s == s)
    }
}

/// Monte Carlo estimate of `E{N⁻¹ Tr A^s}` for `s = 0 ..= max_s`. Sample `i`
/// uses seed `base_seed + i` (wrapping).
pub fn estimate_moments(
    n: usize,
    intensity: f64,
    max_s: u32,
    sample_count: usize,
    base_seed: u64,
) -> Result<SpectralEstimate> {
    if sample_count < 2 {
        return Err(Error::TooSmall {
            what: "sample count",
            value: sample_count as u64,
            min: 2,
        });
    }
    let orders = max_s as usize + 1;
    let mut per_sample: Vec<Vec<f64>> = alloc::vec![Vec::with_capacity(sample_count); orders];
    let mut pooled = Vec::with_capacity(n * sample_count);
    for idx in 0..sample_count {
        let seed = base_seed.wrapping_add(idx as u64);
        let graph = sample_graph(n, intensity, seed)?;
        let spec = spectrum(&graph, MatrixKind::Adjacency)?;
        let mut powers = alloc::vec![0.0; orders];
        for &x in &spec.eigenvalues {
            let mut xp = 1.0;
            for slot in powers.iter_mut() {
                *slot += xp;
                xp *= x;
            }
        }
        for (s, total) in powers.into_iter().enumerate() {
            per_sample[s].push(total / n as f64);
        }
        pooled.extend_from_slice(&spec.eigenvalues);
    }

    let moments = per_sample
        .iter()
        .enumerate()
        .map(|(s, values)| {
            let count = values.len() as f64;
            let mean = values.iter().sum::<f64>() / count;
            let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (count - 1.0);
            MomentRecord {
                s: s as u32,
                mean,
                stderr: libm::sqrt(var / count),
            }
        })
        .collect();

    pooled.sort_unstable_by(f64::total_cmp);
    let ecdf = ecdf_and_histogram(&pooled, 1)?.ecdf;
    Ok(SpectralEstimate {
        n,
        intensity,
        sample_count,
        base_seed,
        moments,
        ecdf,
        pooled_eigenvalues: pooled,
    })
}
