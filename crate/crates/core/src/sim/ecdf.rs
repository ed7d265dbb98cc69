use alloc::vec::Vec;

use crate::{Error, Result};

/// One step of the normalised counting function `σ(λ) = #{λ_j ≤ λ} / total`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EcdfPoint {
    pub lambda: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HistogramBin {
    pub center: f64,
    pub mass: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDistribution {
    /// One point per distinct eigenvalue, ascending.
    pub ecdf: Vec<EcdfPoint>,
    /// Equal-width bins over `[min, max]`; masses sum to one.
    pub histogram: Vec<HistogramBin>,
}

impl SpectralDistribution {
    /// `σ(λ)`.
    pub fn sigma_at(&self, lambda: f64) -> f64 {
        let idx = self.ecdf.partition_point(|p| p.lambda <= lambda);
        if idx == 0 {
            0.0
        } else {
            self.ecdf[idx - 1].sigma
        }
    }
}

/// Counting function and histogram of a pooled eigenvalue sample.
pub fn ecdf_and_histogram(pool: &[f64], bin_count: usize) -> Result<SpectralDistribution> {
    if pool.is_empty() {
        return Err(Error::EmptyPool);
    }
    if bin_count == 0 {
        return Err(Error::TooSmall { what: "bin count", value: 0, min: 1 });
    }
    let mut sorted = pool.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let total = sorted.len() as f64;

    let mut ecdf: Vec<EcdfPoint> = Vec::new();
    for (idx, &lambda) in sorted.iter().enumerate() {
        let sigma = (idx + 1) as f64 / total;
        match ecdf.last_mut() {
            Some(last) if last.lambda == lambda => last.sigma = sigma,
            _ => ecdf.push(EcdfPoint { lambda, sigma }),
        }
    }
    if let Some(last) = ecdf.last_mut() {
        last.sigma = 1.0;
    }

    let (mut lo, mut hi) = (sorted[0], sorted[sorted.len() - 1]);
    if lo == hi {
        lo -= 0.5;
        hi += 0.5;
    }
    let width = (hi - lo) / bin_count as f64;
    let mut counts = alloc::vec![0usize; bin_count];
    for &x in &sorted {
        let bin = (((x - lo) / width) as usize).min(bin_count - 1);
        counts[bin] += 1;
    }
    let histogram = counts
        .iter()
        .enumerate()
        .map(|(b, &c)| HistogramBin {
            center: lo + (b as f64 + 0.5) * width,
            mass: c as f64 / total,
        })
        .collect();
    Ok(SpectralDistribution { ecdf, histogram })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{component_count, sample_graph, spectrum, MatrixKind};

    #[test]
    fn two_point_pool() {
        let d = ecdf_and_histogram(&[1.0, -1.0], 2).unwrap();
        assert_eq!(d.histogram.iter().map(|b| b.mass).collect::<Vec<_>>(), [0.5, 0.5]);
        assert_eq!(d.histogram.iter().map(|b| b.center).collect::<Vec<_>>(), [-0.5, 0.5]);
        assert_eq!(d.sigma_at(1.0), 1.0);
        assert_eq!(d.sigma_at(0.0), 0.5);
        assert_eq!(d.sigma_at(-2.0), 0.0);
    }

    #[test]
    fn ties_merge_and_steps_increase() {
        let d = ecdf_and_histogram(&[0.0, 2.0, 0.0, 1.0, 2.0], 3).unwrap();
        let pts: Vec<(f64, f64)> = d.ecdf.iter().map(|p| (p.lambda, p.sigma)).collect();
        assert_eq!(pts, [(0.0, 0.4), (1.0, 0.6), (2.0, 1.0)]);
        let mass: f64 = d.histogram.iter().map(|b| b.mass).sum();
        assert!((mass - 1.0).abs() < 1e-15);
    }

    #[test]
    fn constant_pool_and_errors() {
        let d = ecdf_and_histogram(&[3.0; 4], 5).unwrap();
        assert_eq!(d.histogram.iter().map(|b| b.mass).sum::<f64>(), 1.0);
        assert!(matches!(ecdf_and_histogram(&[], 3), Err(Error::EmptyPool)));
        assert!(ecdf_and_histogram(&[1.0], 0).is_err());
    }

    #[test]
    fn laplacian_jump_at_zero_is_component_fraction() {
        let g = sample_graph(300, 1.0, 21).unwrap();
        let c = component_count(&g);
        let lap = spectrum(&g, MatrixKind::Laplacian).unwrap();
        let d = ecdf_and_histogram(&lap.eigenvalues, 10).unwrap();
        let jump = d.sigma_at(1e-6) - d.sigma_at(-1e-6);
        assert!((jump - c as f64 / 300.0).abs() < 1e-12);
    }
}
