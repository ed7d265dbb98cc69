use alloc::vec;
use alloc::vec::Vec;

use libm::fabs;

use super::eigen::symmetric_eigenvalues;
use super::graph::GraphSample;
use crate::{Error, Result};

/// Largest vertex count [`spectrum`] will diagonalise.
pub const MAX_DENSE_N: usize = 4096;

/// Laplacian eigenvalues with `|λ| <` this count as zero.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    /// `A`, zero diagonal.
    Adjacency,
    /// `Δ = V − A` with `V` the diagonal of degrees.
    Laplacian,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub kind: MatrixKind,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
}

impl SpectrumResult {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `N⁻¹ Σ λ_i^s`.
    pub fn normalized_power_sum(&self, s: u32) -> f64 {
        if self.eigenvalues.is_empty() {
            return 0.0;
        }
        let total: f64 = self.eigenvalues.iter().map(|&x| pow(x, s)).sum();
        total / self.eigenvalues.len() as f64
    }

    /// Eigenvalues within [`ZERO_EIGENVALUE_TOL`] of zero.
    pub fn zero_multiplicity(&self) -> usize {
        self.eigenvalues.iter().filter(|x| fabs(**x) < ZERO_EIGENVALUE_TOL).count()
    }
}

pub(crate) fn pow(x: f64, s: u32) -> f64 {
    (0..s).fold(1.0, |acc, _| acc * x)
}

/// All eigenvalues of the adjacency matrix or Laplacian of `sample`.
///
/// The matrix is block diagonal over connected components, so each component
/// is diagonalised on its own. The result is checked against `Tr M` and
/// `Tr M²`, computed directly from the edge list.
pub fn spectrum(sample: &GraphSample, kind: MatrixKind) -> Result<SpectrumResult> {
    if sample.n > MAX_DENSE_N {
        return Err(Error::Guard {
            what: "n",
            value: sample.n as u64,
            limit: MAX_DENSE_N as u64,
        });
    }
    let degrees = sample.degrees();
    let mut local = vec![usize::MAX; sample.n];
    let mut neighbours: Vec<Vec<usize>> = vec![Vec::new(); sample.n];
    for &(a, b) in &sample.edges {
        neighbours[a].push(b);
        neighbours[b].push(a);
    }

    let mut eigenvalues = Vec::with_capacity(sample.n);
    for comp in sample.components() {
        let m = comp.len();
        if m == 1 {
            eigenvalues.push(0.0);
            continue;
        }
        for (idx, &v) in comp.iter().enumerate() {
            local[v] = idx;
        }
        let off_diagonal = match kind {
            MatrixKind::Adjacency => 1.0,
            MatrixKind::Laplacian => -1.0,
        };
        let mut block = vec![0.0; m * m];
        for (row, &v) in comp.iter().enumerate() {
            for &w in &neighbours[v] {
                block[row * m + local[w]] = off_diagonal;
            }
            if kind == MatrixKind::Laplacian {
                block[row * m + row] = degrees[v] as f64;
            }
        }
        eigenvalues.extend(symmetric_eigenvalues(&mut block, m)?);
    }
    eigenvalues.sort_unstable_by(f64::total_cmp);

    let two_e = 2.0 * sample.edge_count() as f64;
    let (trace, trace_sq) = match kind {
        MatrixKind::Adjacency => (0.0, two_e),
        MatrixKind::Laplacian => (two_e, two_e + degrees.iter().map(|&d| (d * d) as f64).sum::<f64>()),
    };
    let sum: f64 = eigenvalues.iter().sum();
    let sum_sq: f64 = eigenvalues.iter().map(|x| x * x).sum();
    let scale = libm::sqrt(trace_sq).max(1.0);
    if fabs(sum - trace) > 1e-10 * scale * sample.n.max(1) as f64 {
        return Err(Error::TraceMismatch {
            identity: "trace",
            expected: trace,
            actual: sum,
        });
    }
    if fabs(sum_sq - trace_sq) > 1e-10 * trace_sq.max(1.0) {
        return Err(Error::TraceMismatch {
            identity: "trace of square",
            expected: trace_sq,
            actual: sum_sq,
        });
    }
    Ok(SpectrumResult { kind, eigenvalues })
}
