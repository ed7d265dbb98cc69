use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::table::{build_walk_table, WalkCountTable};
use crate::{Error, Intensity, Result};

/// Limiting moments `m_1 … m_K` of `N⁻¹ Tr A^{2k}` at a fixed intensity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    intensity: Intensity,
    even_moments: Vec<BigRational>,
}

impl MomentSequence {
    pub fn intensity(&self) -> &Intensity {
        &self.intensity
    }

    pub fn max_k(&self) -> usize {
        self.even_moments.len()
    }

    /// `m_1 … m_K`.
    pub fn even_moments(&self) -> &[BigRational] {
        &self.even_moments
    }

    /// `m_k`, with `m_0 = 1`. `None` past the computed range.
    pub fn even_moment(&self, k: usize) -> Option<BigRational> {
        match k {
            0 => Some(BigRational::one()),
            _ => self.even_moments.get(k - 1).cloned(),
        }
    }

    /// Limit of `N⁻¹ Tr A^s`: `m_{s/2}` for even `s`, zero for odd `s`.
    pub fn limit_of_power(&self, s: usize) -> Option<BigRational> {
        if s % 2 == 1 {
            Some(BigRational::zero())
        } else {
            self.even_moment(s / 2)
        }
    }

    /// All odd limiting moments are identically zero.
    pub fn odd_moments_zero(&self) -> bool {
        true
    }
}

/// `m_k = Σ_{r=0}^{k} W_k(r)`.
pub fn moment_limit(k: usize, table: &WalkCountTable) -> Result<BigRational> {
    if k > table.max_order() {
        return Err(Error::OrderOutOfRange {
            k,
            max_order: table.max_order(),
        });
    }
    Ok(table.row_sum(k))
}

pub fn moment_sequence(max_k: usize, intensity: &Intensity) -> Result<MomentSequence> {
    let table = build_walk_table(max_k, intensity)?;
    let even_moments = (1..=max_k)
        .map(|k| moment_limit(k, &table))
        .collect::<Result<Vec<_>>>()?;
    Ok(MomentSequence {
        intensity: intensity.clone(),
        even_moments,
    })
}
