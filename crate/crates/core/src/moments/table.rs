use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Intensity, Result};

/// Largest order the table builder accepts.
pub const MAX_ORDER_CEILING: usize = 64;

/// Triangular table of `W_u(v)` for `0 ≤ v ≤ u ≤ max_order`.
///
/// Entries are kept as integers scaled by `b^u`, where `p = a / b` in lowest
/// terms; `W_u(v)` has degree at most `u` in `p`, so the scaled value is
/// always integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCountTable {
    intensity: Intensity,
    scaled: Vec<Vec<BigUint>>,
    denom_powers: Vec<BigUint>,
}

impl WalkCountTable {
    pub fn max_order(&self) -> usize {
        self.scaled.len() - 1
    }

    pub fn intensity(&self) -> &Intensity {
        &self.intensity
    }

    /// `W_u(v)`; zero when `v > u`.
    ///
    /// # Panics
    ///
    /// If `u > max_order`.
    pub fn entry(&self, u: usize, v: usize) -> BigRational {
        assert!(u <= self.max_order(), "order {u} beyond table");
        match self.scaled[u].get(v) {
            Some(w) => BigRational::new(BigInt::from(w.clone()), BigInt::from(self.denom_powers[u].clone())),
            None => BigRational::zero(),
        }
    }

    /// The column `v ↦ W_u(v)` for `v = 0..=u`.
    pub fn column(&self, u: usize) -> Vec<BigRational> {
        (0..=u).map(|v| self.entry(u, v)).collect()
    }

    /// `Σ_v W_u(v)`, i.e. the limiting moment `m_u`.
    pub fn row_sum(&self, u: usize) -> BigRational {
        let total: BigUint = self.scaled[u].iter().sum();
        BigRational::new(total.into(), self.denom_powers[u].clone().into())
    }

    /// Integer view of `W_u(v)`, available when every entry is integral
    /// (always the case at `p = 1`).
    pub fn integer_entry(&self, u: usize, v: usize) -> Option<BigUint> {
        let e = self.entry(u, v);
        if e.is_integer() {
            e.to_integer().to_biguint()
        } else {
            None
        }
    }
}

/// Builds `W_u(v)` for all `0 ≤ v ≤ u ≤ max_order`, bottom-up in `u`.
pub fn build_walk_table(max_order: usize, intensity: &Intensity) -> Result<WalkCountTable> {
    if max_order > MAX_ORDER_CEILING {
        return Err(Error::Guard {
            what: "max_order",
            value: max_order as u64,
            limit: MAX_ORDER_CEILING as u64,
        });
    }
    let p = intensity.value();
    let numer: BigUint = p.numer().to_biguint().expect("intensity is nonnegative");
    let denom: BigUint = p.denom().to_biguint().expect("denominator is positive");

    let mut denom_powers = Vec::with_capacity(max_order + 1);
    denom_powers.push(BigUint::one());
    for u in 1..=max_order {
        let next = &denom_powers[u - 1] * &denom;
        denom_powers.push(next);
    }

    let binom = pascal(2 * max_order + 1);

    // weighted[w][i] = Σ_l W'_w(l) · C(l+i-1, i-1): the inner sum over the
    // return count of the subwalk hanging below the first edge.
    let mut scaled: Vec<Vec<BigUint>> = Vec::with_capacity(max_order + 1);
    let mut weighted: Vec<Vec<BigUint>> = Vec::with_capacity(max_order + 1);

    for u in 0..=max_order {
        let mut row = vec![BigUint::zero(); u + 1];
        if u == 0 {
            row[0] = BigUint::one();
        }
        for v in 1..=u {
            let mut acc = BigUint::zero();
            for i in 1..=v {
                let mut inner = BigUint::zero();
                for j in (v - i)..=(u - i) {
                    let tail = &scaled[j][v - i];
                    if tail.is_zero() {
                        continue;
                    }
                    inner += &weighted[u - i - j][i] * tail;
                }
                if inner.is_zero() {
                    continue;
                }
                acc += inner * &binom[v - 1][i - 1] * &denom_powers[i - 1];
            }
            row[v] = acc * &numer;
        }

        let mut sums = vec![BigUint::zero(); max_order + 1];
        for (i, slot) in sums.iter_mut().enumerate().skip(1) {
            for (l, w) in row.iter().enumerate() {
                if !w.is_zero() {
                    *slot += w * &binom[l + i - 1][i - 1];
                }
            }
        }
        scaled.push(row);
        weighted.push(sums);
    }

    Ok(WalkCountTable {
        intensity: intensity.clone(),
        scaled,
        denom_powers,
    })
}

/// Rows `0..size` of Pascal's triangle.
pub(crate) fn pascal(size: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(size);
    for n in 0..size {
        let mut row = vec![BigUint::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}
