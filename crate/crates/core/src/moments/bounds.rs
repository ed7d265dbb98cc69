use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::table::{build_walk_table, WalkCountTable};
use crate::{Error, Intensity, Result};

/// `W_k(r)` against `(c1·k)^{2r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkBoundRecord {
    pub k: usize,
    pub r: usize,
    pub value: BigUint,
    pub bound: BigRational,
    pub holds: bool,
}

/// `W_k(k)` against `(k/2)!` for even `k`: the walks on the star with `k/2`
/// root edges that pass each edge four times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundRecord {
    pub k: usize,
    pub value: BigUint,
    pub factorial: BigUint,
    pub holds: bool,
}

/// `m_{2k}` against `(c2·k)^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentBoundRecord {
    pub k: usize,
    pub value: BigUint,
    pub bound: BigRational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub max_order: usize,
    pub c1: BigRational,
    pub c2: BigRational,
    pub walk_bounds: Vec<WalkBoundRecord>,
    pub lower_bounds: Vec<LowerBoundRecord>,
    pub moment_bounds: Vec<MomentBoundRecord>,
}

impl BoundReport {
    pub fn walk_bound_holds(&self) -> bool {
        self.walk_bounds.iter().all(|r| r.holds)
    }

    pub fn lower_bound_holds(&self) -> bool {
        self.lower_bounds.iter().all(|r| r.holds)
    }

    pub fn moment_bound_holds(&self) -> bool {
        self.moment_bounds.iter().all(|r| r.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.walk_bound_holds() && self.lower_bound_holds() && self.moment_bound_holds()
    }

    pub fn first_walk_violation(&self) -> Option<&WalkBoundRecord> {
        self.walk_bounds.iter().find(|r| !r.holds)
    }
}

/// Checks the three growth bounds on the unit-intensity table up to
/// `max_order`, in exact arithmetic.
pub fn check_bounds(max_order: usize, c1: &BigRational, c2: &BigRational) -> Result<BoundReport> {
    let table = build_walk_table(max_order, &Intensity::one())?;
    check_bounds_on(&table, c1, c2)
}

/// As [`check_bounds`], reusing an already built table (which must have
/// intensity 1).
pub fn check_bounds_on(table: &WalkCountTable, c1: &BigRational, c2: &BigRational) -> Result<BoundReport> {
    if !table.intensity().is_one() {
        return Err(Error::BoundsNeedUnitIntensity(table.intensity().to_string()));
    }
    let max_order = table.max_order();
    if max_order < 2 {
        return Err(Error::TooSmall {
            what: "max_order",
            value: max_order as u64,
            min: 2,
        });
    }
    for c in [c1, c2] {
        if !c.is_positive() {
            return Err(Error::NonPositiveConstant(c.to_string()));
        }
    }

    let int = |u: usize, v: usize| table.integer_entry(u, v).expect("unit-intensity table is integral");

    let mut walk_bounds = Vec::new();
    for k in 0..=max_order {
        let base = c1 * BigRational::from_integer(k.into());
        for r in 0..=k {
            let value = int(k, r);
            let bound = num_traits::pow(base.clone(), 2 * r);
            let holds = BigRational::from_integer(value.clone().into()) <= bound;
            walk_bounds.push(WalkBoundRecord { k, r, value, bound, holds });
        }
    }

    let mut lower_bounds = Vec::new();
    for k in (2..=max_order).step_by(2) {
        let value = int(k, k);
        let factorial = factorial(k / 2);
        let holds = value >= factorial;
        lower_bounds.push(LowerBoundRecord { k, value, factorial, holds });
    }

    let mut moment_bounds = Vec::new();
    for k in 1..=max_order / 2 {
        let value: BigUint = (0..=2 * k).map(|r| int(2 * k, r)).sum();
        let base = c2 * BigRational::from_integer(k.into());
        let bound = num_traits::pow(base, 2 * k);
        let holds = BigRational::from_integer(value.clone().into()) <= bound;
        moment_bounds.push(MomentBoundRecord { k, value, bound, holds });
    }

    Ok(BoundReport {
        max_order,
        c1: c1.clone(),
        c2: c2.clone(),
        walk_bounds,
        lower_bounds,
        moment_bounds,
    })
}

/// Smallest integer constants in `1..=limit` for which the walk bound and
/// the moment bound hold on the whole table; `None` when no constant in the
/// range works.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundConstants {
    pub c1: Option<u32>,
    pub c2: Option<u32>,
}

pub fn find_bound_constants(max_order: usize, limit: u32) -> Result<BoundConstants> {
    let table = build_walk_table(max_order, &Intensity::one())?;
    let mut found = BoundConstants { c1: None, c2: None };
    for c in 1..=limit {
        let c_rat = BigRational::from_integer(c.into());
        let report = check_bounds_on(&table, &c_rat, &c_rat)?;
        if found.c1.is_none() && report.walk_bound_holds() {
            found.c1 = Some(c);
        }
        if found.c2.is_none() && report.moment_bound_holds() {
            found.c2 = Some(c);
        }
    }
    Ok(found)
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, t| acc * BigUint::from(t))
}
