use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// The edge-intensity `p`: each pair is joined with probability `p / N`.
///
/// Held as an exact nonnegative rational so the moment recurrence and the
/// finite-`N` expectations never touch floating point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Intensity(BigRational);

impl Intensity {
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeIntensity(value.to_string()));
        }
        Ok(Intensity(value))
    }

    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::BadIntensity(alloc::format!("{numer}/{denom}")));
        }
        Ok(Intensity(BigRational::new(numer.into(), denom.into())))
    }

    pub fn from_integer(value: u64) -> Self {
        Intensity(BigRational::from_integer(value.into()))
    }

    pub fn one() -> Self {
        Intensity(BigRational::one())
    }

    pub fn zero() -> Self {
        Intensity(BigRational::zero())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY)
    }
}

impl fmt::Display for Intensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Accepts `"3"`, `"1/2"` and finite decimals such as `"0.25"`.
impl FromStr for Intensity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = || Error::BadIntensity(String::from(s));
        if text.starts_with('-') {
            return Err(Error::NegativeIntensity(String::from(text)));
        }
        let value = if let Some((whole, frac)) = text.split_once('.') {
            let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
            if !digits_ok(whole) || !digits_ok(frac) || (whole.is_empty() && frac.is_empty()) {
                return Err(bad());
            }
            let mut all = String::from(whole);
            all.push_str(frac);
            let numer = BigInt::from_str(if all.is_empty() { "0" } else { &all }).map_err(|_| bad())?;
            let denom = num_traits::pow(BigInt::from(10u8), frac.len());
            BigRational::new(numer, denom)
        } else {
            if text.contains("/-") || text.contains('+') {
                return Err(bad());
            }
            let r = BigRational::from_str(text).map_err(|_| bad())?;
            if r.denom().is_zero() {
                return Err(bad());
            }
            r
        };
        Intensity::new(value)
    }
}
