use num_integer::Integer;

use crate::arith::Natural;
use crate::error::{Error, Result};
use crate::theodorus;

/// Limiting share of `n` the remainder method settles. The unsettled `n`
/// are `4^j * m` with `m = 1 mod 8` a non-square, of density
/// `(1/8) * (1 + 1/4 + 1/16 + ...) = 1/6`.
pub const LIMITING_CONCLUSIVE_DENSITY: (u64, u64) = (5, 6);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageStats {
    pub range_max: Natural,
    pub conclusive: Natural,
    pub inconclusive: Natural,
    /// `conclusive / range_max` in lowest terms.
    pub fraction: (Natural, Natural),
    pub inconclusive_cases: Vec<Natural>,
}

impl CoverageStats {
    /// `conclusive / range_max` in basis points, rounded down.
    pub fn basis_points(&self) -> Natural {
        &self.conclusive * 10_000 / &self.range_max
    }
}

/// Classifies every `n` in `1..=range_max` and counts what is settled.
pub fn coverage_stats(range_max: &Natural) -> Result<CoverageStats> {
    if range_max.is_zero() {
        return Err(Error::Zero("coverage_stats"));
    }
    let mut inconclusive_cases = Vec::new();
    let mut n = Natural::one();
    while &n <= range_max {
        let (verdict, _) = theodorus::classify(&n)?;
        if verdict.is_inconclusive() {
            inconclusive_cases.push(n.clone());
        }
        n = n + 1;
    }
    let inconclusive = Natural::from(inconclusive_cases.len());
    let conclusive = range_max - &inconclusive;
    let g = Natural::from(conclusive.as_biguint().gcd(range_max.as_biguint()));
    Ok(CoverageStats {
        range_max: range_max.clone(),
        fraction: (&conclusive / &g, range_max / &g),
        conclusive,
        inconclusive,
        inconclusive_cases,
    })
}
