//! Bit-operation accounting under the standard-arithmetic model.
//!
//! Multiplying an m-bit by an n-bit integer is charged m*n "bops";
//! additions and subtractions charge the larger operand length;
//! comparisons and shifts are free.  Every big-integer multiplication
//! performed by the ring and division layers is routed through
//! [`mul_int`] so that a run's `mul_cost` is a complete account of its
//! multiplication work.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::natlog;
use crate::ring::bitlen;

/// Monotone counters describing the modeled cost of a run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CostCounters {
    /// Sum of m*n over all charged multiplications.
    pub mul_cost: u128,
    /// Sum of max(m, n) over all charged additions/subtractions.
    pub add_cost: u128,
    /// Number of long divisions performed.
    pub div_steps: u64,
    /// Number of successful extractions of the ramified prime.
    pub ramified_removals: u64,
    /// Sum of bitlen(N(beta_j)) over the divisors of a symbol run.
    pub remainder_volume: u128,
}

impl CostCounters {
    pub fn new() -> Self {
        Self::default()
    }

    /// Charge one multiplication of an m-bit by an n-bit integer.
    pub fn charge_mul(&mut self, m: u64, n: u64) {
        debug_assert!(m >= 1 && n >= 1);
        self.mul_cost += u128::from(m) * u128::from(n);
    }

    /// Charge one addition/subtraction whose larger operand has n bits.
    pub fn charge_add(&mut self, n: u64) {
        debug_assert!(n >= 1);
        self.add_cost += u128::from(n);
    }

    /// A copy of the counters at this instant.
    pub fn snapshot(&self) -> CostCounters {
        self.clone()
    }

    /// Fold another run's counters into this one (associative).
    pub fn merge(&mut self, other: &CostCounters) {
        self.mul_cost += other.mul_cost;
        self.add_cost += other.add_cost;
        self.div_steps += other.div_steps;
        self.ramified_removals += other.ramified_removals;
        self.remainder_volume += other.remainder_volume;
    }
}

impl Add for CostCounters {
    type Output = CostCounters;
    fn add(mut self, rhs: CostCounters) -> CostCounters {
        self.merge(&rhs);
        self
    }
}

/// The audited multiplication entry point: every `Int` product taken by
/// the ring and division layers goes through here.
pub fn mul_int(x: &BigInt, y: &BigInt, cost: &mut CostCounters) -> BigInt {
    cost.charge_mul(bitlen(x), bitlen(y));
    x * y
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FitError {
    TooFewPoints,
    SizesNotIncreasing,
    NonPositiveCost,
}

impl fmt::Display for FitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitError::TooFewPoints => write!(f, "need at least 4 points to fit an exponent"),
            FitError::SizesNotIncreasing => write!(f, "sizes must be strictly increasing"),
            FitError::NonPositiveCost => write!(f, "costs must be positive"),
        }
    }
}

/// Least-squares slope of ln(cost) against ln(size).
///
/// Both logarithms are taken by the exact fixed-point routine in
/// [`natlog`], and the regression runs over exact rationals, so the
/// result is deterministic across platforms.
pub fn fit_exponent(points: &[(u64, u128)]) -> Result<BigRational, FitError> {
    if points.len() < 4 {
        return Err(FitError::TooFewPoints);
    }
    for w in points.windows(2) {
        if w[0].0 >= w[1].0 {
            return Err(FitError::SizesNotIncreasing);
        }
    }
    if points.iter().any(|&(n, c)| n == 0 || c == 0) {
        return Err(FitError::NonPositiveCost);
    }

    const FRAC_BITS: u32 = 64;
    let logs: Vec<(BigRational, BigRational)> = points
        .iter()
        .map(|&(n, c)| {
            let x = natlog::ln_int(&BigInt::from(n), FRAC_BITS).expect("size > 0");
            let y = natlog::ln_int(&BigInt::from(c), FRAC_BITS).expect("cost > 0");
            (x, y)
        })
        .collect();

    let k = BigRational::from_integer(BigInt::from(points.len() as u64));
    let mut sx = BigRational::default();
    let mut sy = BigRational::default();
    let mut sxy = BigRational::default();
    let mut sxx = BigRational::default();
    for (x, y) in &logs {
        sx += x;
        sy += y;
        sxy += x * y;
        sxx += x * x;
    }
    let denom = &k * &sxx - &sx * &sx;
    debug_assert!(!denom.numer().is_zero(), "distinct sizes give a nonzero denominator");
    Ok((&k * &sxy - &sx * &sy) / denom)
}

use num_traits::Zero;
