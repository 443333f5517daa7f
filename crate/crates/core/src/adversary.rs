//! Worst-case input families: the geometric recurrences that pin the
//! rounded quotient to a constant, the ramified-removal stress pair,
//! and the families on which the even-quotient algorithms take an
//! exponential number of steps.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cost::CostCounters;
use crate::natlog;
use crate::ring::{EisensteinInt, GaussianInt, Int, RingElement, RingKind};

/// Descriptive data for one of the bad recurrences; the root magnitudes
/// are dyadic approximations for reporting only.
#[derive(Clone, Debug)]
pub struct RecurrenceSpec {
    pub ring: RingKind,
    /// Multiplier coefficient (3w, resp. 2 + 2i) in coordinates.
    pub coefficient: (i64, i64),
    /// Seeds (xi_0, xi_1) in coordinates.
    pub seeds: [(i64, i64); 2],
    /// |dominant root| * 2^16, rounded.
    pub dominant_root_abs_q16: u64,
    /// |minor root| * 2^16, rounded.
    pub minor_root_abs_q16: u64,
}

/// xi_n = 3w xi_{n-1} + xi_{n-2}, xi_0 = -1, xi_1 = 2; every element is
/// 2 mod 3 and the rounded quotient of consecutive elements locks to 3w.
pub const CUBIC_RECURRENCE: RecurrenceSpec = RecurrenceSpec {
    ring: RingKind::Eisenstein,
    coefficient: (0, 3),
    seeds: [(-1, 0), (2, 0)],
    dominant_root_abs_q16: 188_633, // ~2.8783
    minor_root_abs_q16: 22_768,     // ~0.3474
};

/// xi_n = 2(1+i) xi_{n-1} + xi_{n-2}, xi_0 = 1, xi_1 = 5; the quotient
/// locks to 2 + 2i.
pub const QUARTIC_RECURRENCE: RecurrenceSpec = RecurrenceSpec {
    ring: RingKind::Gaussian,
    coefficient: (2, 2),
    seeds: [(1, 0), (5, 0)],
    dominant_root_abs_q16: 189_447, // ~2.8907
    minor_root_abs_q16: 22_670,     // ~0.3459
};

fn recurrence_prefix<R: RingElement>(spec: &RecurrenceSpec, n: u32) -> Vec<R> {
    let coeff = R::new(Int::from(spec.coefficient.0), Int::from(spec.coefficient.1));
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut cost = CostCounters::new();
    out.push(R::new(Int::from(spec.seeds[0].0), Int::from(spec.seeds[0].1)));
    if n == 0 {
        return out;
    }
    out.push(R::new(Int::from(spec.seeds[1].0), Int::from(spec.seeds[1].1)));
    for j in 2..=n as usize {
        let next = coeff.mul(&out[j - 1], &mut cost).add(&out[j - 2], &mut cost);
        out.push(next);
    }
    out
}

/// Prefix xi_0 ..= xi_n of the cubic bad sequence.
pub fn xi_cubic_seq(n: u32) -> Vec<EisensteinInt> {
    recurrence_prefix(&CUBIC_RECURRENCE, n)
}

/// xi_n of the cubic bad sequence.
pub fn xi_cubic(n: u32) -> EisensteinInt {
    xi_cubic_seq(n).pop().expect("nonempty")
}

/// Prefix xi_0 ..= xi_n of the quartic bad sequence.
pub fn xi_quartic_seq(n: u32) -> Vec<GaussianInt> {
    recurrence_prefix(&QUARTIC_RECURRENCE, n)
}

/// xi_n of the quartic bad sequence.
pub fn xi_quartic(n: u32) -> GaussianInt {
    xi_quartic_seq(n).pop().expect("nonempty")
}

/// Ramified-removal stress pair: alpha = 3^m + (1-w)^m + 1,
/// beta = 3^m + 1 (primary).  The quotient rounds to 1 and the first
/// remainder is exactly (1-w)^m.
pub fn step4_stress(m: u32) -> (EisensteinInt, EisensteinInt) {
    let mut cost = CostCounters::new();
    let three_m = Int::from(3).pow(m);
    let lam = EisensteinInt::ramified();
    let mut lam_m = EisensteinInt::one();
    for _ in 0..m {
        lam_m = lam_m.mul(&lam, &mut cost);
    }
    let beta = EisensteinInt::new(&three_m + Int::one(), Int::zero());
    let alpha = lam_m.add(&beta, &mut cost);
    debug_assert!(beta.is_primary());
    (alpha, beta)
}

/// Exponential family for the even-quotient cubic algorithm:
/// alpha = (3k+2) w, beta = 1 + (3k+3) w; the run takes exactly 4k+3
/// division steps.
pub fn even_cubic_bad(k: u64) -> (EisensteinInt, EisensteinInt) {
    let alpha = EisensteinInt::new(Int::zero(), Int::from(3 * k + 2));
    let beta = EisensteinInt::new(Int::one(), Int::from(3 * k + 3));
    debug_assert!(beta.is_primary());
    debug_assert!(!alpha.ramified_divides());
    (alpha, beta)
}

/// Exponential family for the even-quotient quartic algorithm:
/// (4m+1, 4m-3), consecutive numbers 1 mod 4.
pub fn even_quartic_bad(m: u64) -> (GaussianInt, GaussianInt) {
    let alpha = GaussianInt::new(Int::from(4 * m + 1), Int::zero());
    let beta = GaussianInt::new(Int::from(4 * m - 3), Int::zero());
    debug_assert!(beta.is_primary());
    (alpha, beta)
}

/// ln(N(xi_n))/n as an exact rational carrying 64 fractional bits of
/// accuracy; converges to ln N(lambda) ~ 2.1144.
pub fn growth_rate(n: u32) -> BigRational {
    assert!(n >= 1, "growth rate needs n >= 1");
    let norm = xi_cubic(n).norm_uncosted();
    let ln = natlog::ln_int(&norm, 64).expect("norms are positive");
    ln / BigRational::from_integer(Int::from(n))
}

/// ln N(xi_{n+1}) - ln N(xi_n), the one-step growth estimate.
pub fn growth_step(n: u32) -> BigRational {
    let seq = xi_cubic_seq(n + 1);
    let a = natlog::ln_int(&seq[n as usize + 1].norm_uncosted(), 64).expect("positive");
    let b = natlog::ln_int(&seq[n as usize].norm_uncosted(), 64).expect("positive");
    a - b
}
