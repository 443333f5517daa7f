//! Long division in Z[w] and Z[i]: exact rounded quotients, Jacobi's
//! remainder formula, Newton-iteration approximate quotients, and the
//! even-quotient variant whose quotients are divisible by the ramified
//! prime.
//!
//! Every mode returns the exact identity alpha = q*beta + r; they differ
//! in how q is found and which shrink bound N(r) satisfies.

use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cost::{mul_int, CostCounters};
use crate::ring::{bitlen, Int, RingElement};

/// Guard bits for Newton divisions; keeps the shrink slack at
/// 3 * 2^-8 < 0.012 so the per-step contraction stays below 1.
pub const NEWTON_GUARD_BITS: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisionError {
    DivisorZero,
    /// Even-quotient division needs N(beta) > 1.
    DivisorNormTooSmall,
}

impl fmt::Display for DivisionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisionError::DivisorZero => write!(f, "division by zero"),
            DivisionError::DivisorNormTooSmall => {
                write!(f, "even-quotient division requires a divisor of norm > 1")
            }
        }
    }
}

/// Quotient-remainder pair with the achieved shrink N(r)/N(beta).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionOutcome<R> {
    pub q: R,
    pub r: R,
    pub shrink: BigRational,
}

/// (u + v*basis) / 2^exp, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicComplex {
    pub u: Int,
    pub v: Int,
    pub exp: u64,
}

impl DyadicComplex {
    /// Round both coordinates to nearest integers, halves toward +inf.
    pub fn round_coords(&self) -> (Int, Int) {
        (
            round_dyadic(&self.u, self.exp),
            round_dyadic(&self.v, self.exp),
        )
    }

    /// Keep at most `keep_bits` significand bits per coordinate,
    /// rounding; the represented value changes by less than
    /// 2^-(exp_after) per coordinate.
    fn trim(&mut self, keep_bits: u64) {
        let s = bitlen(&self.u).max(bitlen(&self.v));
        if s > keep_bits {
            let sh = (s - keep_bits).min(self.exp);
            if sh > 0 {
                let half: Int = Int::one() << (sh - 1);
                self.u = (&self.u + &half) >> sh;
                self.v = (&self.v + &half) >> sh;
                self.exp -= sh;
            }
        }
    }
}

/// Round x / 2^exp to the nearest integer, halves toward +inf.
fn round_dyadic(x: &Int, exp: u64) -> Int {
    if exp == 0 {
        x.clone()
    } else {
        (x + (Int::one() << (exp - 1))) >> exp
    }
}

/// Round x / n to the nearest integer for n > 0, halves toward +inf.
fn round_ratio(x: &Int, n: &Int) -> Int {
    use num_integer::Integer;
    ((x << 1u32) + n).div_floor(&(n << 1u32))
}

fn shrink_ratio<R: RingElement>(r: &R, n_beta: &Int) -> BigRational {
    BigRational::new(r.norm_uncosted(), n_beta.clone())
}

/// q = round(alpha * conj(beta) / N(beta)) coordinatewise, r = alpha - q*beta.
/// Also returns the coordinates of alpha * conj(beta).
fn rounded_parts<R: RingElement>(
    alpha: &R,
    beta: &R,
    n_beta: &Int,
    cost: &mut CostCounters,
) -> (R, R, Int, Int) {
    let conj = beta.conj();
    let (pu, pv) = R::mul_coords(alpha.a(), alpha.b(), conj.a(), conj.b(), cost);
    let q = R::new(round_ratio(&pu, n_beta), round_ratio(&pv, n_beta));
    let r = alpha.sub(&q.mul(beta, cost), cost);
    (q, r, pu, pv)
}

/// Exact long division by coordinate rounding of alpha*conj(beta)/N(beta).
///
/// The remainder satisfies N(r) <= (3/4) N(beta) in Z[w] and
/// N(r) <= (1/2) N(beta) in Z[i].
pub fn divmod_round<R: RingElement>(
    alpha: &R,
    beta: &R,
    cost: &mut CostCounters,
) -> Result<DivisionOutcome<R>, DivisionError> {
    let n_beta = beta.norm(cost);
    if n_beta.is_zero() {
        return Err(DivisionError::DivisorZero);
    }
    let (q, r, _, _) = rounded_parts(alpha, beta, &n_beta, cost);
    cost.div_steps += 1;
    let shrink = shrink_ratio(&r, &n_beta);
    Ok(DivisionOutcome { q, r, shrink })
}

/// Jacobi's remainder formula: gamma = [alpha*conj(beta) mod N(beta)] * beta / N(beta)
/// with absolutely least residues taken coordinatewise.
///
/// With residues in [-N/2, N/2) this produces exactly the remainder of
/// [`divmod_round`].
pub fn remainder_jacobi<R: RingElement>(
    alpha: &R,
    beta: &R,
    cost: &mut CostCounters,
) -> Result<R, DivisionError> {
    use num_integer::Integer;
    let n_beta = beta.norm(cost);
    if n_beta.is_zero() {
        return Err(DivisionError::DivisorZero);
    }
    let conj = beta.conj();
    let (pu, pv) = R::mul_coords(alpha.a(), alpha.b(), conj.a(), conj.b(), cost);
    let reduce = |x: &Int| -> Int {
        let mut m = x.mod_floor(&n_beta);
        if (&m << 1u32) >= n_beta {
            m -= &n_beta;
        }
        m
    };
    let (ru, rv) = (reduce(&pu), reduce(&pv));
    let (gu, gv) = R::mul_coords(&ru, &rv, beta.a(), beta.b(), cost);
    let (ga, gr) = gu.div_rem(&n_beta);
    let (gb, gi) = gv.div_rem(&n_beta);
    debug_assert!(gr.is_zero() && gi.is_zero(), "Jacobi remainder is integral");
    Ok(R::new(ga, gb))
}

/// One Newton step xi' = xi (2 - beta xi), trimmed to `keep_bits`
/// significand bits.
fn newton_step<R: RingElement>(
    beta: &R,
    xi: &DyadicComplex,
    keep_bits: u64,
    cost: &mut CostCounters,
) -> DyadicComplex {
    let (wu, wv) = R::mul_coords(beta.a(), beta.b(), &xi.u, &xi.v, cost);
    let two_scaled: Int = Int::one() << (xi.exp + 1);
    cost.charge_add(bitlen(&two_scaled).max(bitlen(&wu)));
    let tu = two_scaled - wu;
    let tv = -wv;
    let (nu, nv) = R::mul_coords(&xi.u, &xi.v, &tu, &tv, cost);
    let mut out = DyadicComplex {
        u: nu,
        v: nv,
        exp: xi.exp * 2,
    };
    out.trim(keep_bits);
    out
}

/// Sufficient residual test: both coordinates of 1 - beta*xi below
/// 2^(exp - target - 1) force N(1 - beta*xi) < 2^(-2*target).
fn residual_small_enough<R: RingElement>(
    beta: &R,
    xi: &DyadicComplex,
    target: u64,
    cost: &mut CostCounters,
) -> bool {
    let (wu, wv) = R::mul_coords(beta.a(), beta.b(), &xi.u, &xi.v, cost);
    let one_scaled: Int = Int::one() << xi.exp;
    cost.charge_add(bitlen(&one_scaled).max(bitlen(&wu)));
    let eu = one_scaled - wu;
    let ev = -wv;
    if xi.exp < target + 2 {
        return false;
    }
    let limit = xi.exp - target - 1;
    bitlen_lt_pow2(&eu, limit) && bitlen_lt_pow2(&ev, limit)
}

fn bitlen_lt_pow2(x: &Int, limit: u64) -> bool {
    x.is_zero() || x.magnitude().bits() <= limit
}

/// Approximate inverse of beta with |1 - beta*xi| <= 2^-(m + g),
/// g = [`NEWTON_GUARD_BITS`].
///
/// Starts from conj(beta)/2^e with e = 2 max{r, s} + 2 over the
/// coordinate bit lengths, then squares the error with precision
/// doubling, trimming every intermediate product; the loop exits only
/// after an exact residual test on the true beta.
pub fn newton_inverse<R: RingElement>(
    beta: &R,
    m: u64,
    cost: &mut CostCounters,
) -> Result<DyadicComplex, DivisionError> {
    if beta.is_zero() {
        return Err(DivisionError::DivisorZero);
    }
    let target = m.max(1) + NEWTON_GUARD_BITS;

    let mut e = 0u64;
    for c in [beta.a(), beta.b()] {
        if !c.is_zero() {
            e = e.max(c.bits());
        }
    }
    let e = 2 * e + 2;

    let conj = beta.conj();
    let mut xi = DyadicComplex {
        u: conj.a().clone(),
        v: conj.b().clone(),
        exp: e,
    };

    // |1 - beta*xi0| can be as large as 31/32, so the error shrinks
    // slowly at first; a few fixed-precision warmup rounds cut it below
    // 1/2 before precision doubling starts paying off.
    const WARMUP_BITS: u64 = 16;
    const WARMUP_ROUNDS: u32 = 8;
    let mut final_p = (target + 4).max(WARMUP_BITS);
    xi.trim(WARMUP_BITS);
    for _ in 0..WARMUP_ROUNDS {
        xi = newton_step(beta, &xi, WARMUP_BITS, cost);
    }
    let mut p = WARMUP_BITS;
    while p < final_p {
        p = (p * 2).min(final_p);
        xi = newton_step(beta, &xi, p, cost);
    }
    xi = newton_step(beta, &xi, final_p, cost);
    while !residual_small_enough(beta, &xi, target, cost) {
        final_p += 8;
        xi = newton_step(beta, &xi, final_p, cost);
    }
    Ok(xi)
}

/// Long division through the Newton inverse: m = max(k - l, 0) + g
/// significant digits of 1/beta suffice to place q within 2^-g of the
/// exact rounded quotient, so N(r) <= (3/4 + 3*2^-g) N(beta) in Z[w]
/// (1/2 + 3*2^-g in Z[i]).
pub fn divmod_newton<R: RingElement>(
    alpha: &R,
    beta: &R,
    cost: &mut CostCounters,
) -> Result<DivisionOutcome<R>, DivisionError> {
    if beta.is_zero() {
        return Err(DivisionError::DivisorZero);
    }
    let k = alpha.oplen();
    let l = beta.oplen();
    let m = k.saturating_sub(l) + NEWTON_GUARD_BITS;
    let xi = newton_inverse(beta, m, cost)?;
    let (pu, pv) = R::mul_coords(alpha.a(), alpha.b(), &xi.u, &xi.v, cost);
    let prod = DyadicComplex {
        u: pu,
        v: pv,
        exp: xi.exp,
    };
    let (qa, qb) = prod.round_coords();
    let q = R::new(qa, qb);
    let r = alpha.sub(&q.mul(beta, cost), cost);
    cost.div_steps += 1;
    let n_beta = beta.norm_uncosted();
    let shrink = shrink_ratio(&r, &n_beta);
    Ok(DivisionOutcome { q, r, shrink })
}

/// Division with the quotient forced divisible by the ramified prime.
///
/// Rounds exactly first; if the rounded quotient q0 is not divisible,
/// it is corrected by the unit nearest in angle to the remainder ratio
/// omega = alpha/beta - q0 among those restoring divisibility (the
/// construction behind the existence proof), which keeps
/// N(r) < N(beta) strictly.  Requires N(beta) > 1.
///
/// When the division is exact (r = 0) the quotient is returned as
/// rounded even if it is not divisible: no divisible quotient with a
/// shrinking remainder exists in that case, and callers terminate on a
/// zero remainder anyway.
pub fn divmod_even<R: RingElement>(
    alpha: &R,
    beta: &R,
    cost: &mut CostCounters,
) -> Result<DivisionOutcome<R>, DivisionError> {
    let n_beta = beta.norm(cost);
    if n_beta.is_zero() {
        return Err(DivisionError::DivisorZero);
    }
    if n_beta.is_one() {
        return Err(DivisionError::DivisorNormTooSmall);
    }
    let (q0, r0, pu, pv) = rounded_parts(alpha, beta, &n_beta, cost);
    cost.div_steps += 1;

    if r0.is_zero() || q0.ramified_divides() {
        let shrink = shrink_ratio(&r0, &n_beta);
        return Ok(DivisionOutcome { q: q0, r: r0, shrink });
    }

    // integer coordinates of omega * N(beta)
    let wu = pu - mul_int(q0.a(), &n_beta, cost);
    let wv = pv - mul_int(q0.b(), &n_beta, cost);
    cost.charge_add(bitlen(&wu));
    cost.charge_add(bitlen(&wv));
    let eps = R::even_adjustment(&wu, &wv, &q0);
    let q = q0.add(&eps, cost);
    debug_assert!(q.ramified_divides());
    let r = r0.sub(&eps.mul(beta, cost), cost);
    let shrink = shrink_ratio(&r, &n_beta);
    debug_assert!(
        shrink < BigRational::one(),
        "angle-nearest unit adjustment shrinks the remainder"
    );
    Ok(DivisionOutcome { q, r, shrink })
}

/// Euclidean gcd through rounded division; the result is determined up
/// to units.
pub fn gcd<R: RingElement>(a: &R, b: &R, cost: &mut CostCounters) -> R {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let out = divmod_round(&x, &y, cost).expect("divisor is nonzero");
        x = y;
        y = out.r;
    }
    x
}

/// True when d divides x exactly.
pub fn divides<R: RingElement>(d: &R, x: &R, cost: &mut CostCounters) -> bool {
    match divmod_round(x, d, cost) {
        Ok(out) => out.r.is_zero(),
        Err(_) => false,
    }
}

/// Exact quotient x / d, when d divides x.
pub fn exact_div<R: RingElement>(x: &R, d: &R, cost: &mut CostCounters) -> Option<R> {
    let out = divmod_round(x, d, cost).ok()?;
    if out.r.is_zero() {
        Some(out.q)
    } else {
        None
    }
}

/// Exact residual norm N(1 - beta*xi) as a rational, for verification.
pub fn newton_residual_norm<R: RingElement>(beta: &R, xi: &DyadicComplex) -> BigRational {
    let mut scratch = CostCounters::new();
    let (wu, wv) = R::mul_coords(beta.a(), beta.b(), &xi.u, &xi.v, &mut scratch);
    let eu = (Int::one() << xi.exp) - wu;
    let ev = -wv;
    let n = R::norm_coords(&eu, &ev, &mut scratch);
    BigRational::new(n, Int::one() << (2 * xi.exp))
}

/// Shrink-bound check as an exact rational comparison.
pub fn shrink_holds(shrink: &BigRational, num: u32, den: u32) -> bool {
    shrink <= &BigRational::new(Int::from(num), Int::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{EisensteinInt, GaussianInt};

    fn eis(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::from_i64(a, b)
    }
    fn gau(a: i64, b: i64) -> GaussianInt {
        GaussianInt::from_i64(a, b)
    }
    fn c() -> CostCounters {
        CostCounters::new()
    }

    #[test]
    fn rounded_division_examples() {
        let out = divmod_round(&eis(7, 3), &eis(2, 1), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (eis(3, 0), eis(1, 0)));

        let b = eis(-5, 12);
        let out = divmod_round(&b, &b, &mut c()).unwrap();
        assert_eq!((out.q, out.r), (EisensteinInt::one(), EisensteinInt::zero()));
        assert!(out.shrink.is_zero());

        // the recurrence pair (xi_3, xi_2) divides with quotient 3w and
        // remainder xi_1 = 2
        let out = divmod_round(&eis(-16, -21), &eis(-1, 6), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (eis(0, 3), eis(2, 0)));
    }

    #[test]
    fn rounded_division_identity_and_shrink() {
        let out = divmod_round(&eis(101, -57), &eis(4, 9), &mut c()).unwrap();
        let back = &(&out.q * &eis(4, 9)) + &out.r;
        assert_eq!(back, eis(101, -57));
        assert!(shrink_holds(&out.shrink, 3, 4));
        let out = divmod_round(&gau(77, 13), &gau(-6, 5), &mut c()).unwrap();
        let back = &(&out.q * &gau(-6, 5)) + &out.r;
        assert_eq!(back, gau(77, 13));
        assert!(shrink_holds(&out.shrink, 1, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            divmod_round(&eis(1, 0), &EisensteinInt::zero(), &mut c()),
            Err(DivisionError::DivisorZero)
        );
        assert_eq!(
            divmod_newton(&gau(1, 0), &GaussianInt::zero(), &mut c()),
            Err(DivisionError::DivisorZero)
        );
    }

    #[test]
    fn tie_rounding_goes_up() {
        // (xi_2, xi_1): -1/2 + 3w rounds to (0, 3) under the
        // half-toward-plus-infinity rule, giving remainder xi_0 = -1.
        let out = divmod_round(&eis(-1, 6), &eis(2, 0), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (eis(0, 3), eis(-1, 0)));
    }

    #[test]
    fn jacobi_remainder_matches_rounded_division() {
        let g = remainder_jacobi(&eis(7, 3), &eis(2, 1), &mut c()).unwrap();
        assert_eq!(g, eis(1, 0));
        let g = remainder_jacobi(&eis(5, 12), &eis(5, 12), &mut c()).unwrap();
        assert!(g.is_zero());
        let g = remainder_jacobi(&eis(-16, -21), &eis(-1, 6), &mut c()).unwrap();
        assert_eq!(g, eis(2, 0));
    }

    #[test]
    fn newton_inverse_trivial_divisor() {
        let xi = newton_inverse(&EisensteinInt::one(), 16, &mut c()).unwrap();
        let res = newton_residual_norm(&EisensteinInt::one(), &xi);
        let bound = BigRational::new(Int::one(), Int::one() << (2 * (16 + NEWTON_GUARD_BITS)));
        assert!(res < bound, "residual {res} above {bound}");
    }

    #[test]
    fn newton_inverse_residual_bound() {
        let beta = eis(2, 1);
        let xi = newton_inverse(&beta, 16, &mut c()).unwrap();
        let res = newton_residual_norm(&beta, &xi);
        let bound = BigRational::new(Int::one(), Int::one() << (2 * (16 + NEWTON_GUARD_BITS)));
        assert!(res < bound, "residual {res} above {bound}");
    }

    #[test]
    fn newton_division_tracks_exact_on_recurrence_pair() {
        let out = divmod_newton(&eis(-16, -21), &eis(-1, 6), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (eis(0, 3), eis(2, 0)));
        let out = divmod_newton(&gau(11, 10), &gau(5, 0), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (gau(2, 2), gau(1, 0)));
    }

    #[test]
    fn newton_division_self() {
        let b = eis(-322, 7);
        let out = divmod_newton(&b, &b, &mut c()).unwrap();
        assert_eq!((out.q, out.r), (EisensteinInt::one(), EisensteinInt::zero()));
    }

    #[test]
    fn even_division_examples() {
        // rounded quotient already divisible
        let out = divmod_even(&eis(7, 0), &eis(2, 1), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (eis(2, -2), eis(1, 0)));

        // adjustment needed; minimal N(r) among the three admissible
        // unit shifts (the others give norms 7 and 4, both >= N(beta) or
        // larger)
        let out = divmod_even(&eis(2, 2), &eis(2, 1), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (eis(2, 1), eis(-1, -1)));

        // the Smith pair 4m+1, 4m-3 at m=5
        let out = divmod_even(&gau(21, 0), &gau(17, 0), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (gau(2, 0), gau(-13, 0)));
    }

    #[test]
    fn even_division_rejects_unit_divisors() {
        assert_eq!(
            divmod_even(&eis(5, 3), &eis(1, 0), &mut c()),
            Err(DivisionError::DivisorNormTooSmall)
        );
    }

    #[test]
    fn even_division_zero_quotient_when_numerator_smaller() {
        // |alpha| < |beta| keeps the rounded quotient at 0, which is
        // divisible; the remainder is alpha itself.
        let out = divmod_even(&eis(1, 0), &eis(10, 3), &mut c()).unwrap();
        assert_eq!((out.q, out.r), (EisensteinInt::zero(), eis(1, 0)));
    }

    #[test]
    fn gcd_of_multiples() {
        let g = gcd(&eis(10, 0), &eis(15, 0), &mut c());
        assert_eq!(g.norm_uncosted(), Int::from(25));
        let g = gcd(&eis(7, 3), &eis(2, 1), &mut c());
        assert!(g.is_unit());
    }
}
