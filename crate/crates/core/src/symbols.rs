//! The four Jacobi-symbol algorithms: the Williams-Holte cubic
//! algorithm and Eisenstein's quartic analog (each with an exact or
//! Newton division backend), and the even-quotient variants of both,
//! whose quotients are constrained divisible by the ramified prime.
//!
//! Every run records a full trace: per-step quotients, ramified and unit
//! exponents, operand bit lengths, the final gcd, and the cost counters.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::cost::CostCounters;
use crate::division::{divmod_even, divmod_newton, divmod_round, DivisionOutcome};
use crate::ring::{bitlen, remove_ramified, unit_normalize, EisensteinInt, GaussianInt, Int, RingElement};

/// Division backend for the Euclidean chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Exact,
    Newton,
}

/// Default step cap for the even-quotient algorithms, which are
/// exponential in the worst case.
pub const DEFAULT_STEP_CAP: u64 = 1 << 20;

/// Value of a cubic symbol: zero or a power of w.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicSymbol {
    Zero,
    /// w^k with k in {0, 1, 2}.
    RhoPower(u8),
}

impl CubicSymbol {
    pub fn unit(k: i64) -> Self {
        CubicSymbol::RhoPower(k.rem_euclid(3) as u8)
    }
    pub fn exponent(&self) -> Option<u8> {
        match self {
            CubicSymbol::Zero => None,
            CubicSymbol::RhoPower(k) => Some(*k),
        }
    }
    pub fn is_one(&self) -> bool {
        *self == CubicSymbol::RhoPower(0)
    }
}

impl core::ops::Mul for CubicSymbol {
    type Output = CubicSymbol;
    fn mul(self, rhs: CubicSymbol) -> CubicSymbol {
        match (self, rhs) {
            (CubicSymbol::RhoPower(a), CubicSymbol::RhoPower(b)) => {
                CubicSymbol::RhoPower((a + b) % 3)
            }
            _ => CubicSymbol::Zero,
        }
    }
}

impl fmt::Display for CubicSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent() {
            None => write!(f, "0"),
            Some(k) => write!(f, "w^{k}"),
        }
    }
}

/// Value of a quartic symbol: zero or a power of i.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticSymbol {
    Zero,
    /// i^k with k in {0, 1, 2, 3}.
    IPower(u8),
}

impl QuarticSymbol {
    pub fn unit(k: i64) -> Self {
        QuarticSymbol::IPower(k.rem_euclid(4) as u8)
    }
    pub fn exponent(&self) -> Option<u8> {
        match self {
            QuarticSymbol::Zero => None,
            QuarticSymbol::IPower(k) => Some(*k),
        }
    }
    pub fn is_one(&self) -> bool {
        *self == QuarticSymbol::IPower(0)
    }
}

impl core::ops::Mul for QuarticSymbol {
    type Output = QuarticSymbol;
    fn mul(self, rhs: QuarticSymbol) -> QuarticSymbol {
        match (self, rhs) {
            (QuarticSymbol::IPower(a), QuarticSymbol::IPower(b)) => {
                QuarticSymbol::IPower((a + b) % 4)
            }
            _ => QuarticSymbol::Zero,
        }
    }
}

impl fmt::Display for QuarticSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exponent() {
            None => write!(f, "0"),
            Some(k) => write!(f, "i^{k}"),
        }
    }
}

/// One division step of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord<R> {
    pub q: R,
    /// Ramified exponent removed from the remainder.
    pub m: u64,
    /// Unit exponent of the primary normalization.
    pub n: u8,
    pub bitlen_alpha: u64,
    pub bitlen_beta: u64,
    pub bitlen_q: u64,
}

/// Full record of a symbol run.
#[derive(Clone, Debug)]
pub struct RunTrace<R> {
    pub steps: Vec<StepRecord<R>>,
    /// A gcd of the inputs: a unit exactly when the symbol is nonzero.
    pub gcd: R,
    pub counters: CostCounters,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolError {
    /// Lower argument fails the primary congruences.
    NotPrimary { detail: String },
    /// Even-quotient numerator shares the ramified prime.
    RamifiedNumerator,
}

impl fmt::Display for SymbolError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolError::NotPrimary { detail } => write!(f, "{detail}"),
            SymbolError::RamifiedNumerator => {
                write!(f, "numerator is divisible by the ramified prime")
            }
        }
    }
}

/// Outcome of an even-quotient run: a value, or a first-class overflow
/// marker once `step_cap` divisions have been spent.
#[derive(Clone, Debug)]
pub enum EvenOutcome<S, R> {
    Value(S, RunTrace<R>),
    CapExceeded(RunTrace<R>),
}

// ---------------------------------------------------------------------------
// Exponent bookkeeping

/// Step-6 exponent of the cubic recursion, mod 3:
/// -m (c^2 - 1)/3 + n (c^2 - c d - 1)/3, with c, d reduced mod 9 first.
///
/// Requires c != 0, d = 0 mod 3 (beta = c + d w primary).
pub fn cubic_step_exponent(m: u64, n: u8, c: &Int, d: &Int) -> Result<u8, SymbolError> {
    let (c9, d9) = reduce_pair_mod(c, d, 9)?;
    Ok(cubic_step_exponent_reduced(m, n, c9, d9))
}

fn reduce_pair_mod(c: &Int, d: &Int, modulus: i64) -> Result<(i64, i64), SymbolError> {
    let three = Int::from(3);
    if c.mod_floor(&three).is_zero() || !d.mod_floor(&three).is_zero() {
        return Err(SymbolError::NotPrimary {
            detail: format!(
                "beta = ({c}) + ({d})w is not primary: need c != 0 and d = 0 mod 3"
            ),
        });
    }
    let m = Int::from(modulus);
    let cr = c.mod_floor(&m).to_i64().expect("reduced");
    let dr = d.mod_floor(&m).to_i64().expect("reduced");
    Ok((cr, dr))
}

fn cubic_step_exponent_reduced(m: u64, n: u8, c9: i64, d9: i64) -> u8 {
    let u1 = (c9 * c9 - 1).rem_euclid(9);
    let u2 = (c9 * c9 - c9 * d9 - 1).rem_euclid(9);
    debug_assert!(u1 % 3 == 0 && u2 % 3 == 0);
    let e = -(m as i64 % 3) * (u1 / 3) + i64::from(n) * (u2 / 3);
    e.rem_euclid(3) as u8
}

/// Quartic recursion exponent of one step, mod 4:
/// m (c - d - d^2 - 1)/4 - n (c - 1)/2 + 2 (e'' - 1)(c - 1)/4,
/// with c, d, e'' reduced mod 16 first.
fn quartic_step_exponent(m: u64, n: u8, c16: i64, d16: i64, e16: i64) -> u8 {
    let t1 = (c16 - d16 - d16 * d16 - 1).rem_euclid(16);
    debug_assert!(t1 % 4 == 0);
    let t2 = (c16 - 1).rem_euclid(8);
    debug_assert!(t2 % 2 == 0);
    let t3 = ((e16 - 1) * (c16 - 1)).rem_euclid(8);
    debug_assert!(t3 % 4 == 0);
    let e = (m as i64 % 4) * (t1 / 4) - i64::from(n) * (t2 / 2) + 2 * (t3 / 4);
    e.rem_euclid(4) as u8
}

fn gauss_cd_mod16(beta: &GaussianInt) -> (i64, i64) {
    let m = Int::from(16);
    (
        beta.a().mod_floor(&m).to_i64().expect("reduced"),
        beta.b().mod_floor(&m).to_i64().expect("reduced"),
    )
}

fn require_eis_primary(beta: &EisensteinInt) -> Result<(), SymbolError> {
    if beta.is_primary() {
        return Ok(());
    }
    let three = Int::from(3);
    let detail = if !beta.b().mod_floor(&three).is_zero() {
        format!("beta = {beta} is not primary: w-coordinate {} != 0 mod 3", beta.b())
    } else {
        format!("beta = {beta} is not primary: rational part {} = 0 mod 3", beta.a())
    };
    Err(SymbolError::NotPrimary { detail })
}

fn require_gauss_primary(beta: &GaussianInt) -> Result<(), SymbolError> {
    if beta.is_primary() {
        return Ok(());
    }
    let detail = if !beta.b().is_even() {
        format!("beta = {beta} is not primary: i-coordinate {} is odd", beta.b())
    } else {
        format!(
            "beta = {beta} is not primary: a + b = {} != 1 mod 4",
            beta.a() + beta.b()
        )
    };
    Err(SymbolError::NotPrimary { detail })
}

fn divide<R: RingElement>(
    backend: Backend,
    alpha: &R,
    beta: &R,
    cost: &mut CostCounters,
) -> DivisionOutcome<R> {
    let out = match backend {
        Backend::Exact => divmod_round(alpha, beta, cost),
        Backend::Newton => divmod_newton(alpha, beta, cost),
    };
    out.expect("divisor nonzero within the chain")
}

fn record_volume<R: RingElement>(beta: &R, counters: &mut CostCounters) {
    counters.remainder_volume += u128::from(bitlen(&beta.norm_uncosted()));
}

// ---------------------------------------------------------------------------
// Williams-Holte cubic algorithm

/// Cubic Jacobi symbol (alpha / beta) for primary beta, by iterated
/// division, ramified-factor removal, and primary normalization.
///
/// Returns zero exactly when gcd(alpha, beta) is not a unit; the trace's
/// `gcd` field then holds that gcd.
pub fn cubic_jacobi(
    alpha: &EisensteinInt,
    beta: &EisensteinInt,
    backend: Backend,
) -> Result<(CubicSymbol, RunTrace<EisensteinInt>), SymbolError> {
    require_eis_primary(beta)?;
    let mut counters = CostCounters::new();
    let mut steps = Vec::new();

    // Unit numerators resolve through the w-supplement without division:
    // (w / beta) = w^((c^2 - c d - 1)/3) and (-1 / beta) = 1.
    if let Some(k) = alpha.unit_power() {
        let (c9, d9) = reduce_pair_mod(beta.a(), beta.b(), 9)?;
        let acc = cubic_step_exponent_reduced(0, k % 3, c9, d9);
        let sym = CubicSymbol::RhoPower(acc);
        return Ok((
            sym,
            RunTrace {
                steps,
                gcd: EisensteinInt::one(),
                counters,
            },
        ));
    }

    let mut acc: u8 = 0;
    let mut a_cur = alpha.clone();
    let mut b_cur = beta.clone();
    loop {
        if b_cur.is_pm_one() {
            return Ok((
                CubicSymbol::RhoPower(acc),
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        if a_cur.is_pm_one() {
            return Ok((
                CubicSymbol::RhoPower(acc),
                RunTrace { steps, gcd: a_cur, counters },
            ));
        }
        record_volume(&b_cur, &mut counters);
        let out = divide(backend, &a_cur, &b_cur, &mut counters);
        let bitlen_alpha = a_cur.oplen();
        let bitlen_beta = b_cur.oplen();
        let bitlen_q = out.q.oplen();
        if out.r.is_zero() {
            steps.push(StepRecord {
                q: out.q,
                m: 0,
                n: 0,
                bitlen_alpha,
                bitlen_beta,
                bitlen_q,
            });
            return Ok((
                CubicSymbol::Zero,
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        let (m, stripped) = remove_ramified(&out.r, &mut counters);
        let (n, primary) = unit_normalize(&stripped)
            .expect("remainder is nonzero and coprime to 1 - w after stripping");
        // step-6 exponent for the current divisor, mod-9 reduced
        counters.charge_add(b_cur.oplen());
        let (c9, d9) = reduce_pair_mod(b_cur.a(), b_cur.b(), 9)?;
        acc = (acc + cubic_step_exponent_reduced(m, n, c9, d9)) % 3;
        steps.push(StepRecord {
            q: out.q,
            m,
            n,
            bitlen_alpha,
            bitlen_beta,
            bitlen_q,
        });
        a_cur = b_cur;
        b_cur = primary;
    }
}

/// Symbol for the ideal generated by beta: beta is replaced by its
/// primary associate (an error if beta is zero or shares the ramified
/// prime).  The value is the symbol of that associate.
pub fn cubic_jacobi_ideal(
    alpha: &EisensteinInt,
    beta: &EisensteinInt,
    backend: Backend,
) -> Result<(CubicSymbol, RunTrace<EisensteinInt>), SymbolError> {
    let (_, primary) = unit_normalize(beta).map_err(|_| SymbolError::NotPrimary {
        detail: String::from("beta generates no ideal coprime to 1 - w"),
    })?;
    cubic_jacobi(alpha, &primary, backend)
}

// ---------------------------------------------------------------------------
// Eisenstein's quartic algorithm

/// Quartic Jacobi symbol (alpha / beta) for primary beta = c + d i
/// (d even, c + d = 1 mod 4).
pub fn quartic_jacobi(
    alpha: &GaussianInt,
    beta: &GaussianInt,
    backend: Backend,
) -> Result<(QuarticSymbol, RunTrace<GaussianInt>), SymbolError> {
    require_gauss_primary(beta)?;
    let mut counters = CostCounters::new();
    let mut steps = Vec::new();

    // Unit numerators: (i / beta) = i^(-(c-1)/2), (-1 / beta) = (-1)^((c-1)/2).
    if let Some(k) = alpha.unit_power() {
        let (c16, _) = gauss_cd_mod16(beta);
        let t2 = (c16 - 1).rem_euclid(8) / 2;
        let acc = (-(i64::from(k)) * t2).rem_euclid(4) as u8;
        return Ok((
            QuarticSymbol::IPower(acc),
            RunTrace {
                steps,
                gcd: GaussianInt::one(),
                counters,
            },
        ));
    }

    let mut acc: u8 = 0;
    let mut a_cur = alpha.clone();
    let mut b_cur = beta.clone();
    loop {
        if b_cur.is_one() {
            return Ok((
                QuarticSymbol::IPower(acc),
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        if a_cur.is_one() {
            return Ok((
                QuarticSymbol::IPower(acc),
                RunTrace { steps, gcd: a_cur, counters },
            ));
        }
        record_volume(&b_cur, &mut counters);
        let out = divide(backend, &a_cur, &b_cur, &mut counters);
        let bitlen_alpha = a_cur.oplen();
        let bitlen_beta = b_cur.oplen();
        let bitlen_q = out.q.oplen();
        if out.r.is_zero() {
            steps.push(StepRecord {
                q: out.q,
                m: 0,
                n: 0,
                bitlen_alpha,
                bitlen_beta,
                bitlen_q,
            });
            return Ok((
                QuarticSymbol::Zero,
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        let (m, stripped) = remove_ramified(&out.r, &mut counters);
        let (n, primary) = unit_normalize(&stripped)
            .expect("remainder is nonzero and odd after stripping");
        counters.charge_add(b_cur.oplen());
        let (c16, d16) = gauss_cd_mod16(&b_cur);
        let e16 = primary
            .a()
            .mod_floor(&Int::from(16))
            .to_i64()
            .expect("reduced");
        acc = (acc + quartic_step_exponent(m, n, c16, d16, e16)) % 4;
        steps.push(StepRecord {
            q: out.q,
            m,
            n,
            bitlen_alpha,
            bitlen_beta,
            bitlen_q,
        });
        a_cur = b_cur;
        b_cur = primary;
    }
}

/// Quartic analog of [`cubic_jacobi_ideal`].
pub fn quartic_jacobi_ideal(
    alpha: &GaussianInt,
    beta: &GaussianInt,
    backend: Backend,
) -> Result<(QuarticSymbol, RunTrace<GaussianInt>), SymbolError> {
    let (_, primary) = unit_normalize(beta).map_err(|_| SymbolError::NotPrimary {
        detail: String::from("beta generates no odd ideal"),
    })?;
    quartic_jacobi(alpha, &primary, backend)
}

// ---------------------------------------------------------------------------
// Even-quotient variants

/// Cubic symbol with every quotient divisible by 1 - w and no ramified
/// extraction (every recorded m is 0).  Exponential in the worst case;
/// stops with [`EvenOutcome::CapExceeded`] after `step_cap` divisions.
///
/// Requires alpha coprime to 1 - w in addition to beta primary.  The
/// chain runs to a zero remainder: when the divisor has become a unit
/// the closing exact division alpha_t = q_t beta_t is performed and
/// recorded too (its quotient is exempt from the divisibility
/// constraint, which no shrinking quotient can satisfy there).
pub fn cubic_jacobi_even(
    alpha: &EisensteinInt,
    beta: &EisensteinInt,
    step_cap: u64,
) -> Result<EvenOutcome<CubicSymbol, EisensteinInt>, SymbolError> {
    require_eis_primary(beta)?;
    if alpha.ramified_divides() {
        return Err(SymbolError::RamifiedNumerator);
    }
    let mut counters = CostCounters::new();
    let mut steps = Vec::new();

    if let Some(k) = alpha.unit_power() {
        let (c9, d9) = reduce_pair_mod(beta.a(), beta.b(), 9)?;
        let acc = cubic_step_exponent_reduced(0, k % 3, c9, d9);
        return Ok(EvenOutcome::Value(
            CubicSymbol::RhoPower(acc),
            RunTrace {
                steps,
                gcd: EisensteinInt::one(),
                counters,
            },
        ));
    }

    let mut acc: u8 = 0;
    let mut a_cur = alpha.clone();
    let mut b_cur = beta.clone();
    loop {
        if steps.len() as u64 >= step_cap {
            return Ok(EvenOutcome::CapExceeded(RunTrace {
                steps,
                gcd: b_cur,
                counters,
            }));
        }
        if b_cur.is_pm_one() {
            // closing division: exact, quotient +-alpha
            record_volume(&b_cur, &mut counters);
            let out = divmod_round(&a_cur, &b_cur, &mut counters).expect("unit divisor");
            debug_assert!(out.r.is_zero());
            steps.push(StepRecord {
                q: out.q,
                m: 0,
                n: 0,
                bitlen_alpha: a_cur.oplen(),
                bitlen_beta: b_cur.oplen(),
                bitlen_q: a_cur.oplen(),
            });
            return Ok(EvenOutcome::Value(
                CubicSymbol::RhoPower(acc),
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        record_volume(&b_cur, &mut counters);
        let out = divmod_even(&a_cur, &b_cur, &mut counters)
            .expect("divisor is primary with norm > 1");
        let bitlen_alpha = a_cur.oplen();
        let bitlen_beta = b_cur.oplen();
        let bitlen_q = out.q.oplen();
        if out.r.is_zero() {
            steps.push(StepRecord {
                q: out.q,
                m: 0,
                n: 0,
                bitlen_alpha,
                bitlen_beta,
                bitlen_q,
            });
            return Ok(EvenOutcome::Value(
                CubicSymbol::Zero,
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        debug_assert!(!out.r.ramified_divides(), "even quotient preserves coprimality");
        let (n, primary) = unit_normalize(&out.r).expect("remainder coprime to 1 - w");
        counters.charge_add(b_cur.oplen());
        let (c9, d9) = reduce_pair_mod(b_cur.a(), b_cur.b(), 9)?;
        acc = (acc + cubic_step_exponent_reduced(0, n, c9, d9)) % 3;
        steps.push(StepRecord {
            q: out.q,
            m: 0,
            n,
            bitlen_alpha,
            bitlen_beta,
            bitlen_q,
        });
        a_cur = b_cur;
        b_cur = primary;
    }
}

/// Smith's quartic even-quotient algorithm: quotients divisible by
/// 1 + i, numerator odd.  Runs to a zero remainder, closing with an
/// exact division once the divisor is the unit 1, as in the cubic
/// variant.
pub fn quartic_jacobi_even(
    alpha: &GaussianInt,
    beta: &GaussianInt,
    step_cap: u64,
) -> Result<EvenOutcome<QuarticSymbol, GaussianInt>, SymbolError> {
    require_gauss_primary(beta)?;
    if alpha.ramified_divides() {
        return Err(SymbolError::RamifiedNumerator);
    }
    let mut counters = CostCounters::new();
    let mut steps = Vec::new();

    if let Some(k) = alpha.unit_power() {
        let (c16, _) = gauss_cd_mod16(beta);
        let t2 = (c16 - 1).rem_euclid(8) / 2;
        let acc = (-(i64::from(k)) * t2).rem_euclid(4) as u8;
        return Ok(EvenOutcome::Value(
            QuarticSymbol::IPower(acc),
            RunTrace {
                steps,
                gcd: GaussianInt::one(),
                counters,
            },
        ));
    }

    let mut acc: u8 = 0;
    let mut a_cur = alpha.clone();
    let mut b_cur = beta.clone();
    loop {
        if steps.len() as u64 >= step_cap {
            return Ok(EvenOutcome::CapExceeded(RunTrace {
                steps,
                gcd: b_cur,
                counters,
            }));
        }
        if b_cur.is_one() {
            record_volume(&b_cur, &mut counters);
            let out = divmod_round(&a_cur, &b_cur, &mut counters).expect("unit divisor");
            debug_assert!(out.r.is_zero());
            steps.push(StepRecord {
                q: out.q,
                m: 0,
                n: 0,
                bitlen_alpha: a_cur.oplen(),
                bitlen_beta: b_cur.oplen(),
                bitlen_q: a_cur.oplen(),
            });
            return Ok(EvenOutcome::Value(
                QuarticSymbol::IPower(acc),
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        record_volume(&b_cur, &mut counters);
        let out = divmod_even(&a_cur, &b_cur, &mut counters)
            .expect("divisor is primary with norm > 1");
        let bitlen_alpha = a_cur.oplen();
        let bitlen_beta = b_cur.oplen();
        let bitlen_q = out.q.oplen();
        if out.r.is_zero() {
            steps.push(StepRecord {
                q: out.q,
                m: 0,
                n: 0,
                bitlen_alpha,
                bitlen_beta,
                bitlen_q,
            });
            return Ok(EvenOutcome::Value(
                QuarticSymbol::Zero,
                RunTrace { steps, gcd: b_cur, counters },
            ));
        }
        debug_assert!(!out.r.ramified_divides());
        let (n, primary) = unit_normalize(&out.r).expect("remainder odd");
        counters.charge_add(b_cur.oplen());
        let (c16, d16) = gauss_cd_mod16(&b_cur);
        let e16 = primary
            .a()
            .mod_floor(&Int::from(16))
            .to_i64()
            .expect("reduced");
        acc = (acc + quartic_step_exponent(0, n, c16, d16, e16)) % 4;
        steps.push(StepRecord {
            q: out.q,
            m: 0,
            n,
            bitlen_alpha,
            bitlen_beta,
            bitlen_q,
        });
        a_cur = b_cur;
        b_cur = primary;
    }
}
