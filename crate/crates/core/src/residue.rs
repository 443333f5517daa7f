//! Residue-side machinery: Euler-criterion characters, a factoring
//! Jacobi-symbol oracle for desk-scale divisors, modular square roots,
//! norm-equation solvers (p = s^2 + 3t^2, p = x^2 - xy + y^2,
//! p = x^2 + y^2), power-residue tests by Euler's criterion or by
//! reciprocity, and partition tabulation over prime ranges.
//!
//! Rational primes here are `u64`; tabulation beyond 64 bits is out of
//! scope.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::cost::CostCounters;
use crate::division::{divmod_round, exact_div, remainder_jacobi};
use crate::ring::{unit_normalize, EisensteinInt, GaussianInt, Int, RingElement};
use crate::symbols::{cubic_jacobi, quartic_jacobi, Backend, CubicSymbol, QuarticSymbol};

/// Largest divisor norm the factoring oracle accepts.
pub const ORACLE_NORM_BOUND: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidueError {
    NotPrime(u64),
    /// p lies in the wrong congruence class for the request.
    WrongClass { p: u64, need: &'static str },
    /// Quadratic non-residue where a square root was required.
    NoSquareRoot { a: u64, p: u64 },
    /// Cornacchia descent failed (p is then composite).
    NoRepresentation { p: u64 },
    /// Oracle bound exceeded.
    NormTooLarge { bound: u64 },
    /// Inputs fail the promised identity (e.g. x^2 - xy + y^2 != p).
    BadPartition { what: &'static str },
    /// The lower argument is not primary / not admissible.
    BadArgument(String),
    /// A residue failed to be a root of unity: the modulus is not prime.
    NotPrimePower(String),
    /// gcd(a, p) != 1 where coprimality was required.
    NotCoprime { a: u64, p: u64 },
    /// Table range too small.
    RangeTooSmall { max: u64 },
}

impl fmt::Display for ResidueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueError::NotPrime(p) => write!(f, "{p} is not prime"),
            ResidueError::WrongClass { p, need } => {
                write!(f, "{p} is not in the required class {need}")
            }
            ResidueError::NoSquareRoot { a, p } => {
                write!(f, "{a} is not a quadratic residue mod {p}")
            }
            ResidueError::NoRepresentation { p } => {
                write!(f, "no representation found for {p}")
            }
            ResidueError::NormTooLarge { bound } => {
                write!(f, "oracle refuses norms above {bound}")
            }
            ResidueError::BadPartition { what } => write!(f, "invalid partition: {what}"),
            ResidueError::BadArgument(msg) => write!(f, "{msg}"),
            ResidueError::NotPrimePower(msg) => write!(f, "integrity failure: {msg}"),
            ResidueError::NotCoprime { a, p } => write!(f, "{a} shares a factor with {p}"),
            ResidueError::RangeTooSmall { max } => {
                write!(f, "table range must reach at least 7, got {max}")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// u64 modular arithmetic

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Square root mod an odd prime by Tonelli-Shanks, with the nonresidue
/// found by ascending trial (2, 3, 4, ...) for reproducibility.
pub fn sqrt_mod_p(a: u64, p: u64) -> Result<u64, ResidueError> {
    if !is_prime_u64(p) || p == 2 {
        return Err(ResidueError::NotPrime(p));
    }
    let a = a % p;
    if a == 0 {
        return Ok(0);
    }
    if powmod(a, (p - 1) / 2, p) != 1 {
        return Err(ResidueError::NoSquareRoot { a, p });
    }
    if p % 4 == 3 {
        return Ok(powmod(a, (p + 1) / 4, p));
    }
    // p = 1 mod 4: full Tonelli-Shanks
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let mut z = 2;
    while powmod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powmod(z, q, p);
    let mut t = powmod(a, q, p);
    let mut r = powmod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2, p);
            i += 1;
        }
        let b = powmod(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    debug_assert_eq!(mulmod(r, r, p), a);
    Ok(r)
}

fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    // Newton iteration from a power-of-two overestimate.
    let mut x = 1u64 << ((64 - n.leading_zeros()).div_ceil(2));
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x;
        }
        x = y;
    }
}

// ---------------------------------------------------------------------------
// Norm equations (Cornacchia descent)

/// Exact solution of p = s^2 + 3 t^2 together with the derived
/// x = s + t, y = 2t giving p = x^2 - x y + y^2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormEquationSolution {
    pub p: u64,
    pub s: u64,
    pub t: u64,
    pub x: u64,
    pub y: u64,
}

/// Exact solution of p = x^2 + y^2 with 0 < x < y.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoSquares {
    pub p: u64,
    pub x: u64,
    pub y: u64,
}

/// Euclidean remainder descent: runs remainders of (p, r0) down to the
/// first value below sqrt(p).
fn descent_first_below(p: u64, r0: u64, below: u64) -> u64 {
    let mut a = p;
    let mut b = r0;
    while b >= below {
        let r = a % b;
        a = b;
        b = r;
    }
    b
}

/// Solve p = s^2 + 3 t^2 for prime p = 1 mod 3: take a square root of
/// -3 mod p and run the remainder sequence to the first value below
/// sqrt(p); if (p - r^2)/3 is not a perfect square, retry with the
/// complementary root.
pub fn solve_s2_3t2(p: u64) -> Result<(u64, u64), ResidueError> {
    if !is_prime_u64(p) {
        return Err(ResidueError::NotPrime(p));
    }
    if p % 3 != 1 {
        return Err(ResidueError::WrongClass { p, need: "1 mod 3" });
    }
    let root = sqrt_mod_p(p - 3, p)?;
    let sq = isqrt_u64(p);
    for r0 in [root, p - root] {
        let r = descent_first_below(p, r0, sq + 1);
        let rem = p - r * r;
        if rem % 3 == 0 {
            let t2 = rem / 3;
            let t = isqrt_u64(t2);
            if t * t == t2 && r > 0 && t > 0 {
                return Ok((r, t));
            }
        }
    }
    Err(ResidueError::NoRepresentation { p })
}

/// Solve p = x^2 + y^2 for prime p = 1 mod 4, x < y.
pub fn solve_x2_y2(p: u64) -> Result<TwoSquares, ResidueError> {
    if !is_prime_u64(p) {
        return Err(ResidueError::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(ResidueError::WrongClass { p, need: "1 mod 4" });
    }
    let root = sqrt_mod_p(p - 1, p)?;
    let sq = isqrt_u64(p);
    for r0 in [root, p - root] {
        let r = descent_first_below(p, r0, sq + 1);
        let rem = p - r * r;
        let y = isqrt_u64(rem);
        if y * y == rem && r > 0 && y > 0 {
            let (x, y) = if r < y { (r, y) } else { (y, r) };
            return Ok(TwoSquares { p, x, y });
        }
    }
    Err(ResidueError::NoRepresentation { p })
}

/// Norm-equation solution for p = 1 mod 3 together with the primary
/// prime above p: pi = primary associate of x + y w, N(pi) = p.
pub fn norm_equation_eis(p: u64) -> Result<(NormEquationSolution, EisensteinInt), ResidueError> {
    let (s, t) = solve_s2_3t2(p)?;
    let (x, y) = (s + t, 2 * t);
    debug_assert_eq!(
        (x as u128 * x as u128 + y as u128 * y as u128) - x as u128 * y as u128,
        p as u128
    );
    let gen = EisensteinInt::new(Int::from(x), Int::from(y));
    let (_, pi) = unit_normalize(&gen).expect("norm p is prime to 3");
    Ok((NormEquationSolution { p, s, t, x, y }, pi))
}

/// Primary prime above p = 1 mod 4: the primary associate of x + y i.
pub fn norm_equation_gauss(p: u64) -> Result<(TwoSquares, GaussianInt), ResidueError> {
    let sol = solve_x2_y2(p)?;
    let gen = GaussianInt::new(Int::from(sol.x), Int::from(sol.y));
    let (_, pi) = unit_normalize(&gen).expect("norm p is odd");
    Ok((sol, pi))
}

/// z = (x + y)/(x - y) mod p is a square root of -3 when
/// x^2 - xy + y^2 = p.
pub fn sqrt_neg3_from_partition(x: u64, y: u64, p: u64) -> Result<u64, ResidueError> {
    let lhs = x as u128 * x as u128 + y as u128 * y as u128 - x as u128 * y as u128;
    if lhs != p as u128 {
        return Err(ResidueError::BadPartition {
            what: "x^2 - xy + y^2 != p",
        });
    }
    let num = (x % p + y % p) % p;
    let den = (x % p + p - y % p) % p;
    if den == 0 {
        return Err(ResidueError::BadPartition { what: "x = y mod p" });
    }
    let z = mulmod(num, invmod(den, p), p);
    debug_assert_eq!(mulmod(z, z, p), (p - 3) % p);
    Ok(z)
}

/// z = y/x mod p squares to -1 when x^2 + y^2 = p.
pub fn sqrt_neg1_from_partition(x: u64, y: u64, p: u64) -> Result<u64, ResidueError> {
    let lhs = x as u128 * x as u128 + y as u128 * y as u128;
    if lhs != p as u128 {
        return Err(ResidueError::BadPartition {
            what: "x^2 + y^2 != p",
        });
    }
    if x % p == 0 || y % p == 0 {
        return Err(ResidueError::BadPartition { what: "p divides x or y" });
    }
    let z = mulmod(y % p, invmod(x % p, p), p);
    debug_assert_eq!(mulmod(z, z, p), p - 1);
    Ok(z)
}

// ---------------------------------------------------------------------------
// Euler characters

fn require_primary_eis(pi: &EisensteinInt) -> Result<(), ResidueError> {
    if pi.is_primary() {
        Ok(())
    } else {
        Err(ResidueError::BadArgument(format!("{pi} is not primary")))
    }
}

fn require_primary_gauss(pi: &GaussianInt) -> Result<(), ResidueError> {
    if pi.is_primary() {
        Ok(())
    } else {
        Err(ResidueError::BadArgument(format!("{pi} is not primary")))
    }
}

fn ring_divides<R: RingElement>(d: &R, x: &R) -> bool {
    let mut c = CostCounters::new();
    divmod_round(x, d, &mut c).map_or(false, |o| o.r.is_zero())
}

/// alpha^e mod pi by square-and-multiply, reducing with the remainder
/// formula after every product.
fn pow_mod_ring<R: RingElement>(alpha: &R, e: &Int, pi: &R, cost: &mut CostCounters) -> R {
    if e.is_zero() {
        return R::one();
    }
    let base = remainder_jacobi(alpha, pi, cost).expect("pi nonzero");
    let mut acc = base.clone();
    for j in (0..e.bits() - 1).rev() {
        acc = remainder_jacobi(&acc.mul(&acc, cost), pi, cost).expect("pi nonzero");
        if e.bit(j) {
            acc = remainder_jacobi(&acc.mul(&base, cost), pi, cost).expect("pi nonzero");
        }
    }
    acc
}

/// Euler character alpha^((N(pi)-1)/3) mod pi as a power of w, or zero
/// when pi divides alpha.  pi must be a primary prime with
/// N(pi) = 1 mod 3.
pub fn euler_cubic_char(
    alpha: &EisensteinInt,
    pi: &EisensteinInt,
) -> Result<CubicSymbol, ResidueError> {
    require_primary_eis(pi)?;
    let n = pi.norm_uncosted();
    let nm1 = &n - Int::one();
    if !nm1.mod_floor(&Int::from(3)).is_zero() {
        return Err(ResidueError::BadArgument(format!(
            "N({pi}) = {n} is not 1 mod 3"
        )));
    }
    let e = nm1 / Int::from(3);
    let mut cost = CostCounters::new();
    if remainder_jacobi(alpha, pi, &mut cost).expect("nonzero").is_zero() {
        return Ok(CubicSymbol::Zero);
    }
    let x = pow_mod_ring(alpha, &e, pi, &mut cost);
    let mut w_pow = EisensteinInt::one();
    let w = EisensteinInt::from_i64(0, 1);
    for k in 0..3u8 {
        if ring_divides(pi, &x.sub(&w_pow, &mut cost)) {
            return Ok(CubicSymbol::RhoPower(k));
        }
        w_pow = w_pow.mul(&w, &mut cost);
    }
    Err(ResidueError::NotPrimePower(format!(
        "{alpha}^(({n}-1)/3) is not a cube root of unity mod {pi}"
    )))
}

/// Quartic analog: alpha^((N(pi)-1)/4) mod pi as a power of i.
pub fn euler_quartic_char(
    alpha: &GaussianInt,
    pi: &GaussianInt,
) -> Result<QuarticSymbol, ResidueError> {
    require_primary_gauss(pi)?;
    let n = pi.norm_uncosted();
    let nm1 = &n - Int::one();
    if !nm1.mod_floor(&Int::from(4)).is_zero() {
        return Err(ResidueError::BadArgument(format!(
            "N({pi}) = {n} is not 1 mod 4"
        )));
    }
    let e = nm1 / Int::from(4);
    let mut cost = CostCounters::new();
    if remainder_jacobi(alpha, pi, &mut cost).expect("nonzero").is_zero() {
        return Ok(QuarticSymbol::Zero);
    }
    let x = pow_mod_ring(alpha, &e, pi, &mut cost);
    let mut i_pow = GaussianInt::one();
    let i = GaussianInt::from_i64(0, 1);
    for k in 0..4u8 {
        if ring_divides(pi, &x.sub(&i_pow, &mut cost)) {
            return Ok(QuarticSymbol::IPower(k));
        }
        i_pow = i_pow.mul(&i, &mut cost);
    }
    Err(ResidueError::NotPrimePower(format!(
        "{alpha}^(({n}-1)/4) is not a fourth root of unity mod {pi}"
    )))
}

// ---------------------------------------------------------------------------
// Factoring Jacobi oracle

fn norm_as_u64<R: RingElement>(beta: &R) -> Result<u64, ResidueError> {
    beta.norm_uncosted()
        .to_u64()
        .filter(|&n| n <= ORACLE_NORM_BOUND)
        .ok_or(ResidueError::NormTooLarge {
            bound: ORACLE_NORM_BOUND,
        })
}

fn small_prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Extract all factors pi from beta, returning the multiplicity.
fn extract_prime<R: RingElement>(beta: &mut R, pi: &R) -> u32 {
    let mut e = 0;
    let mut c = CostCounters::new();
    while let Some(q) = exact_div(beta, pi, &mut c) {
        *beta = q;
        e += 1;
    }
    e
}

/// Reference cubic Jacobi symbol by factoring beta (primary,
/// N(beta) <= 10^8) into primary primes and multiplying Euler
/// characters.
pub fn jacobi_oracle_eis(
    alpha: &EisensteinInt,
    beta: &EisensteinInt,
) -> Result<CubicSymbol, ResidueError> {
    require_primary_eis(beta)?;
    let n = norm_as_u64(beta)?;
    let mut rest = beta.clone();
    let mut sym = CubicSymbol::RhoPower(0);
    for (p, _) in small_prime_factors(n) {
        match p % 3 {
            2 => {
                // inert: p itself is a primary prime (p = 2 mod 3)
                let pi = EisensteinInt::new(Int::from(p), Int::zero());
                let e = extract_prime(&mut rest, &pi);
                for _ in 0..e {
                    sym = sym * euler_cubic_char(alpha, &pi)?;
                }
            }
            1 => {
                let (_, pi) = norm_equation_eis(p)?;
                let pi_bar = unit_normalize(&pi.conj()).expect("coprime to 3").1;
                for prime in [pi, pi_bar] {
                    let e = extract_prime(&mut rest, &prime);
                    for _ in 0..e {
                        sym = sym * euler_cubic_char(alpha, &prime)?;
                    }
                }
            }
            _ => {
                return Err(ResidueError::BadArgument(String::from(
                    "primary divisor cannot have norm divisible by 3",
                )))
            }
        }
    }
    debug_assert!(rest.is_unit());
    Ok(sym)
}

/// Quartic analog of [`jacobi_oracle_eis`].
pub fn jacobi_oracle_gauss(
    alpha: &GaussianInt,
    beta: &GaussianInt,
) -> Result<QuarticSymbol, ResidueError> {
    require_primary_gauss(beta)?;
    let n = norm_as_u64(beta)?;
    let mut rest = beta.clone();
    let mut sym = QuarticSymbol::IPower(0);
    for (p, _) in small_prime_factors(n) {
        match p % 4 {
            3 => {
                // inert: the primary associate of p is -p (-p = 1 mod 4)
                let pi = GaussianInt::new(-Int::from(p), Int::zero());
                let e = extract_prime(&mut rest, &pi);
                for _ in 0..e {
                    sym = sym * euler_quartic_char(alpha, &pi)?;
                }
            }
            1 => {
                let (_, pi) = norm_equation_gauss(p)?;
                let pi_bar = unit_normalize(&pi.conj()).expect("odd").1;
                for prime in [pi, pi_bar] {
                    let e = extract_prime(&mut rest, &prime);
                    for _ in 0..e {
                        sym = sym * euler_quartic_char(alpha, &prime)?;
                    }
                }
            }
            _ => {
                return Err(ResidueError::BadArgument(String::from(
                    "primary divisor cannot have even norm",
                )))
            }
        }
    }
    debug_assert!(rest.is_unit());
    Ok(sym)
}

// ---------------------------------------------------------------------------
// Residue tests

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Power {
    Cubic,
    Quartic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Euler,
    Reciprocity,
    Auto,
}

/// Batch size at which reciprocity amortizes the norm-equation setup.
pub fn auto_threshold(p: u64) -> usize {
    (64 - p.leading_zeros()) as usize
}

fn validate_residue_args(a: u64, p: u64, power: Power) -> Result<Option<bool>, ResidueError> {
    if !is_prime_u64(p) {
        return Err(ResidueError::NotPrime(p));
    }
    if a % p == 0 {
        return Err(ResidueError::NotCoprime { a, p });
    }
    match power {
        Power::Cubic => match p % 3 {
            1 => Ok(None),
            2 => Ok(Some(true)), // cubing permutes residues
            _ => Err(ResidueError::WrongClass { p, need: "1 or 2 mod 3" }),
        },
        Power::Quartic => {
            if p % 4 == 1 {
                Ok(None)
            } else {
                Err(ResidueError::WrongClass { p, need: "1 mod 4" })
            }
        }
    }
}

fn residue_test_euler(a: u64, p: u64, power: Power) -> bool {
    let e = match power {
        Power::Cubic => (p - 1) / 3,
        Power::Quartic => (p - 1) / 4,
    };
    powmod(a, e, p) == 1
}

fn residue_test_reciprocity(a: u64, p: u64, power: Power) -> Result<bool, ResidueError> {
    match power {
        Power::Cubic => {
            let (_, pi) = norm_equation_eis(p)?;
            let alpha = EisensteinInt::new(Int::from(a), Int::zero());
            let (sym, _) = cubic_jacobi(&alpha, &pi, Backend::Exact)
                .map_err(|e| ResidueError::BadArgument(format!("{e}")))?;
            Ok(sym.is_one())
        }
        Power::Quartic => {
            let (_, pi) = norm_equation_gauss(p)?;
            let alpha = GaussianInt::new(Int::from(a), Int::zero());
            let (sym, _) = quartic_jacobi(&alpha, &pi, Backend::Exact)
                .map_err(|e| ResidueError::BadArgument(format!("{e}")))?;
            Ok(sym.is_one())
        }
    }
}

/// Is a an e-th power residue mod p (e = 3 or 4)?
///
/// `Auto` uses Euler's criterion for a single query; batch callers
/// should switch to [`residue_test_batch`] once they hold at least
/// [`auto_threshold`] queries.
pub fn residue_test(a: u64, p: u64, power: Power, strategy: Strategy) -> Result<bool, ResidueError> {
    if let Some(fixed) = validate_residue_args(a, p, power)? {
        return Ok(fixed);
    }
    match strategy {
        Strategy::Euler | Strategy::Auto => Ok(residue_test_euler(a, p, power)),
        Strategy::Reciprocity => residue_test_reciprocity(a, p, power),
    }
}

/// Batched residue tests: the prime above p is computed once and one
/// Jacobi symbol is evaluated per query.
pub fn residue_test_batch(p: u64, queries: &[u64], power: Power) -> Result<Vec<bool>, ResidueError> {
    if queries.is_empty() {
        return Ok(Vec::new());
    }
    let mut fixed = None;
    for &a in queries {
        if let Some(v) = validate_residue_args(a, p, power)? {
            fixed = Some(v);
        }
    }
    if let Some(v) = fixed {
        return Ok(queries.iter().map(|_| v).collect());
    }
    match power {
        Power::Cubic => {
            let (_, pi) = norm_equation_eis(p)?;
            queries
                .iter()
                .map(|&a| {
                    let alpha = EisensteinInt::new(Int::from(a), Int::zero());
                    let (sym, _) = cubic_jacobi(&alpha, &pi, Backend::Exact)
                        .map_err(|e| ResidueError::BadArgument(format!("{e}")))?;
                    Ok(sym.is_one())
                })
                .collect()
        }
        Power::Quartic => {
            let (_, pi) = norm_equation_gauss(p)?;
            queries
                .iter()
                .map(|&a| {
                    let alpha = GaussianInt::new(Int::from(a), Int::zero());
                    let (sym, _) = quartic_jacobi(&alpha, &pi, Backend::Exact)
                        .map_err(|e| ResidueError::BadArgument(format!("{e}")))?;
                    Ok(sym.is_one())
                })
                .collect()
        }
    }
}

// ---------------------------------------------------------------------------
// Partition tables

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    /// Rows (p, s, t) with p = s^2 + 3 t^2, over primes p = 1 mod 3.
    S2Plus3T2,
    /// Rows (p, x, y) with p = x^2 + y^2, over primes p = 1 mod 4.
    X2PlusY2,
}

/// One table row; the components are (s, t) or (x, y) per the kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionRow {
    pub p: u64,
    pub a: u64,
    pub b: u64,
}

fn sieve_primes(max: u64) -> Vec<u64> {
    let n = max as usize;
    let mut composite = alloc::vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Partition table over all eligible primes p <= max, in increasing
/// order, each row verified against its exact identity.
pub fn partition_table(max: u64, kind: PartitionKind) -> Result<Vec<PartitionRow>, ResidueError> {
    if max < 7 {
        return Err(ResidueError::RangeTooSmall { max });
    }
    let mut rows = Vec::new();
    for p in sieve_primes(max) {
        match kind {
            PartitionKind::S2Plus3T2 => {
                if p % 3 == 1 {
                    let (s, t) = solve_s2_3t2(p)?;
                    debug_assert_eq!(s as u128 * s as u128 + 3 * (t as u128 * t as u128), p as u128);
                    rows.push(PartitionRow { p, a: s, b: t });
                }
            }
            PartitionKind::X2PlusY2 => {
                if p % 4 == 1 {
                    let sol = solve_x2_y2(p)?;
                    rows.push(PartitionRow {
                        p,
                        a: sol.x,
                        b: sol.y,
                    });
                }
            }
        }
    }
    Ok(rows)
}

/// All primary primes of Z[w] with norm <= max_norm, one generator per
/// prime ideal: split primes p = 1 mod 3 contribute pi and conj(pi),
/// inert p = 2 mod 3 contribute p itself.
pub fn primary_primes_eis(max_norm: u64) -> Vec<EisensteinInt> {
    let mut out = Vec::new();
    for p in sieve_primes(max_norm) {
        if p % 3 == 1 {
            let (_, pi) = norm_equation_eis(p).expect("split prime");
            let pi_bar = unit_normalize(&pi.conj()).expect("coprime to 3").1;
            out.push(pi);
            out.push(pi_bar);
        } else if p % 3 == 2 && p.checked_mul(p).map_or(false, |n| n <= max_norm) {
            out.push(EisensteinInt::new(Int::from(p), Int::zero()));
        }
    }
    out
}

/// Gaussian analog: split p = 1 mod 4 give pi, conj(pi); inert
/// p = 3 mod 4 give -p (the primary associate).
pub fn primary_primes_gauss(max_norm: u64) -> Vec<GaussianInt> {
    let mut out = Vec::new();
    for p in sieve_primes(max_norm) {
        if p % 4 == 1 {
            let (_, pi) = norm_equation_gauss(p).expect("split prime");
            let pi_bar = unit_normalize(&pi.conj()).expect("odd").1;
            out.push(pi);
            out.push(pi_bar);
        } else if p % 4 == 3 && p.checked_mul(p).map_or(false, |n| n <= max_norm) {
            out.push(GaussianInt::new(-Int::from(p), Int::zero()));
        }
    }
    out
}
