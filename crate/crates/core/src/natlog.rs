//! Software natural logarithm over exact rationals.
//!
//! `ln_int(x, f)` returns a rational within 2^-f of ln(x), computed in
//! fixed point with the atanh series; no hardware floating point is
//! involved, so results are bit-identical across platforms.

use alloc::string::{String, ToString};
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Natural log of a positive integer, accurate to `frac_bits` fractional
/// bits.  Returns `None` for x <= 0.
pub fn ln_int(x: &BigInt, frac_bits: u32) -> Option<BigRational> {
    if !x.is_positive() {
        return None;
    }
    // Working precision: requested bits plus guard for series truncation
    // and for the k * ln2 term (k can reach a few thousand bits).
    let p = frac_bits + 32;
    let scale: BigInt = BigInt::from(1) << p;

    // x = z * 2^k with z in [1, 2).
    let k = x.bits() - 1;
    let pow2k: BigInt = BigInt::from(1) << k;

    // ln z = 2 atanh(w),  w = (z - 1)/(z + 1) = (x - 2^k)/(x + 2^k) in [0, 1/3).
    let w_num = x - &pow2k;
    let w_den = x + &pow2k;
    let w_scaled = (w_num << p) / &w_den;
    let ln_z = two_atanh_scaled(&w_scaled, p);

    let ln2 = ln2_scaled(p);
    let total = ln_z + BigInt::from(k) * ln2;
    Some(BigRational::new(total, scale))
}

/// 2 * atanh(w) at fixed-point scale 2^p, for 0 <= w_scaled < 2^p / 3.
fn two_atanh_scaled(w_scaled: &BigInt, p: u32) -> BigInt {
    let mut term = w_scaled.clone();
    let w2 = (w_scaled * w_scaled) >> p;
    let mut sum = BigInt::zero();
    let mut j: u64 = 1;
    while !term.is_zero() {
        sum += &term / BigInt::from(j);
        term = (&term * &w2) >> p;
        j += 2;
    }
    sum << 1
}

/// ln 2 = 2 atanh(1/3) at scale 2^p.
fn ln2_scaled(p: u32) -> BigInt {
    let third = (BigInt::from(1) << p) / BigInt::from(3);
    two_atanh_scaled(&third, p)
}

/// Fixed-precision decimal rendering of a rational (round half away from
/// zero), used by reporting code that must not print via floats.
pub fn decimal_string(r: &BigRational, digits: u32) -> String {
    let pow10 = BigInt::from(10).pow(digits);
    let scaled_twice = r.numer() * &pow10 * BigInt::from(2);
    let den = r.denom();
    let rounded = if scaled_twice.is_negative() {
        (scaled_twice - den) / (den * BigInt::from(2))
    } else {
        (scaled_twice + den) / (den * BigInt::from(2))
    };
    let neg = rounded.is_negative();
    let mag = rounded.abs();
    let whole = &mag / &pow10;
    let frac = &mag % &pow10;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let _ = write!(out, "{whole}");
    if digits > 0 {
        let frac_digits = frac.to_string();
        out.push('.');
        for _ in 0..(digits as usize - frac_digits.len()) {
            out.push('0');
        }
        out.push_str(&frac_digits);
    }
    out
}

/// ln of a ratio of positive integers.
pub fn ln_ratio(num: &BigInt, den: &BigInt, frac_bits: u32) -> Option<BigRational> {
    Some(ln_int(num, frac_bits)? - ln_int(den, frac_bits)?)
}
