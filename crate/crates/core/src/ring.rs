//! Exact arithmetic, classification, and normalization in Z[w] and Z[i].
//!
//! Elements are stored in coordinates (a, b) over the basis {1, w} with
//! w^2 + w + 1 = 0 (Eisenstein) or {1, i} with i^2 = -1 (Gaussian).
//! The letter `w` stands in for the cube root of unity in all text I/O.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cost::{mul_int, CostCounters};

/// Arbitrary-precision rational integer.
pub type Int = BigInt;

/// Bit length of an integer: 1 for zero, floor(log2 |n|) + 1 otherwise.
pub fn bitlen(n: &Int) -> u64 {
    if n.is_zero() {
        1
    } else {
        n.bits()
    }
}

/// Which quadratic ring an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Eisenstein,
    Gaussian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    ZeroInput,
    RamifiedDivisible,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::ZeroInput => write!(f, "zero has no unit normalization"),
            RingError::RamifiedDivisible => {
                write!(f, "element is divisible by the ramified prime")
            }
        }
    }
}

/// Common surface of the two rings used by the division and symbol layers.
///
/// All arithmetic takes an explicit [`CostCounters`] accumulator; the
/// operator impls below feed a scratch accumulator for callers that do
/// not care about accounting.
pub trait RingElement: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Sized {
    const KIND: RingKind;
    /// Numerator and denominator of the rounded-division shrink bound
    /// N(r) <= (NUM/DEN) N(beta).
    const SHRINK_NUM: u32;
    const SHRINK_DEN: u32;
    /// Order of the unit used for primary normalization (w or i).
    const NORMALIZE_ORDER: u8;
    /// Basis letter in the text grammar.
    const BASIS_LETTER: char;

    fn new(a: Int, b: Int) -> Self;
    fn a(&self) -> &Int;
    fn b(&self) -> &Int;

    /// Coordinate form of the ring product (shared by exact and dyadic
    /// arithmetic).
    fn mul_coords(a1: &Int, b1: &Int, a2: &Int, b2: &Int, cost: &mut CostCounters) -> (Int, Int);
    /// Coordinate form of the norm.
    fn norm_coords(a: &Int, b: &Int, cost: &mut CostCounters) -> Int;

    fn add(&self, rhs: &Self, cost: &mut CostCounters) -> Self {
        cost.charge_add(bitlen(self.a()).max(bitlen(rhs.a())));
        cost.charge_add(bitlen(self.b()).max(bitlen(rhs.b())));
        Self::new(self.a() + rhs.a(), self.b() + rhs.b())
    }
    fn sub(&self, rhs: &Self, cost: &mut CostCounters) -> Self {
        cost.charge_add(bitlen(self.a()).max(bitlen(rhs.a())));
        cost.charge_add(bitlen(self.b()).max(bitlen(rhs.b())));
        Self::new(self.a() - rhs.a(), self.b() - rhs.b())
    }
    fn mul(&self, rhs: &Self, cost: &mut CostCounters) -> Self {
        let (a, b) = Self::mul_coords(self.a(), self.b(), rhs.a(), rhs.b(), cost);
        Self::new(a, b)
    }
    fn neg(&self) -> Self {
        Self::new(-self.a(), -self.b())
    }
    fn conj(&self) -> Self;

    fn norm(&self, cost: &mut CostCounters) -> Int {
        Self::norm_coords(self.a(), self.b(), cost)
    }
    /// Norm without accounting, for observational checks.
    fn norm_uncosted(&self) -> Int {
        self.norm(&mut CostCounters::new())
    }

    fn zero() -> Self {
        Self::new(Int::zero(), Int::zero())
    }
    fn one() -> Self {
        Self::new(Int::one(), Int::zero())
    }
    fn is_zero(&self) -> bool {
        self.a().is_zero() && self.b().is_zero()
    }
    fn is_one(&self) -> bool {
        self.a().is_one() && self.b().is_zero()
    }
    fn is_pm_one(&self) -> bool {
        self.b().is_zero() && self.a().magnitude().is_one()
    }
    fn is_unit(&self) -> bool {
        self.norm_uncosted().is_one()
    }
    /// Larger coordinate bit length (the "length" of the operand).
    fn oplen(&self) -> u64 {
        bitlen(self.a()).max(bitlen(self.b()))
    }

    /// Primary per the inclusive convention of each ring.
    fn is_primary(&self) -> bool;
    /// The ramified prime: 1 - w, respectively 1 + i.
    fn ramified() -> Self;
    fn ramified_divides(&self) -> bool;
    /// Exact quotient by the ramified prime, when divisible.
    fn div_ramified_exact(&self) -> Option<Self>;
    /// `self` divided by gen^n where gen is w (order 3) or i (order 4);
    /// coordinate permutations only, no big multiplication.
    fn unit_shift(&self, n: u8) -> Self;
    /// All units, in the fixed order
    /// 1, w, w^2, -1, -w, -w^2 (Eisenstein) or 1, i, -1, -i (Gaussian).
    fn units() -> Vec<Self>;
    /// Unit adjustment for even-quotient division: given the nonzero
    /// remainder direction omega scaled to integer coordinates (wu, wv)
    /// and a rounded quotient q0 not divisible by the ramified prime,
    /// return the unit nearest in angle to omega among those whose
    /// addition makes the quotient divisible (angle ties go
    /// counterclockwise).  The corrected remainder then satisfies
    /// |omega - eps| < 1 strictly.
    fn even_adjustment(wu: &Int, wv: &Int, q0: &Self) -> Self;
    /// For a unit: the exponent k with self = gen^k, up to sign in the
    /// Eisenstein ring (where the sign never affects a cubic symbol) and
    /// exact in the Gaussian ring.  `None` for non-units.
    fn unit_power(&self) -> Option<u8>;
}

// ---------------------------------------------------------------------------
// Eisenstein integers

/// a + b*w with w = -1/2 + sqrt(-3)/2, so w^2 = -1 - w.
#[derive(Clone, PartialEq, Eq)]
pub struct EisensteinInt {
    a: Int,
    b: Int,
}

impl EisensteinInt {
    pub fn new(a: Int, b: Int) -> Self {
        EisensteinInt { a, b }
    }
    pub fn from_i64(a: i64, b: i64) -> Self {
        EisensteinInt::new(Int::from(a), Int::from(b))
    }
    pub fn into_coords(self) -> (Int, Int) {
        (self.a, self.b)
    }
}

impl From<(i64, i64)> for EisensteinInt {
    fn from((a, b): (i64, i64)) -> Self {
        EisensteinInt::from_i64(a, b)
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Eis({self})")
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

impl RingElement for EisensteinInt {
    const KIND: RingKind = RingKind::Eisenstein;
    const SHRINK_NUM: u32 = 3;
    const SHRINK_DEN: u32 = 4;
    const NORMALIZE_ORDER: u8 = 3;
    const BASIS_LETTER: char = 'w';

    fn new(a: Int, b: Int) -> Self {
        EisensteinInt::new(a, b)
    }
    fn a(&self) -> &Int {
        &self.a
    }
    fn b(&self) -> &Int {
        &self.b
    }

    // (a1 + b1 w)(a2 + b2 w) = (a1 a2 - b1 b2) + (a1 b2 + b1 a2 - b1 b2) w
    fn mul_coords(a1: &Int, b1: &Int, a2: &Int, b2: &Int, cost: &mut CostCounters) -> (Int, Int) {
        let p1 = mul_int(a1, a2, cost);
        let p2 = mul_int(b1, b2, cost);
        let p3 = mul_int(a1, b2, cost);
        let p4 = mul_int(b1, a2, cost);
        cost.charge_add(bitlen(&p1).max(bitlen(&p2)));
        cost.charge_add(bitlen(&p3).max(bitlen(&p4)));
        let im = p3 + p4 - &p2;
        cost.charge_add(bitlen(&im).max(bitlen(&p2)));
        (p1 - p2, im)
    }

    // N(a + b w) = a^2 - a b + b^2
    fn norm_coords(a: &Int, b: &Int, cost: &mut CostCounters) -> Int {
        let aa = mul_int(a, a, cost);
        let ab = mul_int(a, b, cost);
        let bb = mul_int(b, b, cost);
        cost.charge_add(bitlen(&aa).max(bitlen(&ab)));
        cost.charge_add(bitlen(&aa).max(bitlen(&bb)));
        aa - ab + bb
    }

    // conj(a + b w) = (a - b) - b w
    fn conj(&self) -> Self {
        EisensteinInt::new(&self.a - &self.b, -&self.b)
    }

    fn is_primary(&self) -> bool {
        let three = Int::from(3);
        if !self.b.mod_floor(&three).is_zero() {
            return false;
        }
        let am = self.a.mod_floor(&three);
        am == Int::one() || am == Int::from(2)
    }

    fn ramified() -> Self {
        EisensteinInt::from_i64(1, -1)
    }

    fn ramified_divides(&self) -> bool {
        (&self.a + &self.b).mod_floor(&Int::from(3)).is_zero()
    }

    // (e + f w)/(1 - w) = (2e - f)/3 + ((e + f)/3) w, integral iff 3 | e + f
    fn div_ramified_exact(&self) -> Option<Self> {
        let three = Int::from(3);
        let s = &self.a + &self.b;
        if !s.mod_floor(&three).is_zero() {
            return None;
        }
        let re = ((&self.a << 1u32) - &self.b) / &three;
        let im = s / three;
        Some(EisensteinInt::new(re, im))
    }

    // division by w permutes  e + f w,  (f - e) - e w,  -f + (e - f) w
    fn unit_shift(&self, n: u8) -> Self {
        let (e, f) = (&self.a, &self.b);
        match n % 3 {
            0 => self.clone(),
            1 => EisensteinInt::new(f - e, -e),
            _ => EisensteinInt::new(-f, e - f),
        }
    }

    fn units() -> Vec<Self> {
        [(1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1)]
            .iter()
            .map(|&(a, b)| EisensteinInt::from_i64(a, b))
            .collect()
    }

    fn unit_power(&self) -> Option<u8> {
        let a = self.a.to_i64_checked()?;
        let b = self.b.to_i64_checked()?;
        match (a, b) {
            (1, 0) | (-1, 0) => Some(0),
            (0, 1) | (0, -1) => Some(1),
            (-1, -1) | (1, 1) => Some(2),
            _ => None,
        }
    }

    // The six 60-degree cones between consecutive units tile the plane in
    // (u, v) coordinates; omega's cone has one boundary unit in each
    // residue class mod 1 - w, so exactly one repairs divisibility.
    fn even_adjustment(wu: &Int, wv: &Int, q0: &Self) -> Self {
        let zero = Int::zero();
        let (u_pos, v_pos) = (*wu > zero, *wv > zero);
        let (u_neg, v_neg) = (*wu < zero, *wv < zero);
        let verts: [(i64, i64); 2] = if u_pos && !v_neg && wu > wv {
            [(1, 0), (1, 1)]
        } else if u_pos && wv >= wu {
            [(1, 1), (0, 1)]
        } else if !u_pos && v_pos {
            [(0, 1), (-1, 0)]
        } else if u_neg && !v_pos && wu < wv {
            [(-1, 0), (-1, -1)]
        } else if u_neg && wv <= wu {
            [(-1, -1), (0, -1)]
        } else {
            [(0, -1), (1, 0)]
        };
        for (a, b) in verts {
            let eps = EisensteinInt::from_i64(a, b);
            let cand = EisensteinInt::new(&q0.a + &eps.a, &q0.b + &eps.b);
            if cand.ramified_divides() {
                return eps;
            }
        }
        unreachable!("adjacent cone vertices alternate classes mod 1 - w")
    }
}

// ---------------------------------------------------------------------------
// Gaussian integers

/// a + b*i with i^2 = -1.
#[derive(Clone, PartialEq, Eq)]
pub struct GaussianInt {
    a: Int,
    b: Int,
}

impl GaussianInt {
    pub fn new(a: Int, b: Int) -> Self {
        GaussianInt { a, b }
    }
    pub fn from_i64(a: i64, b: i64) -> Self {
        GaussianInt::new(Int::from(a), Int::from(b))
    }
    pub fn into_coords(self) -> (Int, Int) {
        (self.a, self.b)
    }
}

impl From<(i64, i64)> for GaussianInt {
    fn from((a, b): (i64, i64)) -> Self {
        GaussianInt::from_i64(a, b)
    }
}

impl fmt::Debug for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gauss({self})")
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

impl RingElement for GaussianInt {
    const KIND: RingKind = RingKind::Gaussian;
    const SHRINK_NUM: u32 = 1;
    const SHRINK_DEN: u32 = 2;
    const NORMALIZE_ORDER: u8 = 4;
    const BASIS_LETTER: char = 'i';

    fn new(a: Int, b: Int) -> Self {
        GaussianInt::new(a, b)
    }
    fn a(&self) -> &Int {
        &self.a
    }
    fn b(&self) -> &Int {
        &self.b
    }

    fn mul_coords(a1: &Int, b1: &Int, a2: &Int, b2: &Int, cost: &mut CostCounters) -> (Int, Int) {
        let p1 = mul_int(a1, a2, cost);
        let p2 = mul_int(b1, b2, cost);
        let p3 = mul_int(a1, b2, cost);
        let p4 = mul_int(b1, a2, cost);
        cost.charge_add(bitlen(&p1).max(bitlen(&p2)));
        cost.charge_add(bitlen(&p3).max(bitlen(&p4)));
        (p1 - p2, p3 + p4)
    }

    fn norm_coords(a: &Int, b: &Int, cost: &mut CostCounters) -> Int {
        let aa = mul_int(a, a, cost);
        let bb = mul_int(b, b, cost);
        cost.charge_add(bitlen(&aa).max(bitlen(&bb)));
        aa + bb
    }

    fn conj(&self) -> Self {
        GaussianInt::new(self.a.clone(), -&self.b)
    }

    // primary: 2 | b and a + b = 1 mod 4
    fn is_primary(&self) -> bool {
        if !self.b.is_even() {
            return false;
        }
        (&self.a + &self.b).mod_floor(&Int::from(4)).is_one()
    }

    fn ramified() -> Self {
        GaussianInt::from_i64(1, 1)
    }

    fn ramified_divides(&self) -> bool {
        (&self.a + &self.b).is_even()
    }

    // (e + f i)/(1 + i) = (e + f)/2 + ((f - e)/2) i, integral iff 2 | e + f
    fn div_ramified_exact(&self) -> Option<Self> {
        let s = &self.a + &self.b;
        if !s.is_even() {
            return None;
        }
        let im = (&self.b - &self.a) >> 1u32;
        Some(GaussianInt::new(s >> 1u32, im))
    }

    fn unit_shift(&self, n: u8) -> Self {
        let (e, f) = (&self.a, &self.b);
        match n % 4 {
            0 => self.clone(),
            1 => GaussianInt::new(f.clone(), -e),
            2 => GaussianInt::new(-e, -f),
            _ => GaussianInt::new(-f, e.clone()),
        }
    }

    fn units() -> Vec<Self> {
        [(1, 0), (0, 1), (-1, 0), (0, -1)]
            .iter()
            .map(|&(a, b)| GaussianInt::from_i64(a, b))
            .collect()
    }

    fn unit_power(&self) -> Option<u8> {
        let a = self.a.to_i64_checked()?;
        let b = self.b.to_i64_checked()?;
        match (a, b) {
            (1, 0) => Some(0),
            (0, 1) => Some(1),
            (-1, 0) => Some(2),
            (0, -1) => Some(3),
            _ => None,
        }
    }

    // Every unit is 1 mod 1 + i, so all four repair divisibility; the
    // nearest in angle sits on the dominant coordinate axis.
    fn even_adjustment(wu: &Int, wv: &Int, _q0: &Self) -> Self {
        let au = wu.abs();
        let av = wv.abs();
        let sgn = |x: &Int| if x.is_negative() { -1i64 } else { 1 };
        if au > av {
            GaussianInt::from_i64(sgn(wu), 0)
        } else if av > au {
            GaussianInt::from_i64(0, sgn(wv))
        } else {
            // 45-degree boundary: counterclockwise of the diagonal
            match (wu.is_negative(), wv.is_negative()) {
                (false, false) => GaussianInt::from_i64(0, 1),
                (true, false) => GaussianInt::from_i64(-1, 0),
                (true, true) => GaussianInt::from_i64(0, -1),
                (false, true) => GaussianInt::from_i64(1, 0),
            }
        }
    }
}

trait ToI64Checked {
    fn to_i64_checked(&self) -> Option<i64>;
}

impl ToI64Checked for Int {
    fn to_i64_checked(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.bits() > 8 {
            None
        } else {
            self.to_i64()
        }
    }
}

// ---------------------------------------------------------------------------
// Classification

/// Mod-3 classification of an Eisenstein integer.  The primary tags take
/// precedence for +-1, which are simultaneously units; `Unit` covers the
/// remaining four units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EisClass {
    Zero,
    /// = +1 mod 3 (includes the unit 1).
    PrimaryPlus,
    /// = -1 mod 3, the "2-primary" class (includes the unit -1).
    PrimaryMinus,
    /// A unit other than +-1.
    Unit,
    /// Divisible by 1 - w, equivalently 3 | a + b.
    RamifiedDivisible,
    Other,
}

pub fn classify_eis(x: &EisensteinInt) -> EisClass {
    if x.is_zero() {
        return EisClass::Zero;
    }
    if x.is_primary() {
        let am = x.a().mod_floor(&Int::from(3));
        return if am.is_one() {
            EisClass::PrimaryPlus
        } else {
            EisClass::PrimaryMinus
        };
    }
    if x.is_unit() {
        return EisClass::Unit;
    }
    if x.ramified_divides() {
        return EisClass::RamifiedDivisible;
    }
    EisClass::Other
}

/// True for elements = 2 mod 3 (the unique 2-primary generator class).
pub fn is_two_primary(x: &EisensteinInt) -> bool {
    classify_eis(x) == EisClass::PrimaryMinus
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussClass {
    Zero,
    /// 2 | b and a + b = 1 mod 4 (includes the unit 1).
    Primary,
    /// A unit other than 1.
    Unit,
    /// Divisible by 1 + i, equivalently 2 | a + b.
    EvenDivisible,
    Other,
}

pub fn classify_gauss(x: &GaussianInt) -> GaussClass {
    if x.is_zero() {
        return GaussClass::Zero;
    }
    if x.is_primary() {
        return GaussClass::Primary;
    }
    if x.is_unit() {
        return GaussClass::Unit;
    }
    if x.ramified_divides() {
        return GaussClass::EvenDivisible;
    }
    GaussClass::Other
}

// ---------------------------------------------------------------------------
// Ramified-factor removal and primary normalization

/// Write g = ramified^m * g' with g' not divisible by the ramified prime.
///
/// Each successful extraction is linear work and bumps
/// `ramified_removals`; the final failed divisibility test charges one
/// addition.
pub fn remove_ramified<R: RingElement>(g: &R, cost: &mut CostCounters) -> (u64, R) {
    assert!(!g.is_zero(), "cannot remove ramified factors from zero");
    let mut m = 0u64;
    let mut cur = g.clone();
    loop {
        cost.charge_add(cur.oplen());
        match cur.div_ramified_exact() {
            Some(next) => {
                cur = next;
                m += 1;
                cost.ramified_removals += 1;
            }
            None => return (m, cur),
        }
    }
}

/// Find n with g = gen^n * g'' and g'' primary, gen = w or i.
///
/// Exactly one of the cycle members is primary; a debug build checks all
/// of them.
pub fn unit_normalize<R: RingElement>(g: &R) -> Result<(u8, R), RingError> {
    if g.is_zero() {
        return Err(RingError::ZeroInput);
    }
    if g.ramified_divides() {
        return Err(RingError::RamifiedDivisible);
    }
    let mut found: Option<(u8, R)> = None;
    for n in 0..R::NORMALIZE_ORDER {
        let cand = g.unit_shift(n);
        if cand.is_primary() {
            debug_assert!(found.is_none(), "two primary members in one unit cycle");
            found = Some((n, cand));
            if !cfg!(debug_assertions) {
                break;
            }
        }
    }
    Ok(found.expect("one member of the unit cycle is primary"))
}

// ---------------------------------------------------------------------------
// Text grammar

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

fn err(position: usize, message: &str) -> ParseError {
    ParseError {
        position,
        message: String::from(message),
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }
    fn take_sign(&mut self) -> Option<i8> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(1)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(-1)
            }
            _ => None,
        }
    }
    fn take_digits(&mut self) -> Option<Int> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            Int::parse_bytes(&self.bytes[start..self.pos], 10)
        }
    }
}

/// Parse `<int> | [<int>] [sign] [<uint>] <letter>` where the sign is
/// required whenever the rational part is present.  Examples for the
/// Eisenstein letter: `5`, `-16-21w`, `1+6w`, `5w`, `-w`.
pub fn parse_element<R: RingElement>(text: &str) -> Result<R, ParseError> {
    let letter = R::BASIS_LETTER as u8;
    let mut sc = Scanner {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if sc.bytes.is_empty() {
        return Err(err(0, "empty input"));
    }

    let lead_sign = sc.take_sign();
    let lead_digits = sc.take_digits();

    let (a, b) = match (lead_digits, sc.peek()) {
        // bare integer: "5", "-12"
        (Some(d), None) => (apply_sign(d, lead_sign), Int::zero()),
        // basis term with explicit coefficient and no rational part: "5w", "-21w"
        (Some(d), Some(c)) if c == letter => {
            sc.pos += 1;
            (Int::zero(), apply_sign(d, lead_sign))
        }
        // rational part followed by signed basis term: "1+6w", "-16-21w", "2-w"
        (Some(d), Some(b'+')) | (Some(d), Some(b'-')) => {
            let a = apply_sign(d, lead_sign);
            let sign = sc.take_sign().expect("peeked sign");
            let coeff = sc.take_digits().unwrap_or_else(Int::one);
            match sc.peek() {
                Some(c) if c == letter => sc.pos += 1,
                _ => return Err(err(sc.pos, "expected basis letter")),
            }
            (a, apply_sign(coeff, Some(sign)))
        }
        (Some(_), Some(_)) => return Err(err(sc.pos, "unexpected character")),
        // no digits: bare basis term "w", "+w", "-w"
        (None, Some(c)) if c == letter => {
            sc.pos += 1;
            (Int::zero(), apply_sign(Int::one(), lead_sign))
        }
        (None, _) => return Err(err(sc.pos, "expected a number or basis term")),
    };

    if sc.pos != sc.bytes.len() {
        return Err(err(sc.pos, "trailing characters"));
    }
    Ok(R::new(a, b))
}

fn apply_sign(mag: Int, sign: Option<i8>) -> Int {
    if sign == Some(-1) {
        -mag
    } else {
        mag
    }
}

/// Canonical text form: rational part, then the signed basis part with
/// unit coefficients elided; zero parts are omitted and zero prints "0".
pub fn format_element<R: RingElement>(x: &R) -> String {
    use core::fmt::Write;
    let (a, b) = (x.a(), x.b());
    if a.is_zero() && b.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    if !a.is_zero() {
        let _ = write!(out, "{a}");
    }
    if !b.is_zero() {
        if b.is_negative() {
            out.push('-');
        } else if !a.is_zero() {
            out.push('+');
        }
        let mag = b.abs();
        if !mag.is_one() {
            let _ = write!(out, "{mag}");
        }
        out.push(R::BASIS_LETTER);
    }
    out
}

// Operator sugar; accounting-free (a scratch accumulator is discarded).
macro_rules! ring_ops {
    ($t:ty) => {
        impl core::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                RingElement::add(self, rhs, &mut CostCounters::new())
            }
        }
        impl core::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                RingElement::sub(self, rhs, &mut CostCounters::new())
            }
        }
        impl core::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                RingElement::mul(self, rhs, &mut CostCounters::new())
            }
        }
        impl core::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                RingElement::neg(self)
            }
        }
    };
}

ring_ops!(EisensteinInt);
ring_ops!(GaussianInt);

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn eis(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::from_i64(a, b)
    }
    fn gau(a: i64, b: i64) -> GaussianInt {
        GaussianInt::from_i64(a, b)
    }

    #[test]
    fn bitlen_matches_discrete_log() {
        assert_eq!(bitlen(&Int::zero()), 1);
        assert_eq!(bitlen(&Int::from(1)), 1);
        assert_eq!(bitlen(&Int::from(-8)), 4);
        assert_eq!(bitlen(&Int::from(255)), 8);
        assert_eq!(bitlen(&Int::from(256)), 9);
    }

    #[test]
    fn eisenstein_products_reduce_w_squared() {
        // (1 + w)^2 = w
        assert_eq!(&eis(1, 1) * &eis(1, 1), eis(0, 1));
        // (3 + w) w^2 = -2 - 3w, with the norm 7 preserved
        let w2 = eis(-1, -1);
        let p = &eis(3, 1) * &w2;
        assert_eq!(p, eis(-2, -3));
        assert_eq!(p.norm_uncosted(), Int::from(7));
        // (-1 + 6w) * 3w + 2 = -16 - 21w
        let step = &(&eis(-1, 6) * &eis(0, 3)) + &eis(2, 0);
        assert_eq!(step, eis(-16, -21));
    }

    #[test]
    fn norms_and_conjugates() {
        assert_eq!(eis(-1, 6).norm_uncosted(), Int::from(43));
        assert_eq!(EisensteinInt::zero().norm_uncosted(), Int::zero());
        let x = eis(2, 1);
        assert_eq!(x.conj(), eis(1, -1));
        let prod = &x * &x.conj();
        assert_eq!(prod, eis(3, 0));
        assert_eq!(gau(-1, 2).norm_uncosted(), Int::from(5));
        let g = gau(7, -3);
        assert_eq!(&g * &g.conj(), gau(58, 0));
    }

    #[test]
    fn gaussian_recurrence_step() {
        // 2(1+i) * 5 + 1 = 11 + 10i
        let v = &(&gau(2, 2) * &gau(5, 0)) + &gau(1, 0);
        assert_eq!(v, gau(11, 10));
    }

    #[test]
    fn classify_eisenstein() {
        assert_eq!(classify_eis(&eis(2, 0)), EisClass::PrimaryMinus);
        assert!(is_two_primary(&eis(2, 0)));
        assert_eq!(classify_eis(&eis(1, 6)), EisClass::PrimaryPlus);
        assert_eq!(classify_eis(&eis(1, 2)), EisClass::RamifiedDivisible);
        assert_eq!(classify_eis(&eis(0, 0)), EisClass::Zero);
        assert_eq!(classify_eis(&eis(0, 1)), EisClass::Unit);
        assert_eq!(classify_eis(&eis(1, 0)), EisClass::PrimaryPlus);
        assert_eq!(classify_eis(&eis(-1, 0)), EisClass::PrimaryMinus);
        assert_eq!(classify_eis(&eis(3, 1)), EisClass::Other);
    }

    #[test]
    fn classify_gaussian() {
        assert_eq!(classify_gauss(&gau(-1, 2)), GaussClass::Primary);
        assert_eq!(classify_gauss(&gau(2, 1)), GaussClass::Other);
        assert_eq!(classify_gauss(&gau(1, 1)), GaussClass::EvenDivisible);
        assert_eq!(classify_gauss(&gau(0, 1)), GaussClass::Unit);
        assert_eq!(classify_gauss(&gau(5, 0)), GaussClass::Primary);
        assert_eq!(classify_gauss(&gau(3, 0)), GaussClass::Other);
    }

    #[test]
    fn ramified_removal_eisenstein() {
        let mut c = CostCounters::new();
        assert_eq!(remove_ramified(&eis(1, 1), &mut c), (0, eis(1, 1)));
        assert_eq!(remove_ramified(&eis(3, 0), &mut c), (2, eis(1, 1)));
        // (1 - w)^5
        let lam = EisensteinInt::ramified();
        let mut p = EisensteinInt::one();
        for _ in 0..5 {
            p = &p * &lam;
        }
        let (m, rest) = remove_ramified(&p, &mut c);
        assert_eq!(m, 5);
        assert_eq!(rest, EisensteinInt::one());
        assert_eq!(c.ramified_removals, 7);
    }

    #[test]
    fn ramified_removal_gaussian() {
        let mut c = CostCounters::new();
        let (m, rest) = remove_ramified(&gau(2, 0), &mut c);
        assert_eq!(m, 2);
        assert_eq!(rest, gau(0, -1));
        let (n, prim) = unit_normalize(&rest).unwrap();
        assert_eq!((n, prim), (3, GaussianInt::one()));
    }

    #[test]
    fn unit_normalize_eisenstein() {
        assert_eq!(unit_normalize(&eis(-2, -3)).unwrap(), (0, eis(-2, -3)));
        assert_eq!(unit_normalize(&eis(1, 1)).unwrap(), (2, eis(-1, 0)));
        assert_eq!(unit_normalize(&eis(1, 6)).unwrap(), (0, eis(1, 6)));
        assert_eq!(
            unit_normalize(&EisensteinInt::zero()),
            Err(RingError::ZeroInput)
        );
        assert_eq!(unit_normalize(&eis(1, 2)), Err(RingError::RamifiedDivisible));
    }

    #[test]
    fn unit_normalize_gaussian() {
        assert_eq!(unit_normalize(&gau(5, 0)).unwrap(), (0, gau(5, 0)));
        assert_eq!(unit_normalize(&gau(3, 0)).unwrap(), (2, gau(-3, 0)));
    }

    #[test]
    fn unit_cycle_reassembles() {
        // g = gen^n * g''
        let g = eis(7, -5);
        let (n, prim) = unit_normalize(&g).unwrap();
        let mut back = prim;
        let w = eis(0, 1);
        for _ in 0..n {
            back = &back * &w;
        }
        assert_eq!(back, g);
    }

    #[test]
    fn parse_and_format() {
        let x: EisensteinInt = parse_element("-16-21w").unwrap();
        assert_eq!(x, eis(-16, -21));
        assert_eq!(x.to_string(), "-16-21w");
        let y: EisensteinInt = parse_element("5").unwrap();
        assert_eq!(y, eis(5, 0));
        let g: GaussianInt = parse_element("-1+2i").unwrap();
        assert_eq!(g, gau(-1, 2));
        let bare: EisensteinInt = parse_element("5w").unwrap();
        assert_eq!(bare, eis(0, 5));
        let unit: EisensteinInt = parse_element("-w").unwrap();
        assert_eq!(unit, eis(0, -1));
        let plus: EisensteinInt = parse_element("+w").unwrap();
        assert_eq!(plus.to_string(), "w");
        let mixed: GaussianInt = parse_element("2-i").unwrap();
        assert_eq!(mixed, gau(2, -1));
        assert_eq!(eis(0, 0).to_string(), "0");
        assert_eq!(eis(1, 6).to_string(), "1+6w");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(parse_element::<EisensteinInt>("").unwrap_err().position, 0);
        assert_eq!(parse_element::<EisensteinInt>("3x").unwrap_err().position, 1);
        assert_eq!(parse_element::<EisensteinInt>("3+").unwrap_err().position, 2);
        assert_eq!(parse_element::<GaussianInt>("2+3w").unwrap_err().position, 3);
        assert_eq!(parse_element::<EisensteinInt>("1+2w7").unwrap_err().position, 4);
    }

    #[test]
    fn unit_powers() {
        assert_eq!(eis(1, 0).unit_power(), Some(0));
        assert_eq!(eis(0, -1).unit_power(), Some(1));
        assert_eq!(eis(1, 1).unit_power(), Some(2));
        assert_eq!(eis(2, 0).unit_power(), None);
        assert_eq!(gau(0, -1).unit_power(), Some(3));
        assert_eq!(gau(-1, 0).unit_power(), Some(2));
    }
}
