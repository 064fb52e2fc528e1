//! Binary fixed-point complex numbers with a propagated absolute error bound.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::Q;

/// Extra binary digits carried beyond the requested decimal precision.
pub const GUARD_BITS: u32 = 64;

/// Fraction bits needed for `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) < 3.3220
    (digits as u64 * 33220 / 10000) as u32 + 1 + GUARD_BITS
}

/// Rounds `x / 2^shift` to the nearest integer (ties away from zero); the
/// rounding error is at most half a unit.
pub(crate) fn round_shift(x: &BigInt, shift: u32) -> BigInt {
    if shift == 0 {
        return x.clone();
    }
    let half = BigInt::one() << (shift - 1);
    if x.is_negative() {
        -((-x + &half) >> shift)
    } else {
        (x + &half) >> shift
    }
}

fn div_round(x: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(d);
    if (r << 1u32) >= *d {
        q + 1
    } else {
        q
    }
}

fn mag(x: &BigInt) -> BigUint {
    x.magnitude().clone()
}

fn ceil_shift(x: &BigUint, shift: u32) -> BigUint {
    let mask = (BigUint::one() << shift) - 1u32;
    let q = x >> shift;
    if (x & mask).is_zero() {
        q
    } else {
        q + 1u32
    }
}

/// `re + i·im` scaled by `2^-bits`, with `|z - true| ≤ err·2^-bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigComplex {
    re: BigInt,
    im: BigInt,
    err: BigUint,
    bits: u32,
}

impl BigComplex {
    pub fn zero(bits: u32) -> Self {
        BigComplex { re: BigInt::zero(), im: BigInt::zero(), err: BigUint::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        Self::from_raw(BigInt::one() << bits, BigInt::zero(), BigUint::zero(), bits)
    }

    pub fn from_raw(re: BigInt, im: BigInt, err: BigUint, bits: u32) -> Self {
        BigComplex { re, im, err, bits }
    }

    /// Real number from a fixed-point mantissa and an error in units.
    pub fn real(re: BigInt, err: u64, bits: u32) -> Self {
        Self::from_raw(re, BigInt::zero(), BigUint::from(err), bits)
    }

    /// Exact rational, rounded to the grid.
    pub fn from_q(x: &Q, bits: u32) -> Self {
        let n: BigInt = x.numer() << bits;
        let re = div_round(&n, x.denom());
        let err = if (&re * x.denom()) == n { 0u32 } else { 1u32 };
        Self::from_raw(re, BigInt::zero(), BigUint::from(err), bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn re_raw(&self) -> &BigInt {
        &self.re
    }

    pub fn im_raw(&self) -> &BigInt {
        &self.im
    }

    pub fn err_raw(&self) -> &BigUint {
        &self.err
    }

    /// Error bound as a float (absolute).
    pub fn err_f64(&self) -> f64 {
        scaled_f64(&BigInt::from(self.err.clone()), self.bits)
    }

    pub fn re_f64(&self) -> f64 {
        scaled_f64(&self.re, self.bits)
    }

    pub fn im_f64(&self) -> f64 {
        scaled_f64(&self.im, self.bits)
    }

    /// Upper bound on `|true value|`.
    pub fn abs_upper(&self) -> f64 {
        let s = BigInt::from(mag(&self.re) + mag(&self.im) + &self.err);
        scaled_f64(&s, self.bits)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.bits, other.bits, "precision mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self::from_raw(&self.re + &other.re, &self.im + &other.im, &self.err + &other.err, self.bits)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_raw(-&self.re, -&self.im, self.err.clone(), self.bits)
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        Self::from_raw(-&self.im, self.re.clone(), self.err.clone(), self.bits)
    }

    fn l1(&self) -> BigUint {
        mag(&self.re) + mag(&self.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let b = self.bits;
        let re = round_shift(&(&self.re * &other.re - &self.im * &other.im), b);
        let im = round_shift(&(&self.re * &other.im + &self.im * &other.re), b);
        // |z1 z2 - ẑ1 ẑ2| ≤ |ẑ1| e2 + |ẑ2| e1 + e1 e2, plus one unit of rounding
        let cross = self.l1() * &other.err + other.l1() * &self.err + &self.err * &other.err;
        let err = ceil_shift(&cross, b) + 1u32;
        Self::from_raw(re, im, err, b)
    }

    /// Multiplication by an exact rational.
    pub fn mul_q(&self, x: &Q) -> Self {
        let (n, d) = (x.numer(), x.denom());
        let re = div_round(&(&self.re * n), d);
        let im = div_round(&(&self.im * n), d);
        let scaled = &self.err * mag(n);
        let (q, r) = scaled.div_rem(d.magnitude());
        let err = q + if r.is_zero() { 0u32 } else { 1u32 } + if d.is_one() { 0u32 } else { 1u32 };
        Self::from_raw(re, im, err, self.bits)
    }

    /// Decimal rendering of the real and imaginary parts with `digits`
    /// digits after the point.
    pub fn to_decimal(&self, digits: u32) -> (String, String) {
        (fixed_to_decimal(&self.re, self.bits, digits), fixed_to_decimal(&self.im, self.bits, digits))
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_decimal(20);
        write!(f, "{} + {}i (±{:.1e})", re, im, self.err_f64())
    }
}

/// `x · 2^-bits` as a float.
pub(crate) fn scaled_f64(x: &BigInt, bits: u32) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let len = x.bits() as i64;
    let drop = (len - 60).max(0) as u32;
    let top = (x >> drop).to_f64().unwrap_or(0.0);
    top * 2f64.powi(drop as i32 - bits as i32)
}

/// Formats `x · 2^-bits` rounded to `digits` decimals.
pub fn fixed_to_decimal(x: &BigInt, bits: u32, digits: u32) -> String {
    let scaled = round_shift(&(x * BigInt::from(10u32).pow(digits)), bits);
    let neg = scaled.sign() == Sign::Minus;
    let s = scaled.magnitude().to_string();
    let s = if s.len() <= digits as usize { format!("{}{}", "0".repeat(digits as usize + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits as usize);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// `arctan(1/x)` for an integer `x ≥ 2`, with its error bound in units.
fn arctan_inv(x: u32, bits: u32) -> (BigInt, u64) {
    let x2 = BigInt::from(x as u64 * x as u64);
    let mut power = (BigInt::one() << bits) / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut n: u64 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * n + 1);
        if n.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        // floor(floor(a/b)/c) = floor(a/(bc)), so `power` stays exact up to one unit
        power /= &x2;
        n += 1;
    }
    // each term is off by less than 2 units; the discarded tail is below 1
    (sum, 2 * n + 1)
}

/// `π` by Machin's formula.
pub fn pi(bits: u32) -> BigComplex {
    let (a, ea) = arctan_inv(5, bits);
    let (b, eb) = arctan_inv(239, bits);
    BigComplex::real(a * 16 - b * 4, 16 * ea + 4 * eb, bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    #[test]
    fn pi_digits() {
        let p = pi(bits_for_digits(50));
        let (re, _) = p.to_decimal(40);
        assert_eq!(re, "3.1415926535897932384626433832795028841972");
    }

    #[test]
    fn arithmetic_and_errors() {
        let b = bits_for_digits(30);
        let third = BigComplex::from_q(&q_frac(1, 3), b);
        let one = third.mul_q(&crate::rational::q(3));
        assert!((one.re_f64() - 1.0).abs() < 1e-30);
        let i = BigComplex::one(b).mul_i();
        let m = i.mul(&i);
        assert_eq!(m.re_raw(), &-(BigInt::one() << b));
        assert!(m.err_raw() <= &BigUint::from(1u32));
        assert_eq!(fixed_to_decimal(&-(BigInt::one() << (b - 1)), b, 3), "-0.500");
        assert_eq!(fixed_to_decimal(&(BigInt::from(3) << (b - 2)), b, 0), "1");
    }

    #[test]
    fn float_conversion() {
        let b = 200;
        let x = BigComplex::from_q(&q_frac(-5, 4), b);
        assert_eq!(x.re_f64(), -1.25);
        assert!(x.abs_upper() >= 1.25);
    }
}
