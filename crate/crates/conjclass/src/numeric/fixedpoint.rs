//! fixed-point evaluation of natural logarithms of positive rationals,
//! precise enough to print logarithm ratios to 50 significant digits.
//!
//! values are carried as floor(x * 2^PRECISION_BITS) in a BigInt. the
//! series is atanh-based: ln m = 2 * sum z^(2j+1)/(2j+1) for
//! z = (m-1)/(m+1), applied after range reduction to [1, 2).

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use super::Rational;

/// working precision in fractional bits; 320 bits is about 96 decimal
/// digits, comfortably past the 50 requested for exponent strings.
const PRECISION_BITS: u64 = 320;

fn fp_one() -> BigInt {
    BigInt::from(1u8) << PRECISION_BITS
}

fn fp_mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> PRECISION_BITS
}

fn fp_div(a: &BigInt, b: &BigInt) -> BigInt {
    (a << PRECISION_BITS) / b
}

/// ln of a fixed-point value in [1, 2).
fn ln_reduced(m_fp: &BigInt) -> BigInt {
    let one = fp_one();
    let z = fp_div(&(m_fp - &one), &(m_fp + &one));
    let z_sq = fp_mul(&z, &z);
    let mut term = z.clone();
    let mut acc = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        acc += &term / k;
        term = fp_mul(&term, &z_sq);
        k += 2;
    }
    acc << 1
}

fn ln2_fp() -> BigInt {
    // ln 2 = 2 atanh(1/3)
    let third = fp_div(&BigInt::from(1u8), &BigInt::from(3u8));
    let third_sq = fp_mul(&third, &third);
    let mut term = third;
    let mut acc = BigInt::zero();
    let mut k = 1u64;
    while !term.is_zero() {
        acc += &term / k;
        term = fp_mul(&term, &third_sq);
        k += 2;
    }
    acc << 1
}

/// ln r as a fixed-point value; r must be positive.
pub fn ln_fixed(r: &Rational) -> BigInt {
    assert!(r.is_positive(), "logarithm of a nonpositive rational");
    // r = 2^k * m with m in [1, 2)
    let num_bits = r.numer().bits() as i64;
    let den_bits = r.denom().bits() as i64;
    let mut k = num_bits - den_bits;
    // m_fp = floor(r / 2^k * 2^P); adjust k so the mantissa lands in [1, 2)
    let mantissa = |k: i64| -> BigInt {
        let shift = PRECISION_BITS as i64 - k;
        let scaled_num = if shift >= 0 {
            r.numer() << shift as u64
        } else {
            r.numer() >> (-shift) as u64
        };
        scaled_num / r.denom()
    };
    let one = fp_one();
    let mut m_fp = mantissa(k);
    if m_fp < one {
        k -= 1;
        m_fp = mantissa(k);
    } else if m_fp >= &one << 1u8 {
        k += 1;
        m_fp = mantissa(k);
    }
    ln_reduced(&m_fp) + k * ln2_fp()
}

/// quotient ln(c)/ln(a) of two positive rationals as a fixed-point value.
pub fn ln_ratio_fixed(c: &Rational, a: &Rational) -> BigInt {
    fp_div(&ln_fixed(c), &ln_fixed(a))
}

pub fn fixed_to_f64(v: &BigInt) -> f64 {
    v.to_f64().map(|x| x / 2f64.powi(PRECISION_BITS as i32)).unwrap_or(f64::NAN)
}

/// renders a fixed-point value with the given number of significant
/// decimal digits, rounding the last digit half-away-from-zero.
pub fn fixed_to_decimal(v: &BigInt, significant_digits: usize) -> String {
    assert!(significant_digits > 0);
    if v.is_zero() {
        return "0".to_string();
    }
    let negative = v.sign() == Sign::Minus;
    let mag = v.abs();
    let one = fp_one();
    let int_part: BigInt = &mag >> PRECISION_BITS;
    let int_str = int_part.to_string();
    let int_digits = if int_part.is_zero() { 0 } else { int_str.len() };
    let frac_digits = if int_digits >= significant_digits {
        // the integer part is never truncated, even past the budget
        0
    } else if int_digits > 0 {
        significant_digits - int_digits
    } else {
        // count leading zeros after the point until the first digit
        let mut frac = &mag % &one;
        let mut leading = 0usize;
        loop {
            frac *= 10u8;
            if frac >= one {
                break;
            }
            leading += 1;
        }
        significant_digits + leading
    };
    // digits = round(mag * 10^frac_digits / 2^P)
    let scaled = &mag * BigInt::from(10u8).pow(frac_digits as u32);
    let floor = &scaled >> PRECISION_BITS;
    let rem = &scaled - (&floor << PRECISION_BITS);
    let digits = if (&rem << 1u8) >= one { floor + 1 } else { floor };
    let mut s = digits.to_string();
    let sign = if negative { "-" } else { "" };
    if frac_digits == 0 {
        return format!("{sign}{s}");
    }
    if s.len() <= frac_digits {
        s = format!("{}{}", "0".repeat(frac_digits - s.len() + 1), s);
    }
    let split = s.len() - frac_digits;
    format!("{sign}{}.{}", &s[..split], &s[split..])
}
