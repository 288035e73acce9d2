//! exact scalar arithmetic: rationals, gaussian rationals, and real
//! quadratic extensions, plus the small dense linear algebra built on them.
//!
//! every quantity that feeds a conjugacy verdict stays exact; floating
//! point only appears when a witness homeomorphism is evaluated.

pub mod fixedpoint;
pub mod gaussian;
pub mod linalg;
pub mod quadratic;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use gaussian::GaussianRational;
pub use linalg::{ColVector, SolutionSet, SqMatrix};
pub use quadratic::QuadraticNumber;

/// arbitrary-precision rational with positive denominator in lowest terms.
/// the invariants (den > 0, gcd(|num|, den) = 1, zero as 0/1) are maintained
/// by the backing representation on every operation.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumericError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed rational literal `{0}`")]
    MalformedLiteral(String),
}

/// builds a reduced rational from a numerator/denominator pair.
pub fn normalize_rational(num: BigInt, den: BigInt) -> Result<Rational, NumericError> {
    if den.is_zero() {
        return Err(NumericError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

pub fn rat_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// parses "p", "p/q", or a plain decimal such as "0.25" (optional leading
/// minus), always into lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational, NumericError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(NumericError::MalformedLiteral(s.to_string()));
    }
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, t),
    };
    if body.is_empty() {
        return Err(NumericError::MalformedLiteral(s.to_string()));
    }
    let malformed = || NumericError::MalformedLiteral(s.to_string());
    let value = if let Some((num, den)) = body.split_once('/') {
        let n: BigInt = num.parse().map_err(|_| malformed())?;
        let d: BigInt = den.parse().map_err(|_| malformed())?;
        if num.starts_with('-') || den.starts_with('-') || num.starts_with('+') {
            return Err(malformed());
        }
        normalize_rational(n, d)?
    } else if let Some((int_part, frac_part)) = body.split_once('.') {
        if int_part.is_empty() || frac_part.is_empty() {
            return Err(malformed());
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit())
            || !frac_part.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(malformed());
        }
        let digits: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| malformed())?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        Rational::new(digits, scale)
    } else {
        if !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let n: BigInt = body.parse().map_err(|_| malformed())?;
        Rational::from_integer(n)
    };
    Ok(if sign < 0 { -value } else { value })
}

/// canonical wire form: "p" when the denominator is 1, otherwise "p/q".
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// -1, 0, or +1.
pub fn rat_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// exact square root of a nonnegative rational, when one exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rational::zero());
    }
    let num_root = r.numer().sqrt();
    let den_root = r.denom().sqrt();
    if &(&num_root * &num_root) == r.numer() && &(&den_root * &den_root) == r.denom() {
        Some(Rational::new(num_root, den_root))
    } else {
        None
    }
}
