//! numbers of the form p + q*sqrt(d) with rational p, q and a fixed
//! positive non-square integer radicand d. used for exact similarity
//! transforms when eigenvalues live in a real quadratic extension.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{rat_sign, Rational};

/// bound for the trial-division pass that strips square factors from a
/// radicand. beyond it a remaining perfect-square cofactor is still
/// detected by an exact integer square root, so only square factors with
/// both prime divisors above the bound can survive; sign tests and
/// arithmetic remain correct for such radicands.
const SQUAREFREE_TRIAL_BOUND: u64 = 1_000_000;

/// splits n > 0 as s^2 * d with d free of detectable square factors,
/// returning (s, d).
pub fn extract_square_factor(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "radicand must be positive");
    let mut s = BigInt::one();
    let mut d = n.clone();
    let mut p = BigInt::from(2u8);
    let bound = BigInt::from(SQUAREFREE_TRIAL_BOUND);
    while &p * &p <= d && p <= bound {
        let p_sq = &p * &p;
        while (&d % &p_sq).is_zero() {
            d /= &p_sq;
            s *= &p;
        }
        p += 1u8;
    }
    let root = d.sqrt();
    if &root * &root == d {
        s *= &root;
        d = BigInt::one();
    }
    (s, d)
}

/// p + q*sqrt(d). invariants: d > 0; q = 0 forces d = 1; d = 1 forces
/// q = 0 (the rational is folded into p). values from different radicands
/// may only be combined when one side is rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    p: Rational,
    q: Rational,
    d: BigInt,
}

impl QuadraticNumber {
    pub fn new(p: Rational, q: Rational, d: BigInt) -> Self {
        assert!(d.is_positive(), "radicand must be positive");
        if q.is_zero() {
            return Self { p, q: Rational::zero(), d: BigInt::one() };
        }
        let (s, d_reduced) = extract_square_factor(&d);
        let q = q * Rational::from_integer(s);
        if d_reduced.is_one() {
            Self { p: p + q, q: Rational::zero(), d: BigInt::one() }
        } else {
            Self { p, q, d: d_reduced }
        }
    }

    pub fn from_rational(p: Rational) -> Self {
        Self { p, q: Rational::zero(), d: BigInt::one() }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.p
    }

    pub fn surd_coefficient(&self) -> &Rational {
        &self.q
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.p)
    }

    /// field conjugate p - q*sqrt(d).
    pub fn conjugate(&self) -> Self {
        Self { p: self.p.clone(), q: -self.q.clone(), d: self.d.clone() }
    }

    /// -1, 0, or +1, decided exactly by squaring when p and q disagree
    /// in sign.
    pub fn sign(&self) -> i32 {
        let sp = rat_sign(&self.p);
        let sq = rat_sign(&self.q);
        if sq == 0 {
            return sp;
        }
        if sp == 0 {
            return sq;
        }
        if sp == sq {
            return sp;
        }
        // p and q have opposite signs: |p| vs |q|*sqrt(d) decides.
        let diff = &self.p * &self.p - &self.q * &self.q * Rational::from_integer(self.d.clone());
        match rat_sign(&diff) {
            0 => 0,
            s => s * sp,
        }
    }

    pub fn is_zero_value(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        self.p.to_f64().unwrap_or(f64::NAN) + self.q.to_f64().unwrap_or(f64::NAN) * d.sqrt()
    }

    fn unified_radicand(&self, other: &Self) -> BigInt {
        if self.q.is_zero() {
            other.d.clone()
        } else if other.q.is_zero() || self.d == other.d {
            self.d.clone()
        } else {
            panic!(
                "incompatible radicands {} and {}: values lie in different quadratic fields",
                self.d, other.d
            );
        }
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.q, self.d)
        }
    }
}

impl Add for QuadraticNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.unified_radicand(&rhs);
        Self::new(self.p + rhs.p, self.q + rhs.q, d)
    }
}

impl Sub for QuadraticNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.unified_radicand(&rhs);
        Self::new(self.p - rhs.p, self.q - rhs.q, d)
    }
}

impl Neg for QuadraticNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self { p: -self.p, q: -self.q, d: self.d }
    }
}

impl Mul for QuadraticNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.unified_radicand(&rhs);
        let rad = Rational::from_integer(d.clone());
        let p = &self.p * &rhs.p + &self.q * &rhs.q * &rad;
        let q = &self.p * &rhs.q + &self.q * &rhs.p;
        Self::new(p, q, d)
    }
}

impl Div for QuadraticNumber {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero_value(), "division by zero quadratic number");
        let d = self.unified_radicand(&rhs);
        let rad = Rational::from_integer(d.clone());
        // 1/(p + q*sqrt(d)) = (p - q*sqrt(d)) / (p^2 - q^2 d)
        let denom = &rhs.p * &rhs.p - &rhs.q * &rhs.q * &rad;
        let inv = Self::new(&rhs.p / &denom, -(&rhs.q / &denom), d);
        self * inv
    }
}

impl Zero for QuadraticNumber {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.is_zero_value()
    }
}

impl One for QuadraticNumber {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}
