//! gaussian rationals: complex numbers with exact rational real and
//! imaginary parts, the scalar field for the complex classification paths.

use num_complex::Complex;
use num_traits::Zero;

use super::{format_rational, rat_i64, rational_sqrt, Rational};

pub type GaussianRational = Complex<Rational>;

pub fn gauss(re: Rational, im: Rational) -> GaussianRational {
    Complex::new(re, im)
}

pub fn gauss_i64(re: i64, im: i64) -> GaussianRational {
    Complex::new(rat_i64(re), rat_i64(im))
}

pub fn gauss_from_rat(re: Rational) -> GaussianRational {
    Complex::new(re, Rational::zero())
}

/// |z|^2 = re^2 + im^2, exact.
pub fn norm_sqr(z: &GaussianRational) -> Rational {
    &z.re * &z.re + &z.im * &z.im
}

pub fn conj(z: &GaussianRational) -> GaussianRational {
    Complex::new(z.re.clone(), -z.im.clone())
}

pub fn format_gaussian(z: &GaussianRational) -> String {
    format!("{} + {}i", format_rational(&z.re), format_rational(&z.im))
}

/// exact square root in the gaussian rationals, when one exists.
///
/// for z = x + yi a root p + qi must satisfy p^2 - q^2 = x and 2pq = y,
/// which forces p^2 = (x + |z|)/2 with |z| rational. the returned root is
/// canonical: positive real part, or zero real part with nonnegative
/// imaginary part.
pub fn gaussian_sqrt(z: &GaussianRational) -> Option<GaussianRational> {
    if z.is_zero() {
        return Some(GaussianRational::zero());
    }
    let modulus = rational_sqrt(&norm_sqr(z))?;
    if z.im.is_zero() {
        let x = &z.re;
        return if x >= &Rational::zero() {
            rational_sqrt(x).map(gauss_from_rat)
        } else {
            rational_sqrt(&-x.clone()).map(|q| gauss(Rational::zero(), q))
        };
    }
    let p_sq = (&z.re + &modulus) / rat_i64(2);
    let p = rational_sqrt(&p_sq)?;
    if p.is_zero() {
        return None;
    }
    let q = &z.im / (rat_i64(2) * &p);
    // p > 0 already; both +-(p + qi) square to z, and this branch is the
    // one with positive real part.
    Some(gauss(p, q))
}
