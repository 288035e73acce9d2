//! exact spectral analysis of 1x1 and 2x2 matrices: eigenvalue data,
//! modulus classification against the unit circle, canonical forms, and
//! the block signatures that decide conjugacy.

pub mod blocks;
pub mod canonical;

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::numeric::gaussian::{conj, norm_sqr, GaussianRational};
use crate::numeric::linalg::Scalar;
use crate::numeric::{rat_i64, Rational, SqMatrix};

pub use blocks::{
    complex_block_signature, real_block_signature, star_equal, BlockSignature,
    ComplexBlockSignature, ComplexUnitBlock, RealBlockSignature, RealUnitBlock, Sign,
};
pub use canonical::{
    jordan_form, real_canonical_form, realify, realify_vec, ComplexForm, ComplexJordanForm,
    RealCanonicalForm, RealForm,
};

/// trace, determinant, and discriminant of the characteristic polynomial
/// x^2 - trace*x + det (for 1x1 inputs both trace and det are the single
/// entry and the discriminant is fixed at 0).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EigenPair<T> {
    pub n: usize,
    pub trace: T,
    pub det: T,
    pub disc: T,
}

pub fn char_pair<T: Scalar>(a: &SqMatrix<T>) -> EigenPair<T> {
    match a.n() {
        1 => EigenPair {
            n: 1,
            trace: a[(0, 0)].clone(),
            det: a[(0, 0)].clone(),
            disc: T::zero(),
        },
        2 => {
            let trace = a.trace();
            let det = a.det();
            let disc = trace.clone() * trace.clone()
                - (T::one() + T::one() + T::one() + T::one()) * det.clone();
            EigenPair { n: 2, trace, det, disc }
        }
        n => panic!("char_pair expects dimension 1 or 2, got {n}"),
    }
}

/// position of an eigenvalue modulus relative to 0 and 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ModulusClass {
    Zero,
    InOpenUnit,
    UnitModulus,
    OutsideUnit,
}

/// compares the real eigenvalue (trace + sign*sqrt(disc))/2 with a
/// rational threshold, exactly, without extracting the root.
pub fn real_root_cmp(pair: &EigenPair<Rational>, plus: bool, c: &Rational) -> Ordering {
    assert!(pair.disc >= Rational::zero(), "real roots require disc >= 0");
    if pair.n == 1 {
        return pair.trace.cmp(c);
    }
    let two_c_minus_t = c * rat_i64(2) - &pair.trace;
    if plus {
        // sqrt(disc) vs (2c - t)
        if two_c_minus_t < Rational::zero() {
            Ordering::Greater
        } else {
            pair.disc.cmp(&(&two_c_minus_t * &two_c_minus_t))
        }
    } else {
        // -sqrt(disc) vs (2c - t), i.e. sqrt(disc) vs (t - 2c) reversed
        let t_minus_2c = -two_c_minus_t;
        if t_minus_2c < Rational::zero() {
            Ordering::Less
        } else {
            (&t_minus_2c * &t_minus_2c).cmp(&pair.disc)
        }
    }
}

fn classify_real_root(pair: &EigenPair<Rational>, plus: bool) -> ModulusClass {
    let zero = real_root_cmp(pair, plus, &Rational::zero());
    if zero == Ordering::Equal {
        return ModulusClass::Zero;
    }
    let one = real_root_cmp(pair, plus, &rat_i64(1));
    let minus_one = real_root_cmp(pair, plus, &rat_i64(-1));
    if one == Ordering::Equal || minus_one == Ordering::Equal {
        ModulusClass::UnitModulus
    } else if one == Ordering::Less && minus_one == Ordering::Greater {
        ModulusClass::InOpenUnit
    } else {
        ModulusClass::OutsideUnit
    }
}

fn classify_by_norm_sq(norm_sq: &Rational) -> ModulusClass {
    if norm_sq.is_zero() {
        ModulusClass::Zero
    } else {
        match norm_sq.cmp(&Rational::one()) {
            Ordering::Less => ModulusClass::InOpenUnit,
            Ordering::Equal => ModulusClass::UnitModulus,
            Ordering::Greater => ModulusClass::OutsideUnit,
        }
    }
}

/// modulus classes of the eigenvalues of a real matrix, one entry per
/// eigenvalue with multiplicity. for two real roots the order is
/// [(t + sqrt(disc))/2, (t - sqrt(disc))/2]; a complex-conjugate pair
/// shares one class. all tests are rational sign tests.
pub fn real_modulus_classes(pair: &EigenPair<Rational>) -> Vec<ModulusClass> {
    if pair.n == 1 {
        return vec![classify_real_root(pair, true)];
    }
    if pair.disc < Rational::zero() {
        // conjugate pair with |lambda|^2 = det (necessarily positive)
        let class = classify_by_norm_sq(&pair.det);
        return vec![class, class];
    }
    vec![classify_real_root(pair, true), classify_real_root(pair, false)]
}

/// schur-cohn test: both roots of the monic complex quadratic
/// z^2 + c1 z + c0 lie strictly inside the unit circle iff |c0| < 1 and
/// |c1 - conj(c1) c0| < 1 - |c0|^2. both comparisons square exactly.
fn both_roots_inside(c1: &GaussianRational, c0: &GaussianRational) -> bool {
    let n0 = norm_sqr(c0);
    if n0 >= Rational::one() {
        return false;
    }
    let lhs = c1.clone() - conj(c1) * c0.clone();
    let gap = Rational::one() - n0;
    norm_sqr(&lhs) < &gap * &gap
}

/// modulus classes of the eigenvalues of a complex matrix, one entry per
/// eigenvalue with multiplicity.
///
/// when the characteristic polynomial splits over the gaussian rationals
/// the roots are classified directly (order: canonical-sqrt root first).
/// otherwise the unit-modulus case is decided by whether the polynomial
/// is proportional to its modulus-reversal conj(d) x^2 - conj(t) x + 1
/// (equivalently a nontrivial gcd with it), with the residual
/// inverted-pair ambiguity resolved by the exact test |t|^2 vs 4; counts
/// inside/outside come from the schur-cohn criterion. every branch is a
/// rational comparison.
pub fn complex_modulus_classes(pair: &EigenPair<GaussianRational>) -> Vec<ModulusClass> {
    use crate::numeric::gaussian::gaussian_sqrt;
    if pair.n == 1 {
        return vec![classify_by_norm_sq(&norm_sqr(&pair.trace))];
    }
    let two = GaussianRational::new(rat_i64(2), Rational::zero());
    if let Some(s) = gaussian_sqrt(&pair.disc) {
        let plus = (pair.trace.clone() + s.clone()) / two.clone();
        let minus = (pair.trace.clone() - s) / two;
        return vec![
            classify_by_norm_sq(&norm_sqr(&plus)),
            classify_by_norm_sq(&norm_sqr(&minus)),
        ];
    }
    // irreducible over Q(i); a zero root would force d = 0 and disc = t^2,
    // a perfect square, so d != 0 here.
    let t = &pair.trace;
    let d = &pair.det;
    debug_assert!(!d.is_zero());
    let norm_d = norm_sqr(d);
    let reversal_proportional =
        norm_d == Rational::one() && conj(t) == conj(d) * t.clone();
    if reversal_proportional {
        let norm_t = norm_sqr(t);
        match norm_t.cmp(&rat_i64(4)) {
            Ordering::Less => return vec![ModulusClass::UnitModulus; 2],
            Ordering::Greater => {
                return vec![ModulusClass::OutsideUnit, ModulusClass::InOpenUnit]
            }
            // |t|^2 = 4 with the proportionality forces disc = 0,
            // contradicting irreducibility
            Ordering::Equal => unreachable!("double root cannot be irreducible"),
        }
    }
    // no unit-modulus roots remain possible: count inside/outside
    let c1 = -t.clone();
    let c0 = d.clone();
    if both_roots_inside(&c1, &c0) {
        return vec![ModulusClass::InOpenUnit; 2];
    }
    // roots of the reversed monic polynomial are 1/conj(root), so "both
    // outside" is "both inside" for it
    let inv_d = GaussianRational::new(Rational::one(), Rational::zero()) / conj(d);
    let rc1 = -conj(t) * inv_d.clone();
    let rc0 = inv_d;
    if both_roots_inside(&rc1, &rc0) {
        return vec![ModulusClass::OutsideUnit; 2];
    }
    vec![ModulusClass::OutsideUnit, ModulusClass::InOpenUnit]
}
