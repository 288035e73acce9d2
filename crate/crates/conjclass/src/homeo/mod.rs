//! conjugating homeomorphisms as composition chains of primitive maps,
//! their synthesis for the constructively solvable classes, and numerical
//! verification of the conjugacy equation g = h o f o h^-1.

pub mod eval;
pub mod synth;
pub mod verify;

use thiserror::Error;

use crate::classify::Field;
use crate::numeric::fixedpoint::{fixed_to_decimal, fixed_to_f64, ln_ratio_fixed};
use crate::numeric::{ColVector, GaussianRational, Rational, SqMatrix};

pub use eval::homeo_apply;
pub use synth::{
    reduce_to_linear, synth_1d, synth_nofix_bijective_2d, synth_nofix_singular_2d,
    synth_translation, synthesize,
};
pub use verify::{verify_conjugacy, VerificationReport, VerificationSpec};

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum HomeoError {
    #[error("the maps are not topologically conjugate")]
    NotConjugate,
    #[error("the maps are conjugate but no constructive homeomorphism is available for their class")]
    UnsupportedClass,
    #[error("translation synthesis needs nonzero translation vectors")]
    ZeroTranslation,
    #[error("the fiber-scaling construction needs a positive second eigenvalue")]
    NegativeAlphaUnsupported,
    #[error("the construction applies to fixed-point-free maps only")]
    NotFixedPointFree,
    #[error("the construction needs an invertible linear part")]
    Singular,
    #[error("the construction needs a singular linear part")]
    NotSingular,
    #[error("the map has no fixed point to translate away")]
    NoFixedPoint,
    #[error("fields or dimensions do not match")]
    DimensionMismatch,
}

/// how a primitive participates in a chain.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    pub fn flipped(self) -> Self {
        match self {
            Direction::Forward => Direction::Inverse,
            Direction::Inverse => Direction::Forward,
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum ExactMatrix {
    Real(SqMatrix<Rational>),
    Complex(SqMatrix<GaussianRational>),
}

#[derive(Clone, PartialEq, Debug)]
pub enum ExactVector {
    Real(ColVector<Rational>),
    Complex(ColVector<GaussianRational>),
}

/// power exponent of the one-dimensional signed-power map, kept both as
/// an evaluation double and as a 50-significant-digit decimal, with the
/// exact pair of moduli that defines it retained for audit.
#[derive(Clone, PartialEq, Debug)]
pub struct Exponent {
    pub value: f64,
    pub decimal: String,
    pub abs_a: Rational,
    pub abs_c: Rational,
}

pub const EXPONENT_DECIMAL_DIGITS: usize = 50;

impl Exponent {
    /// exponent fixed at exactly 1 (equal moduli, or the classes that
    /// match centers without reshaping).
    pub fn unit(abs_a: Rational, abs_c: Rational) -> Self {
        Exponent { value: 1.0, decimal: "1".to_string(), abs_a, abs_c }
    }

    /// the defining equation |a|^l = |c|, solved as l = ln|c| / ln|a| in
    /// high-precision fixed-point arithmetic.
    pub fn log_ratio(abs_a: Rational, abs_c: Rational) -> Self {
        let fp = ln_ratio_fixed(&abs_c, &abs_a);
        Exponent {
            value: fixed_to_f64(&fp),
            decimal: fixed_to_decimal(&fp, EXPONENT_DECIMAL_DIGITS),
            abs_a,
            abs_c,
        }
    }
}

/// the bijections the synthesized chains are built from. each has a
/// closed-form inverse; complex maps act on realified coordinates during
/// evaluation.
#[derive(Clone, PartialEq, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum PrimitiveMap {
    /// x -> Bx with det B != 0
    Linear { b: ExactMatrix },
    /// x -> x + v
    Translate { v: ExactVector },
    /// x -> sgn(x - center_in) |x - center_in|^l + center_out
    SignedPower1D { center_in: Rational, center_out: Rational, exponent: Exponent },
    /// (x1, x2) -> (x1 - (x2 - 1/2)^2 / 2, x2)
    ParabolicShear,
    /// (x1, x2) -> (x1, x2 * alpha^(-x1)) with alpha > 0, alpha != 1
    ExpFiberScale { alpha: Rational },
    /// complex coordinate conjugation, (re, im) -> (re, -im)
    Conjugate,
}

/// a homeomorphism as a chain of primitives in composition order: the
/// chain [m0, m1, ..., mk] is the map m0 o m1 o ... o mk, so evaluation
/// applies the last entry first. `dim` counts coordinates over `field`.
#[derive(Clone, PartialEq, Debug)]
pub struct Homeomorphism {
    pub field: Field,
    pub dim: usize,
    pub chain: Vec<(PrimitiveMap, Direction)>,
}

impl Homeomorphism {
    pub fn identity(field: Field, dim: usize) -> Self {
        Homeomorphism { field, dim, chain: vec![] }
    }

    /// builds the chain from the order the steps are applied in, i.e.
    /// `steps[0]` acts first.
    pub fn from_application_order(
        field: Field,
        dim: usize,
        mut steps: Vec<(PrimitiveMap, Direction)>,
    ) -> Self {
        steps.reverse();
        Homeomorphism { field, dim, chain: steps }
    }

    /// the composition self o inner, so `inner` acts first.
    pub fn compose(&self, inner: &Self) -> Self {
        assert_eq!(
            (self.field, self.dim),
            (inner.field, inner.dim),
            "composed chains must act on the same space"
        );
        let mut chain = self.chain.clone();
        chain.extend(inner.chain.iter().cloned());
        Homeomorphism { field: self.field, dim: self.dim, chain }
    }

    pub fn invert(&self) -> Self {
        let chain = self
            .chain
            .iter()
            .rev()
            .map(|(m, d)| (m.clone(), d.flipped()))
            .collect();
        Homeomorphism { field: self.field, dim: self.dim, chain }
    }

    /// number of real coordinates the chain acts on during evaluation.
    pub fn real_dim(&self) -> usize {
        match self.field {
            Field::Real => self.dim,
            Field::Complex => 2 * self.dim,
        }
    }
}
