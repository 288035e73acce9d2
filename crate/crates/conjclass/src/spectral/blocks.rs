//! block signatures: the complete similarity-and-conjugacy invariants of
//! a 1x1 or 2x2 matrix, split into the contracting part (moduli in
//! (0,1)), the expanding part (moduli > 1), the nilpotent part, and the
//! unit-modulus part, with determinant signs over the reals.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::numeric::gaussian::{conj, GaussianRational};
use crate::numeric::{rat_i64, Rational, SqMatrix};

use super::{char_pair, complex_modulus_classes, real_modulus_classes, real_root_cmp,
    EigenPair, ModulusClass};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Negative,
    Positive,
}

/// unit-modulus jordan structure over the reals. rotation blocks carry
/// their rational cosine; the sine is canonically positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RealUnitBlock {
    One,
    MinusOne,
    Jordan2One,
    Jordan2MinusOne,
    Rotation { cos: Rational },
}

impl RealUnitBlock {
    pub fn size(&self) -> u8 {
        match self {
            RealUnitBlock::One | RealUnitBlock::MinusOne => 1,
            _ => 2,
        }
    }

    fn order_key(&self) -> (u8, u8, Rational) {
        match self {
            RealUnitBlock::One => (1, 0, Rational::zero()),
            RealUnitBlock::MinusOne => (1, 1, Rational::zero()),
            RealUnitBlock::Jordan2One => (2, 0, Rational::zero()),
            RealUnitBlock::Jordan2MinusOne => (2, 1, Rational::zero()),
            RealUnitBlock::Rotation { cos } => (2, 2, cos.clone()),
        }
    }
}

impl PartialOrd for RealUnitBlock {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealUnitBlock {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

/// unit-modulus jordan structure over the complex numbers, stored up to
/// independent conjugation of each block: explicit eigenvalues keep a
/// nonnegative imaginary part, and a conjugate-irrational pair keeps its
/// characteristic polynomial, canonicalized between (t, d) and
/// (conj t, conj d).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ComplexUnitBlock {
    Single { lambda: GaussianRational },
    Jordan2 { lambda: GaussianRational },
    /// two size-1 blocks whose shared minimal polynomial
    /// x^2 - trace*x + det is irreducible over the gaussian rationals
    IrreduciblePair { trace: GaussianRational, det: GaussianRational },
}

impl ComplexUnitBlock {
    pub fn size(&self) -> u8 {
        match self {
            ComplexUnitBlock::Single { .. } => 1,
            ComplexUnitBlock::Jordan2 { .. } | ComplexUnitBlock::IrreduciblePair { .. } => 2,
        }
    }

    fn canonical(self) -> Self {
        match self {
            ComplexUnitBlock::Single { lambda } => {
                ComplexUnitBlock::Single { lambda: canonical_lambda(lambda) }
            }
            ComplexUnitBlock::Jordan2 { lambda } => {
                ComplexUnitBlock::Jordan2 { lambda: canonical_lambda(lambda) }
            }
            ComplexUnitBlock::IrreduciblePair { trace, det } => {
                let flipped = (conj(&trace), conj(&det));
                let key = |t: &GaussianRational, d: &GaussianRational| {
                    (t.im.clone(), d.im.clone())
                };
                if key(&flipped.0, &flipped.1) > key(&trace, &det) {
                    ComplexUnitBlock::IrreduciblePair { trace: flipped.0, det: flipped.1 }
                } else {
                    ComplexUnitBlock::IrreduciblePair { trace, det }
                }
            }
        }
    }

    fn order_key(&self) -> (u8, u8, Rational, Rational, Rational, Rational) {
        let zero = Rational::zero;
        match self {
            ComplexUnitBlock::Single { lambda } => {
                (1, 0, lambda.re.clone(), lambda.im.clone(), zero(), zero())
            }
            ComplexUnitBlock::Jordan2 { lambda } => {
                (2, 1, lambda.re.clone(), lambda.im.clone(), zero(), zero())
            }
            ComplexUnitBlock::IrreduciblePair { trace, det } => (
                2,
                2,
                trace.re.clone(),
                trace.im.clone(),
                det.re.clone(),
                det.im.clone(),
            ),
        }
    }
}

impl PartialOrd for ComplexUnitBlock {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ComplexUnitBlock {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

/// conjugation keeps a nonnegative imaginary part.
fn canonical_lambda(lambda: GaussianRational) -> GaussianRational {
    if lambda.im.is_negative() {
        conj(&lambda)
    } else {
        lambda
    }
}

/// complete conjugacy invariant of a real matrix: sizes and determinant
/// signs of the contracting and expanding parts, jordan sizes at
/// eigenvalue 0, and the unit-modulus blocks in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealBlockSignature {
    pub rank_plus: usize,
    pub det_sign_plus: Option<Sign>,
    pub rank_minus: usize,
    pub det_sign_minus: Option<Sign>,
    pub nilpotent_blocks: Vec<u8>,
    pub unit_blocks: Vec<RealUnitBlock>,
}

/// complete conjugacy invariant of a complex matrix; determinant signs
/// carry no topological information over the complex numbers and are
/// omitted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ComplexBlockSignature {
    pub rank_plus: usize,
    pub rank_minus: usize,
    pub nilpotent_blocks: Vec<u8>,
    pub unit_blocks: Vec<ComplexUnitBlock>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum BlockSignature {
    Real(RealBlockSignature),
    Complex(ComplexBlockSignature),
}

impl BlockSignature {
    pub fn total_size(&self) -> usize {
        match self {
            BlockSignature::Real(s) => {
                s.rank_plus
                    + s.rank_minus
                    + s.nilpotent_blocks.iter().map(|&b| b as usize).sum::<usize>()
                    + s.unit_blocks.iter().map(|b| b.size() as usize).sum::<usize>()
            }
            BlockSignature::Complex(s) => {
                s.rank_plus
                    + s.rank_minus
                    + s.nilpotent_blocks.iter().map(|&b| b as usize).sum::<usize>()
                    + s.unit_blocks.iter().map(|b| b.size() as usize).sum::<usize>()
            }
        }
    }
}

/// multiset equality of complex unit-block lists up to conjugation of
/// each block.
pub fn star_equal(u: &[ComplexUnitBlock], v: &[ComplexUnitBlock]) -> bool {
    let normalize = |blocks: &[ComplexUnitBlock]| {
        let mut canon: Vec<ComplexUnitBlock> =
            blocks.iter().cloned().map(ComplexUnitBlock::canonical).collect();
        canon.sort();
        canon
    };
    normalize(u) == normalize(v)
}

fn sign_of(r: &Rational) -> Sign {
    debug_assert!(!r.is_zero());
    if r.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// determinant sign of the part of the spectrum selected by `class`,
/// computed from exact root comparisons rather than root extraction.
fn real_part_sign(
    pair: &EigenPair<Rational>,
    classes: &[ModulusClass],
    class: ModulusClass,
) -> Option<Sign> {
    let count = classes.iter().filter(|&&c| c == class).count();
    match count {
        0 => None,
        2 => Some(sign_of(&pair.det)),
        1 => {
            // exactly one real root in the class; find its sign
            let plus = classes[0] == class;
            let cmp = real_root_cmp(pair, plus, &Rational::zero());
            Some(if cmp == Ordering::Greater { Sign::Positive } else { Sign::Negative })
        }
        _ => unreachable!(),
    }
}

pub fn real_block_signature(a: &SqMatrix<Rational>) -> RealBlockSignature {
    let pair = char_pair(a);
    let classes = real_modulus_classes(&pair);
    let rank_plus = classes.iter().filter(|&&c| c == ModulusClass::InOpenUnit).count();
    let rank_minus = classes.iter().filter(|&&c| c == ModulusClass::OutsideUnit).count();
    let det_sign_plus = real_part_sign(&pair, &classes, ModulusClass::InOpenUnit);
    let det_sign_minus = real_part_sign(&pair, &classes, ModulusClass::OutsideUnit);

    let zero_count = classes.iter().filter(|&&c| c == ModulusClass::Zero).count();
    let nilpotent_blocks: Vec<u8> = match zero_count {
        0 => vec![],
        1 => vec![1],
        2 => {
            if a == &SqMatrix::zero(2) {
                vec![1, 1]
            } else {
                vec![2]
            }
        }
        _ => unreachable!(),
    };

    let unit_count = classes.iter().filter(|&&c| c == ModulusClass::UnitModulus).count();
    let mut unit_blocks: Vec<RealUnitBlock> = Vec::new();
    if unit_count > 0 {
        if pair.n == 2 && pair.disc.is_negative() {
            // complex pair on the unit circle: det = 1, |cos| < 1
            unit_blocks.push(RealUnitBlock::Rotation { cos: &pair.trace / rat_i64(2) });
        } else {
            // all real unit roots are +-1
            let mut roots = Vec::new();
            if pair.n == 1 {
                roots.push(pair.trace.clone());
            } else {
                for plus in [true, false] {
                    let idx = if plus { 0 } else { 1 };
                    if classes[idx] == ModulusClass::UnitModulus {
                        let is_one =
                            real_root_cmp(&pair, plus, &Rational::one()) == Ordering::Equal;
                        roots.push(if is_one { Rational::one() } else { -Rational::one() });
                    }
                }
            }
            if roots.len() == 2 && roots[0] == roots[1] {
                // repeated +-1: jordan structure decided by diagonalizability
                let scalar = SqMatrix::identity(2).scale(&roots[0]);
                if a == &scalar {
                    let block = if roots[0].is_one() {
                        RealUnitBlock::One
                    } else {
                        RealUnitBlock::MinusOne
                    };
                    unit_blocks.push(block.clone());
                    unit_blocks.push(block);
                } else if roots[0].is_one() {
                    unit_blocks.push(RealUnitBlock::Jordan2One);
                } else {
                    unit_blocks.push(RealUnitBlock::Jordan2MinusOne);
                }
            } else {
                for r in roots {
                    unit_blocks.push(if r.is_one() {
                        RealUnitBlock::One
                    } else {
                        RealUnitBlock::MinusOne
                    });
                }
            }
        }
    }
    unit_blocks.sort();

    RealBlockSignature {
        rank_plus,
        det_sign_plus,
        rank_minus,
        det_sign_minus,
        nilpotent_blocks,
        unit_blocks,
    }
}

pub fn complex_block_signature(a: &SqMatrix<GaussianRational>) -> ComplexBlockSignature {
    use crate::numeric::gaussian::gaussian_sqrt;
    let pair = char_pair(a);
    let classes = complex_modulus_classes(&pair);
    let rank_plus = classes.iter().filter(|&&c| c == ModulusClass::InOpenUnit).count();
    let rank_minus = classes.iter().filter(|&&c| c == ModulusClass::OutsideUnit).count();

    let zero_count = classes.iter().filter(|&&c| c == ModulusClass::Zero).count();
    let nilpotent_blocks: Vec<u8> = match zero_count {
        0 => vec![],
        1 => vec![1],
        2 => {
            if a == &SqMatrix::zero(2) {
                vec![1, 1]
            } else {
                vec![2]
            }
        }
        _ => unreachable!(),
    };

    let unit_count = classes.iter().filter(|&&c| c == ModulusClass::UnitModulus).count();
    let mut unit_blocks: Vec<ComplexUnitBlock> = Vec::new();
    if unit_count > 0 {
        if pair.n == 1 {
            unit_blocks
                .push(ComplexUnitBlock::Single { lambda: pair.trace.clone() }.canonical());
        } else {
            let two = GaussianRational::new(rat_i64(2), Rational::zero());
            match gaussian_sqrt(&pair.disc) {
                Some(s) => {
                    let r_plus = (pair.trace.clone() + s.clone()) / two.clone();
                    let r_minus = (pair.trace.clone() - s) / two;
                    let roots = [r_plus, r_minus];
                    if pair.disc.is_zero() {
                        let lambda = roots[0].clone();
                        let scalar = SqMatrix::identity(2).scale(&lambda);
                        if a == &scalar {
                            let b = ComplexUnitBlock::Single { lambda }.canonical();
                            unit_blocks.push(b.clone());
                            unit_blocks.push(b);
                        } else {
                            unit_blocks.push(ComplexUnitBlock::Jordan2 { lambda }.canonical());
                        }
                    } else {
                        for (idx, root) in roots.into_iter().enumerate() {
                            if classes[idx] == ModulusClass::UnitModulus {
                                unit_blocks
                                    .push(ComplexUnitBlock::Single { lambda: root }.canonical());
                            }
                        }
                    }
                }
                None => {
                    // irreducible unit pair; both roots have modulus 1
                    debug_assert_eq!(unit_count, 2);
                    unit_blocks.push(
                        ComplexUnitBlock::IrreduciblePair {
                            trace: pair.trace.clone(),
                            det: pair.det.clone(),
                        }
                        .canonical(),
                    );
                }
            }
        }
    }
    unit_blocks.sort();

    ComplexBlockSignature { rank_plus, rank_minus, nilpotent_blocks, unit_blocks }
}
