//! topological invariants computed directly from a map, independently of
//! the block signature: fixed-point count, bijectivity, orientation,
//! period-two behavior, and contraction. conjugate maps must agree on
//! every field, which makes the report a cross-check on the signature
//! machinery.

use num_traits::{Signed, Zero};

use super::{fixed_point_set, Affine, AffineMap, FixedPointSet};
use crate::numeric::linalg::{solve_affine_system, Scalar};
use crate::spectral::{char_pair, complex_modulus_classes, real_modulus_classes, ModulusClass,
    Sign};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FixedCountClass {
    Zero,
    One,
    Infinite,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessReport {
    pub fixed_count_class: FixedCountClass,
    pub bijective: bool,
    /// determinant sign for real bijections; orientation carries no
    /// topological information otherwise.
    pub orientation: Option<Sign>,
    /// whether some non-fixed point returns to itself after two steps.
    pub has_period_two_orbit: bool,
    /// whether every eigenvalue modulus is strictly below 1.
    pub contracting: bool,
}

pub fn invariant_witnesses(f: &AffineMap) -> WitnessReport {
    match f {
        AffineMap::Real(m) => {
            let classes = real_modulus_classes(&char_pair(&m.a));
            let det = m.a.det();
            let orientation = if det.is_zero() {
                None
            } else if det.is_positive() {
                Some(Sign::Positive)
            } else {
                Some(Sign::Negative)
            };
            report(m, &classes, orientation)
        }
        AffineMap::Complex(m) => {
            let classes = complex_modulus_classes(&char_pair(&m.a));
            report(m, &classes, None)
        }
    }
}

fn report<T: Scalar>(
    m: &Affine<T>,
    classes: &[ModulusClass],
    orientation: Option<Sign>,
) -> WitnessReport {
    let fix = fixed_point_set(m);
    let fixed_count_class = match &fix {
        FixedPointSet::Empty => FixedCountClass::Zero,
        FixedPointSet::UniquePoint(_) => FixedCountClass::One,
        FixedPointSet::Coset { .. } | FixedPointSet::All => FixedCountClass::Infinite,
    };
    let contracting = classes
        .iter()
        .all(|c| matches!(c, ModulusClass::Zero | ModulusClass::InOpenUnit));
    WitnessReport {
        fixed_count_class,
        bijective: !m.a.det().is_zero(),
        orientation,
        has_period_two_orbit: period_two_beyond_fixed(m, &fix),
        contracting,
    }
}

fn set_dim<T>(s: &FixedPointSet<T>, n: usize) -> Option<usize> {
    match s {
        FixedPointSet::Empty => None,
        FixedPointSet::UniquePoint(_) => Some(0),
        FixedPointSet::Coset { basis, .. } => Some(basis.len()),
        FixedPointSet::All => Some(n),
    }
}

/// solves f(f(x)) = x exactly and asks whether the solution set is
/// strictly larger than the fixed set. both are affine subspaces with the
/// fixed set contained in the other, so strict containment is a dimension
/// comparison. a fixed-point-free map has no period-two points at all:
/// the midpoint of x and f(x) would be fixed.
fn period_two_beyond_fixed<T: Scalar>(m: &Affine<T>, fix: &FixedPointSet<T>) -> bool {
    let n = m.dim();
    let ff = m.compose(m);
    let per2 = solve_affine_system(&ff.a, &ff.b);
    match (set_dim(fix, n), set_dim(&per2, n)) {
        (None, p2) => {
            debug_assert!(p2.is_none(), "period-two points imply a fixed point");
            false
        }
        (Some(df), Some(dp)) => dp > df,
        (Some(_), None) => unreachable!("fixed points satisfy f(f(x)) = x"),
    }
}
