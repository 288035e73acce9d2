//! the pairwise conjugacy verdict: signature comparison, the
//! distinguishing invariant when the answer is no, and the orientation
//! warning attached to the one class where the decision rule and the
//! orientation invariant disagree.

use num_traits::Signed;

use super::{signature, AffineMap, ClassifyError, ConjugacySignature, Field};
use crate::spectral::{BlockSignature, ComplexBlockSignature, RealBlockSignature};

/// machine-readable warning codes for the wire format.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WarningCode {
    OrientationMismatch,
    SynthUnsupported,
}

impl WarningCode {
    pub fn as_str(self) -> &'static str {
        match self {
            WarningCode::OrientationMismatch => "ORIENTATION_MISMATCH",
            WarningCode::SynthUnsupported => "SYNTH_UNSUPPORTED",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Warning {
    pub code: WarningCode,
    pub message: String,
}

/// outcome of a pairwise comparison. `basis` is the stable label of the
/// decision rule that applies to the pair's field and dimension, for
/// scripting against the wire format.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub conjugate: bool,
    pub basis: &'static str,
    pub distinguishing_invariant: Option<String>,
    pub warnings: Vec<Warning>,
}

impl Verdict {
    fn yes(basis: &'static str) -> Self {
        Verdict { conjugate: true, basis, distinguishing_invariant: None, warnings: vec![] }
    }

    fn no(basis: &'static str, invariant: String) -> Self {
        Verdict {
            conjugate: false,
            basis,
            distinguishing_invariant: Some(invariant),
            warnings: vec![],
        }
    }
}

fn basis_tag(field: Field, dim: usize) -> &'static str {
    match (field, dim) {
        (Field::Real, 1) => "Prop3.2",
        (Field::Real, 2) => "Thm3.5",
        (Field::Complex, 1) => "Thm4.2",
        (Field::Complex, 2) => "Thm4.5",
        _ => unreachable!("dimensions restricted at construction"),
    }
}

pub fn conjugate(f: &AffineMap, g: &AffineMap) -> Result<Verdict, ClassifyError> {
    if f.field() != g.field() || f.dim() != g.dim() {
        return Err(ClassifyError::FieldOrDimensionMismatch(
            f.space_label(),
            g.space_label(),
        ));
    }
    let basis = basis_tag(f.field(), f.dim());
    let sf = signature(f);
    let sg = signature(g);
    use ConjugacySignature::{HasFixedPoint, NoFixedPoint};
    let verdict = match (&sf, &sg) {
        (HasFixedPoint { blocks: bf, .. }, HasFixedPoint { blocks: bg, .. }) => {
            if bf == bg {
                Verdict::yes(basis)
            } else {
                Verdict::no(basis, block_difference(bf, bg))
            }
        }
        (HasFixedPoint { .. }, NoFixedPoint { .. }) => {
            Verdict::no(basis, "the first map has a fixed point and the second does not".into())
        }
        (NoFixedPoint { .. }, HasFixedPoint { .. }) => {
            Verdict::no(basis, "the second map has a fixed point and the first does not".into())
        }
        (NoFixedPoint { singular: s1, dim, .. }, NoFixedPoint { singular: s2, .. }) => {
            if dim == &1 || s1 == s2 {
                let mut v = Verdict::yes(basis);
                attach_orientation_warning(&mut v, f, g, *s1);
                v
            } else {
                Verdict::no(
                    basis,
                    "linear-part determinants are not simultaneously zero".into(),
                )
            }
        }
    };
    Ok(verdict)
}

/// for real planar fixed-point-free bijections the decision rule ignores
/// the determinant sign, yet orientation type is preserved by topological
/// conjugacy of affine bijections; when the signs disagree the verdict is
/// reported unchanged with this warning attached.
fn attach_orientation_warning(v: &mut Verdict, f: &AffineMap, g: &AffineMap, singular: bool) {
    if singular || f.dim() != 2 {
        return;
    }
    let (AffineMap::Real(mf), AffineMap::Real(mg)) = (f, g) else {
        return;
    };
    let (df, dg) = (mf.a.det(), mg.a.det());
    if df.is_positive() == dg.is_positive() {
        return;
    }
    let label = |positive: bool| if positive { "+1" } else { "-1" };
    v.warnings.push(Warning {
        code: WarningCode::OrientationMismatch,
        message: format!(
            "determinant signs {} and {} disagree: orientation type separates these maps \
             even though the fixed-point-free classification calls them conjugate",
            label(df.is_positive()),
            label(dg.is_positive()),
        ),
    });
}

fn block_difference(bf: &BlockSignature, bg: &BlockSignature) -> String {
    match (bf, bg) {
        (BlockSignature::Real(x), BlockSignature::Real(y)) => real_difference(x, y),
        (BlockSignature::Complex(x), BlockSignature::Complex(y)) => complex_difference(x, y),
        _ => unreachable!("fields already checked equal"),
    }
}

fn real_difference(x: &RealBlockSignature, y: &RealBlockSignature) -> String {
    if x.rank_plus != y.rank_plus {
        format!("contracting parts have ranks {} and {}", x.rank_plus, y.rank_plus)
    } else if x.det_sign_plus != y.det_sign_plus {
        "determinant signs of the contracting parts differ".into()
    } else if x.rank_minus != y.rank_minus {
        format!("expanding parts have ranks {} and {}", x.rank_minus, y.rank_minus)
    } else if x.det_sign_minus != y.det_sign_minus {
        "determinant signs of the expanding parts differ".into()
    } else if x.nilpotent_blocks != y.nilpotent_blocks {
        format!(
            "block sizes at eigenvalue 0 differ: {:?} and {:?}",
            x.nilpotent_blocks, y.nilpotent_blocks
        )
    } else {
        debug_assert_ne!(x.unit_blocks, y.unit_blocks);
        "unit-modulus block structures differ".into()
    }
}

fn complex_difference(x: &ComplexBlockSignature, y: &ComplexBlockSignature) -> String {
    if x.rank_plus != y.rank_plus {
        format!("contracting parts have ranks {} and {}", x.rank_plus, y.rank_plus)
    } else if x.rank_minus != y.rank_minus {
        format!("expanding parts have ranks {} and {}", x.rank_minus, y.rank_minus)
    } else if x.nilpotent_blocks != y.nilpotent_blocks {
        format!(
            "block sizes at eigenvalue 0 differ: {:?} and {:?}",
            x.nilpotent_blocks, y.nilpotent_blocks
        )
    } else {
        debug_assert_ne!(x.unit_blocks, y.unit_blocks);
        "unit-modulus block structures differ".into()
    }
}
