//! fixed-point analysis, complete conjugacy signatures, pairwise
//! verdicts, canonical class representatives, and independent
//! topological-invariant reports for exact affine maps.

pub mod verdict;
pub mod witness;

use num_traits::Zero;
use thiserror::Error;

use crate::numeric::gaussian::{gauss, gauss_i64};
use crate::numeric::linalg::{solve_affine_system, Scalar};
use crate::numeric::{rat, rat_i64, ColVector, GaussianRational, Rational, SqMatrix};
use crate::spectral::{
    complex_block_signature, real_block_signature, BlockSignature, ComplexUnitBlock,
    RealUnitBlock, Sign,
};

pub use crate::numeric::linalg::SolutionSet;
pub use verdict::{conjugate, Verdict, Warning, WarningCode};
pub use witness::{invariant_witnesses, FixedCountClass, WitnessReport};

/// exact solution set of f(x) = x.
pub type FixedPointSet<T> = SolutionSet<T>;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum ClassifyError {
    #[error("unsupported dimension {0}: only dimensions 1 and 2 are classified")]
    UnsupportedDimension(usize),
    #[error("cannot compare a map on {0} with a map on {1}")]
    FieldOrDimensionMismatch(String, String),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn symbol(self) -> &'static str {
        match self {
            Field::Real => "R",
            Field::Complex => "C",
        }
    }
}

/// the map x -> Ax + b with exact entries, over any scalar type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Affine<T> {
    pub a: SqMatrix<T>,
    pub b: ColVector<T>,
}

impl<T: Scalar> Affine<T> {
    pub fn new(a: SqMatrix<T>, b: ColVector<T>) -> Self {
        assert_eq!(a.n(), b.dim(), "dimension mismatch");
        Affine { a, b }
    }

    pub fn linear(a: SqMatrix<T>) -> Self {
        let n = a.n();
        Affine { a, b: ColVector::zero(n) }
    }

    pub fn dim(&self) -> usize {
        self.a.n()
    }

    pub fn apply(&self, x: &ColVector<T>) -> ColVector<T> {
        self.a.mul_vec(x).add_vec(&self.b)
    }

    /// the composite self after inner, x -> self(inner(x)).
    pub fn compose(&self, inner: &Self) -> Self {
        Affine {
            a: self.a.mul_mat(&inner.a),
            b: self.a.mul_vec(&inner.b).add_vec(&self.b),
        }
    }

    /// inverse map x -> A^{-1}(x - b), when the linear part is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let a_inv = self.a.inverse()?;
        let b = a_inv.mul_vec(&self.b).neg_vec();
        Some(Affine { a: a_inv, b })
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.b.is_zero_vec()
    }
}

/// an affine map tagged with its scalar field; construction enforces the
/// supported dimensions 1 and 2.
#[derive(Clone, PartialEq, Debug)]
pub enum AffineMap {
    Real(Affine<Rational>),
    Complex(Affine<GaussianRational>),
}

fn check_dim(n: usize) -> Result<(), ClassifyError> {
    if n == 1 || n == 2 {
        Ok(())
    } else {
        Err(ClassifyError::UnsupportedDimension(n))
    }
}

impl AffineMap {
    pub fn real(a: SqMatrix<Rational>, b: ColVector<Rational>) -> Result<Self, ClassifyError> {
        check_dim(a.n())?;
        Ok(AffineMap::Real(Affine::new(a, b)))
    }

    pub fn complex(
        a: SqMatrix<GaussianRational>,
        b: ColVector<GaussianRational>,
    ) -> Result<Self, ClassifyError> {
        check_dim(a.n())?;
        Ok(AffineMap::Complex(Affine::new(a, b)))
    }

    pub fn field(&self) -> Field {
        match self {
            AffineMap::Real(_) => Field::Real,
            AffineMap::Complex(_) => Field::Complex,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AffineMap::Real(m) => m.dim(),
            AffineMap::Complex(m) => m.dim(),
        }
    }

    /// "R^2", "C^1": the space the map acts on, for error messages.
    pub fn space_label(&self) -> String {
        format!("{}^{}", self.field().symbol(), self.dim())
    }
}

pub fn fixed_point_set<T: Scalar>(f: &Affine<T>) -> FixedPointSet<T> {
    solve_affine_system(&f.a, &f.b)
}

/// complete topological-conjugacy invariant of an affine map. two maps
/// over the same field and dimension are conjugate exactly when their
/// signatures are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ConjugacySignature {
    HasFixedPoint {
        field: Field,
        dim: usize,
        blocks: BlockSignature,
        /// true exactly for the identity map; determined by the other
        /// fields but kept explicit for consumers.
        identity: bool,
    },
    NoFixedPoint {
        field: Field,
        dim: usize,
        /// whether the linear part is singular; always false in
        /// dimension 1, where fixed-point freeness forces a = 1.
        singular: bool,
    },
}

impl ConjugacySignature {
    pub fn field(&self) -> Field {
        match self {
            ConjugacySignature::HasFixedPoint { field, .. } => *field,
            ConjugacySignature::NoFixedPoint { field, .. } => *field,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ConjugacySignature::HasFixedPoint { dim, .. } => *dim,
            ConjugacySignature::NoFixedPoint { dim, .. } => *dim,
        }
    }
}

fn has_eigenvalue_one<T: Scalar>(a: &SqMatrix<T>) -> bool {
    a.sub_mat(&SqMatrix::identity(a.n())).det().is_zero()
}

pub fn signature(f: &AffineMap) -> ConjugacySignature {
    match f {
        AffineMap::Real(m) => match fixed_point_set(m) {
            SolutionSet::Empty => {
                debug_assert!(has_eigenvalue_one(&m.a));
                ConjugacySignature::NoFixedPoint {
                    field: Field::Real,
                    dim: m.dim(),
                    singular: m.a.det().is_zero(),
                }
            }
            fix => ConjugacySignature::HasFixedPoint {
                field: Field::Real,
                dim: m.dim(),
                blocks: BlockSignature::Real(real_block_signature(&m.a)),
                identity: matches!(fix, SolutionSet::All),
            },
        },
        AffineMap::Complex(m) => match fixed_point_set(m) {
            SolutionSet::Empty => {
                debug_assert!(has_eigenvalue_one(&m.a));
                ConjugacySignature::NoFixedPoint {
                    field: Field::Complex,
                    dim: m.dim(),
                    singular: m.a.det().is_zero(),
                }
            }
            fix => ConjugacySignature::HasFixedPoint {
                field: Field::Complex,
                dim: m.dim(),
                blocks: BlockSignature::Complex(complex_block_signature(&m.a)),
                identity: matches!(fix, SolutionSet::All),
            },
        },
    }
}

enum Atom<T> {
    Entry(T),
    Block(SqMatrix<T>),
}

impl<T: Scalar> Atom<T> {
    fn size(&self) -> usize {
        match self {
            Atom::Entry(_) => 1,
            Atom::Block(_) => 2,
        }
    }
}

fn assemble<T: Scalar>(atoms: Vec<Atom<T>>, dim: usize) -> SqMatrix<T> {
    let total: usize = atoms.iter().map(Atom::size).sum();
    assert_eq!(total, dim, "block sizes must fill the dimension");
    match atoms.len() {
        1 => match atoms.into_iter().next().unwrap() {
            Atom::Entry(x) => SqMatrix::from_rows(vec![vec![x]]),
            Atom::Block(m) => m,
        },
        2 => {
            let mut it = atoms.into_iter();
            let (Atom::Entry(x), Atom::Entry(y)) = (it.next().unwrap(), it.next().unwrap())
            else {
                unreachable!("two atoms in dimension 2 are single entries");
            };
            SqMatrix::from_rows(vec![vec![x, T::zero()], vec![T::zero(), y]])
        }
        _ => unreachable!("at most two atoms in dimension 2"),
    }
}

fn signed_entry(magnitude: Rational, sign: Sign) -> Rational {
    match sign {
        Sign::Positive => magnitude,
        Sign::Negative => -magnitude,
    }
}

/// eigenvalue atoms realizing a given rank and determinant sign with the
/// fixed magnitude: one entry carries the sign, any second entry is
/// positive.
fn real_part_atoms(
    rank: usize,
    det_sign: Option<Sign>,
    magnitude: Rational,
) -> Vec<Atom<Rational>> {
    match (rank, det_sign) {
        (0, None) => vec![],
        (1, Some(s)) => vec![Atom::Entry(signed_entry(magnitude, s))],
        (2, Some(s)) => vec![
            Atom::Entry(magnitude.clone()),
            Atom::Entry(signed_entry(magnitude, s)),
        ],
        _ => unreachable!("determinant sign present iff rank positive"),
    }
}

fn nilpotent_atoms<T: Scalar>(blocks: &[u8]) -> Vec<Atom<T>> {
    match blocks {
        [] => vec![],
        [1] => vec![Atom::Entry(T::zero())],
        [1, 1] => vec![Atom::Entry(T::zero()), Atom::Entry(T::zero())],
        [2] => vec![Atom::Block(SqMatrix::from_rows(vec![
            vec![T::zero(), T::one()],
            vec![T::zero(), T::zero()],
        ]))],
        other => unreachable!("no nilpotent structure {other:?} in dimension 2"),
    }
}

fn real_unit_atom(block: &RealUnitBlock) -> Atom<Rational> {
    match block {
        RealUnitBlock::One => Atom::Entry(rat_i64(1)),
        RealUnitBlock::MinusOne => Atom::Entry(rat_i64(-1)),
        RealUnitBlock::Jordan2One => Atom::Block(SqMatrix::from_rows(vec![
            vec![rat_i64(1), rat_i64(1)],
            vec![rat_i64(0), rat_i64(1)],
        ])),
        RealUnitBlock::Jordan2MinusOne => Atom::Block(SqMatrix::from_rows(vec![
            vec![rat_i64(-1), rat_i64(1)],
            vec![rat_i64(0), rat_i64(-1)],
        ])),
        // companion matrix of x^2 - 2cos x + 1
        RealUnitBlock::Rotation { cos } => Atom::Block(SqMatrix::from_rows(vec![
            vec![rat_i64(0), rat_i64(-1)],
            vec![rat_i64(1), cos * rat_i64(2)],
        ])),
    }
}

fn complex_unit_atom(block: &ComplexUnitBlock) -> Atom<GaussianRational> {
    match block {
        ComplexUnitBlock::Single { lambda } => Atom::Entry(lambda.clone()),
        ComplexUnitBlock::Jordan2 { lambda } => Atom::Block(SqMatrix::from_rows(vec![
            vec![lambda.clone(), gauss_i64(1, 0)],
            vec![gauss_i64(0, 0), lambda.clone()],
        ])),
        // companion matrix of x^2 - trace x + det
        ComplexUnitBlock::IrreduciblePair { trace, det } => {
            Atom::Block(SqMatrix::from_rows(vec![
                vec![gauss_i64(0, 0), -det.clone()],
                vec![gauss_i64(1, 0), trace.clone()],
            ]))
        }
    }
}

/// one fixed map per conjugacy class: contracting eigenvalues are placed
/// at +-1/2 and expanding ones at +-2, unit blocks keep their canonical
/// data, the translation part is zero whenever a fixed point exists, and
/// the fixed-point-free classes use the normal forms x + 1, x + e2, and
/// diag(1,0)x + e1.
pub fn canonical_representative(s: &ConjugacySignature) -> AffineMap {
    match s {
        ConjugacySignature::NoFixedPoint { field, dim, singular } => {
            debug_assert!(!(*dim == 1 && *singular));
            match field {
                Field::Real => {
                    let (a, b) = no_fixed_point_form(*dim, *singular, rat_i64(0), rat_i64(1));
                    AffineMap::real(a, b).unwrap()
                }
                Field::Complex => {
                    let (a, b) =
                        no_fixed_point_form(*dim, *singular, gauss_i64(0, 0), gauss_i64(1, 0));
                    AffineMap::complex(a, b).unwrap()
                }
            }
        }
        ConjugacySignature::HasFixedPoint { dim, blocks, .. } => match blocks {
            BlockSignature::Real(rs) => {
                let mut atoms = real_part_atoms(rs.rank_plus, rs.det_sign_plus, rat(1, 2));
                atoms.extend(real_part_atoms(rs.rank_minus, rs.det_sign_minus, rat_i64(2)));
                atoms.extend(nilpotent_atoms(&rs.nilpotent_blocks));
                atoms.extend(rs.unit_blocks.iter().map(real_unit_atom));
                let a = assemble(atoms, *dim);
                let b = ColVector::zero(*dim);
                AffineMap::real(a, b).unwrap()
            }
            BlockSignature::Complex(cs) => {
                let half = gauss(rat(1, 2), rat_i64(0));
                let two = gauss_i64(2, 0);
                let mut atoms: Vec<Atom<GaussianRational>> =
                    std::iter::repeat_n(half, cs.rank_plus).map(Atom::Entry).collect();
                atoms.extend(std::iter::repeat_n(two, cs.rank_minus).map(Atom::Entry));
                atoms.extend(nilpotent_atoms(&cs.nilpotent_blocks));
                atoms.extend(cs.unit_blocks.iter().map(complex_unit_atom));
                let a = assemble(atoms, *dim);
                let b = ColVector::zero(*dim);
                AffineMap::complex(a, b).unwrap()
            }
        },
    }
}

fn no_fixed_point_form<T: Scalar>(
    dim: usize,
    singular: bool,
    zero: T,
    one: T,
) -> (SqMatrix<T>, ColVector<T>) {
    match (dim, singular) {
        (1, false) => (
            SqMatrix::from_rows(vec![vec![one.clone()]]),
            ColVector::new(vec![one]),
        ),
        (2, false) => (
            SqMatrix::identity(2),
            ColVector::new(vec![zero, one]),
        ),
        (2, true) => (
            SqMatrix::from_rows(vec![
                vec![one.clone(), zero.clone()],
                vec![zero.clone(), zero.clone()],
            ]),
            ColVector::new(vec![one, zero]),
        ),
        _ => unreachable!("fixed-point-free forms exist in dimensions 1 and 2 only"),
    }
}
