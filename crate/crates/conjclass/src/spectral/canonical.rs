//! canonical forms under similarity, with exact transforms: the real
//! canonical form (diagonal, jordan, or rotation-scaling block) over the
//! needed quadratic extension, the complex jordan form, and the
//! realification embedding of complex matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::numeric::gaussian::{gaussian_sqrt, GaussianRational};
use crate::numeric::quadratic::QuadraticNumber;
use crate::numeric::{rat_i64, rational_sqrt, ColVector, Rational, SqMatrix};

use super::{char_pair, EigenPair};

/// structural real canonical form of a 1x1 or 2x2 real matrix. rotation
/// blocks [[re, -im], [im, re]] keep the sine positive; diagonal entries
/// are ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RealForm {
    Scalar(Rational),
    Diagonal(Rational, Rational),
    /// [[lambda, 1], [0, lambda]]
    Jordan(Rational),
    /// [[re, -im], [im, re]] with im = sqrt(im_sq) > 0
    Rotation { re: Rational, im_sq: Rational },
    /// diag(p - q*sqrt(d), p + q*sqrt(d)) with q > 0
    SurdDiagonal { minus: QuadraticNumber, plus: QuadraticNumber },
}

#[derive(Clone, Debug)]
pub struct RealCanonicalForm {
    pub form: RealForm,
    /// s with s * a * s^-1 = form, over the quadratic extension that
    /// contains the eigenvalues
    pub transform: SqMatrix<QuadraticNumber>,
    pub transform_inv: SqMatrix<QuadraticNumber>,
}

impl RealForm {
    /// the form as an exact matrix over its quadratic extension.
    pub fn as_matrix(&self) -> SqMatrix<QuadraticNumber> {
        let q = |r: &Rational| QuadraticNumber::from_rational(r.clone());
        match self {
            RealForm::Scalar(a) => SqMatrix::from_rows(vec![vec![q(a)]]),
            RealForm::Diagonal(l1, l2) => SqMatrix::from_rows(vec![
                vec![q(l1), QuadraticNumber::zero()],
                vec![QuadraticNumber::zero(), q(l2)],
            ]),
            RealForm::Jordan(l) => SqMatrix::from_rows(vec![
                vec![q(l), QuadraticNumber::one()],
                vec![QuadraticNumber::zero(), q(l)],
            ]),
            RealForm::Rotation { re, im_sq } => {
                let im = sqrt_of_positive_rational(im_sq);
                SqMatrix::from_rows(vec![
                    vec![q(re), -im.clone()],
                    vec![im, q(re)],
                ])
            }
            RealForm::SurdDiagonal { minus, plus } => SqMatrix::from_rows(vec![
                vec![minus.clone(), QuadraticNumber::zero()],
                vec![QuadraticNumber::zero(), plus.clone()],
            ]),
        }
    }
}

/// sqrt of a positive rational as a quadratic number: for num/den the
/// root is sqrt(num*den)/den.
fn sqrt_of_positive_rational(r: &Rational) -> QuadraticNumber {
    assert!(r.is_positive());
    let radicand = r.numer() * r.denom();
    QuadraticNumber::new(
        Rational::zero(),
        Rational::new(BigInt::one(), r.denom().clone()),
        radicand,
    )
}

fn lift_matrix(a: &SqMatrix<Rational>) -> SqMatrix<QuadraticNumber> {
    a.map(|e| QuadraticNumber::from_rational(e.clone()))
}

/// first column of m that is not identically zero.
fn nonzero_column<T: crate::numeric::linalg::Scalar>(m: &SqMatrix<T>) -> ColVector<T> {
    let n = m.n();
    for j in 0..n {
        let col: Vec<T> = (0..n).map(|i| m[(i, j)].clone()).collect();
        if col.iter().any(|e| !e.is_zero()) {
            return ColVector::new(col);
        }
    }
    panic!("zero matrix has no nonzero column");
}

fn columns_to_matrix<T: crate::numeric::linalg::Scalar>(cols: Vec<ColVector<T>>) -> SqMatrix<T> {
    let n = cols.len();
    SqMatrix::from_rows(
        (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect(),
    )
}

/// real canonical form with an exact similarity transform. the identity
/// transform is returned whenever the input already is its own form.
pub fn real_canonical_form(a: &SqMatrix<Rational>) -> RealCanonicalForm {
    let pair = char_pair(a);
    let (form, basis) = real_form_and_basis(a, &pair);
    let identity = SqMatrix::identity(a.n());
    let (transform, transform_inv) = match basis {
        None => (identity.clone(), identity),
        Some(p) => {
            let p_inv = p.inverse().expect("eigenbasis is invertible");
            // s = p^-1 so that s a s^-1 = form
            (p_inv, p)
        }
    };
    RealCanonicalForm { form, transform, transform_inv }
}

/// returns the form and, unless the matrix already equals it, the basis
/// matrix p whose columns are the (generalized) eigenvectors, so that
/// p^-1 a p = form.
fn real_form_and_basis(
    a: &SqMatrix<Rational>,
    pair: &EigenPair<Rational>,
) -> (RealForm, Option<SqMatrix<QuadraticNumber>>) {
    if pair.n == 1 {
        return (RealForm::Scalar(pair.trace.clone()), None);
    }
    let half = |x: &Rational| x / rat_i64(2);
    if pair.disc.is_zero() {
        let lambda = half(&pair.trace);
        let scalar = SqMatrix::identity(2).scale(&lambda);
        if a == &scalar {
            return (RealForm::Diagonal(lambda.clone(), lambda), None);
        }
        let form = RealForm::Jordan(lambda.clone());
        if lift_matrix(a) == form.as_matrix() {
            return (form, None);
        }
        // nilpotent chain: u = (a - lambda)v != 0, basis (u, v)
        let n = a.sub_mat(&scalar);
        let v = if !n[(0, 0)].is_zero() || !n[(1, 0)].is_zero() {
            ColVector::new(vec![Rational::one(), Rational::zero()])
        } else {
            ColVector::new(vec![Rational::zero(), Rational::one()])
        };
        let u = n.mul_vec(&v);
        let p = columns_to_matrix(vec![u, v]);
        return (form, Some(lift_matrix(&p)));
    }
    if pair.disc.is_positive() {
        if let Some(root) = rational_sqrt(&pair.disc) {
            // distinct rational eigenvalues, ascending
            let l1 = half(&(&pair.trace - &root));
            let l2 = half(&(&pair.trace + &root));
            let form = RealForm::Diagonal(l1.clone(), l2.clone());
            if lift_matrix(a) == form.as_matrix() {
                return (form, None);
            }
            let e = SqMatrix::identity(2);
            let v1 = nonzero_column(&a.sub_mat(&e.scale(&l2)));
            let v2 = nonzero_column(&a.sub_mat(&e.scale(&l1)));
            let p = columns_to_matrix(vec![v1, v2]);
            return (form, Some(lift_matrix(&p)));
        }
        // irrational real eigenvalues p +- q*sqrt(d)
        let surd = sqrt_of_positive_rational(&(&pair.disc / rat_i64(4)));
        let p_part = QuadraticNumber::from_rational(half(&pair.trace));
        let plus = p_part.clone() + surd.clone();
        let minus = p_part - surd;
        let form = RealForm::SurdDiagonal { minus: minus.clone(), plus: plus.clone() };
        let lifted = lift_matrix(a);
        let sub_scalar = |l: &QuadraticNumber| {
            lifted.sub_mat(&SqMatrix::identity(2).scale(l))
        };
        let v1 = nonzero_column(&sub_scalar(&plus));
        let v2 = nonzero_column(&sub_scalar(&minus));
        let p = columns_to_matrix(vec![v1, v2]);
        return (form, Some(p));
    }
    // disc < 0: rotation-scaling block for lambda = re +- i*im
    let re = half(&pair.trace);
    let im_sq = &pair.det - &re * &re;
    let form = RealForm::Rotation { re: re.clone(), im_sq: im_sq.clone() };
    if lift_matrix(a) == form.as_matrix() {
        return (form, None);
    }
    // disc < 0 forces the off-diagonal entry b != 0; the complex
    // eigenvector (b, lambda - a11) splits into real part u and imaginary
    // part w, and the basis (u, -w) realizes [[re, -im], [im, re]]
    let b = &a[(0, 1)];
    debug_assert!(!b.is_zero());
    let im = sqrt_of_positive_rational(&im_sq);
    let u = ColVector::new(vec![
        QuadraticNumber::from_rational(b.clone()),
        QuadraticNumber::from_rational(&re - &a[(0, 0)]),
    ]);
    let minus_w = ColVector::new(vec![QuadraticNumber::zero(), -im]);
    let p = columns_to_matrix(vec![u, minus_w]);
    (form, Some(p))
}

/// structural jordan form of a 1x1 or 2x2 complex matrix. when the
/// eigenvalues are not gaussian rational the form keeps the exact
/// characteristic data instead of explicit entries and no transform is
/// produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComplexForm {
    Scalar(GaussianRational),
    /// ascending in (re, im) lexicographic order
    Diagonal(GaussianRational, GaussianRational),
    /// [[lambda, 1], [0, lambda]]
    Jordan(GaussianRational),
    /// distinct roots of x^2 - trace*x + det, irreducible over the
    /// gaussian rationals
    IrreducibleDiagonal { trace: GaussianRational, det: GaussianRational },
}

#[derive(Clone, Debug)]
pub struct ComplexJordanForm {
    pub form: ComplexForm,
    pub transform: Option<SqMatrix<GaussianRational>>,
    pub transform_inv: Option<SqMatrix<GaussianRational>>,
}

impl ComplexForm {
    /// explicit matrix when the eigenvalues are gaussian rational.
    pub fn as_matrix(&self) -> Option<SqMatrix<GaussianRational>> {
        match self {
            ComplexForm::Scalar(a) => Some(SqMatrix::from_rows(vec![vec![a.clone()]])),
            ComplexForm::Diagonal(l1, l2) => Some(SqMatrix::from_rows(vec![
                vec![l1.clone(), GaussianRational::zero()],
                vec![GaussianRational::zero(), l2.clone()],
            ])),
            ComplexForm::Jordan(l) => Some(SqMatrix::from_rows(vec![
                vec![l.clone(), GaussianRational::one()],
                vec![GaussianRational::zero(), l.clone()],
            ])),
            ComplexForm::IrreducibleDiagonal { .. } => None,
        }
    }
}

fn gaussian_lex_le(a: &GaussianRational, b: &GaussianRational) -> bool {
    (a.re.clone(), a.im.clone()) <= (b.re.clone(), b.im.clone())
}

pub fn jordan_form(a: &SqMatrix<GaussianRational>) -> ComplexJordanForm {
    let pair = char_pair(a);
    let (form, basis) = complex_form_and_basis(a, &pair);
    let (transform, transform_inv) = match basis {
        None => {
            if matches!(form, ComplexForm::IrreducibleDiagonal { .. }) {
                (None, None)
            } else {
                let e = SqMatrix::identity(a.n());
                (Some(e.clone()), Some(e))
            }
        }
        Some(p) => {
            let p_inv = p.inverse().expect("eigenbasis is invertible");
            (Some(p_inv), Some(p))
        }
    };
    ComplexJordanForm { form, transform, transform_inv }
}

fn complex_form_and_basis(
    a: &SqMatrix<GaussianRational>,
    pair: &EigenPair<GaussianRational>,
) -> (ComplexForm, Option<SqMatrix<GaussianRational>>) {
    if pair.n == 1 {
        return (ComplexForm::Scalar(pair.trace.clone()), None);
    }
    let two = GaussianRational::new(rat_i64(2), Rational::zero());
    if pair.disc.is_zero() {
        let lambda = pair.trace.clone() / two;
        let scalar = SqMatrix::identity(2).scale(&lambda);
        if a == &scalar {
            return (ComplexForm::Diagonal(lambda.clone(), lambda), None);
        }
        let form = ComplexForm::Jordan(lambda.clone());
        if Some(a.clone()) == form.as_matrix() {
            return (form, None);
        }
        let n = a.sub_mat(&scalar);
        let v = if !n[(0, 0)].is_zero() || !n[(1, 0)].is_zero() {
            ColVector::new(vec![GaussianRational::one(), GaussianRational::zero()])
        } else {
            ColVector::new(vec![GaussianRational::zero(), GaussianRational::one()])
        };
        let u = n.mul_vec(&v);
        return (form, Some(columns_to_matrix(vec![u, v])));
    }
    match gaussian_sqrt(&pair.disc) {
        Some(s) => {
            let r1 = (pair.trace.clone() + s.clone()) / two.clone();
            let r2 = (pair.trace.clone() - s) / two;
            let (l1, l2) = if gaussian_lex_le(&r1, &r2) { (r1, r2) } else { (r2, r1) };
            let form = ComplexForm::Diagonal(l1.clone(), l2.clone());
            if Some(a.clone()) == form.as_matrix() {
                return (form, None);
            }
            let e = SqMatrix::identity(2);
            let v1 = nonzero_column(&a.sub_mat(&e.scale(&l2)));
            let v2 = nonzero_column(&a.sub_mat(&e.scale(&l1)));
            (form, Some(columns_to_matrix(vec![v1, v2])))
        }
        None => (
            ComplexForm::IrreducibleDiagonal {
                trace: pair.trace.clone(),
                det: pair.det.clone(),
            },
            None,
        ),
    }
}

/// realification: each entry u + vi becomes the 2x2 block
/// [[u, -v], [v, u]], so a complex n x n matrix becomes a real 2n x 2n
/// matrix acting on interleaved (re, im) coordinates.
pub fn realify(a: &SqMatrix<GaussianRational>) -> SqMatrix<Rational> {
    let n = a.n();
    let mut out = SqMatrix::zero(2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = &a[(i, j)];
            out[(2 * i, 2 * j)] = z.re.clone();
            out[(2 * i, 2 * j + 1)] = -z.im.clone();
            out[(2 * i + 1, 2 * j)] = z.im.clone();
            out[(2 * i + 1, 2 * j + 1)] = z.re.clone();
        }
    }
    out
}

pub fn realify_vec(v: &ColVector<GaussianRational>) -> ColVector<Rational> {
    let mut out = Vec::with_capacity(2 * v.dim());
    for i in 0..v.dim() {
        out.push(v[i].re.clone());
        out.push(v[i].im.clone());
    }
    ColVector::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::gaussian::gauss_i64;
    use crate::numeric::rat;

    fn rmat(rows: &[&[i64]]) -> SqMatrix<Rational> {
        SqMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_i64(x)).collect()).collect())
    }

    fn check_real_similarity(a: &SqMatrix<Rational>, rcf: &RealCanonicalForm) {
        let lifted = lift_matrix(a);
        let product = rcf.transform.mul_mat(&lifted).mul_mat(&rcf.transform_inv);
        assert_eq!(product, rcf.form.as_matrix(), "transform must realize the form exactly");
        assert!(rcf.transform.mul_mat(&rcf.transform_inv).is_identity());
    }

    #[test]
    fn rotation_matrix_is_already_canonical() {
        let a = rmat(&[&[0, -1], &[1, 0]]);
        let rcf = real_canonical_form(&a);
        assert_eq!(
            rcf.form,
            RealForm::Rotation { re: rat_i64(0), im_sq: rat_i64(1) }
        );
        assert!(rcf.transform.is_identity());
        check_real_similarity(&a, &rcf);
    }

    #[test]
    fn jordan_block_from_lower_triangular() {
        let a = rmat(&[&[2, 0], &[1, 2]]);
        let rcf = real_canonical_form(&a);
        assert_eq!(rcf.form, RealForm::Jordan(rat_i64(2)));
        check_real_similarity(&a, &rcf);
    }

    #[test]
    fn distinct_rational_eigenvalues_diagonalize_ascending() {
        let a = rmat(&[&[1, 2], &[0, 3]]);
        let rcf = real_canonical_form(&a);
        assert_eq!(rcf.form, RealForm::Diagonal(rat_i64(1), rat_i64(3)));
        check_real_similarity(&a, &rcf);
    }

    #[test]
    fn surd_eigenvalues_stay_exact() {
        // eigenvalues (3 +- sqrt(5))/2
        let a = rmat(&[&[2, 1], &[1, 1]]);
        let rcf = real_canonical_form(&a);
        let RealForm::SurdDiagonal { minus, plus } = &rcf.form else {
            panic!("expected surd diagonal, got {:?}", rcf.form);
        };
        assert_eq!(plus.rational_part(), &rat(3, 2));
        assert_eq!(plus.surd_coefficient(), &rat(1, 2));
        assert_eq!(plus.radicand(), &BigInt::from(5));
        assert_eq!(minus.surd_coefficient(), &rat(-1, 2));
        check_real_similarity(&a, &rcf);
    }

    #[test]
    fn generic_rotation_scaling_block() {
        // trace 2, det 2: lambda = 1 +- i
        let a = rmat(&[&[0, -2], &[1, 2]]);
        let rcf = real_canonical_form(&a);
        assert_eq!(rcf.form, RealForm::Rotation { re: rat_i64(1), im_sq: rat_i64(1) });
        check_real_similarity(&a, &rcf);
    }

    #[test]
    fn scalar_matrices_map_to_themselves() {
        let a = rmat(&[&[3, 0], &[0, 3]]);
        let rcf = real_canonical_form(&a);
        assert_eq!(rcf.form, RealForm::Diagonal(rat_i64(3), rat_i64(3)));
        assert!(rcf.transform.is_identity());
        let one = SqMatrix::from_rows(vec![vec![rat(-1, 2)]]);
        assert_eq!(real_canonical_form(&one).form, RealForm::Scalar(rat(-1, 2)));
    }

    fn check_complex_similarity(a: &SqMatrix<GaussianRational>, jf: &ComplexJordanForm) {
        let (Some(s), Some(s_inv)) = (&jf.transform, &jf.transform_inv) else {
            panic!("expected explicit transform");
        };
        let product = s.mul_mat(a).mul_mat(s_inv);
        assert_eq!(Some(product), jf.form.as_matrix());
    }

    #[test]
    fn complex_diagonalization_with_gaussian_roots() {
        // eigenvalues i and 2i
        let a = SqMatrix::from_rows(vec![
            vec![gauss_i64(0, 1), gauss_i64(1, 0)],
            vec![gauss_i64(0, 0), gauss_i64(0, 2)],
        ]);
        let jf = jordan_form(&a);
        assert_eq!(jf.form, ComplexForm::Diagonal(gauss_i64(0, 1), gauss_i64(0, 2)));
        check_complex_similarity(&a, &jf);
    }

    #[test]
    fn complex_jordan_block_detected() {
        let lambda = gauss_i64(1, 1);
        let a = SqMatrix::from_rows(vec![
            vec![lambda.clone(), gauss_i64(0, 0)],
            vec![gauss_i64(1, 0), lambda.clone()],
        ]);
        let jf = jordan_form(&a);
        assert_eq!(jf.form, ComplexForm::Jordan(lambda));
        check_complex_similarity(&a, &jf);
    }

    #[test]
    fn irreducible_spectrum_keeps_characteristic_data() {
        // x^2 - ix - 1 is irreducible over the gaussian rationals
        let a = SqMatrix::from_rows(vec![
            vec![gauss_i64(0, 0), gauss_i64(1, 0)],
            vec![gauss_i64(1, 0), gauss_i64(0, 1)],
        ]);
        let jf = jordan_form(&a);
        assert_eq!(
            jf.form,
            ComplexForm::IrreducibleDiagonal { trace: gauss_i64(0, 1), det: gauss_i64(-1, 0) }
        );
        assert!(jf.transform.is_none());
    }

    #[test]
    fn realify_imaginary_unit() {
        let a = SqMatrix::from_rows(vec![vec![gauss_i64(0, 1)]]);
        assert_eq!(realify(&a), rmat(&[&[0, -1], &[1, 0]]));
        assert_eq!(realify(&a).det(), rat_i64(1));
    }

    #[test]
    fn realify_block_layout_for_two_by_two() {
        let a = SqMatrix::from_rows(vec![
            vec![gauss_i64(1, 2), gauss_i64(3, 4)],
            vec![gauss_i64(5, 6), gauss_i64(7, 8)],
        ]);
        let expected = rmat(&[
            &[1, -2, 3, -4],
            &[2, 1, 4, 3],
            &[5, -6, 7, -8],
            &[6, 5, 8, 7],
        ]);
        assert_eq!(realify(&a), expected);
    }

    #[test]
    fn realify_is_multiplicative() {
        let a = SqMatrix::from_rows(vec![
            vec![gauss_i64(1, 1), gauss_i64(0, 2)],
            vec![gauss_i64(-1, 0), gauss_i64(2, -1)],
        ]);
        let b = SqMatrix::from_rows(vec![
            vec![gauss_i64(0, 1), gauss_i64(1, 1)],
            vec![gauss_i64(3, 0), gauss_i64(0, -2)],
        ]);
        assert_eq!(realify(&a.mul_mat(&b)), realify(&a).mul_mat(&realify(&b)));
    }
}
