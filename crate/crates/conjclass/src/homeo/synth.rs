//! synthesis of conjugating chains for the classes whose conjugacy has a
//! constructive proof: everything in one real dimension, translations
//! over any field and dimension, fixed-point-free planar maps (bijective
//! with positive second eigenvalue, or singular), and complex
//! one-dimensional maps reduced through their fixed points. all other
//! conjugate pairs get a verdict without a witness.

use num_traits::{One, Signed, Zero};

use super::{
    Direction, ExactMatrix, ExactVector, Exponent, HomeoError, Homeomorphism, PrimitiveMap,
};
use crate::classify::{
    conjugate, fixed_point_set, signature, Affine, AffineMap, ConjugacySignature, Field,
};
use crate::numeric::gaussian::conj;
use crate::numeric::linalg::Scalar;
use crate::numeric::{rat_i64, ColVector, Rational, SolutionSet, SqMatrix};

fn any_fixed_point<T: Scalar>(f: &Affine<T>) -> Option<ColVector<T>> {
    match fixed_point_set(f) {
        SolutionSet::Empty => None,
        SolutionSet::UniquePoint(q) => Some(q),
        SolutionSet::Coset { base, .. } => Some(base),
        SolutionSet::All => Some(ColVector::zero(f.dim())),
    }
}

/// splits a map with a fixed point q as f = h o g o h^-1 with
/// h = Translate{q} and g the bare linear part x -> Ax. the identity is
/// exact in the affine algebra.
pub fn reduce_to_linear(f: &AffineMap) -> Result<(Homeomorphism, AffineMap), HomeoError> {
    match f {
        AffineMap::Real(m) => {
            let q = any_fixed_point(m).ok_or(HomeoError::NoFixedPoint)?;
            let step = PrimitiveMap::Translate { v: ExactVector::Real(q) };
            let h = Homeomorphism {
                field: Field::Real,
                dim: m.dim(),
                chain: vec![(step, Direction::Forward)],
            };
            Ok((h, AffineMap::Real(Affine::linear(m.a.clone()))))
        }
        AffineMap::Complex(m) => {
            let q = any_fixed_point(m).ok_or(HomeoError::NoFixedPoint)?;
            let step = PrimitiveMap::Translate { v: ExactVector::Complex(q) };
            let h = Homeomorphism {
                field: Field::Complex,
                dim: m.dim(),
                chain: vec![(step, Direction::Forward)],
            };
            Ok((h, AffineMap::Complex(Affine::linear(m.a.clone()))))
        }
    }
}

/// conjugates any two conjugate maps of the real line. slopes other than
/// 1 give the signed power x -> sgn(x - p)|x - p|^l + r between the fixed
/// points p, r; slope 1 pairs are translations and get x -> (d/b)x.
pub fn synth_1d(f: &AffineMap, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    let (fm, gm) = match (f, g) {
        (AffineMap::Real(fm), AffineMap::Real(gm)) if fm.dim() == 1 && gm.dim() == 1 => (fm, gm),
        _ => return Err(HomeoError::DimensionMismatch),
    };
    let verdict = conjugate(f, g).expect("the maps share a field and dimension");
    if !verdict.conjugate {
        return Err(HomeoError::NotConjugate);
    }
    let one = Rational::one();
    let a = fm.a[(0, 0)].clone();
    let b = fm.b[0].clone();
    let c = gm.a[(0, 0)].clone();
    let d = gm.b[0].clone();
    if a.is_one() {
        debug_assert!(c.is_one(), "conjugacy forces matching unit slopes");
        if b.is_zero() {
            return Ok(Homeomorphism::identity(Field::Real, 1));
        }
        let step = PrimitiveMap::Linear {
            b: ExactMatrix::Real(SqMatrix::from_rows(vec![vec![d / b]])),
        };
        return Ok(Homeomorphism::from_application_order(
            Field::Real,
            1,
            vec![(step, Direction::Forward)],
        ));
    }
    debug_assert!(!c.is_one(), "conjugacy forces matching unit slopes");
    let center_in = b / (one.clone() - a.clone());
    let center_out = d / (one - c.clone());
    let exponent = if a == c {
        Exponent::unit(a.abs(), c.abs())
    } else {
        Exponent::log_ratio(a.abs(), c.abs())
    };
    let step = PrimitiveMap::SignedPower1D { center_in, center_out, exponent };
    Ok(Homeomorphism::from_application_order(Field::Real, 1, vec![(step, Direction::Forward)]))
}

fn first_nonzero_index<T: Scalar>(v: &ColVector<T>) -> Option<usize> {
    (0..v.dim()).find(|&i| !v[i].is_zero())
}

/// d = kappa * b, detected through vanishing cross products so no
/// division is attempted against zero coordinates.
fn collinear_ratio<T: Scalar>(b: &ColVector<T>, d: &ColVector<T>) -> Option<T> {
    let k = first_nonzero_index(b)?;
    for i in 0..b.dim() {
        if d[k].clone() * b[i].clone() != d[i].clone() * b[k].clone() {
            return None;
        }
    }
    Some(d[k].clone() / b[k].clone())
}

fn from_cols<T: Scalar>(c0: &ColVector<T>, c1: &ColVector<T>) -> SqMatrix<T> {
    SqMatrix::from_rows(vec![
        vec![c0[0].clone(), c1[0].clone()],
        vec![c0[1].clone(), c1[1].clone()],
    ])
}

fn linear_map_between<T: Scalar>(
    b: &ColVector<T>,
    d: &ColVector<T>,
    perp: impl Fn(&ColVector<T>) -> ColVector<T>,
) -> Result<SqMatrix<T>, HomeoError> {
    if b.is_zero_vec() || d.is_zero_vec() {
        return Err(HomeoError::ZeroTranslation);
    }
    if let Some(kappa) = collinear_ratio(b, d) {
        return Ok(SqMatrix::identity(b.dim()).scale(&kappa));
    }
    // independent vectors only arise in dimension 2: complete each to a
    // basis with a perpendicular partner and map basis to basis
    let mb = from_cols(b, &perp(b));
    let md = from_cols(d, &perp(d));
    Ok(md.mul_mat(&mb.inverse().expect("a vector and its perpendicular form a basis")))
}

/// conjugates the translation x + b to x + d by a linear map B with
/// Bb = d, so B(x + b) = Bx + d exactly.
pub fn synth_translation(f: &AffineMap, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    if f.field() != g.field() || f.dim() != g.dim() {
        return Err(HomeoError::DimensionMismatch);
    }
    let (step, dim) = match (f, g) {
        (AffineMap::Real(fm), AffineMap::Real(gm)) => {
            assert!(
                fm.a.is_identity() && gm.a.is_identity(),
                "translation synthesis takes pure translations"
            );
            let mat = linear_map_between(&fm.b, &gm.b, |v| {
                ColVector::new(vec![-v[1].clone(), v[0].clone()])
            })?;
            (PrimitiveMap::Linear { b: ExactMatrix::Real(mat) }, fm.dim())
        }
        (AffineMap::Complex(fm), AffineMap::Complex(gm)) => {
            assert!(
                fm.a.is_identity() && gm.a.is_identity(),
                "translation synthesis takes pure translations"
            );
            // the conjugated perpendicular keeps the completion
            // invertible even for isotropic vectors like (1, i)
            let mat = linear_map_between(&fm.b, &gm.b, |v| {
                ColVector::new(vec![-conj(&v[1]), conj(&v[0])])
            })?;
            (PrimitiveMap::Linear { b: ExactMatrix::Complex(mat) }, fm.dim())
        }
        _ => unreachable!("fields already matched"),
    };
    Ok(Homeomorphism::from_application_order(
        f.field(),
        dim,
        vec![(step, Direction::Forward)],
    ))
}

fn real2(f: &AffineMap) -> Result<&Affine<Rational>, HomeoError> {
    match f {
        AffineMap::Real(m) if m.dim() == 2 => Ok(m),
        _ => Err(HomeoError::DimensionMismatch),
    }
}

fn unit_vec2(i: usize) -> ColVector<Rational> {
    let mut coords = vec![rat_i64(0), rat_i64(0)];
    coords[i] = rat_i64(1);
    ColVector::new(coords)
}

fn translation2(d: ColVector<Rational>) -> AffineMap {
    AffineMap::Real(Affine::new(SqMatrix::identity(2), d))
}

fn diag2(d0: Rational, d1: Rational) -> SqMatrix<Rational> {
    SqMatrix::from_rows(vec![vec![d0, rat_i64(0)], vec![rat_i64(0), d1]])
}

/// first nonzero column, rescaled so its leading nonzero entry is 1.
/// scaling keeps it an eigenvector and makes the synthesized basis
/// deterministic (and the identity for already-canonical inputs).
fn eigencolumn(m: &SqMatrix<Rational>) -> ColVector<Rational> {
    for j in 0..m.n() {
        let col: Vec<Rational> = (0..m.n()).map(|i| m[(i, j)].clone()).collect();
        if let Some(lead) = col.iter().find(|e| !e.is_zero()) {
            let lead = lead.clone();
            return ColVector::new(col.into_iter().map(|e| e / lead.clone()).collect());
        }
    }
    panic!("the matrix has no nonzero column");
}

/// linear part E + N with N nonzero nilpotent: straighten to the Jordan
/// block, scale the shift onto e2, then bend the parabolic shear to
/// reach the unit vertical translation before bridging to g.
fn jordan_shear_chain(fm: &Affine<Rational>, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    let n = fm.a.sub_mat(&SqMatrix::identity(2));
    let j = (0..2)
        .find(|&j| !n[(0, j)].is_zero() || !n[(1, j)].is_zero())
        .expect("the linear part is not the identity");
    // u = Nv spans the eigenline; (u, v) is a Jordan chain basis
    let v = unit_vec2(j);
    let u = ColVector::new(vec![n[(0, j)].clone(), n[(1, j)].clone()]);
    let s = from_cols(&u, &v).inverse().expect("a Jordan chain is a basis");
    let delta = s.mul_vec(&fm.b);
    let d2 = delta[1].clone();
    debug_assert!(!d2.is_zero(), "fixed-point freeness keeps the shift off the eigenline");
    let m = SqMatrix::from_rows(vec![
        vec![rat_i64(1) / d2.clone(), -delta[0].clone() / (d2.clone() * d2.clone())],
        vec![rat_i64(0), rat_i64(1) / d2],
    ]);
    let inner = Homeomorphism::from_application_order(
        Field::Real,
        2,
        vec![
            (PrimitiveMap::Linear { b: ExactMatrix::Real(s) }, Direction::Forward),
            (PrimitiveMap::Linear { b: ExactMatrix::Real(m) }, Direction::Forward),
            (PrimitiveMap::ParabolicShear, Direction::Forward),
        ],
    );
    let psi = synth_translation(&translation2(unit_vec2(1)), g)?;
    Ok(psi.compose(&inner))
}

/// linear part with eigenvalues 1 and alpha not in {0, 1}: diagonalize,
/// normalize the shift to e1, kill the second eigenvalue with the
/// exponential fiber scaling, then bridge to g.
fn fiber_scale_chain(
    fm: &Affine<Rational>,
    g: &AffineMap,
    alpha: Rational,
) -> Result<Homeomorphism, HomeoError> {
    let e = SqMatrix::identity(2);
    let v1 = eigencolumn(&fm.a.sub_mat(&e.scale(&alpha)));
    let va = eigencolumn(&fm.a.sub_mat(&e));
    let s = from_cols(&v1, &va)
        .inverse()
        .expect("eigenvectors for distinct eigenvalues form a basis");
    let delta = s.mul_vec(&fm.b);
    let d1 = delta[0].clone();
    debug_assert!(!d1.is_zero(), "fixed-point freeness keeps the shift off the contracted axis");
    let m = diag2(rat_i64(1) / d1, rat_i64(1));
    let w = ColVector::new(vec![
        rat_i64(0),
        delta[1].clone() / (alpha.clone() - rat_i64(1)),
    ]);
    let inner = Homeomorphism::from_application_order(
        Field::Real,
        2,
        vec![
            (PrimitiveMap::Linear { b: ExactMatrix::Real(s) }, Direction::Forward),
            (PrimitiveMap::Linear { b: ExactMatrix::Real(m) }, Direction::Forward),
            (PrimitiveMap::Translate { v: ExactVector::Real(w) }, Direction::Forward),
            (PrimitiveMap::ExpFiberScale { alpha }, Direction::Forward),
        ],
    );
    let psi = synth_translation(&translation2(unit_vec2(0)), g)?;
    Ok(psi.compose(&inner))
}

/// conjugates a fixed-point-free bijective planar map to the translation
/// g = x + d. the second eigenvalue alpha (the determinant, since 1 is
/// always an eigenvalue here) selects the construction: alpha = 1 bends
/// a parabolic shear, alpha > 0 scales along exponential fibers, and
/// alpha < 0 has no known conjugating homeomorphism of this form.
pub fn synth_nofix_bijective_2d(
    f: &AffineMap,
    g: &AffineMap,
) -> Result<Homeomorphism, HomeoError> {
    let fm = real2(f)?;
    let gm = real2(g)?;
    if !matches!(fixed_point_set(fm), SolutionSet::Empty) {
        return Err(HomeoError::NotFixedPointFree);
    }
    if !gm.a.is_identity() {
        return Err(HomeoError::UnsupportedClass);
    }
    if gm.b.is_zero_vec() {
        return Err(HomeoError::NotFixedPointFree);
    }
    let alpha = fm.a.det();
    if alpha.is_zero() {
        return Err(HomeoError::Singular);
    }
    if alpha.is_negative() {
        return Err(HomeoError::NegativeAlphaUnsupported);
    }
    if fm.a.is_identity() {
        synth_translation(f, g)
    } else if alpha.is_one() {
        jordan_shear_chain(fm, g)
    } else {
        fiber_scale_chain(fm, g, alpha)
    }
}

/// eigenbasis P = [v1 | v0] for a singular fixed-point-free linear part
/// (eigenvalues 1 and 0), its inverse, and the transformed shift P^-1 b.
fn singular_split(
    m: &Affine<Rational>,
) -> (SqMatrix<Rational>, SqMatrix<Rational>, ColVector<Rational>) {
    // A^2 = A, so columns of A are fixed vectors; columns of A - E are
    // annihilated by A
    let v1 = eigencolumn(&m.a);
    let v0 = eigencolumn(&m.a.sub_mat(&SqMatrix::identity(2)));
    let p = from_cols(&v1, &v0);
    let p_inv = p.inverse().expect("eigenvectors for distinct eigenvalues form a basis");
    let shift = p_inv.mul_vec(&m.b);
    debug_assert!(!shift[0].is_zero(), "fixed-point freeness keeps the shift off the kernel");
    (p, p_inv, shift)
}

/// conjugates two fixed-point-free planar maps with singular linear
/// parts. both straighten to diag(1,0)x + shift; an axis scaling and a
/// vertical translation line the shifts up, all in exact arithmetic.
pub fn synth_nofix_singular_2d(f: &AffineMap, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    let fm = real2(f)?;
    let gm = real2(g)?;
    if !matches!(fixed_point_set(fm), SolutionSet::Empty)
        || !matches!(fixed_point_set(gm), SolutionSet::Empty)
    {
        return Err(HomeoError::NotFixedPointFree);
    }
    if !fm.a.det().is_zero() || !gm.a.det().is_zero() {
        return Err(HomeoError::NotSingular);
    }
    let (_, s, delta) = singular_split(fm);
    let (k, _, eta) = singular_split(gm);
    let m = diag2(eta[0].clone() / delta[0].clone(), rat_i64(1));
    let w = ColVector::new(vec![rat_i64(0), eta[1].clone() - delta[1].clone()]);
    Ok(Homeomorphism::from_application_order(
        Field::Real,
        2,
        vec![
            (PrimitiveMap::Linear { b: ExactMatrix::Real(s) }, Direction::Forward),
            (PrimitiveMap::Linear { b: ExactMatrix::Real(m) }, Direction::Forward),
            (PrimitiveMap::Translate { v: ExactVector::Real(w) }, Direction::Forward),
            (PrimitiveMap::Linear { b: ExactMatrix::Real(k) }, Direction::Forward),
        ],
    ))
}

fn synth_real_2d(f: &AffineMap, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    match signature(f) {
        ConjugacySignature::HasFixedPoint { .. } => Err(HomeoError::UnsupportedClass),
        ConjugacySignature::NoFixedPoint { singular: true, .. } => synth_nofix_singular_2d(f, g),
        ConjugacySignature::NoFixedPoint { singular: false, .. } => {
            let fm = real2(f)?;
            let gm = real2(g)?;
            if fm.a.det().is_negative() || gm.a.det().is_negative() {
                return Err(HomeoError::NegativeAlphaUnsupported);
            }
            if gm.a.is_identity() {
                return synth_nofix_bijective_2d(f, g);
            }
            // route both maps through the canonical vertical translation
            let t = translation2(unit_vec2(1));
            let hf = synth_nofix_bijective_2d(f, &t)?;
            let hg = synth_nofix_bijective_2d(g, &t)?;
            Ok(hg.invert().compose(&hf))
        }
    }
}

fn synth_complex_1d(f: &AffineMap, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    let (fm, gm) = match (f, g) {
        (AffineMap::Complex(fm), AffineMap::Complex(gm)) => (fm, gm),
        _ => unreachable!("the dispatcher matched the field"),
    };
    match signature(f) {
        ConjugacySignature::NoFixedPoint { .. } => synth_translation(f, g),
        ConjugacySignature::HasFixedPoint { .. } => {
            let a = fm.a[(0, 0)].clone();
            let c = gm.a[(0, 0)].clone();
            let qf = any_fixed_point(fm).expect("the signature grants a fixed point");
            let qg = any_fixed_point(gm).expect("the signature grants a fixed point");
            // z -> z - q_f lands on the linear model; matching slopes
            // translate straight back, conjugate slopes pass through
            // coordinate conjugation, which realizes the mirrored model
            let mut steps = vec![(
                PrimitiveMap::Translate { v: ExactVector::Complex(qf) },
                Direction::Inverse,
            )];
            if c != a {
                if c == conj(&a) {
                    steps.push((PrimitiveMap::Conjugate, Direction::Forward));
                } else {
                    return Err(HomeoError::UnsupportedClass);
                }
            }
            steps.push((
                PrimitiveMap::Translate { v: ExactVector::Complex(qg) },
                Direction::Forward,
            ));
            Ok(Homeomorphism::from_application_order(Field::Complex, 1, steps))
        }
    }
}

fn synth_complex_2d(f: &AffineMap, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    let (fm, gm) = match (f, g) {
        (AffineMap::Complex(fm), AffineMap::Complex(gm)) => (fm, gm),
        _ => unreachable!("the dispatcher matched the field"),
    };
    if fm.a.is_identity() && gm.a.is_identity() {
        synth_translation(f, g)
    } else {
        Err(HomeoError::UnsupportedClass)
    }
}

/// synthesizes h with g = h o f o h^-1 when the conjugacy proof for the
/// pair's class is constructive, and reports UnsupportedClass otherwise.
/// equal maps short-circuit to the empty chain.
pub fn synthesize(f: &AffineMap, g: &AffineMap) -> Result<Homeomorphism, HomeoError> {
    if f.field() != g.field() || f.dim() != g.dim() {
        return Err(HomeoError::DimensionMismatch);
    }
    let verdict = conjugate(f, g).expect("the maps share a field and dimension");
    if !verdict.conjugate {
        return Err(HomeoError::NotConjugate);
    }
    if f == g {
        return Ok(Homeomorphism::identity(f.field(), f.dim()));
    }
    match (f.field(), f.dim()) {
        (Field::Real, 1) => synth_1d(f, g),
        (Field::Real, 2) => synth_real_2d(f, g),
        (Field::Complex, 1) => synth_complex_1d(f, g),
        (Field::Complex, 2) => synth_complex_2d(f, g),
        _ => unreachable!("maps only construct in dimensions 1 and 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::gaussian::{gauss, gauss_i64};
    use crate::numeric::{rat, GaussianRational};

    fn real_map(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> AffineMap {
        AffineMap::real(SqMatrix::from_rows(a), ColVector::new(b)).unwrap()
    }

    fn real1(a: Rational, b: Rational) -> AffineMap {
        real_map(vec![vec![a]], vec![b])
    }

    fn complex1(a: GaussianRational, b: GaussianRational) -> AffineMap {
        AffineMap::complex(SqMatrix::from_rows(vec![vec![a]]), ColVector::new(vec![b])).unwrap()
    }

    fn affine_real(m: &AffineMap) -> &Affine<Rational> {
        match m {
            AffineMap::Real(m) => m,
            AffineMap::Complex(_) => panic!("expected a real map"),
        }
    }

    #[test]
    fn reduction_splits_off_the_fixed_point_exactly() {
        let f = real1(rat_i64(2), rat_i64(1));
        let (h, lin) = reduce_to_linear(&f).unwrap();
        let q = match &h.chain[0].0 {
            PrimitiveMap::Translate { v: ExactVector::Real(q) } => q.clone(),
            other => panic!("expected a translation, got {other:?}"),
        };
        assert_eq!(q[0], rat_i64(-1));
        // f = h o lin o h^-1 in the exact affine algebra
        let t = Affine::new(SqMatrix::identity(1), q.clone());
        let t_inv = t.inverse().unwrap();
        let recomposed = t.compose(affine_real(&lin)).compose(&t_inv);
        assert_eq!(&recomposed, affine_real(&f));
    }

    #[test]
    fn identity_reduces_to_the_origin() {
        let f = real1(rat_i64(1), rat_i64(0));
        let (h, lin) = reduce_to_linear(&f).unwrap();
        assert_eq!(
            h.chain[0].0,
            PrimitiveMap::Translate { v: ExactVector::Real(ColVector::zero(1)) }
        );
        assert!(affine_real(&lin).is_identity());
    }

    #[test]
    fn complex_rotation_reduces_through_its_fixed_point() {
        let f = complex1(gauss_i64(0, 1), gauss_i64(1, 0));
        let (h, _) = reduce_to_linear(&f).unwrap();
        let q = match &h.chain[0].0 {
            PrimitiveMap::Translate { v: ExactVector::Complex(q) } => q.clone(),
            other => panic!("expected a translation, got {other:?}"),
        };
        assert_eq!(q[0], gauss(rat(1, 2), rat(1, 2)));
    }

    #[test]
    fn translations_without_fixed_points_refuse_reduction() {
        let f = real1(rat_i64(1), rat_i64(3));
        assert_eq!(reduce_to_linear(&f).unwrap_err(), HomeoError::NoFixedPoint);
    }

    #[test]
    fn contraction_pair_synthesizes_the_squaring_power() {
        let f = real1(rat(1, 2), rat_i64(0));
        let g = real1(rat(1, 4), rat_i64(0));
        let h = synth_1d(&f, &g).unwrap();
        match &h.chain[0].0 {
            PrimitiveMap::SignedPower1D { center_in, center_out, exponent } => {
                assert!(center_in.is_zero());
                assert!(center_out.is_zero());
                assert_eq!(exponent.value, 2.0);
            }
            other => panic!("expected a signed power, got {other:?}"),
        }
    }

    #[test]
    fn line_translations_synthesize_the_slope_ratio() {
        let f = real1(rat_i64(1), rat_i64(3));
        let g = real1(rat_i64(1), rat_i64(5));
        let h = synth_1d(&f, &g).unwrap();
        match &h.chain[0].0 {
            PrimitiveMap::Linear { b: ExactMatrix::Real(m) } => {
                assert_eq!(m[(0, 0)], rat(5, 3));
            }
            other => panic!("expected a linear map, got {other:?}"),
        }
    }

    #[test]
    fn reflection_pair_matches_centers_with_unit_exponent() {
        let f = real1(rat_i64(-1), rat_i64(2));
        let g = real1(rat_i64(-1), rat_i64(0));
        let h = synth_1d(&f, &g).unwrap();
        match &h.chain[0].0 {
            PrimitiveMap::SignedPower1D { center_in, center_out, exponent } => {
                assert_eq!(center_in, &rat_i64(1));
                assert_eq!(center_out, &rat_i64(0));
                assert_eq!(exponent.value, 1.0);
                assert_eq!(exponent.decimal, "1");
            }
            other => panic!("expected a signed power, got {other:?}"),
        }
    }

    #[test]
    fn mismatched_components_refuse_synthesis() {
        let f = real1(rat(1, 2), rat_i64(0));
        let g = real1(rat_i64(2), rat_i64(0));
        assert_eq!(synth_1d(&f, &g).unwrap_err(), HomeoError::NotConjugate);
    }

    fn translation_map(b: Vec<Rational>) -> AffineMap {
        let n = b.len();
        AffineMap::real(SqMatrix::identity(n), ColVector::new(b)).unwrap()
    }

    #[test]
    fn equal_translations_get_the_identity_matrix() {
        let f = translation_map(vec![rat_i64(0), rat_i64(1)]);
        let h = synth_translation(&f, &f).unwrap();
        match &h.chain[0].0 {
            PrimitiveMap::Linear { b: ExactMatrix::Real(m) } => assert!(m.is_identity()),
            other => panic!("expected a linear map, got {other:?}"),
        }
    }

    #[test]
    fn independent_translations_get_the_quarter_turn() {
        let f = translation_map(vec![rat_i64(1), rat_i64(0)]);
        let g = translation_map(vec![rat_i64(0), rat_i64(1)]);
        let h = synth_translation(&f, &g).unwrap();
        match &h.chain[0].0 {
            PrimitiveMap::Linear { b: ExactMatrix::Real(m) } => {
                let expected = SqMatrix::from_rows(vec![
                    vec![rat_i64(0), rat_i64(-1)],
                    vec![rat_i64(1), rat_i64(0)],
                ]);
                assert_eq!(m, &expected);
            }
            other => panic!("expected a linear map, got {other:?}"),
        }
    }

    #[test]
    fn line_translations_scale_by_the_ratio() {
        let f = real1(rat_i64(1), rat_i64(2));
        let g = real1(rat_i64(1), rat_i64(6));
        let h = synth_translation(&f, &g).unwrap();
        match &h.chain[0].0 {
            PrimitiveMap::Linear { b: ExactMatrix::Real(m) } => {
                assert_eq!(m[(0, 0)], rat_i64(3));
            }
            other => panic!("expected a linear map, got {other:?}"),
        }
    }

    #[test]
    fn isotropic_complex_translations_still_complete_to_a_basis() {
        let f = AffineMap::complex(
            SqMatrix::identity(2),
            ColVector::new(vec![gauss_i64(1, 0), gauss_i64(0, 1)]),
        )
        .unwrap();
        let g = AffineMap::complex(
            SqMatrix::identity(2),
            ColVector::new(vec![gauss_i64(0, 1), gauss_i64(2, 0)]),
        )
        .unwrap();
        let h = synth_translation(&f, &g).unwrap();
        match &h.chain[0].0 {
            PrimitiveMap::Linear { b: ExactMatrix::Complex(m) } => {
                let fb = ColVector::new(vec![gauss_i64(1, 0), gauss_i64(0, 1)]);
                let gb = ColVector::new(vec![gauss_i64(0, 1), gauss_i64(2, 0)]);
                assert_eq!(m.mul_vec(&fb), gb);
                assert!(!m.det().is_zero());
            }
            other => panic!("expected a linear map, got {other:?}"),
        }
    }

    #[test]
    fn zero_translations_are_rejected() {
        let f = translation_map(vec![rat_i64(0), rat_i64(0)]);
        let g = translation_map(vec![rat_i64(0), rat_i64(1)]);
        assert_eq!(synth_translation(&f, &g).unwrap_err(), HomeoError::ZeroTranslation);
    }

    #[test]
    fn shear_case_on_canonical_input_is_a_bare_parabolic_bend() {
        let f = real_map(
            vec![vec![rat_i64(1), rat_i64(1)], vec![rat_i64(0), rat_i64(1)]],
            vec![rat_i64(0), rat_i64(1)],
        );
        let g = translation_map(vec![rat_i64(0), rat_i64(1)]);
        let h = synth_nofix_bijective_2d(&f, &g).unwrap();
        let applied: Vec<&PrimitiveMap> = h.chain.iter().rev().map(|(m, _)| m).collect();
        assert_eq!(applied.len(), 4);
        for (i, step) in applied.iter().enumerate() {
            match step {
                PrimitiveMap::Linear { b: ExactMatrix::Real(m) } => {
                    assert!(m.is_identity(), "step {i} should be the identity")
                }
                PrimitiveMap::ParabolicShear => assert_eq!(i, 2),
                other => panic!("unexpected step {other:?}"),
            }
        }
    }

    #[test]
    fn fiber_case_on_canonical_input_reduces_to_the_scaling() {
        let f = real_map(
            vec![vec![rat_i64(1), rat_i64(0)], vec![rat_i64(0), rat_i64(2)]],
            vec![rat_i64(1), rat_i64(0)],
        );
        let g = translation_map(vec![rat_i64(1), rat_i64(0)]);
        let h = synth_nofix_bijective_2d(&f, &g).unwrap();
        let applied: Vec<&PrimitiveMap> = h.chain.iter().rev().map(|(m, _)| m).collect();
        assert_eq!(applied.len(), 5);
        for (i, step) in applied.iter().enumerate() {
            match step {
                PrimitiveMap::Linear { b: ExactMatrix::Real(m) } => {
                    assert!(m.is_identity(), "step {i} should be the identity")
                }
                PrimitiveMap::Translate { v: ExactVector::Real(w) } => assert!(w.is_zero_vec()),
                PrimitiveMap::ExpFiberScale { alpha } => {
                    assert_eq!(i, 3);
                    assert_eq!(alpha, &rat_i64(2));
                }
                other => panic!("unexpected step {other:?}"),
            }
        }
    }

    #[test]
    fn negative_second_eigenvalue_is_refused() {
        let glide = real_map(
            vec![vec![rat_i64(1), rat_i64(0)], vec![rat_i64(0), rat_i64(-1)]],
            vec![rat_i64(1), rat_i64(0)],
        );
        let g = translation_map(vec![rat_i64(0), rat_i64(1)]);
        assert_eq!(
            synth_nofix_bijective_2d(&glide, &g).unwrap_err(),
            HomeoError::NegativeAlphaUnsupported
        );
        assert_eq!(synthesize(&glide, &g).unwrap_err(), HomeoError::NegativeAlphaUnsupported);
    }

    #[test]
    fn maps_with_fixed_points_are_refused_by_the_planar_constructions() {
        let f = real_map(
            vec![vec![rat_i64(2), rat_i64(0)], vec![rat_i64(0), rat_i64(2)]],
            vec![rat_i64(1), rat_i64(0)],
        );
        let g = translation_map(vec![rat_i64(0), rat_i64(1)]);
        assert_eq!(
            synth_nofix_bijective_2d(&f, &g).unwrap_err(),
            HomeoError::NotFixedPointFree
        );
    }

    #[test]
    fn singular_worked_example_scales_and_lifts() {
        let f = real_map(
            vec![vec![rat_i64(1), rat_i64(0)], vec![rat_i64(0), rat_i64(0)]],
            vec![rat_i64(1), rat_i64(0)],
        );
        let g = real_map(
            vec![vec![rat_i64(1), rat_i64(0)], vec![rat_i64(0), rat_i64(0)]],
            vec![rat_i64(2), rat_i64(5)],
        );
        let h = synth_nofix_singular_2d(&f, &g).unwrap();
        let applied: Vec<&PrimitiveMap> = h.chain.iter().rev().map(|(m, _)| m).collect();
        assert_eq!(applied.len(), 4);
        match applied[1] {
            PrimitiveMap::Linear { b: ExactMatrix::Real(m) } => {
                assert_eq!(m, &diag2(rat_i64(2), rat_i64(1)));
            }
            other => panic!("expected the axis scaling, got {other:?}"),
        }
        match applied[2] {
            PrimitiveMap::Translate { v: ExactVector::Real(w) } => {
                assert_eq!(w, &ColVector::new(vec![rat_i64(0), rat_i64(5)]));
            }
            other => panic!("expected the vertical lift, got {other:?}"),
        }
    }

    #[test]
    fn bijective_maps_are_refused_by_the_singular_construction() {
        let f = translation_map(vec![rat_i64(1), rat_i64(0)]);
        assert_eq!(
            synth_nofix_singular_2d(&f, &f).unwrap_err(),
            HomeoError::NotSingular
        );
    }

    #[test]
    fn equal_maps_synthesize_the_empty_chain() {
        let f = real_map(
            vec![vec![rat_i64(0), rat_i64(-1)], vec![rat_i64(1), rat_i64(0)]],
            vec![rat_i64(3), rat_i64(0)],
        );
        let h = synthesize(&f, &f).unwrap();
        assert!(h.chain.is_empty());
    }

    #[test]
    fn conjugate_planar_contractions_have_no_witness() {
        let f = real_map(
            vec![vec![rat(1, 2), rat_i64(0)], vec![rat_i64(0), rat(1, 2)]],
            vec![rat_i64(0), rat_i64(0)],
        );
        let g = real_map(
            vec![vec![rat(1, 3), rat_i64(0)], vec![rat_i64(0), rat(1, 5)]],
            vec![rat_i64(1), rat_i64(0)],
        );
        assert_eq!(synthesize(&f, &g).unwrap_err(), HomeoError::UnsupportedClass);
    }

    #[test]
    fn matching_complex_slopes_bridge_through_both_fixed_points() {
        let f = complex1(gauss_i64(0, 1), gauss_i64(1, 0));
        let g = complex1(gauss_i64(0, 1), gauss_i64(0, 0));
        let h = synthesize(&f, &g).unwrap();
        let applied: Vec<&(PrimitiveMap, Direction)> = h.chain.iter().rev().collect();
        assert_eq!(applied.len(), 2);
        assert_eq!(applied[0].1, Direction::Inverse);
        assert_eq!(applied[1].1, Direction::Forward);
        match &applied[1].0 {
            PrimitiveMap::Translate { v: ExactVector::Complex(q) } => {
                assert!(q[0].is_zero());
            }
            other => panic!("expected a translation, got {other:?}"),
        }
    }

    #[test]
    fn conjugate_complex_slopes_insert_coordinate_conjugation() {
        let f = complex1(gauss_i64(0, 1), gauss_i64(1, 0));
        let g = complex1(gauss_i64(0, -1), gauss_i64(2, 0));
        let h = synthesize(&f, &g).unwrap();
        let applied: Vec<&(PrimitiveMap, Direction)> = h.chain.iter().rev().collect();
        assert_eq!(applied.len(), 3);
        assert_eq!(applied[1].0, PrimitiveMap::Conjugate);
    }

    #[test]
    fn unrelated_complex_contractions_have_no_witness() {
        let f = complex1(gauss(rat(1, 2), rat_i64(0)), gauss_i64(0, 0));
        let g = complex1(gauss(rat(1, 3), rat_i64(0)), gauss_i64(0, 0));
        assert_eq!(synthesize(&f, &g).unwrap_err(), HomeoError::UnsupportedClass);
    }

    #[test]
    fn field_mismatch_is_reported_before_classification() {
        let f = real1(rat_i64(2), rat_i64(0));
        let g = complex1(gauss_i64(2, 0), gauss_i64(0, 0));
        assert_eq!(synthesize(&f, &g).unwrap_err(), HomeoError::DimensionMismatch);
    }
}
