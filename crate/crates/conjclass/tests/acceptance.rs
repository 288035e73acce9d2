//! acceptance suite: one test per shipped guarantee. each test prints
//! an "ACCEPTANCE n: PASS" line with its measured evidence once the
//! assertions hold, and enforces its stated time budget.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use conjclass::classify::{
    conjugate, fixed_point_set, signature, Affine, AffineMap, ConjugacySignature, SolutionSet,
    WarningCode,
};
use conjclass::homeo::{
    homeo_apply, synthesize, verify_conjugacy, Direction, HomeoError, Homeomorphism, PrimitiveMap,
    VerificationSpec,
};
use conjclass::numeric::gaussian::{conj, gauss, gauss_i64, norm_sqr};
use conjclass::numeric::{rat, rat_i64, ColVector, GaussianRational, Rational, SqMatrix};
use conjclass::spectral::{complex_block_signature, realify};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rnd_rat(r: &mut ChaCha8Rng) -> Rational {
    rat(r.gen_range(-20..=20), r.gen_range(1..=9))
}

fn nonzero_rat(r: &mut ChaCha8Rng) -> Rational {
    loop {
        let q = rnd_rat(r);
        if !q.is_zero() {
            return q;
        }
    }
}

fn rnd_gauss(r: &mut ChaCha8Rng) -> GaussianRational {
    gauss(rnd_rat(r), rnd_rat(r))
}

fn mat2(rows: [[i64; 2]; 2]) -> SqMatrix<Rational> {
    SqMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat_i64(v)).collect()).collect())
}

fn diag2(x: Rational, y: Rational) -> SqMatrix<Rational> {
    SqMatrix::from_rows(vec![vec![x, Rational::zero()], vec![Rational::zero(), y]])
}

fn real_map(a: SqMatrix<Rational>, b: Vec<Rational>) -> AffineMap {
    AffineMap::real(a, ColVector::new(b)).unwrap()
}

fn real_map2(rows: [[i64; 2]; 2], b: [i64; 2]) -> AffineMap {
    real_map(mat2(rows), b.iter().map(|&v| rat_i64(v)).collect())
}

fn line_map(a: Rational, b: Rational) -> AffineMap {
    real_map(SqMatrix::from_rows(vec![vec![a]]), vec![b])
}

fn rnd_real_map(r: &mut ChaCha8Rng, dim: usize) -> AffineMap {
    let a = SqMatrix::from_rows(
        (0..dim).map(|_| (0..dim).map(|_| rnd_rat(r)).collect()).collect(),
    );
    real_map(a, (0..dim).map(|_| rnd_rat(r)).collect())
}

fn rnd_complex_map(r: &mut ChaCha8Rng, dim: usize) -> AffineMap {
    let a = SqMatrix::from_rows(
        (0..dim).map(|_| (0..dim).map(|_| rnd_gauss(r)).collect()).collect(),
    );
    let b = ColVector::new((0..dim).map(|_| rnd_gauss(r)).collect());
    AffineMap::complex(a, b).unwrap()
}

fn rnd_map_on(r: &mut ChaCha8Rng, space: usize) -> AffineMap {
    match space {
        0 => rnd_real_map(r, 1),
        1 => rnd_real_map(r, 2),
        2 => rnd_complex_map(r, 1),
        _ => rnd_complex_map(r, 2),
    }
}

/// conjugates f by a random exact invertible affine change of
/// coordinates on the same space.
fn transported(r: &mut ChaCha8Rng, f: &AffineMap) -> AffineMap {
    match f {
        AffineMap::Real(m) => {
            let dim = m.dim();
            let t = loop {
                let a = SqMatrix::from_rows(
                    (0..dim).map(|_| (0..dim).map(|_| rnd_rat(r)).collect()).collect(),
                );
                if !a.det().is_zero() {
                    break Affine::new(a, ColVector::new((0..dim).map(|_| rnd_rat(r)).collect()));
                }
            };
            AffineMap::Real(t.compose(m).compose(&t.inverse().unwrap()))
        }
        AffineMap::Complex(m) => {
            let dim = m.dim();
            let t = loop {
                let a = SqMatrix::from_rows(
                    (0..dim).map(|_| (0..dim).map(|_| rnd_gauss(r)).collect()).collect(),
                );
                if !a.det().is_zero() {
                    break Affine::new(a, ColVector::new((0..dim).map(|_| rnd_gauss(r)).collect()));
                }
            };
            AffineMap::Complex(t.compose(m).compose(&t.inverse().unwrap()))
        }
    }
}

#[test]
fn acceptance_1_one_dimensional_census() {
    let start = Instant::now();
    let mut r = rng(0xAC01);

    let mut samples: Vec<(Rational, Rational)> = Vec::with_capacity(10_006);
    for _ in 0..10_000 {
        samples.push((rnd_rat(&mut r), rnd_rat(&mut r)));
    }
    for a in [0i64, 1, -1] {
        for b in [0i64, 1] {
            samples.push((rat_i64(a), rat_i64(b)));
        }
    }
    let total = samples.len();

    let mut free: HashSet<ConjugacySignature> = HashSet::new();
    let mut linear: HashSet<ConjugacySignature> = HashSet::new();
    for (a, b) in samples {
        free.insert(signature(&line_map(a.clone(), b)));
        linear.insert(signature(&line_map(a, Rational::zero())));
    }
    assert_eq!(free.len(), 8, "census of the line: {free:#?}");
    assert_eq!(linear.len(), 7, "census of the line with b = 0: {linear:#?}");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "census took {elapsed:?}");
    println!(
        "ACCEPTANCE 1: PASS — {total} maps on the line fall into exactly 8 classes \
         (7 with b = 0) in {elapsed:?}"
    );
}

#[test]
fn acceptance_2_signature_invariance_under_exact_conjugation() {
    let start = Instant::now();
    let mut r = rng(0xAC02);

    for trial in 0..1_000 {
        let f = rnd_map_on(&mut r, trial % 4);
        let g = transported(&mut r, &f);
        assert_eq!(signature(&f), signature(&g), "trial {trial}: {f:?}");
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "invariance run took {elapsed:?}");
    println!(
        "ACCEPTANCE 2: PASS — 1000 signatures unchanged under random exact affine \
         changes of coordinates in {elapsed:?}"
    );
}

#[test]
fn acceptance_3_the_verdict_is_an_equivalence_relation() {
    let start = Instant::now();
    let mut r = rng(0xAC03);

    for trial in 0..1_000 {
        let space = trial % 4;
        let f = rnd_map_on(&mut r, space);
        let g = if r.gen_bool(0.5) { transported(&mut r, &f) } else { rnd_map_on(&mut r, space) };
        let h = if r.gen_bool(0.5) { transported(&mut r, &g) } else { rnd_map_on(&mut r, space) };

        assert!(conjugate(&f, &f).unwrap().conjugate, "trial {trial}: not reflexive on {f:?}");
        let fg = conjugate(&f, &g).unwrap().conjugate;
        let gf = conjugate(&g, &f).unwrap().conjugate;
        assert_eq!(fg, gf, "trial {trial}: not symmetric on {f:?} vs {g:?}");
        let gh = conjugate(&g, &h).unwrap().conjugate;
        let fh = conjugate(&f, &h).unwrap().conjugate;
        if fg && gh {
            assert!(fh, "trial {trial}: not transitive on {f:?}, {g:?}, {h:?}");
        }
        if fg && !gh {
            assert!(!fh, "trial {trial}: classes overlap on {f:?}, {g:?}, {h:?}");
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "equivalence run took {elapsed:?}");
    println!(
        "ACCEPTANCE 3: PASS — reflexivity, symmetry, and transitivity hold on 1000 \
         random triples in {elapsed:?}"
    );
}

/// a chain whose every step is evaluated with exact rational data and
/// plain arithmetic; such witnesses are held to the tighter bound.
fn rational_chain(h: &Homeomorphism) -> bool {
    h.chain.iter().all(|(m, _)| match m {
        PrimitiveMap::Linear { .. } | PrimitiveMap::Translate { .. } | PrimitiveMap::Conjugate => {
            true
        }
        PrimitiveMap::SignedPower1D { exponent, .. } => exponent.decimal == "1",
        PrimitiveMap::ParabolicShear | PrimitiveMap::ExpFiberScale { .. } => false,
    })
}

/// synthesizes a witness for a pair already known to be conjugate and
/// checks the conjugacy residual at the default sampling resolution.
fn check_witness(f: &AffineMap, g: &AffineMap, label: &str) -> f64 {
    let v = conjugate(f, g).expect("maps share a space");
    assert!(v.conjugate, "{label}: generated pair is not conjugate: {f:?} vs {g:?}");
    let h = synthesize(f, g).unwrap_or_else(|e| panic!("{label}: synthesis failed ({e}): {f:?} vs {g:?}"));
    let spec = VerificationSpec::default();
    let report = verify_conjugacy(f, g, &h, &spec);
    let bound = if rational_chain(&h) { 1e-12 } else { spec.tolerance };
    assert!(
        report.max_residual <= bound,
        "{label}: residual {:.3e} above {bound:.0e} for {f:?} vs {g:?}",
        report.max_residual
    );
    report.max_residual
}

/// a member of one of the eight conjugacy classes of the line.
fn line_member(r: &mut ChaCha8Rng, class: u8) -> AffineMap {
    let in_unit = |r: &mut ChaCha8Rng| {
        let d = r.gen_range(2..=9i64);
        rat(r.gen_range(1..d), d)
    };
    let (a, b) = match class {
        0 => (Rational::one(), Rational::zero()),
        1 => (Rational::one(), nonzero_rat(r)),
        2 => (Rational::zero(), rnd_rat(r)),
        3 => (-Rational::one(), rnd_rat(r)),
        4 => (in_unit(r), rnd_rat(r)),
        5 => (-in_unit(r), rnd_rat(r)),
        6 => (in_unit(r).recip(), rnd_rat(r)),
        _ => (-in_unit(r).recip(), rnd_rat(r)),
    };
    line_map(a, b)
}

fn rnd_change2(r: &mut ChaCha8Rng) -> SqMatrix<Rational> {
    loop {
        let m = mat2([
            [r.gen_range(-3..=3), r.gen_range(-3..=3)],
            [r.gen_range(-3..=3), r.gen_range(-3..=3)],
        ]);
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// attaches a translation part that leaves the given linear part
/// without fixed points. the entries stay integral so the drift along
/// the invariant direction is bounded away from zero; a tiny drift
/// would force a huge rescaling in the witness and push its
/// exponential steps outside the range of f64.
fn nofix(r: &mut ChaCha8Rng, a: SqMatrix<Rational>) -> AffineMap {
    for _ in 0..1_000 {
        let b = ColVector::new(vec![rat_i64(r.gen_range(-6..=6)), rat_i64(r.gen_range(-6..=6))]);
        let m = Affine::new(a.clone(), b);
        if matches!(fixed_point_set(&m), SolutionSet::Empty) {
            return AffineMap::Real(m);
        }
    }
    panic!("no fixed-point-free translation part found for {a:?}");
}

/// a fixed-point-free bijective planar map whose second eigenvalue is
/// positive: a translation, a shear-like map, or an eigenvalue pair
/// (1, alpha) with alpha > 0 in a random basis.
fn nofix_bijective(r: &mut ChaCha8Rng) -> AffineMap {
    let p = rnd_change2(r);
    let pinv = p.inverse().unwrap();
    let a = match r.gen_range(0..6u8) {
        0 => SqMatrix::identity(2),
        1 => p.mul_mat(&mat2([[1, 1], [0, 1]])).mul_mat(&pinv),
        _ => {
            let alphas =
                [rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 2), rat_i64(2), rat_i64(3)];
            let alpha = alphas[r.gen_range(0..alphas.len())].clone();
            p.mul_mat(&diag2(Rational::one(), alpha)).mul_mat(&pinv)
        }
    };
    nofix(r, a)
}

/// a fixed-point-free planar map whose linear part has rank one.
fn nofix_singular(r: &mut ChaCha8Rng) -> AffineMap {
    let p = rnd_change2(r);
    let a = p.mul_mat(&diag2(Rational::one(), Rational::zero())).mul_mat(&p.inverse().unwrap());
    nofix(r, a)
}

fn real_translation2(r: &mut ChaCha8Rng) -> AffineMap {
    loop {
        let b = vec![rnd_rat(r), rnd_rat(r)];
        if !b.iter().all(Zero::is_zero) {
            return real_map(SqMatrix::identity(2), b);
        }
    }
}

fn complex_translation1(r: &mut ChaCha8Rng) -> AffineMap {
    loop {
        let b = rnd_gauss(r);
        if !b.is_zero() {
            let one = SqMatrix::from_rows(vec![vec![GaussianRational::one()]]);
            return AffineMap::complex(one, ColVector::new(vec![b])).unwrap();
        }
    }
}

#[test]
fn acceptance_4_synthesized_witnesses_verify() {
    let start = Instant::now();
    let mut r = rng(0xAC04);

    let mut worst = [0.0_f64; 4];
    for i in 0..500 {
        let class = r.gen_range(0..8u8);
        let f = line_member(&mut r, class);
        let g = line_member(&mut r, class);
        worst[0] = worst[0].max(check_witness(&f, &g, &format!("line pair {i}")));
    }
    for i in 0..500 {
        let f = nofix_bijective(&mut r);
        let g = nofix_bijective(&mut r);
        worst[1] = worst[1].max(check_witness(&f, &g, &format!("bijective drift pair {i}")));
    }
    for i in 0..500 {
        let f = nofix_singular(&mut r);
        let g = nofix_singular(&mut r);
        worst[2] = worst[2].max(check_witness(&f, &g, &format!("singular drift pair {i}")));
    }
    for i in 0..250 {
        let f = real_translation2(&mut r);
        let g = real_translation2(&mut r);
        worst[3] = worst[3].max(check_witness(&f, &g, &format!("planar translation pair {i}")));
        let f = complex_translation1(&mut r);
        let g = complex_translation1(&mut r);
        worst[3] = worst[3].max(check_witness(&f, &g, &format!("complex translation pair {i}")));
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "witness run took {elapsed:?}");
    println!(
        "ACCEPTANCE 4: PASS — 2000 synthesized witnesses verified at 10^4 samples each; \
         worst residuals {:.1e} (line), {:.1e} (bijective drift), {:.1e} (singular drift), \
         {:.1e} (translations); {elapsed:?}",
        worst[0], worst[1], worst[2], worst[3]
    );
}

#[test]
fn acceptance_5_worked_identities() {
    let start = Instant::now();
    let spec = VerificationSpec::default();

    // a unipotent shear drift conjugated onto the plain translation
    let f = real_map2([[1, 1], [0, 1]], [0, 1]);
    let g = real_map2([[1, 0], [0, 1]], [0, 1]);
    let h = synthesize(&f, &g).unwrap();
    assert!(
        h.chain.iter().any(|(m, _)| matches!(m, PrimitiveMap::ParabolicShear)),
        "shear chain: {h:?}"
    );
    let shear = verify_conjugacy(&f, &g, &h, &spec);
    assert!(shear.max_residual <= spec.tolerance, "shear residual {:.3e}", shear.max_residual);

    // a drift with a contracting-to-expanding fiber, scale factor 2
    let f = real_map2([[1, 0], [0, 2]], [1, 0]);
    let g = real_map2([[1, 0], [0, 1]], [1, 0]);
    let h = synthesize(&f, &g).unwrap();
    assert!(
        h.chain
            .iter()
            .any(|(m, _)| matches!(m, PrimitiveMap::ExpFiberScale { alpha } if *alpha == rat_i64(2))),
        "fiber chain: {h:?}"
    );
    let fiber = verify_conjugacy(&f, &g, &h, &spec);
    assert!(fiber.max_residual <= spec.tolerance, "fiber residual {:.3e}", fiber.max_residual);

    // the singular pair whose witness acts as (x1, x2) -> (2 x1, x2 + 5)
    let f = real_map2([[1, 0], [0, 0]], [1, 0]);
    let g = real_map2([[1, 0], [0, 0]], [2, 5]);
    let h = synthesize(&f, &g).unwrap();
    assert!(rational_chain(&h), "singular chain should be affine: {h:?}");
    for x in [[0.0, 0.0], [1.0, -2.0], [-3.5, 4.25], [7.0, 9.0]] {
        let y = homeo_apply(&h, &x, Direction::Forward).unwrap();
        assert_eq!(y, vec![2.0 * x[0], x[1] + 5.0], "witness image of {x:?}");
    }
    let singular = verify_conjugacy(&f, &g, &h, &spec);
    assert!(singular.max_residual <= 1e-12, "singular residual {:.3e}", singular.max_residual);

    // star-equality of diagonal spectra: conjugating one eigenvalue of a
    // diagonal matrix preserves the class, conjugating half a jordan
    // block does not
    let lam = gauss(rat(3, 5), rat(4, 5));
    let mu = gauss(rat(5, 13), rat(12, 13));
    let zero = GaussianRational::zero();
    let diag = |x: &GaussianRational, y: &GaussianRational| {
        AffineMap::complex(
            SqMatrix::from_rows(vec![vec![x.clone(), zero.clone()], vec![zero.clone(), y.clone()]]),
            ColVector::new(vec![zero.clone(), zero.clone()]),
        )
        .unwrap()
    };
    assert!(conjugate(&diag(&lam, &mu), &diag(&lam, &conj(&mu))).unwrap().conjugate);
    let jordan = AffineMap::complex(
        SqMatrix::from_rows(vec![
            vec![lam.clone(), GaussianRational::one()],
            vec![zero.clone(), lam.clone()],
        ]),
        ColVector::new(vec![zero.clone(), zero.clone()]),
    )
    .unwrap();
    assert!(!conjugate(&jordan, &diag(&lam, &conj(&lam))).unwrap().conjugate);

    let elapsed = start.elapsed();
    println!(
        "ACCEPTANCE 5: PASS — shear, fiber-scale, and singular worked chains verify \
         (residuals {:.1e}, {:.1e}, {:.1e}) and the unit-spectrum verdicts are (true, false); {elapsed:?}",
        shear.max_residual, fiber.max_residual, singular.max_residual
    );
}

#[test]
fn acceptance_6_fixed_point_freeness_criteria() {
    let start = Instant::now();

    let mut vals = Vec::new();
    for p in -2..=2i64 {
        for q in 1..=3i64 {
            vals.push(rat(p, q));
        }
    }
    let shear = mat2([[1, 1], [0, 1]]);
    let proj = mat2([[1, 0], [0, 0]]);
    let mut checked = 0usize;
    for b1 in &vals {
        for b2 in &vals {
            let m = Affine::new(shear.clone(), ColVector::new(vec![b1.clone(), b2.clone()]));
            assert_eq!(
                matches!(fixed_point_set(&m), SolutionSet::Empty),
                !b2.is_zero(),
                "shear drift at b = ({b1}, {b2})"
            );
            let s = Affine::new(proj.clone(), ColVector::new(vec![b1.clone(), b2.clone()]));
            assert_eq!(
                matches!(fixed_point_set(&s), SolutionSet::Empty),
                !b1.is_zero(),
                "projection drift at b = ({b1}, {b2})"
            );
            checked += 2;
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "grid sweep took {elapsed:?}");
    println!(
        "ACCEPTANCE 6: PASS — fixed-point freeness matches the coordinate criteria on \
         {checked} grid maps in {elapsed:?}"
    );
}

#[test]
fn acceptance_7_orientation_mismatch_is_flagged_not_synthesized() {
    let f = real_map2([[1, 0], [0, -1]], [1, 0]);
    let g = real_map2([[1, 0], [0, 1]], [0, 1]);

    let v = conjugate(&f, &g).unwrap();
    assert!(v.conjugate, "glide pair should be conjugate");
    assert!(
        v.warnings.iter().any(|w| w.code == WarningCode::OrientationMismatch),
        "warnings: {:?}",
        v.warnings
    );
    assert!(matches!(synthesize(&f, &g), Err(HomeoError::NegativeAlphaUnsupported)));

    println!(
        "ACCEPTANCE 7: PASS — the glide pair is conjugate, carries ORIENTATION_MISMATCH, \
         and synthesis declines with NegativeAlphaUnsupported"
    );
}

/// row-echelon rank by straight elimination, kept separate from the
/// library so the doubling check below has an independent count.
fn elimination_rank(m: &SqMatrix<Rational>) -> usize {
    let n = m.n();
    let mut rows: Vec<Vec<Rational>> = m.rows().map(|r| r.to_vec()).collect();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let factor = &row[col] / &lead;
                for (dst, src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *dst = &*dst - &(src * &factor);
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// dimension of the invariant subspace of the realified matrix spanned
/// by the eigenvalues on one side of the unit circle: each conjugate
/// pair u ± iv contributes the kernel of (R - uE)^2 + v^2 E.
fn realified_side_dim(r4: &SqMatrix<Rational>, lams: &[GaussianRational], side: Ordering) -> usize {
    let e4 = SqMatrix::identity(4);
    let mut keys: Vec<(Rational, Rational)> = Vec::new();
    for l in lams {
        if l.is_zero() || norm_sqr(l).cmp(&Rational::one()) != side {
            continue;
        }
        let key = (l.re.clone(), &l.im * &l.im);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }
    keys.into_iter()
        .map(|(u, v2)| {
            let shifted = r4.sub_mat(&e4.scale(&u));
            let poly = shifted.mul_mat(&shifted).add_mat(&e4.scale(&v2));
            4 - elimination_rank(&poly)
        })
        .sum()
}

#[test]
fn acceptance_8_realification_doubles_ranks_and_respects_products() {
    let start = Instant::now();
    let mut r = rng(0xAC08);

    let small_gauss = |r: &mut ChaCha8Rng| {
        gauss(rat(r.gen_range(-4..=4), r.gen_range(1..=3)), rat(r.gen_range(-4..=4), r.gen_range(1..=3)))
    };

    for trial in 0..200 {
        let l1 = small_gauss(&mut r);
        let l2 = small_gauss(&mut r);
        let q = loop {
            let m = SqMatrix::from_rows(vec![
                vec![gauss_i64(r.gen_range(-2..=2), r.gen_range(-2..=2)), gauss_i64(r.gen_range(-2..=2), r.gen_range(-2..=2))],
                vec![gauss_i64(r.gen_range(-2..=2), r.gen_range(-2..=2)), gauss_i64(r.gen_range(-2..=2), r.gen_range(-2..=2))],
            ]);
            if !m.det().is_zero() {
                break m;
            }
        };
        let zero = GaussianRational::zero();
        let d = SqMatrix::from_rows(vec![
            vec![l1.clone(), zero.clone()],
            vec![zero, l2.clone()],
        ]);
        let a = q.mul_mat(&d).mul_mat(&q.inverse().unwrap());

        let w = SqMatrix::from_rows(vec![
            vec![rnd_gauss(&mut r), rnd_gauss(&mut r)],
            vec![rnd_gauss(&mut r), rnd_gauss(&mut r)],
        ]);
        assert_eq!(
            realify(&a.mul_mat(&w)),
            realify(&a).mul_mat(&realify(&w)),
            "trial {trial}: realification is not multiplicative on {a:?} * {w:?}"
        );

        let one = Rational::one();
        let plus = [&l1, &l2].iter().filter(|l| !l.is_zero() && norm_sqr(l) < one).count();
        let minus = [&l1, &l2].iter().filter(|l| norm_sqr(l) > one).count();
        let sig = complex_block_signature(&a);
        assert_eq!(sig.rank_plus, plus, "trial {trial}: spectrum ({l1:?}, {l2:?})");
        assert_eq!(sig.rank_minus, minus, "trial {trial}: spectrum ({l1:?}, {l2:?})");

        let ra = realify(&a);
        let lams = [l1, l2];
        assert_eq!(
            realified_side_dim(&ra, &lams, Ordering::Less),
            2 * plus,
            "trial {trial}: contracting part does not double for {lams:?}"
        );
        assert_eq!(
            realified_side_dim(&ra, &lams, Ordering::Greater),
            2 * minus,
            "trial {trial}: expanding part does not double for {lams:?}"
        );
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "realification run took {elapsed:?}");
    println!(
        "ACCEPTANCE 8: PASS — 200 random diagonalizable spectra: realified contracting \
         and expanding parts have exactly twice the complex ranks, and realification \
         respects products; {elapsed:?}"
    );
}
