//! numerical verification that a chain satisfies the conjugacy equation
//! g = h o f o h^-1, by maximizing the relative residual of h(f(x)) =
//! g(h(x)) and the round-trip error of h over a deterministic
//! low-discrepancy sample of a centered box.

use super::eval::{AffineF, CompiledChain, Point, MAX_DIM};
use super::Homeomorphism;
use crate::classify::AffineMap;

#[derive(Clone, Copy, Debug)]
pub struct VerificationSpec {
    pub samples: usize,
    /// half-width of the sampled box [-range, range]^dim
    pub range: f64,
    pub tolerance: f64,
}

impl Default for VerificationSpec {
    fn default() -> Self {
        VerificationSpec { samples: 10_000, range: 10.0, tolerance: 1e-9 }
    }
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct VerificationReport {
    pub samples: usize,
    pub range: f64,
    pub max_residual: f64,
    pub max_roundtrip: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn frac(x: f64) -> f64 {
    x - x.floor()
}

/// per-coordinate steps of the rank-n Kronecker sequence, derived from
/// the positive root of x^(n+1) = x + 1.
fn kronecker_steps(n: usize) -> [f64; MAX_DIM] {
    let mut phi = 2.0_f64;
    for _ in 0..64 {
        phi = (1.0 + phi).powf(1.0 / (n as f64 + 1.0));
    }
    let mut steps = [0.0; MAX_DIM];
    for (i, step) in steps.iter_mut().take(n).enumerate() {
        *step = (1.0 / phi).powi(i as i32 + 1);
    }
    steps
}

/// irrational grid offsets, so the sample never lands exactly on the
/// measure-zero singular loci of piecewise primitives (signed-power
/// centers, the fiber axis).
fn grid_shifts(n: usize) -> [f64; MAX_DIM] {
    let mut shifts = [0.0; MAX_DIM];
    for (i, shift) in shifts.iter_mut().take(n).enumerate() {
        *shift = frac((i as f64 + 1.0) * std::f64::consts::FRAC_1_SQRT_2);
    }
    shifts
}

fn sample_point(
    k: usize,
    steps: &[f64; MAX_DIM],
    shifts: &[f64; MAX_DIM],
    range: f64,
    n: usize,
) -> Point {
    let mut coords = [0.0; MAX_DIM];
    for i in 0..n {
        let u = frac(shifts[i] + (k as f64 + 1.0) * steps[i]);
        coords[i] = -range + 2.0 * range * u;
    }
    Point { coords, n }
}

fn finite_or_inf(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        f64::INFINITY
    }
}

/// samples the conjugacy equation for h between f and g. the report
/// passes when both the relative residual of h(f(x)) = g(h(x)) and the
/// absolute round-trip error of h stay within tolerance everywhere.
pub fn verify_conjugacy(
    f: &AffineMap,
    g: &AffineMap,
    h: &Homeomorphism,
    spec: &VerificationSpec,
) -> VerificationReport {
    assert_eq!(
        (f.field(), f.dim()),
        (g.field(), g.dim()),
        "verification takes maps on one common space"
    );
    assert_eq!(
        (h.field, h.dim),
        (f.field(), f.dim()),
        "the chain must act on the maps' space"
    );
    let n = h.real_dim();
    let f_eval = AffineF::from_map(f);
    let g_eval = AffineF::from_map(g);
    let forward = CompiledChain::compile(h);
    let backward = CompiledChain::compile(&h.invert());
    let steps = kronecker_steps(n);
    let shifts = grid_shifts(n);

    let mut max_residual = 0.0_f64;
    let mut max_roundtrip = 0.0_f64;
    for k in 0..spec.samples {
        let x = sample_point(k, &steps, &shifts, spec.range, n);
        let lhs = forward.apply(f_eval.apply(x));
        let rhs = g_eval.apply(forward.apply(x));
        let residual = finite_or_inf(lhs.sub(rhs).norm() / (1.0 + rhs.norm()));
        if residual > max_residual {
            max_residual = residual;
        }
        let roundtrip = finite_or_inf(forward.apply(backward.apply(x)).sub(x).norm());
        if roundtrip > max_roundtrip {
            max_roundtrip = roundtrip;
        }
    }
    VerificationReport {
        samples: spec.samples,
        range: spec.range,
        max_residual,
        max_roundtrip,
        tolerance: spec.tolerance,
        pass: max_residual <= spec.tolerance && max_roundtrip <= spec.tolerance,
    }
}
