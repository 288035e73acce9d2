//! floating-point evaluation of primitive chains. complex chains act on
//! realified coordinates (re, im interleaved), so every evaluation is a
//! map on at most four real coordinates; chains are compiled once into
//! flat double-precision steps before sampling.

use num_traits::ToPrimitive;

use super::{Direction, ExactMatrix, ExactVector, HomeoError, Homeomorphism, PrimitiveMap};
use crate::classify::{AffineMap, Field};
use crate::numeric::{ColVector, Rational, SqMatrix};
use crate::spectral::{realify, realify_vec};

pub(crate) const MAX_DIM: usize = 4;

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// a point in at most four real coordinates, fixed-size to keep sampling
/// loops allocation-free.
#[derive(Clone, Copy, PartialEq, Debug)]
pub(crate) struct Point {
    pub coords: [f64; MAX_DIM],
    pub n: usize,
}

impl Point {
    pub fn from_slice(x: &[f64]) -> Point {
        assert!(x.len() <= MAX_DIM, "points have at most {MAX_DIM} coordinates");
        let mut coords = [0.0; MAX_DIM];
        coords[..x.len()].copy_from_slice(x);
        Point { coords, n: x.len() }
    }

    pub fn to_vec(self) -> Vec<f64> {
        self.coords[..self.n].to_vec()
    }

    pub fn sub(self, other: Point) -> Point {
        debug_assert_eq!(self.n, other.n);
        let mut coords = [0.0; MAX_DIM];
        for (c, (a, b)) in coords.iter_mut().zip(self.coords.iter().zip(&other.coords)) {
            *c = a - b;
        }
        Point { coords, n: self.n }
    }

    /// euclidean norm, rescaled by the largest component so that chains
    /// with a wide dynamic range (exponential fiber scalings reach
    /// 1e150 and beyond inside [-10, 10]^2) do not overflow the sum of
    /// squares.
    pub fn norm(self) -> f64 {
        let cs = &self.coords[..self.n];
        if cs.iter().any(|c| c.is_nan()) {
            return f64::NAN;
        }
        let peak = cs.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
        if peak == 0.0 || peak.is_infinite() {
            return peak;
        }
        peak * cs.iter().map(|c| (c / peak) * (c / peak)).sum::<f64>().sqrt()
    }
}

#[derive(Clone, Copy)]
pub(crate) struct MatF {
    e: [[f64; MAX_DIM]; MAX_DIM],
    n: usize,
}

impl MatF {
    pub fn from_exact(m: &SqMatrix<Rational>) -> MatF {
        let n = m.n();
        assert!(n <= MAX_DIM);
        let mut e = [[0.0; MAX_DIM]; MAX_DIM];
        for i in 0..n {
            for j in 0..n {
                e[i][j] = to_f64(&m[(i, j)]);
            }
        }
        MatF { e, n }
    }

    pub fn apply(&self, p: Point) -> Point {
        debug_assert_eq!(self.n, p.n);
        let mut coords = [0.0; MAX_DIM];
        for (row, c) in self.e.iter().zip(coords.iter_mut()).take(self.n) {
            let mut acc = 0.0;
            for (a, x) in row.iter().zip(&p.coords).take(self.n) {
                acc += a * x;
            }
            *c = acc;
        }
        Point { coords, n: self.n }
    }
}

/// an affine map compiled into doubles on realified coordinates.
#[derive(Clone, Copy)]
pub(crate) struct AffineF {
    a: MatF,
    b: Point,
}

impl AffineF {
    pub fn from_map(f: &AffineMap) -> AffineF {
        match f {
            AffineMap::Real(m) => AffineF::from_real(&m.a, &m.b),
            AffineMap::Complex(m) => AffineF::from_real(&realify(&m.a), &realify_vec(&m.b)),
        }
    }

    fn from_real(a: &SqMatrix<Rational>, b: &ColVector<Rational>) -> AffineF {
        let n = a.n();
        let mut coords = [0.0; MAX_DIM];
        for i in 0..n {
            coords[i] = to_f64(&b[i]);
        }
        AffineF { a: MatF::from_exact(a), b: Point { coords, n } }
    }

    pub fn apply(&self, p: Point) -> Point {
        let mut out = self.a.apply(p);
        for i in 0..out.n {
            out.coords[i] += self.b.coords[i];
        }
        out
    }
}

// the linear variant carries its matrices inline: the enum lives in
// short chains and the evaluation loop stays pointer-chase free
#[allow(clippy::large_enum_variant)]
enum CompiledPrim {
    Linear { fwd: MatF, inv: MatF },
    Translate { v: Point },
    SignedPower { center_in: f64, center_out: f64, exponent: f64 },
    ParabolicShear,
    ExpFiberScale { ln_alpha: f64 },
    Conjugate,
}

fn signed_power(x: f64, l: f64) -> f64 {
    x.signum() * x.abs().powf(l)
}

impl CompiledPrim {
    fn apply(&self, dir: Direction, p: Point) -> Point {
        let forward = dir == Direction::Forward;
        match self {
            CompiledPrim::Linear { fwd, inv } => {
                if forward { fwd.apply(p) } else { inv.apply(p) }
            }
            CompiledPrim::Translate { v } => {
                let mut out = p;
                for i in 0..p.n {
                    if forward {
                        out.coords[i] += v.coords[i];
                    } else {
                        out.coords[i] -= v.coords[i];
                    }
                }
                out
            }
            CompiledPrim::SignedPower { center_in, center_out, exponent } => {
                let x = p.coords[0];
                let y = if forward {
                    signed_power(x - center_in, *exponent) + center_out
                } else {
                    signed_power(x - center_out, 1.0 / exponent) + center_in
                };
                Point { coords: [y, 0.0, 0.0, 0.0], n: 1 }
            }
            CompiledPrim::ParabolicShear => {
                let mut out = p;
                let bend = 0.5 * (p.coords[1] - 0.5) * (p.coords[1] - 0.5);
                if forward {
                    out.coords[0] -= bend;
                } else {
                    out.coords[0] += bend;
                }
                out
            }
            CompiledPrim::ExpFiberScale { ln_alpha } => {
                let mut out = p;
                let scale = if forward {
                    (-p.coords[0] * ln_alpha).exp()
                } else {
                    (p.coords[0] * ln_alpha).exp()
                };
                out.coords[1] *= scale;
                out
            }
            CompiledPrim::Conjugate => {
                let mut out = p;
                let mut i = 1;
                while i < p.n {
                    out.coords[i] = -out.coords[i];
                    i += 2;
                }
                out
            }
        }
    }
}

fn compile_prim(m: &PrimitiveMap, field: Field, n: usize) -> CompiledPrim {
    match m {
        PrimitiveMap::Linear { b } => {
            let real = match (b, field) {
                (ExactMatrix::Real(rm), Field::Real) => rm.clone(),
                (ExactMatrix::Complex(cm), Field::Complex) => realify(cm),
                _ => panic!("linear primitive field does not match the chain field"),
            };
            assert_eq!(real.n(), n, "linear primitive dimension mismatch");
            let inv = real.inverse().expect("linear primitives must be invertible");
            CompiledPrim::Linear { fwd: MatF::from_exact(&real), inv: MatF::from_exact(&inv) }
        }
        PrimitiveMap::Translate { v } => {
            let real = match (v, field) {
                (ExactVector::Real(rv), Field::Real) => rv.clone(),
                (ExactVector::Complex(cv), Field::Complex) => realify_vec(cv),
                _ => panic!("translation primitive field does not match the chain field"),
            };
            assert_eq!(real.dim(), n, "translation primitive dimension mismatch");
            let mut coords = [0.0; MAX_DIM];
            for i in 0..n {
                coords[i] = to_f64(&real[i]);
            }
            CompiledPrim::Translate { v: Point { coords, n } }
        }
        PrimitiveMap::SignedPower1D { center_in, center_out, exponent } => {
            assert_eq!((field, n), (Field::Real, 1), "signed powers act on the real line");
            assert!(exponent.value > 0.0, "signed powers need a positive exponent");
            CompiledPrim::SignedPower {
                center_in: to_f64(center_in),
                center_out: to_f64(center_out),
                exponent: exponent.value,
            }
        }
        PrimitiveMap::ParabolicShear => {
            assert_eq!((field, n), (Field::Real, 2), "the parabolic shear acts on the real plane");
            CompiledPrim::ParabolicShear
        }
        PrimitiveMap::ExpFiberScale { alpha } => {
            assert_eq!((field, n), (Field::Real, 2), "fiber scaling acts on the real plane");
            let a = to_f64(alpha);
            assert!(a > 0.0, "fiber scaling needs alpha > 0");
            CompiledPrim::ExpFiberScale { ln_alpha: a.ln() }
        }
        PrimitiveMap::Conjugate => {
            assert_eq!(field, Field::Complex, "conjugation acts on complex coordinates");
            CompiledPrim::Conjugate
        }
    }
}

/// a chain flattened to doubles, with steps in application order.
pub(crate) struct CompiledChain {
    steps: Vec<(CompiledPrim, Direction)>,
    n: usize,
}

impl CompiledChain {
    pub fn compile(h: &Homeomorphism) -> CompiledChain {
        let n = h.real_dim();
        let steps = h
            .chain
            .iter()
            .rev()
            .map(|(m, d)| (compile_prim(m, h.field, n), *d))
            .collect();
        CompiledChain { steps, n }
    }

    pub fn apply(&self, p: Point) -> Point {
        debug_assert_eq!(p.n, self.n);
        self.steps.iter().fold(p, |acc, (m, d)| m.apply(*d, acc))
    }
}

/// evaluates the chain at a point given in real coordinates (a complex
/// point contributes re, im pairs). `Direction::Inverse` evaluates the
/// inverse homeomorphism.
pub fn homeo_apply(
    h: &Homeomorphism,
    x: &[f64],
    direction: Direction,
) -> Result<Vec<f64>, HomeoError> {
    if x.len() != h.real_dim() {
        return Err(HomeoError::DimensionMismatch);
    }
    let chain = match direction {
        Direction::Forward => CompiledChain::compile(h),
        Direction::Inverse => CompiledChain::compile(&h.invert()),
    };
    Ok(chain.apply(Point::from_slice(x)).to_vec())
}
