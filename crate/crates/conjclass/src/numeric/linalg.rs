//! small dense exact linear algebra over any field-like scalar: square
//! matrices and column vectors with determinant, rank, inverse, and the
//! fixed-point system solver used by the classification layer.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// field-like scalar: exact arithmetic with total zero test. division by
/// a nonzero element must be exact.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
{
}

/// row-major square matrix; the classification layer instantiates n in
/// {1, 2, 4}, the algorithms work for any n.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SqMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ColVector<T> {
    entries: Vec<T>,
}

impl<T: Scalar> SqMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix must be square");
            entries.extend(row);
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![T::zero(); n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SqMatrix<U> {
        SqMatrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }

    pub fn mul_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
                }
                out[(i, j)] = acc;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &ColVector<T>) -> ColVector<T> {
        assert_eq!(self.n, v.dim(), "dimension mismatch");
        let n = self.n;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = T::zero();
            for k in 0..n {
                acc = acc + self[(i, k)].clone() * v[k].clone();
            }
            out.push(acc);
        }
        ColVector::new(out)
    }

    pub fn add_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub_mat(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    /// exact determinant by fraction-producing gaussian elimination; the
    /// empty 0x0 matrix has determinant 1.
    pub fn det(&self) -> T {
        let n = self.n;
        let mut m = self.entries.clone();
        let at = |m: &Vec<T>, i: usize, j: usize| m[i * n + j].clone();
        let mut det = T::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !at(&m, r, col).is_zero()) {
                Some(r) => r,
                None => return T::zero(),
            };
            if pivot_row != col {
                for j in 0..n {
                    m.swap(pivot_row * n + j, col * n + j);
                }
                det = det.neg();
            }
            let pivot = at(&m, col, col);
            det = det * pivot.clone();
            for r in (col + 1)..n {
                let factor = at(&m, r, col) / pivot.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = at(&m, r, j) - factor.clone() * at(&m, col, j);
                    m[r * n + j] = v;
                }
            }
        }
        det
    }

    /// exact rank by gaussian elimination; the 0x0 matrix has rank 0.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m = self.entries.clone();
        let at = |m: &Vec<T>, i: usize, j: usize| m[i * n + j].clone();
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..n {
            let pivot_row = match (row..n).find(|&r| !at(&m, r, col).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != row {
                for j in 0..n {
                    m.swap(pivot_row * n + j, row * n + j);
                }
            }
            let pivot = at(&m, row, col);
            for r in (row + 1)..n {
                let factor = at(&m, r, col) / pivot.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = at(&m, r, j) - factor.clone() * at(&m, row, j);
                    m[r * n + j] = v;
                }
            }
            rank += 1;
            row += 1;
            if row == n {
                break;
            }
        }
        rank
    }

    /// exact inverse by gauss-jordan elimination, None when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut m = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        let at = |m: &Vec<T>, i: usize, j: usize| m[i * n + j].clone();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !at(&m, r, col).is_zero())?;
            if pivot_row != col {
                for j in 0..n {
                    m.swap(pivot_row * n + j, col * n + j);
                    inv.swap(pivot_row * n + j, col * n + j);
                }
            }
            let pivot = at(&m, col, col);
            for j in 0..n {
                m[col * n + j] = at(&m, col, j) / pivot.clone();
                inv[col * n + j] = at(&inv, col, j) / pivot.clone();
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = at(&m, r, col);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let vm = at(&m, r, j) - factor.clone() * at(&m, col, j);
                    m[r * n + j] = vm;
                    let vi = at(&inv, r, j) - factor.clone() * at(&inv, col, j);
                    inv[r * n + j] = vi;
                }
            }
        }
        Some(Self { n, entries: inv })
    }

    /// coefficients of det(xE - A), constant term first, computed by the
    /// faddeev-leverrier recurrence.
    pub fn char_poly(&self) -> Vec<T> {
        let n = self.n;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut m = Self::zero(n);
        let mut k_index = n;
        for k in 1..=n {
            // M_k = A*M_{k-1} + c_{n-k+1} E
            let mut am = self.mul_mat(&m);
            for i in 0..n {
                am[(i, i)] = am[(i, i)].clone() + coeffs[k_index].clone();
            }
            m = am;
            let am_trace = self.mul_mat(&m).trace();
            let mut divisor = T::zero();
            for _ in 0..k {
                divisor = divisor + T::one();
            }
            k_index -= 1;
            coeffs[k_index] = am_trace.neg() / divisor;
        }
        coeffs
    }
}

impl<T> std::ops::Index<(usize, usize)> for SqMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.n + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for SqMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.n + j]
    }
}

impl<T: Scalar> ColVector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Self { entries }
    }

    pub fn zero(n: usize) -> Self {
        Self { entries: vec![T::zero(); n] }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter()
    }

    pub fn is_zero_vec(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add_vec(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        Self::new(
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() + b.clone()).collect(),
        )
    }

    pub fn sub_vec(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        Self::new(
            self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() - b.clone()).collect(),
        )
    }

    pub fn neg_vec(&self) -> Self {
        Self::new(self.entries.iter().map(|a| a.clone().neg()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ColVector<U> {
        ColVector { entries: self.entries.iter().map(f).collect() }
    }
}

impl<T> std::ops::Index<usize> for ColVector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.entries[i]
    }
}

impl<T> std::ops::IndexMut<usize> for ColVector<T> {
    fn index_mut(&mut self, i: usize) -> &mut T {
        &mut self.entries[i]
    }
}

/// solution set of the fixed-point system (A - E)x = -b for f(x) = Ax + b.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolutionSet<T> {
    Empty,
    UniquePoint(ColVector<T>),
    /// base point plus the span of the basis vectors; the base point is
    /// the canonical back-substitution solution with free variables at 0.
    Coset { base: ColVector<T>, basis: Vec<ColVector<T>> },
    All,
}

/// solves f(x) = x for f(x) = Ax + b exactly.
pub fn solve_affine_system<T: Scalar>(a: &SqMatrix<T>, b: &ColVector<T>) -> SolutionSet<T> {
    let n = a.n();
    assert_eq!(b.dim(), n, "dimension mismatch");
    if a.is_identity() {
        return if b.is_zero_vec() { SolutionSet::All } else { SolutionSet::Empty };
    }
    // row reduce [A - E | -b]
    let mut m: Vec<Vec<T>> = (0..n)
        .map(|i| {
            let mut row: Vec<T> = (0..n)
                .map(|j| {
                    let e = a[(i, j)].clone();
                    if i == j {
                        e - T::one()
                    } else {
                        e
                    }
                })
                .collect();
            row.push(b[i].clone().neg());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let Some(pr) = (row..n).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(pr, row);
        let pivot = m[row][col].clone();
        for e in m[row].iter_mut().skip(col) {
            *e = e.clone() / pivot.clone();
        }
        let pivot_row = m[row].clone();
        for (r, mrow) in m.iter_mut().enumerate() {
            if r == row || mrow[col].is_zero() {
                continue;
            }
            let factor = mrow[col].clone();
            for (e, p) in mrow.iter_mut().zip(&pivot_row).skip(col) {
                *e = e.clone() - factor.clone() * p.clone();
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    // inconsistent row: all-zero coefficients with nonzero rhs
    if m[row..].iter().any(|mr| !mr[n].is_zero()) {
        return SolutionSet::Empty;
    }
    let rank = pivot_cols.len();
    let mut base = ColVector::zero(n);
    for (k, &col) in pivot_cols.iter().enumerate() {
        base[col] = m[k][n].clone();
    }
    if rank == n {
        return SolutionSet::UniquePoint(base);
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = ColVector::zero(n);
        v[fc] = T::one();
        for (k, &col) in pivot_cols.iter().enumerate() {
            v[col] = m[k][fc].clone().neg();
        }
        basis.push(v);
    }
    SolutionSet::Coset { base, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::gaussian::{gauss_i64, GaussianRational};
    use crate::numeric::{rat, rat_i64, Rational};

    fn rmat(rows: &[&[i64]]) -> SqMatrix<Rational> {
        SqMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_i64(x)).collect()).collect())
    }

    fn rvec(xs: &[i64]) -> ColVector<Rational> {
        ColVector::new(xs.iter().map(|&x| rat_i64(x)).collect())
    }

    #[test]
    fn determinant_agrees_with_cofactor_expansion() {
        let m = rmat(&[&[2, 3], &[5, 7]]);
        // ad - bc as the independent formula
        assert_eq!(m.det(), rat_i64(2 * 7 - 3 * 5));
        let m = rmat(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.det(), rat_i64(-1));
        let singular = rmat(&[&[2, 4], &[1, 2]]);
        assert_eq!(singular.det(), rat_i64(0));
    }

    #[test]
    fn determinant_of_empty_matrix_is_one() {
        let empty: SqMatrix<Rational> = SqMatrix::from_rows(vec![]);
        assert_eq!(empty.det(), rat_i64(1));
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn gaussian_determinant_of_realified_unit() {
        // realification of the imaginary unit: [[0,-1],[1,0]]
        let m = rmat(&[&[0, -1], &[1, 0]]);
        assert_eq!(m.det(), rat_i64(1));
    }

    #[test]
    fn rank_detects_dependent_rows() {
        assert_eq!(rmat(&[&[2, 4], &[1, 2]]).rank(), 1);
        assert_eq!(rmat(&[&[2, 4], &[1, 3]]).rank(), 2);
        assert_eq!(SqMatrix::<Rational>::zero(2).rank(), 0);
        let m4 = rmat(&[&[1, 0, 2, 0], &[0, 1, 0, 2], &[2, 0, 4, 0], &[0, 2, 0, 4]]);
        assert_eq!(m4.rank(), 2);
    }

    #[test]
    fn inverse_multiplies_to_identity() {
        let m = rmat(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul_mat(&inv).is_identity());
        assert!(inv.mul_mat(&m).is_identity());
        assert_eq!(rmat(&[&[1, 2], &[2, 4]]).inverse(), None);
    }

    #[test]
    fn inverse_over_gaussian_rationals() {
        let m = SqMatrix::from_rows(vec![
            vec![gauss_i64(1, 1), gauss_i64(0, 1)],
            vec![gauss_i64(2, 0), gauss_i64(1, -1)],
        ]);
        let inv = m.inverse().expect("invertible");
        assert!(m.mul_mat(&inv).is_identity());
    }

    #[test]
    fn char_poly_matches_trace_and_det() {
        let m = rmat(&[&[1, 2], &[3, 4]]);
        // x^2 - (trace)x + det = x^2 - 5x - 2
        assert_eq!(m.char_poly(), vec![rat_i64(-2), rat_i64(-5), rat_i64(1)]);
        let m4 = rmat(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        // (x^2 + 1)^2 = x^4 + 2x^2 + 1
        assert_eq!(
            m4.char_poly(),
            vec![rat_i64(1), rat_i64(0), rat_i64(2), rat_i64(0), rat_i64(1)]
        );
    }

    #[test]
    fn fixed_point_system_unique_point() {
        // f(x) = x/2 + 1 has fixed point 2
        let a = SqMatrix::from_rows(vec![vec![rat(1, 2)]]);
        let b = ColVector::new(vec![rat_i64(1)]);
        assert_eq!(solve_affine_system(&a, &b), SolutionSet::UniquePoint(rvec(&[2])));
    }

    #[test]
    fn fixed_point_system_empty_for_shear_translation() {
        let a = rmat(&[&[1, 1], &[0, 1]]);
        let b = rvec(&[0, 1]);
        assert_eq!(solve_affine_system(&a, &b), SolutionSet::Empty);
    }

    #[test]
    fn fixed_point_system_coset_line() {
        // A = diag(1,2), b = (0,-1): fixed points {(t, 1)}
        let a = rmat(&[&[1, 0], &[0, 2]]);
        let b = rvec(&[0, -1]);
        let sol = solve_affine_system(&a, &b);
        let SolutionSet::Coset { base, basis } = &sol else {
            panic!("expected a coset, got {sol:?}");
        };
        // independent check: every reported point really is fixed
        let check = |x: &ColVector<Rational>| {
            let fx = a.mul_vec(x).add_vec(&b);
            assert_eq!(&fx, x);
        };
        check(base);
        check(&base.add_vec(&basis[0]));
        assert_eq!(base, &rvec(&[0, 1]));
        assert_eq!(basis, &vec![rvec(&[1, 0])]);
    }

    #[test]
    fn fixed_point_system_all_and_empty_translation() {
        let e = SqMatrix::<Rational>::identity(2);
        assert_eq!(solve_affine_system(&e, &rvec(&[0, 0])), SolutionSet::All);
        assert_eq!(solve_affine_system(&e, &rvec(&[1, 0])), SolutionSet::Empty);
    }

    #[test]
    fn complex_fixed_point_solved_exactly() {
        // f(z) = iz + 1: fixed point 1/(1-i) = (1+i)/2
        let a = SqMatrix::from_rows(vec![vec![gauss_i64(0, 1)]]);
        let b = ColVector::new(vec![gauss_i64(1, 0)]);
        let expected: ColVector<GaussianRational> =
            ColVector::new(vec![GaussianRational::new(rat(1, 2), rat(1, 2))]);
        assert_eq!(solve_affine_system(&a, &b), SolutionSet::UniquePoint(expected));
    }
}
