//! Dense matrices over exact rings, with field linear algebra for rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::scalar::Scalar;
use crate::{Error, Result};

/// The ring operations the dense matrix code needs. Implemented by
/// [`Scalar`] and [`MultiPoly`]; a polynomial's zero depends on its number of
/// variables, hence the `*_like` constructors.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;
    fn negated(&self) -> Self {
        self.scaled(&Scalar::from_int(-1))
    }
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self * c
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

/// Row-major dense matrix with fixed dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Exact rational matrix.
pub type Matrix = Mat<Scalar>;
/// Matrix whose entries are polynomials in a common ring.
pub type PolyMat = Mat<MultiPoly>;

impl<R: Clone> Mat<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Removes one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        let rs: Vec<usize> = (0..self.rows).filter(|&i| i != row).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        self.submatrix(&rs, &cs)
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }
}

impl<R: Ring> Mat<R> {
    pub fn zeros_like(rows: usize, cols: usize, proto: &R) -> Self {
        let z = proto.zero_like();
        Mat::from_fn(rows, cols, |_, _| z.clone())
    }

    pub fn identity_like(n: usize, proto: &R) -> Self {
        let (z, o) = (proto.zero_like(), proto.one_like());
        Mat::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    /// Block-diagonal assembly; blocks need not be square.
    pub fn block_diag(blocks: &[Mat<R>], proto: &R) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros_like(rows, cols, proto);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero_elem())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let proto = self.data.first().or(other.data.first());
        let Some(proto) = proto else {
            return Ok(Mat { rows: self.rows, cols: other.cols, data: Vec::new() });
        };
        let zero = proto.zero_like();
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = zero.clone();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero_elem() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if b.is_zero_elem() {
                        continue;
                    }
                    acc = acc.plus(&a.times(b));
                }
                out.push(acc);
            }
        }
        Ok(Mat { rows: self.rows, cols: other.cols, data: out })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.plus(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.minus(b))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map(|x| x.scaled(c))
    }

    /// Multiplies every entry by a ring element.
    pub fn times_elem(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn neg(&self) -> Self {
        self.map(|x| x.negated())
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn trace(&self) -> Result<R> {
        self.require_square()?;
        let proto = self.data.first().ok_or(Error::Dimension("trace of empty matrix".into()))?;
        Ok((0..self.rows).fold(proto.zero_like(), |acc, i| acc.plus(self.get(i, i))))
    }

    /// `self - (tr self / n) I`: the traceless part.
    pub fn traceless_part(&self) -> Result<Self> {
        let tr = self.trace()?;
        let n = self.rows;
        let shift = tr.scaled(&Scalar::new(1, n as i64));
        let mut out = self.clone();
        for i in 0..n {
            let v = out.get(i, i).minus(&shift);
            out.set(i, i, v);
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let proto = self.data.first().ok_or(Error::Dimension("power of empty matrix".into()))?;
        let mut acc = Self::identity_like(self.rows, proto);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Determinant by cofactor expansion up to order 4, and by the
    /// characteristic polynomial beyond.
    pub fn det(&self) -> Result<R> {
        self.require_square()?;
        if self.rows <= 4 {
            Ok(self.det_laplace())
        } else {
            let cp = self.char_poly()?;
            let c0 = cp[0].clone();
            Ok(if self.rows % 2 == 0 { c0 } else { c0.negated() })
        }
    }

    fn det_laplace(&self) -> R {
        let n = self.rows;
        match n {
            0 => panic!("determinant of 0x0 matrix has no ring context"),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0).times(self.get(1, 1)).minus(&self.get(0, 1).times(self.get(1, 0))),
            _ => {
                let mut acc = self.get(0, 0).zero_like();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero_elem() {
                        continue;
                    }
                    let term = a.times(&self.minor(0, j).det_laplace());
                    acc = if j % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
                }
                acc
            }
        }
    }

    /// Coefficients `[c_0, ..., c_n]` of `det(t I - self)` (so `c_n = 1`),
    /// by the Faddeev-LeVerrier recursion. Only divisions by the integers
    /// `1..=n` occur, which are exact over the rationals.
    pub fn char_poly(&self) -> Result<Vec<R>> {
        Ok(self.leverrier()?.0)
    }

    /// Returns the characteristic coefficients and the final auxiliary
    /// matrix `M_n = A^{n-1} + c_{n-1} A^{n-2} + ... + c_1 I`.
    fn leverrier(&self) -> Result<(Vec<R>, Self)> {
        self.require_square()?;
        let n = self.rows;
        let proto = self.data.first().ok_or(Error::Dimension("empty matrix".into()))?;
        let mut coeffs = vec![proto.zero_like(); n + 1];
        coeffs[n] = proto.one_like();
        let id = Self::identity_like(n, proto);
        let mut m = Self::zeros_like(n, n, proto);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            m = self.mul(&m)?.add(&id.times_elem(&coeffs[n - k + 1]))?;
            let am = self.mul(&m)?;
            coeffs[n - k] = am.trace()?.scaled(&Scalar::new(-1, k as i64));
        }
        Ok((coeffs, m))
    }

    /// Transpose of the cofactor matrix, so `A adj(A) = adj(A) A = det(A) I`.
    /// Cofactors up to order 4; beyond that, the characteristic-polynomial
    /// recursion gives `adj(A) = (-1)^{n+1} M_n`.
    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let proto = self.data.first().ok_or(Error::Dimension("adjugate of empty matrix".into()))?;
        if n == 1 {
            return Ok(Self::identity_like(1, proto));
        }
        if n <= 4 {
            Ok(Mat::from_fn(n, n, |i, j| {
                let c = self.minor(j, i).det_laplace();
                if (i + j) % 2 == 0 {
                    c
                } else {
                    c.negated()
                }
            }))
        } else {
            let (_, m) = self.leverrier()?;
            Ok(if n % 2 == 1 { m } else { m.neg() })
        }
    }

    /// True when `self^t = -self`.
    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j).plus(self.get(j, i)).is_zero_elem()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Pfaffian by expansion along the first row.
    pub fn pfaffian(&self) -> Result<R> {
        self.require_square()?;
        if self.rows % 2 == 1 {
            return Err(Error::OddOrder(self.rows));
        }
        if !self.is_skew() {
            return Err(Error::NotSkew);
        }
        let proto = self.data.first().ok_or(Error::Dimension("pfaffian of empty matrix".into()))?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pf_rec(&idx, proto))
    }

    fn pf_rec(&self, idx: &[usize], proto: &R) -> R {
        if idx.is_empty() {
            return proto.one_like();
        }
        let first = idx[0];
        let mut acc = proto.zero_like();
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let a = self.get(first, j);
            if a.is_zero_elem() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().copied().filter(|&k| k != first && k != j).collect();
            let term = a.times(&self.pf_rec(&rest, proto));
            // (-1)^(pos+1) with pos counted from 0 within idx.
            acc = if pos % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
        }
        acc
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| Scalar::zero())
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let n = entries.len();
        Mat::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Scalar::zero() })
    }

    /// `E_{ij}` of the given size.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.set(i, j, Scalar::one());
        m
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Scalar>], rows: usize) -> Self {
        Mat::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * pv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank by fraction-free (Bareiss) elimination on the rows scaled to
    /// integers; every division is exact, so no rationals are formed.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(&x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(p, r);
            let (top, rest) = m.split_at_mut(r + 1);
            let pivot_row = &top[r];
            for row in rest.iter_mut() {
                let f = std::mem::take(&mut row[c]);
                for j in c + 1..self.cols {
                    let v = &pivot_row[c] * &row[j] - &f * &pivot_row[j];
                    row[j] = v / &prev;
                }
            }
            prev = m[r][c].clone();
            r += 1;
        }
        r
    }

    /// Rank and a basis of the right kernel `{k : self * k = 0}`.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut k = vec![Scalar::zero(); self.cols];
            k[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                k[p] = -r.get(row, free);
            }
            kernel.push(k);
        }
        (pivots.len(), kernel)
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn det_gauss(&self) -> Result<Scalar> {
        self.require_square()?;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.recip();
            for i in c + 1..n {
                let f = m.get(i, c) * &inv;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Some solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let c = self.cols;
        let aug = Mat::from_fn(self.rows, c + 1, |i, j| if j < c { self.get(i, j).clone() } else { b[i].clone() });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&c) {
            return None;
        }
        let mut x = vec![Scalar::zero(); c];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, c).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }
}

impl<R: fmt::Debug> fmt::Debug for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank of a family of vectors (as rows).
pub fn rank_of_vectors(vs: &[Vec<Scalar>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Mat::from_rows(vs.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::s;

    #[test]
    fn identity_rank_and_empty_kernel() {
        let (r, k) = Matrix::identity(3).rank_and_kernel();
        assert_eq!(r, 3);
        assert!(k.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (r, k) = Matrix::zeros(2, 5).rank_and_kernel();
        assert_eq!(r, 0);
        assert_eq!(k.len(), 5);
    }

    #[test]
    fn adjugate_small_cases() {
        assert_eq!(Matrix::identity(3).adjugate().unwrap(), Matrix::identity(3));
        let d = Matrix::diag(&[s(2), s(3)]);
        assert_eq!(d.adjugate().unwrap(), Matrix::diag(&[s(3), s(2)]));
        assert!(Matrix::zeros(2, 3).adjugate().is_err());
    }

    #[test]
    fn pfaffian_small_cases() {
        let m = Matrix::from_ints(&[&[0, 7], &[-7, 0]]);
        assert_eq!(m.pfaffian().unwrap(), s(7));
        assert_eq!(Matrix::zeros(4, 4).pfaffian().unwrap(), s(0));
        assert!(matches!(Matrix::zeros(3, 3).pfaffian(), Err(Error::OddOrder(3))));
        assert!(matches!(Matrix::identity(2).pfaffian(), Err(Error::NotSkew)));
    }

    #[test]
    fn char_poly_small_cases() {
        // I_2 -> t^2 - 2t + 1
        assert_eq!(Matrix::identity(2).char_poly().unwrap(), vec![s(1), s(-2), s(1)]);
        // nilpotent Jordan block of order 3 -> t^3
        let j = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(j.char_poly().unwrap(), vec![s(0), s(0), s(0), s(1)]);
    }

    #[test]
    fn symbolic_adjugate_two_by_two() {
        let n = 4;
        let x: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::var(n, i)).collect();
        let a = Mat::from_rows(vec![vec![x[0].clone(), x[1].clone()], vec![x[2].clone(), x[3].clone()]]);
        let adj = a.adjugate().unwrap();
        assert_eq!(adj.get(0, 0), &x[3]);
        assert_eq!(adj.get(0, 1), &x[1].negated());
        let det = a.det().unwrap();
        let prod = a.mul(&adj).unwrap();
        assert_eq!(prod, Mat::identity_like(2, &x[0]).times_elem(&det));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
