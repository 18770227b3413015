//! Matrix Lie algebras with a fixed basis and sparse structure constants.

use std::fmt;

use crate::exact::{Mat, Matrix, Ring, Scalar};
use crate::{Error, Result};

/// Invariant forms used to cut out `so` and `sp`.
///
/// `None` selects the standard choice for the requested size: the identity
/// for the symmetric form and `[[0, I], [-I, 0]]` for the skew form.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FormConvention {
    pub symmetric: Option<Matrix>,
    pub skew: Option<Matrix>,
}

impl FormConvention {
    pub fn standard_symmetric(n: usize) -> Matrix {
        Matrix::identity(n)
    }

    pub fn standard_skew(n: usize) -> Matrix {
        let m = n / 2;
        Mat::from_fn(n, n, |i, j| {
            if j == i + m && i < m {
                Scalar::one()
            } else if i == j + m && j < m {
                -Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn symmetric_for(&self, n: usize) -> Result<Matrix> {
        let f = self.symmetric.clone().unwrap_or_else(|| Self::standard_symmetric(n));
        if f.rows() != n || !f.is_symmetric() || f.mul(&f)? != Matrix::identity(n) {
            return Err(Error::InvalidParams(format!("symmetric form must be an order-{n} involution")));
        }
        Ok(f)
    }

    pub fn skew_for(&self, n: usize) -> Result<Matrix> {
        if n % 2 == 1 {
            return Err(Error::InvalidParams(format!("sp needs even size, got {n}")));
        }
        let f = self.skew.clone().unwrap_or_else(|| Self::standard_skew(n));
        if f.rows() != n || !f.is_skew() || f.mul(&f)? != Matrix::identity(n).neg() {
            return Err(Error::InvalidParams(format!("skew form must be order {n} with square -1")));
        }
        Ok(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalType {
    Gl,
    Sl,
    So,
    Sp,
}

impl ClassicalType {
    pub fn dim(self, n: usize) -> usize {
        match self {
            ClassicalType::Gl => n * n,
            ClassicalType::Sl => n * n - 1,
            ClassicalType::So => n * (n - 1) / 2,
            ClassicalType::Sp => n * (n + 1) / 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            ClassicalType::Gl => "gl",
            ClassicalType::Sl => "sl",
            ClassicalType::So => "so",
            ClassicalType::Sp => "sp",
        }
    }
}

/// A diagonal block of the ambient matrices, belonging to one factor of a
/// product algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub offset: usize,
    pub size: usize,
}

/// Structure constants: `consts[a][b]` lists `(c, coefficient)` with
/// `[e_a, e_b] = sum coefficient * e_c`.
pub type StructureConstants = Vec<Vec<Vec<(usize, Scalar)>>>;

#[derive(Clone)]
pub struct LieAlgebra {
    name: String,
    size: usize,
    basis: Vec<Matrix>,
    factors: Vec<Factor>,
    pivots: Vec<usize>,
    pivot_inverse: Matrix,
    consts: StructureConstants,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.name, self.dim())
    }
}

impl LieAlgebra {
    /// Builds the algebra spanned by `basis`, which must be linearly
    /// independent and closed under the commutator.
    pub fn from_basis(name: impl Into<String>, basis: Vec<Matrix>, factors: Vec<Factor>) -> Result<Self> {
        let size = basis.first().map_or(0, |b| b.rows());
        if basis.iter().any(|b| b.rows() != size || b.cols() != size) {
            return Err(Error::Dimension("basis matrices must share one square size".into()));
        }
        let flat: Vec<Vec<Scalar>> = basis.iter().map(|b| b.entries().to_vec()).collect();
        let (pivots, pivot_inverse) = if basis.is_empty() {
            (Vec::new(), Matrix::zeros(0, 0))
        } else {
            let m = Mat::from_rows(flat.clone());
            let (_, pivots) = m.rref();
            if pivots.len() != basis.len() {
                return Err(Error::DependentFamily);
            }
            // Rows: basis elements; columns: pivot positions. Invertible.
            let square = Mat::from_fn(basis.len(), basis.len(), |a, p| flat[a][pivots[p]].clone());
            let inv = square.inverse().ok_or(Error::DependentFamily)?;
            (pivots, inv)
        };
        let mut alg = LieAlgebra {
            name: name.into(),
            size,
            basis,
            factors,
            pivots,
            pivot_inverse,
            consts: Vec::new(),
        };
        let d = alg.dim();
        let mut consts = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in a + 1..d {
                let br = alg.basis[a].commutator(&alg.basis[b])?;
                let c = alg.coords_of(&br).map_err(|_| Error::NotSubalgebra)?;
                let sparse: Vec<(usize, Scalar)> =
                    c.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                consts[b][a] = sparse.iter().map(|(i, x)| (*i, -x)).collect();
                consts[a][b] = sparse;
            }
        }
        alg.consts = consts;
        Ok(alg)
    }

    /// `gl`, `sl`, `so` or `sp` of the given size in its defining representation.
    pub fn classical(kind: ClassicalType, n: usize, forms: &FormConvention) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("size must be positive".into()));
        }
        let basis = match kind {
            ClassicalType::Gl => (0..n).flat_map(|i| (0..n).map(move |j| Matrix::unit(n, n, i, j))).collect(),
            ClassicalType::Sl => {
                if n < 2 {
                    return Err(Error::InvalidParams("sl needs size at least 2".into()));
                }
                let mut b = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            b.push(Matrix::unit(n, n, i, j));
                        }
                    }
                }
                for i in 0..n - 1 {
                    b.push(Matrix::unit(n, n, i, i).sub(&Matrix::unit(n, n, i + 1, i + 1))?);
                }
                b
            }
            ClassicalType::So => form_algebra_basis(&forms.symmetric_for(n)?)?,
            ClassicalType::Sp => form_algebra_basis(&forms.skew_for(n)?)?,
        };
        let name = format!("{}{}", kind.label(), n);
        let factor = Factor { name: name.clone(), offset: 0, size: n };
        let alg = Self::from_basis(name, basis, vec![factor])?;
        debug_assert_eq!(alg.dim(), kind.dim(n));
        Ok(alg)
    }

    /// Direct sum, realised on block-diagonal matrices.
    pub fn product(name: impl Into<String>, parts: &[LieAlgebra]) -> Result<Self> {
        let total: usize = parts.iter().map(|p| p.size).sum();
        let mut basis = Vec::new();
        let mut factors = Vec::new();
        let mut offset = 0;
        let zero = Scalar::zero();
        for p in parts {
            for b in &p.basis {
                let blocks: Vec<Matrix> = parts
                    .iter()
                    .map(|q| {
                        if std::ptr::eq(q, p) {
                            b.clone()
                        } else {
                            Matrix::zeros(q.size, q.size)
                        }
                    })
                    .collect();
                basis.push(Mat::block_diag(&blocks, &zero));
            }
            for f in &p.factors {
                factors.push(Factor { name: f.name.clone(), offset: offset + f.offset, size: f.size });
            }
            offset += p.size;
        }
        debug_assert_eq!(offset, total);
        Self::from_basis(name, basis, factors)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Order of the ambient matrices.
    pub fn matrix_size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.consts
    }

    /// The diagonal block of `x` belonging to factor `f`.
    pub fn block<R: Ring>(&self, x: &Mat<R>, f: usize) -> Mat<R> {
        let fac = &self.factors[f];
        let idx: Vec<usize> = (fac.offset..fac.offset + fac.size).collect();
        x.submatrix(&idx, &idx)
    }

    /// Basis indices supported inside the listed factors only.
    pub fn basis_in_factors(&self, fs: &[usize]) -> Vec<usize> {
        (0..self.dim())
            .filter(|&a| {
                let b = &self.basis[a];
                (0..self.size).all(|i| {
                    (0..self.size).all(|j| {
                        b.get(i, j).is_zero()
                            || fs.iter().any(|&f| {
                                let fac = &self.factors[f];
                                (fac.offset..fac.offset + fac.size).contains(&i)
                                    && (fac.offset..fac.offset + fac.size).contains(&j)
                            })
                    })
                })
            })
            .collect()
    }

    /// Coordinates of `x` in the basis, with a membership certificate: the
    /// element rebuilt from the coordinates must equal `x` exactly.
    pub fn coords_of<R: Ring>(&self, x: &Mat<R>) -> Result<Vec<R>> {
        if x.rows() != self.size || x.cols() != self.size {
            return Err(Error::Dimension(format!("expected order {} matrix", self.size)));
        }
        let proto = x.get(0, 0);
        let d = self.dim();
        let entries = x.entries();
        let coords: Vec<R> = (0..d)
            .map(|a| {
                let mut acc = proto.zero_like();
                for (p, &pos) in self.pivots.iter().enumerate() {
                    let c = self.pivot_inverse.get(p, a);
                    if !c.is_zero() && !entries[pos].is_zero_elem() {
                        acc = acc.plus(&entries[pos].scaled(c));
                    }
                }
                acc
            })
            .collect();
        if self.element_generic(&coords, proto) != *x {
            return Err(Error::NotInSpan(format!("matrix is not in {}", self.name)));
        }
        Ok(coords)
    }

    /// `sum coords[a] * e_a`.
    pub fn element_generic<R: Ring>(&self, coords: &[R], proto: &R) -> Mat<R> {
        let mut out = Mat::zeros_like(self.size, self.size, proto);
        for (a, c) in coords.iter().enumerate() {
            if c.is_zero_elem() {
                continue;
            }
            let b = &self.basis[a];
            for i in 0..self.size {
                for j in 0..self.size {
                    let e = b.get(i, j);
                    if !e.is_zero() {
                        let v = out.get(i, j).plus(&c.scaled(e));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        self.element_generic(coords, &Scalar::zero())
    }

    /// Bracket of two coordinate vectors via the structure constants.
    pub fn bracket_coords<R: Ring>(&self, x: &[R], y: &[R], proto: &R) -> Vec<R> {
        let d = self.dim();
        let mut out = vec![proto.zero_like(); d];
        for a in 0..d {
            if x[a].is_zero_elem() {
                continue;
            }
            for b in 0..d {
                if y[b].is_zero_elem() || self.consts[a][b].is_empty() {
                    continue;
                }
                let xy = x[a].times(&y[b]);
                for (c, k) in &self.consts[a][b] {
                    out[*c] = out[*c].plus(&xy.scaled(k));
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_a)` in the basis.
    pub fn ad(&self, a: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for b in 0..d {
            for (c, k) in &self.consts[a][b] {
                m.set(*c, b, k.clone());
            }
        }
        m
    }

    /// Gram matrix of the trace form `tr(e_a e_b)` of the ambient matrices.
    pub fn trace_form(&self) -> Matrix {
        let d = self.dim();
        Mat::from_fn(d, d, |a, b| {
            let mut acc = Scalar::zero();
            for i in 0..self.size {
                for k in 0..self.size {
                    let x = self.basis[a].get(i, k);
                    if x.is_zero() {
                        continue;
                    }
                    acc += &(x * self.basis[b].get(k, i));
                }
            }
            acc
        })
    }

    /// Checks the Jacobi identity on all basis triples, or on `sample` of them
    /// when given. Returns the first violating triple.
    pub fn jacobi_violation(&self, triples: Option<&[(usize, usize, usize)]>) -> Option<(usize, usize, usize)> {
        jacobi_violation(&self.consts, self.dim(), triples)
    }
}

/// Basis of `{X : X^t F + F X = 0}` from the kernel of the linear system.
fn form_algebra_basis(form: &Matrix) -> Result<Vec<Matrix>> {
    let n = form.rows();
    // Unknown X_{kl} at index k*n + l; equation (i, j) is
    // sum_k X_{ki} F_{kj} + sum_k F_{ik} X_{kj} = 0.
    let mut sys = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..n {
                let f = form.get(k, j);
                if !f.is_zero() {
                    let v = sys.get(row, k * n + i) + f;
                    sys.set(row, k * n + i, v);
                }
                let f = form.get(i, k);
                if !f.is_zero() {
                    let v = sys.get(row, k * n + j) + f;
                    sys.set(row, k * n + j, v);
                }
            }
        }
    }
    let (_, kernel) = sys.rank_and_kernel();
    Ok(kernel.into_iter().map(|v| Mat::from_fn(n, n, |i, j| v[i * n + j].clone())).collect())
}

pub(crate) fn jacobi_violation(
    consts: &StructureConstants,
    d: usize,
    triples: Option<&[(usize, usize, usize)]>,
) -> Option<(usize, usize, usize)> {
    let bracket_with = |a: usize, v: &[(usize, Scalar)]| -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); d];
        for (b, k) in v {
            for (c, s) in &consts[a][*b] {
                out[*c] += &(k * s);
            }
        }
        out
    };
    let check = |a: usize, b: usize, c: usize| -> bool {
        // [a,[b,c]] + [b,[c,a]] + [c,[a,b]]
        let t1 = bracket_with(a, &consts[b][c]);
        let t2 = bracket_with(b, &consts[c][a]);
        let t3 = bracket_with(c, &consts[a][b]);
        (0..d).all(|i| (&(&t1[i] + &t2[i]) + &t3[i]).is_zero())
    };
    match triples {
        Some(ts) => ts.iter().copied().find(|&(a, b, c)| !check(a, b, c)),
        None => {
            for a in 0..d {
                for b in a + 1..d {
                    for c in b + 1..d {
                        if !check(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_dimensions() {
        let f = FormConvention::default();
        for n in 2..=5 {
            for kind in [ClassicalType::Gl, ClassicalType::Sl, ClassicalType::So] {
                assert_eq!(LieAlgebra::classical(kind, n, &f).unwrap().dim(), kind.dim(n));
            }
        }
        assert_eq!(LieAlgebra::classical(ClassicalType::Sp, 4, &f).unwrap().dim(), 10);
        assert!(LieAlgebra::classical(ClassicalType::Sp, 3, &f).is_err());
    }

    #[test]
    fn bad_form_rejected() {
        let f = FormConvention { symmetric: Some(Matrix::diag(&[Scalar::from_int(2), Scalar::one()])), skew: None };
        assert!(LieAlgebra::classical(ClassicalType::So, 2, &f).is_err());
    }

    #[test]
    fn coordinates_round_trip_and_reject_outsiders() {
        let g = LieAlgebra::classical(ClassicalType::Sl, 3, &FormConvention::default()).unwrap();
        let x = Matrix::from_ints(&[&[1, 2, 0], &[0, 3, -1], &[5, 0, -4]]);
        let c = g.coords_of(&x).unwrap();
        assert_eq!(g.element(&c), x);
        assert!(g.coords_of(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn product_blocks_and_jacobi() {
        let f = FormConvention::default();
        let sl2 = LieAlgebra::classical(ClassicalType::Sl, 2, &f).unwrap();
        let so3 = LieAlgebra::classical(ClassicalType::So, 3, &f).unwrap();
        let p = LieAlgebra::product("sl2+so3", &[sl2, so3]).unwrap();
        assert_eq!(p.dim(), 6);
        assert_eq!(p.matrix_size(), 5);
        assert_eq!(p.basis_in_factors(&[1]), vec![3, 4, 5]);
        assert!(p.jacobi_violation(None).is_none());
    }
}
