//! Finite-dimensional modules given by one action matrix per basis element.

use std::fmt;
use std::sync::Arc;

use super::algebra::LieAlgebra;
use super::layout::MatrixLayout;
use super::stabiliser::Subspace;
use crate::exact::{Mat, Matrix, Scalar};
use crate::{Error, Result};

#[derive(Clone)]
pub struct Representation {
    name: String,
    algebra: Arc<LieAlgebra>,
    action: Vec<Matrix>,
    layout: Option<MatrixLayout>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({} of {}, dim {})", self.name, self.algebra.name(), self.dim())
    }
}

impl Representation {
    pub fn new(name: impl Into<String>, algebra: Arc<LieAlgebra>, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "{} action matrices for an algebra of dim {}",
                action.len(),
                algebra.dim()
            )));
        }
        let d = action.first().map_or(0, |m| m.rows());
        if action.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(Error::Dimension("action matrices must be square of one size".into()));
        }
        Ok(Representation { name: name.into(), algebra, action, layout: None })
    }

    /// A module of matrix tuples. `act(x, v)` must be linear in both
    /// arguments and return matrices of the layout's shapes and symmetries.
    pub fn from_matrix_action(
        name: impl Into<String>,
        algebra: Arc<LieAlgebra>,
        layout: MatrixLayout,
        act: impl Fn(&Matrix, &[Matrix]) -> Result<Vec<Matrix>>,
    ) -> Result<Self> {
        let d = layout.dim();
        let mut action = Vec::with_capacity(algebra.dim());
        for x in algebra.basis() {
            let mut cols = Vec::with_capacity(d);
            for j in 0..d {
                let mut e = vec![Scalar::zero(); d];
                e[j] = Scalar::one();
                let image = act(x, &layout.numeric(&e))?;
                cols.push(layout.from_matrices(&image)?);
            }
            action.push(Matrix::from_columns(&cols, d));
        }
        let mut r = Self::new(name, algebra, action)?;
        r.layout = Some(layout);
        Ok(r)
    }

    pub fn with_layout(mut self, layout: MatrixLayout) -> Result<Self> {
        if layout.dim() != self.dim() {
            return Err(Error::Dimension("layout dimension differs from module dimension".into()));
        }
        self.layout = Some(layout);
        Ok(self)
    }

    pub fn adjoint(algebra: Arc<LieAlgebra>) -> Self {
        let action = (0..algebra.dim()).map(|a| algebra.ad(a)).collect();
        Representation { name: format!("ad {}", algebra.name()), algebra, action, layout: None }
    }

    /// The ambient matrices acting on column vectors.
    pub fn defining(algebra: Arc<LieAlgebra>) -> Self {
        let action = algebra.basis().to_vec();
        let n = algebra.matrix_size();
        Representation {
            name: format!("k^{n}"),
            algebra,
            action,
            layout: Some(MatrixLayout::full(n, 1)),
        }
    }

    /// The defining module of one factor of a product, other factors acting
    /// trivially.
    pub fn factor_defining(algebra: Arc<LieAlgebra>, factor: usize) -> Self {
        let action: Vec<Matrix> = algebra.basis().iter().map(|b| algebra.block(b, factor)).collect();
        let n = algebra.factors()[factor].size;
        Representation {
            name: format!("k^{n}[{}]", algebra.factors()[factor].name),
            algebra,
            action,
            layout: Some(MatrixLayout::full(n, 1)),
        }
    }

    /// Contragredient module: `(x . zeta)(v) = -zeta(x . v)`.
    pub fn dual(&self) -> Self {
        Representation {
            name: format!("({})*", self.name),
            algebra: self.algebra.clone(),
            action: self.action.iter().map(|m| m.transpose().neg()).collect(),
            layout: None,
        }
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::Dimension("modules over different algebras".into()))
        }
    }

    /// Tensor product; basis `e_i (x) f_j` at index `i * dim(other) + j`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let (d1, d2) = (self.dim(), other.dim());
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                Mat::from_fn(d1 * d2, d1 * d2, |r, c| {
                    let (i, j) = (r / d2, r % d2);
                    let (k, l) = (c / d2, c % d2);
                    let mut v = Scalar::zero();
                    if j == l {
                        v += a.get(i, k);
                    }
                    if i == k {
                        v += b.get(j, l);
                    }
                    v
                })
            })
            .collect();
        Self::new(format!("{} (x) {}", self.name, other.name), self.algebra.clone(), action)
    }

    fn sym_or_ext(&self, strict: bool) -> Result<Self> {
        let d = self.dim();
        let pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (if strict { i + 1 } else { i }..d).map(move |j| (i, j)))
            .collect();
        let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j));
        let action = self
            .action
            .iter()
            .map(|a| {
                let mut m = Matrix::zeros(pairs.len(), pairs.len());
                for (c, &(i, j)) in pairs.iter().enumerate() {
                    // x.(e_i e_j) = (x e_i) e_j + e_i (x e_j)
                    for (k, coeff, other, k_first) in (0..d)
                        .map(|k| (k, a.get(k, i).clone(), j, true))
                        .chain((0..d).map(|k| (k, a.get(k, j).clone(), i, false)))
                    {
                        if coeff.is_zero() {
                            continue;
                        }
                        let (p, q) = if k_first { (k, other) } else { (other, k) };
                        // reorder into canonical (min, max) with sign for wedge
                        let (lo, hi, sign) = if p <= q { (p, q, 1) } else { (q, p, -1) };
                        if strict && lo == hi {
                            continue;
                        }
                        let r = index(lo, hi).expect("pair index");
                        let term = if strict && sign < 0 { -&coeff } else { coeff };
                        let v = m.get(r, c) + &term;
                        m.set(r, c, v);
                    }
                }
                m
            })
            .collect();
        let label = if strict { "L2" } else { "S2" };
        Self::new(format!("{label}({})", self.name), self.algebra.clone(), action)
    }

    /// Symmetric square; basis `e_i e_j`, `i <= j`, lexicographic.
    pub fn sym2(&self) -> Result<Self> {
        self.sym_or_ext(false)
    }

    /// Exterior square; basis `e_i ^ e_j`, `i < j`, lexicographic.
    pub fn ext2(&self) -> Result<Self> {
        self.sym_or_ext(true)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let zero = Scalar::zero();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| Mat::block_diag(&[a.clone(), b.clone()], &zero))
            .collect();
        let mut r = Self::new(format!("{} + {}", self.name, other.name), self.algebra.clone(), action)?;
        if let (Some(l1), Some(l2)) = (&self.layout, &other.layout) {
            let mut blocks = l1.blocks().to_vec();
            blocks.extend_from_slice(l2.blocks());
            r.layout = Some(MatrixLayout::new(blocks));
        }
        Ok(r)
    }

    /// The same module viewed over `algebra`, whose basis element `a` acts as
    /// `sum_b coeffs[a][b] rho_b`. Used for subalgebras.
    pub fn restrict_algebra(&self, algebra: Arc<LieAlgebra>, coeffs: &[Vec<Scalar>]) -> Result<Self> {
        let d = self.dim();
        let action = coeffs
            .iter()
            .map(|c| {
                let mut m = Matrix::zeros(d, d);
                for (b, k) in c.iter().enumerate() {
                    if !k.is_zero() {
                        m = m.add(&self.action[b].scale(k)).expect("same shape");
                    }
                }
                m
            })
            .collect();
        let mut r = Self::new(self.name.clone(), algebra, action)?;
        r.layout = self.layout.clone();
        Ok(r)
    }

    /// The submodule spanned by `sub`; errors if it is not stable.
    pub fn restrict_to(&self, sub: &Subspace) -> Result<Self> {
        let basis = sub.basis();
        let k = basis.len();
        let cols = Matrix::from_columns(basis, self.dim());
        let (_, pivots) = cols.transpose().rref();
        let square = Mat::from_fn(k, k, |p, b| basis[b][pivots[p]].clone());
        let inv = square.inverse().ok_or(Error::DependentFamily)?;
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let mut m = Matrix::zeros(k, k);
            for (c, v) in basis.iter().enumerate() {
                let image = a.mul_vec(v);
                let piv: Vec<Scalar> = pivots.iter().map(|&p| image[p].clone()).collect();
                let coords = inv.mul_vec(&piv);
                if cols.mul_vec(&coords) != image {
                    return Err(Error::NotInSpan("subspace is not a submodule".into()));
                }
                for (r, x) in coords.into_iter().enumerate() {
                    m.set(r, c, x);
                }
            }
            action.push(m);
        }
        Self::new(format!("sub({})", self.name), self.algebra.clone(), action)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.action.first().map_or(0, |m| m.rows())
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    pub fn layout(&self) -> Option<&MatrixLayout> {
        self.layout.as_ref()
    }

    /// `e_a . v`.
    pub fn act(&self, a: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.action[a].mul_vec(v)
    }

    /// `x . v` for `x` given by coordinates.
    pub fn act_by(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (a, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, w) in out.iter_mut().zip(self.act(a, v)) {
                *o += &(c * &w);
            }
        }
        out
    }

    /// The `dim V x dim g` matrix with columns `e_a . v`.
    pub fn orbit_matrix(&self, v: &[Scalar]) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.action.len()).map(|a| self.act(a, v)).collect();
        Matrix::from_columns(&cols, self.dim())
    }

    /// First pair `(a, b)` with `rho_[a,b] != [rho_a, rho_b]`, if any.
    pub fn homomorphism_violation(&self, pairs: Option<&[(usize, usize)]>) -> Option<(usize, usize)> {
        let d = self.algebra.dim();
        let all: Vec<(usize, usize)>;
        let pairs = match pairs {
            Some(p) => p,
            None => {
                all = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
                &all
            }
        };
        let consts = self.algebra.structure_constants();
        pairs.iter().copied().find(|&(a, b)| {
            let lhs = self.action[a].commutator(&self.action[b]).expect("square");
            let mut rhs = Matrix::zeros(self.dim(), self.dim());
            for (c, k) in &consts[a][b] {
                rhs = rhs.add(&self.action[*c].scale(k)).expect("square");
            }
            lhs != rhs
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::algebra::{ClassicalType, FormConvention};

    fn sl(n: usize) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::classical(ClassicalType::Sl, n, &FormConvention::default()).unwrap())
    }

    #[test]
    fn constructions_are_homomorphisms() {
        let g = sl(3);
        let u = Representation::defining(g.clone());
        let mods = [
            u.clone(),
            u.dual(),
            u.sym2().unwrap(),
            u.ext2().unwrap(),
            u.tensor(&u.dual()).unwrap(),
            Representation::adjoint(g.clone()),
        ];
        for m in &mods {
            assert_eq!(m.homomorphism_violation(None), None, "{m:?}");
        }
        assert_eq!(mods[2].dim(), 6);
        assert_eq!(mods[3].dim(), 3);
    }

    #[test]
    fn double_dual_is_identity() {
        let u = Representation::defining(sl(2)).sym2().unwrap();
        assert_eq!(u.dual().dual().action(), u.action());
    }

    #[test]
    fn matrix_action_matches_tensor() {
        // A |-> s A on 3x2 matrices is 2 copies of the defining module.
        let g = sl(3);
        let r = Representation::from_matrix_action("M", g.clone(), MatrixLayout::full(3, 2), |x, v| {
            Ok(vec![x.mul(&v[0])?])
        })
        .unwrap();
        assert_eq!(r.dim(), 6);
        assert_eq!(r.homomorphism_violation(None), None);
    }
}
