//! Polynomial maps `F: V -> g` and the identities they are checked against.

mod equivariance;
mod family;
mod lift;
mod phi;
mod polarize;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::exact::{Matrix, Monomial, MultiPoly, PolyMat, Scalar};
use crate::lie::Representation;
use crate::{Error, Result};

pub use equivariance::{
    act_on_covariant, basis_defect, is_equivariant, span_is_stable, weight_under, Equivariance,
};
pub use family::{degree_audit, independence_rank_at, ker_phi_basis_check, AuditVerdict, DegreeAudit, SpanCheck};
pub use lift::{lift_hat, lift_invariance, poisson_bracket_at, DualPolynomial};
pub use phi::{apply_phi, is_in_ker_phi};
pub use polarize::{polarize_covariant, polarize_formula};

/// A homogeneous polynomial map `V -> g`, one polynomial in the `dim V`
/// coordinates per basis element of `g`.
#[derive(Clone)]
pub struct Covariant {
    rep: Arc<Representation>,
    degree: u32,
    components: Vec<MultiPoly>,
}

impl fmt::Debug for Covariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Covariant(deg {}, {:?})", self.degree, self.components)
    }
}

impl PartialEq for Covariant {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.rep, &other.rep) && self.degree == other.degree && self.components == other.components
    }
}

impl Covariant {
    pub fn new(rep: Arc<Representation>, degree: u32, components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() != rep.algebra().dim() {
            return Err(Error::Dimension(format!(
                "{} components for an algebra of dim {}",
                components.len(),
                rep.algebra().dim()
            )));
        }
        if components.iter().any(|p| p.nvars() != rep.dim()) {
            return Err(Error::Dimension("components must be polynomials on V".into()));
        }
        if let Some(bad) = components.iter().position(|p| !p.is_homogeneous(degree)) {
            return Err(Error::InvalidParams(format!("component {bad} is not homogeneous of degree {degree}")));
        }
        Ok(Covariant { rep, degree, components })
    }

    pub fn zero(rep: Arc<Representation>, degree: u32) -> Self {
        let components = vec![MultiPoly::zero(rep.dim()); rep.algebra().dim()];
        Covariant { rep, degree, components }
    }

    /// From a matrix of polynomials on `V` that must lie in `g` identically.
    pub fn from_matrix(rep: Arc<Representation>, degree: u32, m: &PolyMat) -> Result<Self> {
        let components = rep.algebra().coords_of(m)?;
        Self::new(rep, degree, components)
    }

    pub fn rep(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    /// `F(v)` in coordinates of `g`.
    pub fn eval(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.components.iter().map(|p| p.eval(v)).collect()
    }

    /// `F(v)` as a matrix of the ambient algebra.
    pub fn eval_matrix(&self, v: &[Scalar]) -> Matrix {
        self.rep.algebra().element(&self.eval(v))
    }

    /// `F` as a matrix of polynomials.
    pub fn to_matrix(&self) -> PolyMat {
        self.rep.algebra().element_generic(&self.components, &MultiPoly::zero(self.rep.dim()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Covariant {
            rep: self.rep.clone(),
            degree: self.degree,
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `sum c_i F_i` over covariants of one module and one degree.
    pub fn linear_combination(terms: &[(Scalar, &Covariant)]) -> Result<Self> {
        let (_, first) = terms.first().ok_or_else(|| Error::InvalidParams("empty combination".into()))?;
        let mut out = Covariant::zero(first.rep.clone(), first.degree);
        for (c, f) in terms {
            if !Arc::ptr_eq(&f.rep, &first.rep) || f.degree != first.degree {
                return Err(Error::InvalidParams("combination of covariants of different shapes".into()));
            }
            for (o, p) in out.components.iter_mut().zip(&f.components) {
                o.add_scaled(p, c);
            }
        }
        Ok(out)
    }
}

/// Coefficient vectors of covariants over a shared index of
/// `(component, monomial)` keys; used for exact span computations.
pub(crate) fn coefficient_vectors(fs: &[&Covariant]) -> Vec<Vec<Scalar>> {
    let mut keys: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for f in fs {
        for (a, p) in f.components.iter().enumerate() {
            for (e, _) in p.terms() {
                let n = keys.len();
                keys.entry((a, e.clone())).or_insert(n);
            }
        }
    }
    fs.iter()
        .map(|f| {
            let mut v = vec![Scalar::zero(); keys.len()];
            for (a, p) in f.components.iter().enumerate() {
                for (e, c) in p.terms() {
                    v[keys[&(a, e.clone())]] = c.clone();
                }
            }
            v
        })
        .collect()
}
