use super::{coefficient_vectors, Covariant};
use crate::exact::{decide_vanish, rank_of_vectors, CheckConfig, Identity, Matrix, MultiPoly, Scalar};
use crate::{Error, Result};

/// Infinitesimal action on maps `V -> g`:
/// `(x * F)(v) = [x, F(v)] - (DF)_v(x . v)`.
pub fn act_on_covariant(x: &[Scalar], f: &Covariant) -> Covariant {
    let rep = f.rep();
    let g = rep.algebra();
    let n = rep.dim();
    let consts = g.structure_constants();
    let mut out = vec![MultiPoly::zero(n); g.dim()];
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, fb) in f.components().iter().enumerate() {
            if fb.is_zero() {
                continue;
            }
            for (c, k) in &consts[a][b] {
                out[*c].add_scaled(fb, &(xa * k));
            }
        }
    }
    let mut rho = Matrix::zeros(n, n);
    for (a, xa) in x.iter().enumerate() {
        if !xa.is_zero() {
            rho = rho.add(&rep.action()[a].scale(xa)).expect("square action");
        }
    }
    let field: Vec<(usize, usize, Scalar)> = (0..n)
        .flat_map(|j| (0..n).map(move |k| (j, k)))
        .filter(|&(j, k)| !rho.get(j, k).is_zero())
        .map(|(j, k)| (j, k, rho.get(j, k).clone()))
        .collect();
    for (o, fc) in out.iter_mut().zip(f.components()) {
        o.sub_assign_ref(&fc.derivative_along_linear(&field));
    }
    Covariant::new(rep.clone(), f.degree(), out).expect("defect keeps shape and degree")
}

/// `e_a * F` for a basis element.
pub fn basis_defect(a: usize, f: &Covariant) -> Covariant {
    let mut x = vec![Scalar::zero(); f.rep().algebra().dim()];
    x[a] = Scalar::one();
    act_on_covariant(&x, f)
}

/// Outcome of checking `e_a * F = 0` over a set of basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivariance {
    pub checked: usize,
    /// First basis index with a nonzero defect, and the witness.
    pub failure: Option<(usize, Identity)>,
    /// Every checked defect was proved zero by expansion.
    pub proved: bool,
}

impl Equivariance {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `e_a * F = 0` for every `a` in `indices`.
pub fn is_equivariant(f: &Covariant, indices: &[usize], cfg: &CheckConfig) -> Result<Equivariance> {
    let n = f.rep().dim();
    let mut proved = true;
    for (i, &a) in indices.iter().enumerate() {
        let defect = basis_defect(a, f);
        let verdict = decide_vanish(defect.components(), n, cfg, &format!("equivariance/{a}"))?;
        proved &= verdict.is_proved();
        if !verdict.holds() {
            return Ok(Equivariance { checked: i + 1, failure: Some((a, verdict)), proved: false });
        }
    }
    Ok(Equivariance { checked: indices.len(), failure: None, proved })
}

/// The scalar `c` with `x * F = c F`, if there is one. `None` for `F = 0`.
pub fn weight_under(x: &[Scalar], f: &Covariant) -> Option<Scalar> {
    let defect = act_on_covariant(x, f);
    let (a, p) = f.components().iter().enumerate().find(|(_, p)| !p.is_zero())?;
    let (e, c) = p.terms().next()?;
    let w = &defect.components()[a].coeff(e) / c;
    (defect == f.scale(&w)).then_some(w)
}

/// Whether `e_a * F_i` lies in the span of the family for every `a` in
/// `indices`. On success returns, per index, the matrix of the action on the
/// span (column `i` holds the coordinates of `e_a * F_i`).
pub fn span_is_stable(family: &[Covariant], indices: &[usize]) -> Result<Option<Vec<Matrix>>> {
    let l = family.len();
    let refs: Vec<&Covariant> = family.iter().collect();
    if rank_of_vectors(&coefficient_vectors(&refs)) != l {
        return Err(Error::DependentFamily);
    }
    let mut mats = Vec::with_capacity(indices.len());
    for &a in indices {
        let defects: Vec<Covariant> = family.iter().map(|f| basis_defect(a, f)).collect();
        let mut all = refs.clone();
        all.extend(defects.iter());
        let vecs = coefficient_vectors(&all);
        let keys = vecs.first().map_or(0, Vec::len);
        let basis = Matrix::from_fn(keys, l, |k, j| vecs[j][k].clone());
        let mut m = Matrix::zeros(l, l);
        for i in 0..l {
            match basis.solve(&vecs[l + i]) {
                Some(c) => {
                    for (j, x) in c.into_iter().enumerate() {
                        m.set(j, i, x);
                    }
                }
                None => return Ok(None),
            }
        }
        mats.push(m);
    }
    Ok(Some(mats))
}
