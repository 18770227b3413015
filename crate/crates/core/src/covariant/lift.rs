use super::Covariant;
use crate::exact::{polys_vanish, sampled_vanish, CheckConfig, Identity, MultiPoly, Scalar};
use crate::semidirect::{DualPoint, SemidirectProduct};
use crate::{Error, Result};

/// A polynomial on `q* = g* + V`; variables are the `xi` coordinates first,
/// then the `v` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPolynomial {
    dim_g: usize,
    dim_v: usize,
    poly: MultiPoly,
}

impl DualPolynomial {
    pub fn new(dim_g: usize, dim_v: usize, poly: MultiPoly) -> Result<Self> {
        if poly.nvars() != dim_g + dim_v {
            return Err(Error::Dimension("polynomial on q* has the wrong number of variables".into()));
        }
        Ok(DualPolynomial { dim_g, dim_v, poly })
    }

    /// A polynomial on `V` pulled back along `q* -> V`.
    pub fn from_v(dim_g: usize, p: &MultiPoly) -> Self {
        let dim_v = p.nvars();
        DualPolynomial { dim_g, dim_v, poly: p.embed(dim_g + dim_v, dim_g) }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// `(degree in xi, degree in v)` when every term has the same pair.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut out = None;
        for (e, _) in self.poly.terms() {
            let dx: u32 = e[..self.dim_g].iter().map(|&k| u32::from(k)).sum();
            let dv: u32 = e[self.dim_g..].iter().map(|&k| u32::from(k)).sum();
            match out {
                None => out = Some((dx, dv)),
                Some(p) if p != (dx, dv) => return None,
                _ => {}
            }
        }
        out
    }

    pub fn eval(&self, eta: &DualPoint) -> Scalar {
        self.poly.eval(&eta.concat())
    }

    /// Gradient at `eta`, read as an element of `q` in the combined basis.
    pub fn gradient(&self, eta: &DualPoint) -> Vec<Scalar> {
        let pt = eta.concat();
        (0..self.poly.nvars()).map(|i| self.poly.derivative(i).eval(&pt)).collect()
    }
}

/// `F^(xi, v) = <F(v), xi> = sum_a xi_a F_a(v)`.
pub fn lift_hat(f: &Covariant) -> DualPolynomial {
    let dg = f.rep().algebra().dim();
    let dv = f.rep().dim();
    let nv = dg + dv;
    let mut poly = MultiPoly::zero(nv);
    for (a, fa) in f.components().iter().enumerate() {
        if !fa.is_zero() {
            poly.add_assign_ref(&MultiPoly::var(nv, a).mul_ref(&fa.embed(nv, dg)));
        }
    }
    DualPolynomial { dim_g: dg, dim_v: dv, poly }
}

/// Checks `f(xi + mu(v, zeta), v) = f(xi, v)` as an identity in
/// `(xi, v, zeta)`. A failing point lists `xi`, then `v`, then `zeta`.
pub fn lift_invariance(f: &DualPolynomial, q: &SemidirectProduct, cfg: &CheckConfig) -> Result<Identity> {
    let (dg, dv) = (q.dim_g(), q.dim_v());
    if (dg, dv) != (f.dim_g, f.dim_v) {
        return Err(Error::Dimension("polynomial and semi-direct product disagree".into()));
    }
    let nv = dg + 2 * dv;
    // Each xi is replaced by a quadratic expression.
    let degree = match f.bidegree() {
        Some((dx, dv)) => 2 * dx + dv,
        None => 2 * f.poly.degree().unwrap_or(0),
    };
    if cfg.expand(nv, degree)? {
        let rep = q.rep();
        let mut images: Vec<MultiPoly> = (0..dg + dv).map(|i| MultiPoly::var(nv, i)).collect();
        for (a, img) in images.iter_mut().enumerate().take(dg) {
            let rho = &rep.action()[a];
            for b in 0..dv {
                for c in 0..dv {
                    let r = rho.get(b, c);
                    if r.is_zero() {
                        continue;
                    }
                    let zv = MultiPoly::var(nv, dg + dv + b).mul_ref(&MultiPoly::var(nv, dg + c));
                    img.add_scaled(&zv, r);
                }
            }
        }
        let moved = f.poly.compose(&images);
        let diff = &moved - &f.poly.embed(nv, 0);
        Ok(polys_vanish(&[diff]))
    } else {
        Ok(sampled_vanish(nv, cfg.trials_for(degree), cfg.seed, "lift_invariance", |x| {
            let eta = DualPoint::new(x[..dg].to_vec(), x[dg..dg + dv].to_vec());
            let moved = q.coadjoint_unipotent(&x[dg + dv..], &eta);
            vec![&f.eval(&moved) - &f.eval(&eta)]
        }))
    }
}

/// `{f, g}(eta) = eta([df, dg])`.
pub fn poisson_bracket_at(f: &DualPolynomial, g: &DualPolynomial, eta: &DualPoint, q: &SemidirectProduct) -> Scalar {
    let df = f.gradient(eta);
    let dg = g.gradient(eta);
    let b = q.kirillov_matrix(eta);
    let bdg = b.mul_vec(&dg);
    df.iter().zip(&bdg).map(|(x, y)| x * y).sum()
}
