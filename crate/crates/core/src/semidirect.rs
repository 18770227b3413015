//! The semi-direct product `q = g ⋉ V*` and its coadjoint representation.
//!
//! The combined basis lists `e_a` of `g` first, then the dual basis `zeta_b`
//! of `V*`. A point of `q* = g* + V` is `(xi, v)` with `xi_a = eta(e_a)` and
//! `v_b = eta(zeta_b)`.

use std::sync::Arc;

use rand::Rng;

use crate::exact::zero_test::{random_point, rng_for};
use crate::exact::{Matrix, Scalar};
use crate::lie::algebra::{jacobi_violation, StructureConstants};
use crate::lie::{generic_stabiliser, is_abelian, subalgebra_index, LieAlgebra, Representation};
use crate::{Error, Result};

/// Above this dimension of `q` the Jacobi identity is checked on random
/// triples instead of all of them.
pub const JACOBI_EXHAUSTIVE_MAX_DIM: usize = 40;
pub const JACOBI_RANDOM_TRIPLES: usize = 3000;
pub const DEFAULT_SAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPoint {
    pub xi: Vec<Scalar>,
    pub v: Vec<Scalar>,
}

impl DualPoint {
    pub fn new(xi: Vec<Scalar>, v: Vec<Scalar>) -> Self {
        DualPoint { xi, v }
    }

    pub fn zero(dim_g: usize, dim_v: usize) -> Self {
        DualPoint { xi: vec![Scalar::zero(); dim_g], v: vec![Scalar::zero(); dim_v] }
    }

    /// Coordinates in the order `(xi, v)`.
    pub fn concat(&self) -> Vec<Scalar> {
        self.xi.iter().chain(&self.v).cloned().collect()
    }
}

#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    rep: Arc<Representation>,
    consts: StructureConstants,
}

/// Outcome of estimating `ind q` by sampling Kirillov ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexEstimate {
    pub index: usize,
    pub max_rank: usize,
    /// Points per batch in the run that stabilised.
    pub samples: usize,
}

/// Both sides of `ind q = dim V - dim g + dim g_x + ind g_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisReport {
    pub index: usize,
    pub dim_v: usize,
    pub dim_g: usize,
    pub dim_gx: usize,
    pub ind_gx: usize,
    pub gx_abelian: bool,
    pub point: Vec<Scalar>,
}

impl RaisReport {
    pub fn rhs(&self) -> i64 {
        self.dim_v as i64 - self.dim_g as i64 + self.dim_gx as i64 + self.ind_gx as i64
    }

    pub fn holds(&self) -> bool {
        self.index as i64 == self.rhs()
    }
}

impl SemidirectProduct {
    pub fn new(rep: Arc<Representation>) -> Self {
        let g = rep.algebra().clone();
        let (dg, dv) = (g.dim(), rep.dim());
        let dq = dg + dv;
        let mut consts: StructureConstants = vec![vec![Vec::new(); dq]; dq];
        let gc = g.structure_constants();
        for a in 0..dg {
            for b in 0..dg {
                consts[a][b] = gc[a][b].clone();
            }
            // [e_a, zeta_b] = e_a . zeta_b = -sum_c (rho_a)_{bc} zeta_c
            let rho = &rep.action()[a];
            for b in 0..dv {
                let col: Vec<(usize, Scalar)> = (0..dv)
                    .filter(|&c| !rho.get(b, c).is_zero())
                    .map(|c| (dg + c, -rho.get(b, c)))
                    .collect();
                consts[b + dg][a] = col.iter().map(|(c, x)| (*c, -x)).collect();
                consts[a][dg + b] = col;
            }
        }
        SemidirectProduct { rep, consts }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.rep.algebra()
    }

    pub fn rep(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn dim_g(&self) -> usize {
        self.rep.algebra().dim()
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim()
    }

    pub fn dim(&self) -> usize {
        self.dim_g() + self.dim_v()
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.consts
    }

    /// Bracket of two elements of `q` in combined coordinates.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let p = xa * yb;
                for (c, k) in &self.consts[a][b] {
                    out[*c] += &(&p * k);
                }
            }
        }
        out
    }

    /// First Jacobi violation; exhaustive up to [`JACOBI_EXHAUSTIVE_MAX_DIM`],
    /// otherwise on seeded random triples.
    pub fn jacobi_violation(&self, seed: u64) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        if d <= JACOBI_EXHAUSTIVE_MAX_DIM {
            jacobi_violation(&self.consts, d, None)
        } else {
            let mut rng = rng_for(seed, "jacobi");
            let triples: Vec<(usize, usize, usize)> = (0..JACOBI_RANDOM_TRIPLES)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
                .collect();
            jacobi_violation(&self.consts, d, Some(&triples))
        }
    }

    /// `mu(v, zeta)(e_a) = <zeta, e_a . v>`.
    pub fn moment_map(&self, v: &[Scalar], zeta: &[Scalar]) -> Vec<Scalar> {
        (0..self.dim_g())
            .map(|a| self.rep.act(a, v).iter().zip(zeta).map(|(x, z)| x * z).sum())
            .collect()
    }

    /// `(1 ⋉ zeta) . (xi, v) = (xi + mu(v, zeta), v)`.
    pub fn coadjoint_unipotent(&self, zeta: &[Scalar], eta: &DualPoint) -> DualPoint {
        let mu = self.moment_map(&eta.v, zeta);
        DualPoint { xi: eta.xi.iter().zip(&mu).map(|(a, b)| a + b).collect(), v: eta.v.clone() }
    }

    /// `B(eta)_{uv} = eta([b_u, b_v])`.
    pub fn kirillov_matrix(&self, eta: &DualPoint) -> Matrix {
        let d = self.dim();
        let coords = eta.concat();
        Matrix::from_fn(d, d, |u, w| self.consts[u][w].iter().map(|(c, k)| k * &coords[*c]).sum())
    }

    pub fn kirillov_rank(&self, eta: &DualPoint) -> usize {
        self.kirillov_matrix(eta).rank()
    }

    pub fn random_point(&self, rng: &mut rand_chacha::ChaCha8Rng) -> DualPoint {
        DualPoint { xi: random_point(rng, self.dim_g()), v: random_point(rng, self.dim_v()) }
    }

    fn max_rank(&self, seed: u64, tag: &str, samples: usize) -> usize {
        let mut rng = rng_for(seed, tag);
        (0..samples.max(1)).map(|_| self.kirillov_rank(&self.random_point(&mut rng))).max().unwrap_or(0)
    }

    /// `dim q - max rank B(eta)`, over two disjoint sample batches that must
    /// agree. On disagreement the batch size is doubled once.
    pub fn index_estimate(&self, seed: u64, samples: usize) -> Result<IndexEstimate> {
        let a = self.max_rank(seed, "index/a", samples);
        let b = self.max_rank(seed, "index/b", samples);
        let (max_rank, used) = if a == b {
            (a, samples)
        } else {
            let a2 = self.max_rank(seed, "index/a2", 2 * samples);
            let b2 = self.max_rank(seed, "index/b2", 2 * samples);
            if a2 != b2 {
                return Err(Error::Unstable(format!("Kirillov rank batches gave {a2} and {b2}")));
            }
            (a2.max(a).max(b), 2 * samples)
        };
        Ok(IndexEstimate { index: self.dim() - max_rank, max_rank, samples: used })
    }

    /// `b(q) = (dim q + ind q) / 2`.
    pub fn b_of(&self, est: &IndexEstimate) -> Scalar {
        Scalar::new((self.dim() + est.index) as i64, 2)
    }

    pub fn rais_consistency(&self, seed: u64, samples: usize) -> Result<RaisReport> {
        let est = self.index_estimate(seed, samples)?;
        let mut rng = rng_for(seed, "rais");
        let gs = generic_stabiliser(&self.rep, &mut rng, samples);
        let gx = crate::lie::stabiliser(&self.rep, &gs.point);
        let g = self.algebra();
        let ind_gx = if gx.dim() == 0 { 0 } else { subalgebra_index(g, &gx, &mut rng, samples)? };
        Ok(RaisReport {
            index: est.index,
            dim_v: self.dim_v(),
            dim_g: self.dim_g(),
            dim_gx: gx.dim(),
            ind_gx,
            gx_abelian: is_abelian(g, &gx)?,
            point: gs.point,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::s;
    use crate::lie::{ClassicalType, FormConvention};

    fn sl2_adjoint() -> SemidirectProduct {
        let g = Arc::new(LieAlgebra::classical(ClassicalType::Sl, 2, &FormConvention::default()).unwrap());
        SemidirectProduct::new(Arc::new(Representation::adjoint(g)))
    }

    #[test]
    fn brackets_of_the_ideal_vanish_and_jacobi_holds() {
        let q = sl2_adjoint();
        assert_eq!(q.dim(), 6);
        for b in 3..6 {
            for c in 3..6 {
                assert!(q.structure_constants()[b][c].is_empty());
            }
        }
        assert_eq!(q.jacobi_violation(0), None);
    }

    #[test]
    fn moment_map_on_sl2() {
        let q = sl2_adjoint();
        // basis E01 = e, E10 = f, H; v = e, zeta dual to f.
        let v = [s(1), s(0), s(0)];
        let zeta = [s(0), s(1), s(0)];
        // [e, e] = 0, [f, e] = -H, [H, e] = 2e: only e_a = f could hit f, and it gives H.
        assert_eq!(q.moment_map(&v, &zeta), vec![s(0), s(0), s(0)]);
        let zeta_e = [s(1), s(0), s(0)];
        assert_eq!(q.moment_map(&v, &zeta_e), vec![s(0), s(0), s(2)]);
        assert_eq!(q.moment_map(&vec![s(0); 3], &zeta_e), vec![s(0); 3]);
    }

    #[test]
    fn index_of_sl2_ad_semidirect() {
        let q = sl2_adjoint();
        let est = q.index_estimate(0, 20).unwrap();
        assert_eq!(est.max_rank, 4);
        assert_eq!(est.index, 2);
        let r = q.rais_consistency(0, 20).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(q.kirillov_rank(&DualPoint::zero(3, 3)), 0);
    }
}
