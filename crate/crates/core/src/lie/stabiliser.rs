//! Stabilisers of points and generic stabilisers.

use rand_chacha::ChaCha8Rng;

use super::algebra::LieAlgebra;
use super::rep::Representation;
use crate::exact::zero_test::random_point;
use crate::exact::{rank_of_vectors, Matrix, Scalar};
use crate::{Error, Result};

/// A linear subspace given by independent coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn new(ambient_dim: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        if basis.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::Dimension("basis vector of wrong length".into()));
        }
        if rank_of_vectors(&basis) != basis.len() {
            return Err(Error::DependentFamily);
        }
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn whole(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| (0..ambient_dim).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        rank_of_vectors(&vs) == self.basis.len()
    }

    /// Whether the span of `vs` equals this subspace.
    pub fn equals_span(&self, vs: &[Vec<Scalar>]) -> bool {
        let r = rank_of_vectors(vs);
        r == self.dim() && vs.iter().all(|v| self.contains(v))
    }
}

/// `g_v = {x in g : x . v = 0}`.
pub fn stabiliser(r: &Representation, v: &[Scalar]) -> Subspace {
    let (_, kernel) = r.orbit_matrix(v).rank_and_kernel();
    Subspace { ambient_dim: r.algebra().dim(), basis: kernel }
}

/// Whether a subalgebra is abelian. Errors when `s` is not closed under the
/// bracket.
pub fn is_abelian(g: &LieAlgebra, s: &Subspace) -> Result<bool> {
    let zero = Scalar::zero();
    let mut abelian = true;
    for (i, x) in s.basis().iter().enumerate() {
        for y in &s.basis()[i + 1..] {
            let br = g.bracket_coords(x, y, &zero);
            if br.iter().any(|c| !c.is_zero()) {
                abelian = false;
                if !s.contains(&br) {
                    return Err(Error::NotSubalgebra);
                }
            }
        }
    }
    Ok(abelian)
}

/// Index of a subalgebra by its own Kirillov form at random functionals:
/// `dim s - max rank (f([x_i, x_j]))`.
pub fn subalgebra_index(g: &LieAlgebra, s: &Subspace, rng: &mut ChaCha8Rng, samples: usize) -> Result<usize> {
    let k = s.dim();
    let zero = Scalar::zero();
    // Coordinates of brackets of basis vectors inside s.
    let cols = Matrix::from_columns(s.basis(), s.ambient_dim());
    let (_, pivots) = cols.transpose().rref();
    let square = Matrix::from_fn(k, k, |p, b| s.basis()[b][pivots[p]].clone());
    let inv = square.inverse().ok_or(Error::DependentFamily)?;
    let mut table = vec![vec![Vec::new(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let br = g.bracket_coords(&s.basis()[i], &s.basis()[j], &zero);
            let piv: Vec<Scalar> = pivots.iter().map(|&p| br[p].clone()).collect();
            let c = inv.mul_vec(&piv);
            if cols.mul_vec(&c) != br {
                return Err(Error::NotSubalgebra);
            }
            table[i][j] = c;
        }
    }
    let mut best = 0;
    for _ in 0..samples.max(1) {
        let f = random_point(rng, k);
        let b = Matrix::from_fn(k, k, |i, j| table[i][j].iter().zip(&f).map(|(x, y)| x * y).sum());
        best = best.max(b.rank());
    }
    Ok(k - best)
}

/// Result of sampling stabilisers at random points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericStabiliser {
    pub dim: usize,
    /// A sampled point attaining the minimum.
    pub point: Vec<Scalar>,
    pub samples: usize,
}

/// Maximum number of consecutive rejections of a point whose stabiliser is
/// larger than the running minimum.
pub const MAX_REJECTIONS: usize = 5;

/// Minimum of `dim g_v` over `samples` random integer points. A point whose
/// stabiliser is larger than the running minimum is redrawn, at most
/// [`MAX_REJECTIONS`] times in a row.
pub fn generic_stabiliser(r: &Representation, rng: &mut ChaCha8Rng, samples: usize) -> GenericStabiliser {
    let mut best: Option<(usize, Vec<Scalar>)> = None;
    for _ in 0..samples.max(1) {
        let mut rejections = 0;
        loop {
            let v = random_point(rng, r.dim());
            let d = stabiliser(r, &v).dim();
            match &best {
                Some((m, _)) if d > *m && rejections < MAX_REJECTIONS => rejections += 1,
                Some((m, _)) if d >= *m => break,
                _ => {
                    best = Some((d, v));
                    break;
                }
            }
        }
    }
    let (dim, point) = best.expect("at least one sample");
    GenericStabiliser { dim, point, samples: samples.max(1) }
}

pub fn generic_stabiliser_dim(r: &Representation, rng: &mut ChaCha8Rng, samples: usize) -> usize {
    generic_stabiliser(r, rng, samples).dim
}

/// Draws a random point whose stabiliser has dimension exactly `l`.
pub fn sample_regular_point(r: &Representation, l: usize, rng: &mut ChaCha8Rng) -> Result<(Vec<Scalar>, Subspace)> {
    for _ in 0..50 {
        let v = random_point(rng, r.dim());
        let s = stabiliser(r, &v);
        if s.dim() == l {
            return Ok((v, s));
        }
    }
    Err(Error::Unstable(format!("no point with stabiliser of dimension {l} in 50 draws")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::zero_test::rng_for;
    use crate::exact::s;
    use crate::lie::algebra::{ClassicalType, FormConvention};
    use std::sync::Arc;

    fn sl(n: usize) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::classical(ClassicalType::Sl, n, &FormConvention::default()).unwrap())
    }

    #[test]
    fn stabiliser_basics() {
        let g = sl(2);
        let ad = Representation::adjoint(g.clone());
        assert_eq!(stabiliser(&ad, &[s(0), s(0), s(0)]).dim(), 3);
        // basis is E01, E10, H; v = H
        let st = stabiliser(&ad, &[s(0), s(0), s(1)]);
        assert_eq!(st.dim(), 1);
        assert!(is_abelian(&g, &st).unwrap());
    }

    #[test]
    fn abelian_checks() {
        let g = sl(3);
        // sl3 basis: 6 off-diagonal units, then H1, H2.
        let cartan = Subspace::new(8, vec![
            (0..8).map(|i| if i == 6 { s(1) } else { s(0) }).collect(),
            (0..8).map(|i| if i == 7 { s(1) } else { s(0) }).collect(),
        ])
        .unwrap();
        assert!(is_abelian(&g, &cartan).unwrap());
        let g2 = sl(2);
        let borel = Subspace::new(3, vec![vec![s(1), s(0), s(0)], vec![s(0), s(0), s(1)]]).unwrap();
        assert!(!is_abelian(&g2, &borel).unwrap());
        let not_closed = Subspace::new(3, vec![vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)]]).unwrap();
        assert!(is_abelian(&g2, &not_closed).is_err());
    }

    #[test]
    fn generic_stabiliser_of_adjoint_is_a_torus() {
        for n in 2..=4 {
            let ad = Representation::adjoint(sl(n));
            let mut rng = rng_for(1, "test");
            assert_eq!(generic_stabiliser_dim(&ad, &mut rng, 10), n - 1);
        }
    }

    #[test]
    fn index_of_reductive_and_borel() {
        let g = sl(3);
        let mut rng = rng_for(0, "idx");
        assert_eq!(subalgebra_index(&g, &Subspace::whole(8), &mut rng, 10).unwrap(), 2);
    }
}
