use std::sync::Arc;

use super::Covariant;
use crate::exact::{Mat, MultiPoly, PolyMat};
use crate::lie::{MatrixLayout, Representation};
use crate::{Error, Result};

fn two_blocks(rep: &Representation) -> Result<&MatrixLayout> {
    let layout = rep
        .layout()
        .ok_or_else(|| Error::BlockStructure("module has no matrix layout".into()))?;
    if layout.blocks().len() < 2 {
        return Err(Error::BlockStructure("polarization needs two blocks".into()));
    }
    Ok(layout)
}

/// Splits a polynomial in `n + 1` variables by powers of the last one.
fn split_last(p: &MultiPoly, n: usize) -> Vec<MultiPoly> {
    p.coefficients_in(n).iter().map(|c| c.truncate_vars(n)).collect()
}

/// Coefficients `F_k` of `F(A + t B, B) = sum_k F_k(A, B) t^k`, for `k = 0..=deg F`,
/// where `A`, `B` are the first two blocks, which must be of the same kind.
pub fn polarize_covariant(f: &Covariant) -> Result<Vec<Covariant>> {
    let rep = f.rep();
    let layout = two_blocks(rep)?;
    let (b0, b1) = (layout.blocks()[0], layout.blocks()[1]);
    if b0 != b1 {
        return Err(Error::BlockStructure(format!("blocks {b0:?} and {b1:?} differ")));
    }
    let n = rep.dim();
    let t = MultiPoly::var(n + 1, n);
    let off1 = layout.offsets()[1];
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| {
            let x = MultiPoly::var(n + 1, i);
            if i < b0.dim() {
                &x + &t.mul_ref(&MultiPoly::var(n + 1, off1 + i))
            } else {
                x
            }
        })
        .collect();
    let d = f.degree() as usize;
    let mut comps: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::zero(n); f.components().len()]; d + 1];
    for (a, p) in f.components().iter().enumerate() {
        for (k, c) in split_last(&p.compose(&images), n).into_iter().enumerate() {
            comps[k][a] = c;
        }
    }
    comps.into_iter().map(|c| Covariant::new(rep.clone(), f.degree(), c)).collect()
}

/// Coefficients of `formula(A + t B, B, ...)` in powers of `t`, as matrices of
/// polynomials on `V`. The first two blocks must have equal shapes; their
/// symmetry types may differ, and the formula's value need not lie in `g`.
pub fn polarize_formula(
    rep: &Arc<Representation>,
    formula: impl Fn(&[PolyMat]) -> Result<PolyMat>,
) -> Result<Vec<PolyMat>> {
    let layout = two_blocks(rep)?;
    let (b0, b1) = (layout.blocks()[0], layout.blocks()[1]);
    if b0.shape() != b1.shape() {
        return Err(Error::BlockStructure(format!("blocks {b0:?} and {b1:?} have different shapes")));
    }
    let n = rep.dim();
    let mut mats = layout.symbolic(n + 1, 0);
    let t = MultiPoly::var(n + 1, n);
    mats[0] = mats[0].add(&mats[1].times_elem(&t))?;
    let value = formula(&mats)?;
    let parts: Vec<Vec<MultiPoly>> = value.entries().iter().map(|p| split_last(p, n)).collect();
    let top = parts.iter().map(Vec::len).max().unwrap_or(0).max(1);
    Ok((0..top)
        .map(|k| {
            Mat::from_fn(value.rows(), value.cols(), |i, j| {
                parts[i * value.cols() + j].get(k).cloned().unwrap_or_else(|| MultiPoly::zero(n))
            })
        })
        .collect())
}
