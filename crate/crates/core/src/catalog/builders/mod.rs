//! Constructors for the executable entries.

mod adjoint;
mod cubic;
mod cyclic;
mod so_copies;
mod sp_so;
mod sym;
mod tri_sl;

pub use cubic::cubic_combination;

use std::sync::Arc;

use super::entry::Construction;
use super::manifest::{EntrySpec, Params};
use crate::exact::{decide_vanish, CheckConfig, Identity, Mat, Matrix, MultiPoly, PolyMat, Ring, Scalar};
use crate::lie::{ClassicalType, FormConvention, LieAlgebra, Representation};
use crate::{Error, Result};

pub(crate) fn build(spec: &EntrySpec, p: &Params) -> Result<Construction> {
    let get = |k: &str| -> Result<usize> {
        p.get(k)
            .copied()
            .and_then(|v| usize::try_from(v).ok())
            .ok_or_else(|| Error::Manifest(format!("{}: missing parameter `{k}`", spec.id)))
    };
    match spec.builder.as_str() {
        "adjoint" => adjoint::build(get("n")?),
        "tri_sl" => tri_sl::build(get("n")?),
        "cubic" => cubic::build(),
        "cyclic_quiver" => {
            let gl = match spec.option("variant") {
                Some("gl") => true,
                Some("sl") | None => false,
                Some(v) => return Err(Error::Manifest(format!("unknown variant `{v}`"))),
            };
            cyclic::build(get("n")?, get("k")?, gl)
        }
        "sym_skewdual" => sym::build_skewdual(get("n")?),
        "sym_skew" => sym::build_skew(get("n")?),
        "sp_so" => {
            let m = get("m")?;
            let n = match spec.option("case") {
                Some("i") => 2 * m,
                Some("ii") => 2 * m + 1,
                Some("iii") => 2 * m + 2,
                other => return Err(Error::Manifest(format!("unknown case {other:?}"))),
            };
            sp_so::build(m, n)
        }
        "so_copies" => so_copies::build(get("n")?),
        other => Err(Error::Manifest(format!("unknown builder `{other}`"))),
    }
}

fn classical(kind: ClassicalType, n: usize) -> Result<LieAlgebra> {
    LieAlgebra::classical(kind, n, &FormConvention::default())
}

/// The symbolic matrices of a module with a layout, in its own coordinates.
fn symbolic_blocks(rep: &Representation) -> Result<Vec<PolyMat>> {
    let layout = rep.layout().ok_or_else(|| Error::BlockStructure("module has no layout".into()))?;
    Ok(layout.symbolic(rep.dim(), 0))
}

fn poly_zero_mat(rows: usize, cols: usize, nvars: usize) -> PolyMat {
    Mat::zeros_like(rows, cols, &MultiPoly::zero(nvars))
}

fn block_diag(blocks: &[PolyMat], nvars: usize) -> PolyMat {
    Mat::block_diag(blocks, &MultiPoly::zero(nvars))
}

/// Entries of a polynomial matrix as a list, for identity checks.
fn entries_of(m: &PolyMat) -> Vec<MultiPoly> {
    m.entries().to_vec()
}

/// Decides `m = 0` entrywise.
fn matrix_vanishes(m: &PolyMat, nvars: usize, cfg: &CheckConfig, tag: &str) -> Result<Identity> {
    decide_vanish(&entries_of(m), nvars, cfg, tag)
}

/// The skew matrix `A_M` of signed maximal minors of a matrix with two more
/// rows than columns (deleting rows `i < j`) or two more columns than rows
/// (deleting columns): `a_ij = (-1)^(i+j) det M_ij`, `a_ji = -a_ij`.
pub fn minor_matrix<R: Ring>(m: &Mat<R>) -> Result<Mat<R>> {
    let (r, c) = (m.rows(), m.cols());
    let by_rows = if r == c + 2 {
        true
    } else if c == r + 2 {
        false
    } else {
        return Err(Error::Dimension(format!("minor matrix needs a k x (k+2) or (k+2) x k matrix, got {r}x{c}")));
    };
    let size = if by_rows { r } else { c };
    let proto = m.get(0, 0).zero_like();
    let mut out = Mat::zeros_like(size, size, &proto);
    for i in 0..size {
        for j in i + 1..size {
            let keep: Vec<usize> = (0..size).filter(|&x| x != i && x != j).collect();
            let all: Vec<usize> = (0..if by_rows { c } else { r }).collect();
            let sub = if by_rows { m.submatrix(&keep, &all) } else { m.submatrix(&all, &keep) };
            let d = sub.det()?;
            let a = if (i + j) % 2 == 0 { d } else { d.negated() };
            out.set(j, i, a.negated());
            out.set(i, j, a);
        }
    }
    Ok(out)
}

fn arc(rep: Representation) -> Arc<Representation> {
    Arc::new(rep)
}

/// The vector field `v -> rho v` as `(row, col, value)` triples.
fn linear_field(rho: &Matrix) -> Vec<(usize, usize, Scalar)> {
    let mut out = Vec::new();
    for j in 0..rho.rows() {
        for k in 0..rho.cols() {
            if !rho.get(j, k).is_zero() {
                out.push((j, k, rho.get(j, k).clone()));
            }
        }
    }
    out
}

/// Decides `e_a . f = 0` for every basis element, i.e. `f` is invariant.
fn invariance_identity(rep: &Representation, f: &MultiPoly, cfg: &CheckConfig, tag: &str) -> Result<Identity> {
    let defects: Vec<MultiPoly> =
        rep.action().iter().map(|rho| f.derivative_along_linear(&linear_field(rho))).collect();
    decide_vanish(&defects, rep.dim(), cfg, tag)
}
