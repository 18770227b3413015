//! `Sp_2m x SO_n` on `2m x n` matrices, `(s1, s2) . M = s1 M - M s2`, with
//! the symmetric form `I` and the standard skew form `J`.

use std::sync::Arc;

use super::{arc, block_diag, classical, matrix_vanishes, minor_matrix, poly_zero_mat, symbolic_blocks};
use crate::catalog::check::{CheckResult, Expect};
use crate::catalog::entry::{Construction, ExtraCheck};
use crate::covariant::Covariant;
use crate::exact::{MultiPoly, PolyMat};
use crate::lie::{BlockKind, ClassicalType, FormConvention, LieAlgebra, MatrixLayout, Representation};
use crate::Result;

fn module(m: usize, n: usize) -> Result<Arc<Representation>> {
    let g = Arc::new(LieAlgebra::product(
        format!("sp{} x so{n}", 2 * m),
        &[classical(ClassicalType::Sp, 2 * m)?, classical(ClassicalType::So, n)?],
    )?);
    let layout = MatrixLayout::new(vec![BlockKind::Full { rows: 2 * m, cols: n }]);
    let gg = g.clone();
    let rep = Representation::from_matrix_action("U (x) V", g, layout, move |x, v| {
        Ok(vec![gg.block(x, 0).mul(&v[0])?.sub(&v[0].mul(&gg.block(x, 1))?)?])
    })?;
    Ok(arc(rep))
}

/// Builds `F_i = (X^(2i-1), Y^(2i-1))` with `X = M M^t J`, `Y = M^t J M`,
/// plus `(0, A_M)` when `n = 2m + 2`.
pub(super) fn build(m: usize, n: usize) -> Result<Construction> {
    let rep = module(m, n)?;
    let d = rep.dim();
    let mm = symbolic_blocks(&rep)?.remove(0);
    let j = FormConvention::standard_skew(2 * m).map(|c| MultiPoly::constant(d, c.clone()));
    let mt = mm.transpose();
    let x = mm.mul(&mt)?.mul(&j)?;
    let y = mt.mul(&j)?.mul(&mm)?;
    let mut family = Vec::new();
    let mut labels = Vec::new();
    let mut pairs = Vec::new();
    for i in 1..=m {
        let e = (2 * i - 1) as u32;
        let (xe, ye) = (x.pow(e)?, y.pow(e)?);
        family.push(Covariant::from_matrix(rep.clone(), 2 * e, &block_diag(&[xe.clone(), ye.clone()], d))?);
        labels.push(format!("F_{i}"));
        pairs.push((xe, ye));
    }
    let a_m = if n == 2 * m + 2 {
        let a = minor_matrix(&mm)?;
        let zero = poly_zero_mat(2 * m, 2 * m, d);
        family.push(Covariant::from_matrix(rep.clone(), (2 * m) as u32, &block_diag(&[zero, a.clone()], d))?);
        labels.push(format!("F_{} = (0, A_M)", m + 1));
        Some(a)
    } else {
        None
    };
    let mut c = Construction::new(rep, family, labels);

    let jj = j.clone();
    c.extras.push(ExtraCheck::new("X^t J + J X = 0 and Y^t + Y = 0", move |cfg| {
        let mut polys: Vec<MultiPoly> = Vec::new();
        for (xe, ye) in &pairs {
            let sp: PolyMat = xe.transpose().mul(&jj)?.add(&jj.mul(xe)?)?;
            let so: PolyMat = ye.transpose().add(ye)?;
            polys.extend(sp.entries().iter().cloned());
            polys.extend(so.entries().iter().cloned());
        }
        let id = crate::exact::decide_vanish(&polys, d, cfg, "sp_so/forms")?;
        Ok(CheckResult::from_identity("", Expect::Holds, &id))
    }));
    if let Some(a) = a_m {
        c.extras.push(ExtraCheck::new("A_M is skew and M A_M = 0", move |cfg| {
            let skew = a.transpose().add(&a)?;
            let prod = mm.mul(&a)?;
            let both = block_diag(&[skew, prod], d);
            Ok(CheckResult::from_identity("", Expect::Holds, &matrix_vanishes(&both, d, cfg, "sp_so/minors")?))
        }));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariant::{is_equivariant, is_in_ker_phi};
    use crate::exact::CheckConfig;

    #[test]
    fn m1_cases() {
        for n in [2, 3, 4] {
            let c = build(1, n).unwrap();
            assert!(c.rep.homomorphism_violation(None).is_none());
            assert_eq!(c.family.len(), if n == 4 { 2 } else { 1 });
            let cfg = CheckConfig::exact();
            let all: Vec<usize> = (0..c.rep.algebra().dim()).collect();
            for f in &c.family {
                assert!(is_in_ker_phi(f, &cfg).unwrap().holds());
                assert!(is_equivariant(f, &all, &cfg).unwrap().holds());
            }
            for x in &c.extras {
                let r = x.run(&cfg);
                assert!(r.verdict.is_pass(), "{r:?}");
            }
        }
    }
}
