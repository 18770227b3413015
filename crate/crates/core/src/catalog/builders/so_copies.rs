//! `SO_{n+2}` on `n` copies of the defining module, as `(n+2) x n` matrices
//! with `s . M = s M`; the covariant is the skew matrix of signed maximal minors.

use std::sync::Arc;

use super::{arc, classical, matrix_vanishes, minor_matrix, block_diag, symbolic_blocks};
use crate::catalog::check::{CheckResult, Expect};
use crate::catalog::entry::{Construction, ExtraCheck};
use crate::covariant::Covariant;
use crate::lie::{BlockKind, ClassicalType, MatrixLayout, Representation};
use crate::Result;

fn module(n: usize) -> Result<Arc<Representation>> {
    let g = Arc::new(classical(ClassicalType::So, n + 2)?);
    let layout = MatrixLayout::new(vec![BlockKind::Full { rows: n + 2, cols: n }]);
    let rep = Representation::from_matrix_action("n V", g, layout, |s, v| Ok(vec![s.mul(&v[0])?]))?;
    Ok(arc(rep))
}

pub(super) fn build(n: usize) -> Result<Construction> {
    let rep = module(n)?;
    let d = rep.dim();
    let mm = symbolic_blocks(&rep)?.remove(0);
    let a = minor_matrix(&mm)?;
    let f = Covariant::from_matrix(rep.clone(), n as u32, &a)?;
    let mut c = Construction::new(rep, vec![f], vec!["A_M".into()]);
    c.extras.push(ExtraCheck::new("A_M is skew and A_M M = 0", move |cfg| {
        let both = block_diag(&[a.transpose().add(&a)?, a.mul(&mm)?], d);
        Ok(CheckResult::from_identity("", Expect::Holds, &matrix_vanishes(&both, d, cfg, "so_copies/minors")?))
    }));
    Ok(c)
}
