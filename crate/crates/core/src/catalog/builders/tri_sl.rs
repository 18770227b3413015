//! `SL_n x SL_n x SL_2` on pairs `(A, B)` of `n x n` matrices; the family
//! is the polarisation of `F(A, B) = (bar(B A*), bar(A* B))`.

use std::sync::Arc;

use super::{arc, block_diag, classical, poly_zero_mat, symbolic_blocks};
use crate::catalog::check::{CheckResult, Witness};
use crate::catalog::entry::{Construction, ExtraCheck, Scope, WeightCheck};
use crate::covariant::{polarize_covariant, span_is_stable, Covariant};
use crate::exact::{Mat, Matrix, Scalar};
use crate::lie::{BlockKind, ClassicalType, LieAlgebra, MatrixLayout, Representation};
use crate::Result;

fn module(n: usize) -> Result<Arc<Representation>> {
    let sl = classical(ClassicalType::Sl, n)?;
    let g = Arc::new(LieAlgebra::product("sl_n x sl_n x sl_2", &[sl.clone(), sl, classical(ClassicalType::Sl, 2)?])?);
    let layout = MatrixLayout::new(vec![BlockKind::Full { rows: n, cols: n }; 2]);
    let gg = g.clone();
    let rep = Representation::from_matrix_action("k^n (x) k^n (x) k^2", g, layout, move |x, v| {
        let (s1, s2, t) = (gg.block(x, 0), gg.block(x, 1), gg.block(x, 2));
        let side = |m: &Matrix| -> Result<Matrix> { s1.mul(m)?.sub(&m.mul(&s2)?) };
        let a = side(&v[0])?.add(&v[0].scale(t.get(0, 0)))?.add(&v[1].scale(t.get(0, 1)))?;
        let b = side(&v[1])?.add(&v[0].scale(t.get(1, 0)))?.add(&v[1].scale(t.get(1, 1)))?;
        Ok(vec![a, b])
    })?;
    Ok(arc(rep))
}

/// Coordinates of `diag(0, 0, t)` for an `sl_2` matrix `t`.
fn sl2_coords(g: &LieAlgebra, n: usize, t: [[i64; 2]; 2]) -> Result<Vec<Scalar>> {
    let mut x = Matrix::zeros(2 * n + 2, 2 * n + 2);
    for (i, row) in t.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            x.set(2 * n + i, 2 * n + j, Scalar::from_int(v));
        }
    }
    g.coords_of(&x)
}

pub(super) fn build(n: usize) -> Result<Construction> {
    let rep = module(n)?;
    let g = rep.algebra().clone();
    let d = rep.dim();
    let m = symbolic_blocks(&rep)?;
    let (a, b) = (&m[0], &m[1]);
    let adj_a = a.adjugate()?;
    let zero2 = poly_zero_mat(2, 2, d);
    let f0 = block_diag(&[b.mul(&adj_a)?.traceless_part()?, adj_a.mul(b)?.traceless_part()?, zero2.clone()], d);
    let f0 = Covariant::from_matrix(rep.clone(), n as u32, &f0)?;
    let all = polarize_covariant(&f0)?;
    let family: Vec<Covariant> = all[..n - 1].to_vec();
    let labels = (0..n - 1).map(|i| format!("F_{i}")).collect();
    let mut c = Construction::new(rep.clone(), family.clone(), labels);

    let tilde = Scope { name: "sl_n x sl_n".into(), indices: g.basis_in_factors(&[0, 1]) };
    c.scope = Some(tilde);
    c.fails_beyond = Some(Scope::full(&rep));
    c.stable_under = Some(Scope::full(&rep));
    let h = sl2_coords(&g, n, [[1, 0], [0, -1]])?;
    let f = sl2_coords(&g, n, [[0, 0], [1, 0]])?;
    let e = sl2_coords(&g, n, [[0, 1], [0, 0]])?;
    c.weights.push(WeightCheck { name: "h * F_0 = (2-n) F_0".into(), x: h, member: 0, weight: Scalar::from_int(2 - n as i64) });
    c.weights.push(WeightCheck { name: "f * F_0 = 0".into(), x: f, member: 0, weight: Scalar::zero() });

    let tail = all[n - 1..].to_vec();
    c.extras.push(ExtraCheck::new("coefficients n-1 and n vanish", move |_| {
        let ok = tail.iter().all(Covariant::is_zero);
        Ok(CheckResult::check("", ok, "F(A + t B, B) has degree n-2 in t", || Witness::note("a top coefficient is nonzero")))
    }));

    let (fam, r) = (family.clone(), rep.clone());
    let (a2, b2) = (a.clone(), b.clone());
    c.extras.push(ExtraCheck::new("companion (bar(A B*), bar(B* A)) = -F_{n-2}", move |_| {
        let adj_b = b2.adjugate()?;
        let hat = block_diag(&[a2.mul(&adj_b)?.traceless_part()?, adj_b.mul(&a2)?.traceless_part()?, zero2.clone()], d);
        let hat = Covariant::from_matrix(r.clone(), n as u32, &hat)?;
        let ok = hat == fam[n - 2].scale(&Scalar::from_int(-1));
        Ok(CheckResult::check("", ok, "exact polynomial identity", || Witness::note("companion differs from -F_{n-2}")))
    }));

    let sl2 = g.basis_in_factors(&[2]);
    c.extras.push(ExtraCheck::new("span is the simple sl_2-module of dimension n-1", move |_| {
        let Some(mats) = span_is_stable(&family, &sl2)? else {
            return Ok(CheckResult::fail("", Witness::note("e_a * F_i outside the span"), "span is not sl_2-stable"));
        };
        let mut em = Matrix::zeros(n - 1, n - 1);
        for (k, &idx) in sl2.iter().enumerate() {
            em = em.add(&mats[k].scale(&e[idx]))?;
        }
        let top = if n == 2 { Matrix::identity(1) } else { em.pow((n - 2) as u32)? };
        let ok = !Mat::is_zero(&top);
        Ok(CheckResult::check("", ok, format!("e^{} != 0 on the span", n - 2), || Witness::note("e acts with a shorter Jordan chain")))
    }));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariant::{is_equivariant, is_in_ker_phi, weight_under};
    use crate::exact::CheckConfig;

    #[test]
    fn n3_family_is_tilde_equivariant_and_in_ker_phi() {
        let c = build(3).unwrap();
        assert!(c.rep.homomorphism_violation(None).is_none());
        let cfg = CheckConfig::exact();
        let scope = c.scope.as_ref().unwrap();
        for f in &c.family {
            assert!(is_in_ker_phi(f, &cfg).unwrap().holds());
            assert!(is_equivariant(f, &scope.indices, &cfg).unwrap().holds());
        }
        let all: Vec<usize> = (0..c.rep.algebra().dim()).collect();
        assert!(!is_equivariant(&c.family[0], &all, &cfg).unwrap().holds());
        for w in &c.weights {
            assert_eq!(weight_under(&w.x, &c.family[w.member]), Some(w.weight.clone()), "{}", w.name);
        }
        for x in &c.extras {
            assert!(x.run(&cfg).verdict.is_pass(), "{}", x.name);
        }
    }
}
