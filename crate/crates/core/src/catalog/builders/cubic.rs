//! `(SL_2)^3` on cubic 2-matrices `a_ijk`; coordinate `i*4 + j*2 + k`.

use std::sync::Arc;

use super::{arc, block_diag, classical};
use crate::catalog::check::{CheckResult, Expect, Witness};
use crate::catalog::entry::{Construction, ExtraCheck};
use crate::covariant::{apply_phi, is_in_ker_phi, Covariant};
use crate::exact::{Mat, Matrix, MultiPoly, PolyMat, Scalar};
use crate::lie::{ClassicalType, LieAlgebra, Representation};
use crate::Result;

fn idx(i: usize, j: usize, k: usize) -> usize {
    i * 4 + j * 2 + k
}

fn module() -> Result<Arc<Representation>> {
    let sl2 = classical(ClassicalType::Sl, 2)?;
    let g = Arc::new(LieAlgebra::product("sl2^3", &[sl2.clone(), sl2.clone(), sl2])?);
    let action: Vec<Matrix> = g
        .basis()
        .iter()
        .map(|x| {
            let b: Vec<Matrix> = (0..3).map(|f| g.block(x, f)).collect();
            let mut m = Matrix::zeros(8, 8);
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        for t in 0..2 {
                            // factor f acts on the f-th index
                            let targets = [(idx(t, j, k), &b[0], i, t), (idx(i, t, k), &b[1], j, t), (idx(i, j, t), &b[2], k, t)];
                            for (col, mat, r, c) in targets {
                                let v = m.get(idx(i, j, k), col) + mat.get(r, c);
                                m.set(idx(i, j, k), col, v);
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    Ok(arc(Representation::new("k2 (x) k2 (x) k2", g, action)?))
}

/// The three quadratic maps to `sl_2`. For the slices `M_0`, `M_1` along the
/// `i`-th index, `m = det M_1`, `p = det M_0` and `n` is the mixed term of
/// `det(x M_0 + y M_1)`. With `g` acting on the index by `x a`, the
/// equivariant matrix for the column `(m, n, p)` is `[[n, -2p], [2m, -n]]`.
fn tilde_maps() -> [PolyMat; 3] {
    let a = |i: usize, j: usize, k: usize| MultiPoly::var(8, idx(i, j, k));
    let pr = |x: (usize, usize, usize), y: (usize, usize, usize)| a(x.0, x.1, x.2).mul_ref(&a(y.0, y.1, y.2));
    let two = Scalar::from_int(2);
    let col = |m: MultiPoly, n: MultiPoly, p: MultiPoly| {
        Mat::from_rows(vec![vec![n.clone(), p.scale(&-&two)], vec![m.scale(&two), -&n]])
    };
    let f1 = col(
        &pr((1, 1, 1), (1, 0, 0)) - &pr((1, 0, 1), (1, 1, 0)),
        &(&(&pr((1, 1, 1), (0, 0, 0)) + &pr((0, 1, 1), (1, 0, 0))) - &pr((0, 0, 1), (1, 1, 0))) - &pr((1, 0, 1), (0, 1, 0)),
        &pr((0, 1, 1), (0, 0, 0)) - &pr((0, 0, 1), (0, 1, 0)),
    );
    let f2 = col(
        &pr((1, 1, 1), (0, 1, 0)) - &pr((0, 1, 1), (1, 1, 0)),
        &(&(&pr((1, 1, 1), (0, 0, 0)) - &pr((0, 1, 1), (1, 0, 0))) - &pr((0, 0, 1), (1, 1, 0))) + &pr((1, 0, 1), (0, 1, 0)),
        &pr((1, 0, 1), (0, 0, 0)) - &pr((0, 0, 1), (1, 0, 0)),
    );
    let f3 = col(
        &pr((1, 1, 1), (0, 0, 1)) - &pr((1, 0, 1), (0, 1, 1)),
        &(&(&pr((1, 1, 1), (0, 0, 0)) - &pr((0, 1, 1), (1, 0, 0))) + &pr((0, 0, 1), (1, 1, 0))) - &pr((1, 0, 1), (0, 1, 0)),
        &pr((1, 1, 0), (0, 0, 0)) - &pr((1, 0, 0), (0, 1, 0)),
    );
    [f1, f2, f3]
}

fn combination_on(rep: &Arc<Representation>, coeffs: [i64; 3]) -> Result<Covariant> {
    let t = tilde_maps();
    let blocks: Vec<PolyMat> = t.iter().zip(coeffs).map(|(m, c)| m.scale(&Scalar::from_int(c))).collect();
    Covariant::from_matrix(rep.clone(), 2, &block_diag(&blocks, 8))
}

/// `F_{l,m,n} = (l F1, m F2, n F3)` on the cubic module.
pub fn cubic_combination(rep: &Arc<Representation>, l: i64, m: i64, n: i64) -> Result<Covariant> {
    combination_on(rep, [l, m, n])
}

pub(super) fn build() -> Result<Construction> {
    let rep = module()?;
    let family = vec![combination_on(&rep, [1, -1, 0])?, combination_on(&rep, [0, 1, -1])?];
    let mut c = Construction::new(rep.clone(), family, vec!["F(1,-1,0)".into(), "F(0,1,-1)".into()]);

    // The coefficients (l, m, n) with phi(F_{l,m,n}) = 0 form exactly the
    // plane l + m + n = 0: phi is linear in (l, m, n), so this is a kernel
    // computation over the coefficient vectors of phi(F1), phi(F2), phi(F3).
    let r = rep.clone();
    c.extras.push(ExtraCheck::new("Ker(phi) on span{F1,F2,F3} is l+m+n=0", move |_| {
        let images: Vec<Vec<MultiPoly>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
            .iter()
            .map(|&e| combination_on(&r, e).map(|f| apply_phi(&f)))
            .collect::<Result<_>>()?;
        let mut keys = Vec::new();
        for img in &images {
            for (j, p) in img.iter().enumerate() {
                for (e, _) in p.terms() {
                    if !keys.contains(&(j, e.clone())) {
                        keys.push((j, e.clone()));
                    }
                }
            }
        }
        let m = Mat::from_fn(keys.len(), 3, |row, col| images[col][keys[row].0].coeff(&keys[row].1));
        let (_, kernel) = m.rank_and_kernel();
        let plane = Matrix::from_ints(&[&[1, -1, 0], &[0, 1, -1]]);
        let ok = kernel.len() == 2
            && kernel.iter().all(|v| v.iter().sum::<Scalar>().is_zero())
            && crate::exact::rank_of_vectors(&[plane.row(0).to_vec(), plane.row(1).to_vec(), kernel[0].clone(), kernel[1].clone()]) == 2;
        let detail = format!("kernel has dimension {}", kernel.len());
        Ok(CheckResult::check("", ok, detail, || Witness::note(format!("kernel basis {kernel:?}"))))
    }));
    for (coeffs, expect) in [([1, -1, 0], Expect::Holds), ([2, 3, -5], Expect::Holds), ([1, 0, 0], Expect::Fails)] {
        let r = rep.clone();
        let name = format!("F({},{},{}) in Ker(phi) {}", coeffs[0], coeffs[1], coeffs[2], expect.as_str());
        c.extras.push(ExtraCheck::new(name, move |cfg| {
            let f = combination_on(&r, coeffs)?;
            Ok(CheckResult::from_identity("", expect, &is_in_ker_phi(&f, cfg)?))
        }));
    }
    let r = rep;
    c.negative_controls.push(ExtraCheck::new("F(1,1,1) not in Ker(phi)", move |cfg| {
        let f = combination_on(&r, [1, 1, 1])?;
        Ok(CheckResult::from_identity("", Expect::Fails, &is_in_ker_phi(&f, cfg)?))
    }));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariant::is_equivariant;
    use crate::exact::CheckConfig;

    #[test]
    fn kernel_iff_coefficients_sum_to_zero() {
        let rep = module().unwrap();
        assert!(rep.homomorphism_violation(None).is_none());
        let cfg = CheckConfig::exact();
        let holds = |c: [i64; 3]| is_in_ker_phi(&combination_on(&rep, c).unwrap(), &cfg).unwrap().holds();
        assert!(holds([1, -1, 0]));
        assert!(holds([0, 1, -1]));
        assert!(!holds([1, 1, 1]));
        let f = combination_on(&rep, [1, -1, 0]).unwrap();
        let all: Vec<usize> = (0..9).collect();
        assert!(is_equivariant(&f, &all, &cfg).unwrap().holds());
        let c = build().unwrap();
        for x in c.extras.iter().chain(&c.negative_controls) {
            let r = x.run(&cfg);
            assert!(r.verdict.is_pass(), "{r:?}");
        }
    }
}
