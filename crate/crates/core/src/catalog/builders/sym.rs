//! `SL_n` on pairs `(A, B)` with `A` symmetric and `B` skew: the module
//! `S^2(U) + L^2(U*)`, and `S^2(U) + L^2(U)` with covariants polarised from
//! `F(A, B) = B A*`.

use std::sync::Arc;

use super::{arc, classical, symbolic_blocks};
use crate::catalog::check::{CheckResult, Expect, Verdict, Witness};
use crate::catalog::entry::{Construction, ExtraCheck};
use crate::covariant::{independence_rank_at, is_in_ker_phi, lift_hat, polarize_formula, Covariant};
use crate::exact::zero_test::{random_int, rng_for};
use crate::exact::{decide_vanish, Mat, Matrix, MultiPoly, PolyMat, Scalar};
use crate::lie::{stabiliser, BlockKind, ClassicalType, MatrixLayout, Representation};
use crate::semidirect::DualPoint;
use crate::Result;

fn module(n: usize, dual: bool) -> Result<Arc<Representation>> {
    let g = Arc::new(classical(ClassicalType::Sl, n)?);
    let layout = MatrixLayout::new(vec![BlockKind::Symmetric(n), BlockKind::Skew(n)]);
    let name = if dual { "S^2(U) + L^2(U*)" } else { "S^2(U) + L^2(U)" };
    let rep = Representation::from_matrix_action(name, g, layout, move |s, v| {
        let st = s.transpose();
        let a = s.mul(&v[0])?.add(&v[0].mul(&st)?)?;
        let b = if dual {
            st.mul(&v[1])?.add(&v[1].mul(s)?)?.neg()
        } else {
            s.mul(&v[1])?.add(&v[1].mul(&st)?)?
        };
        Ok(vec![a, b])
    })?;
    Ok(arc(rep))
}

/// `A = [[0, D], [D, 0]]`, `B = [[0, C], [-C, 0]]` with `D = diag(d)`,
/// `C = diag(c)`, plus a middle index (1 in `A`, 0 in `B`) for odd `n`.
fn witness(n: usize, d: &[i64], c: &[i64]) -> [Matrix; 2] {
    let k = n / 2;
    let off = n - k;
    let mut a = Matrix::zeros(n, n);
    let mut b = Matrix::zeros(n, n);
    for j in 0..k {
        a.set(j, off + j, Scalar::from_int(d[j]));
        a.set(off + j, j, Scalar::from_int(d[j]));
        b.set(j, off + j, Scalar::from_int(c[j]));
        b.set(off + j, j, Scalar::from_int(-c[j]));
    }
    if n % 2 == 1 {
        a.set(k, k, Scalar::one());
    }
    [a, b]
}

/// For even `n` the family is not a basis of `Ker(phi)`: on the divisor
/// `Pf B = 0` there are regular points where the rank drops below `l`.
/// Points with `B` singular are drawn by zeroing the last row and column.
fn degeneracy_check(rep: Arc<Representation>, family: Vec<Covariant>, n: usize) -> ExtraCheck {
    ExtraCheck::new("even n: rank drops at a regular point with Pf B = 0", move |cfg| {
        let mut rng = rng_for(cfg.seed, "sym/degenerate");
        let l = n / 2;
        let layout = rep.layout().expect("layout");
        for _ in 0..50 {
            let mut a = Matrix::zeros(n, n);
            let mut b = Matrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let x = random_int(&mut rng);
                    a.set(i, j, x.clone());
                    a.set(j, i, x);
                }
                for j in i + 1..n - 1 {
                    let x = random_int(&mut rng);
                    b.set(i, j, x.clone());
                    b.set(j, i, -x);
                }
            }
            let v = layout.from_matrices(&[a, b])?;
            if stabiliser(&rep, &v).dim() != l {
                continue;
            }
            let rank = independence_rank_at(&family, &v);
            if rank < l {
                return Ok(CheckResult {
                    name: String::new(),
                    verdict: Verdict::Pass,
                    expect: Expect::Fails,
                    witness: Some(Witness::at(v, "regular point, family rank below l")),
                    detail: format!("rank {rank} < {l} at a point with dim g_v = {l}"),
                });
            }
        }
        Ok(CheckResult::fail("", Witness::note("no regular point with a rank drop in 50 draws"), "family looks like a basis"))
    })
}

pub(super) fn build_skewdual(n: usize) -> Result<Construction> {
    let rep = module(n, true)?;
    let d = rep.dim();
    let m = symbolic_blocks(&rep)?;
    let ab = m[0].mul(&m[1])?;
    let mut family = Vec::new();
    let mut labels = Vec::new();
    let mut powers = Vec::new();
    for i in 1..=n / 2 {
        let e = (2 * i - 1) as u32;
        let p = ab.pow(e)?;
        family.push(Covariant::from_matrix(rep.clone(), 2 * e, &p)?);
        labels.push(format!("(AB)^{e}"));
        powers.push(p);
    }
    let mut c = Construction::new(rep.clone(), family.clone(), labels);
    if n % 2 == 0 {
        c.extras.push(degeneracy_check(rep.clone(), family.clone(), n));
    }

    c.extras.push(ExtraCheck::new("tr (AB)^(2i-1) = 0", move |cfg| {
        let traces: Vec<MultiPoly> = powers.iter().map(Mat::trace).collect::<Result<_>>()?;
        Ok(CheckResult::from_identity("", Expect::Holds, &decide_vanish(&traces, d, cfg, "sym/trace")?))
    }));

    let (r, fam) = (rep.clone(), family.clone());
    c.extras.push(ExtraCheck::new("independent at the block witness with distinct c_j d_j", move |_| {
        let k = n / 2;
        let dd: Vec<i64> = (1..=k as i64).collect();
        let cc: Vec<i64> = vec![1; k];
        let v = r.layout().expect("layout").from_matrices(&witness(n, &dd, &cc))?;
        let rank = independence_rank_at(&fam, &v);
        Ok(CheckResult::check("", rank == k, format!("rank {rank} at d = {dd:?}, c = {cc:?}"), || {
            Witness::at(v.clone(), format!("rank {rank} < {k}"))
        }))
    }));

    let (r, fam) = (rep.clone(), family);
    c.extras.push(ExtraCheck::new("lift equals tr(Xi (AB)^(2i-1))", move |cfg| {
        let g = r.algebra();
        let mut rng = rng_for(cfg.seed, "sym/lift");
        for _ in 0..3 {
            let xi_m = g.element(&(0..g.dim()).map(|_| random_int(&mut rng)).collect::<Vec<_>>());
            let v: Vec<Scalar> = (0..d).map(|_| random_int(&mut rng)).collect();
            let xi: Vec<Scalar> = g.basis().iter().map(|e| xi_m.mul(e).and_then(|p| p.trace())).collect::<Result<_>>()?;
            let eta = DualPoint::new(xi, v.clone());
            for (i, f) in fam.iter().enumerate() {
                let lhs = lift_hat(f).eval(&eta);
                let rhs = xi_m.mul(&f.eval_matrix(&v))?.trace()?;
                if lhs != rhs {
                    return Ok(CheckResult::fail("", Witness::at(eta.concat(), format!("member {i}: {lhs} != {rhs}")), "lift differs"));
                }
            }
        }
        Ok(CheckResult::pass("", "3 random points of q*"))
    }));

    let ab2 = ab.pow(2)?;
    let r = rep.clone();
    let sq = ab2.clone();
    c.negative_controls.push(ExtraCheck::new("tr (AB)^2 != 0", move |cfg| {
        let id = decide_vanish(&[sq.trace()?], d, cfg, "sym/even-trace")?;
        Ok(CheckResult::from_identity("", Expect::Fails, &id))
    }));
    c.negative_controls.push(ExtraCheck::new("traceless (AB)^2 not in Ker(phi)", move |cfg| {
        let f = Covariant::from_matrix(r.clone(), 4, &ab2.traceless_part()?)?;
        Ok(CheckResult::from_identity("", Expect::Fails, &is_in_ker_phi(&f, cfg)?))
    }));
    Ok(c)
}

pub(super) fn build_skew(n: usize) -> Result<Construction> {
    let rep = module(n, false)?;
    let d = rep.dim();
    let coeffs: Vec<PolyMat> = polarize_formula(&rep, |m| m[1].mul(&m[0].adjugate()?))?;
    let mut family = Vec::new();
    let mut labels = Vec::new();
    for i in (0..n.saturating_sub(1)).step_by(2) {
        family.push(Covariant::from_matrix(rep.clone(), n as u32, &coeffs[i])?);
        labels.push(format!("F_{i}"));
    }
    let mut c = Construction::new(rep.clone(), family.clone(), labels);
    if n % 2 == 0 {
        c.extras.push(degeneracy_check(rep.clone(), family, n));
    }

    let r = rep.clone();
    c.extras.push(ExtraCheck::new("det(A + t B) is even in t", move |cfg| {
        let dets = polarize_formula(&r, |m| Ok(Mat::from_rows(vec![vec![m[0].det()?]])))?;
        let odd: Vec<MultiPoly> = dets.iter().skip(1).step_by(2).map(|m| m.get(0, 0).clone()).collect();
        Ok(CheckResult::from_identity("", Expect::Holds, &decide_vanish(&odd, d, cfg, "sym/det-even")?))
    }));
    let even: Vec<PolyMat> = coeffs.iter().step_by(2).cloned().collect();
    c.extras.push(ExtraCheck::new("even coefficients are traceless", move |cfg| {
        let traces: Vec<MultiPoly> = even.iter().map(Mat::trace).collect::<Result<_>>()?;
        Ok(CheckResult::from_identity("", Expect::Holds, &decide_vanish(&traces, d, cfg, "sym/even-trace")?))
    }));

    let f1 = coeffs.get(1).cloned();
    if let Some(f1) = f1 {
        let t1 = f1.trace()?;
        c.negative_controls.push(ExtraCheck::new("tr F_1 != 0", move |cfg| {
            Ok(CheckResult::from_identity("", Expect::Fails, &decide_vanish(&[t1.clone()], d, cfg, "sym/odd-trace")?))
        }));
        let r = rep;
        c.negative_controls.push(ExtraCheck::new("traceless F_1 not in Ker(phi)", move |cfg| {
            let f = Covariant::from_matrix(r.clone(), n as u32, &f1.traceless_part()?)?;
            Ok(CheckResult::from_identity("", Expect::Fails, &is_in_ker_phi(&f, cfg)?))
        }));
    }
    Ok(c)
}
