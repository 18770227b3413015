//! `sl_n` acting on itself; the covariants are the differentials of the
//! coefficients of the characteristic polynomial.

use super::{arc, classical, invariance_identity};
use crate::catalog::check::{CheckResult, Expect, Witness};
use crate::catalog::entry::{Construction, ExtraCheck};
use crate::covariant::Covariant;
use crate::exact::{Matrix, MultiPoly};
use crate::lie::{ClassicalType, Representation};
use crate::{Error, Result};
use std::sync::Arc;

pub(super) fn build(n: usize) -> Result<Construction> {
    let g = Arc::new(classical(ClassicalType::Sl, n)?);
    let rep = arc(Representation::adjoint(g.clone()));
    let d = g.dim();
    let vars: Vec<MultiPoly> = (0..d).map(|i| MultiPoly::var(d, i)).collect();
    let x = g.element_generic(&vars, &MultiPoly::zero(d));
    let cp = x.char_poly()?;
    let gram_inv: Matrix = g.trace_form().inverse().ok_or(Error::NotSubalgebra)?;
    let mut family = Vec::new();
    let mut labels = Vec::new();
    let mut invariants = Vec::new();
    for i in 2..=n {
        let f = cp[n - i].clone();
        let grad: Vec<MultiPoly> = (0..d).map(|b| f.derivative(b)).collect();
        let comps: Vec<MultiPoly> = (0..d)
            .map(|a| {
                let mut acc = MultiPoly::zero(d);
                for (b, gb) in grad.iter().enumerate() {
                    acc.add_scaled(gb, gram_inv.get(a, b));
                }
                acc
            })
            .collect();
        family.push(Covariant::new(rep.clone(), (i - 1) as u32, comps)?);
        labels.push(format!("d f_{i}"));
        invariants.push(f);
    }
    let mut c = Construction::new(rep.clone(), family.clone(), labels);

    let r = rep.clone();
    c.extras.push(ExtraCheck::new("char-poly coefficients are invariant", move |cfg| {
        for (i, f) in invariants.iter().enumerate() {
            let id = invariance_identity(&r, f, cfg, "adjoint/invariant")?;
            if !id.holds() {
                let mut r = CheckResult::from_identity("", Expect::Holds, &id);
                r.detail = format!("f_{} is moved: {}", i + 2, r.detail);
                return Ok(r);
            }
        }
        Ok(CheckResult::pass("", "e_a . f_i = 0 for all a, i"))
    }));
    if n > 2 {
        return Ok(c);
    }
    c.extras.push(ExtraCheck::new("covariant is proportional to x", move |_| {
        let f = &family[0];
        let d = f.rep().dim();
        let c0 = f.components()[0].coeff(&unit(d, 0));
        let ok = !c0.is_zero()
            && f.components()
                .iter()
                .enumerate()
                .all(|(a, p)| *p == MultiPoly::var(d, a).scale(&c0));
        Ok(CheckResult::check("", ok, format!("F(x) = {c0} x"), || Witness::note("not a multiple of x")))
    }));
    Ok(c)
}

fn unit(d: usize, i: usize) -> Vec<u8> {
    let mut e = vec![0u8; d];
    e[i] = 1;
    e
}
