use super::Covariant;
use crate::exact::{decide_vanish, sampled_vanish, CheckConfig, Identity, MultiPoly, Scalar};
use crate::Result;

/// `phi(F)(v) = F(v) . v`, as one polynomial per coordinate of `V`.
pub fn apply_phi(f: &Covariant) -> Vec<MultiPoly> {
    let rep = f.rep();
    let n = rep.dim();
    let mut out = vec![MultiPoly::zero(n); n];
    for (a, fa) in f.components().iter().enumerate() {
        if fa.is_zero() {
            continue;
        }
        let rho = &rep.action()[a];
        for (j, o) in out.iter_mut().enumerate() {
            let row: Vec<Scalar> = (0..n).map(|k| rho.get(j, k).clone()).collect();
            if row.iter().all(Scalar::is_zero) {
                continue;
            }
            o.add_assign_ref(&fa.mul_ref(&MultiPoly::linear(n, &row)));
        }
    }
    out
}

/// Whether `F(v) . v = 0` identically. The sampled path evaluates `F(v)` and
/// acts on `v` numerically, without expanding `phi(F)`.
pub fn is_in_ker_phi(f: &Covariant, cfg: &CheckConfig) -> Result<Identity> {
    let n = f.rep().dim();
    let degree = f.degree() + 1;
    if cfg.expand(n, degree)? {
        decide_vanish(&apply_phi(f), n, cfg, "ker_phi")
    } else {
        let rep = f.rep();
        Ok(sampled_vanish(n, cfg.trials_for(degree), cfg.seed, "ker_phi", |v| rep.act_by(&f.eval(v), v)))
    }
}
