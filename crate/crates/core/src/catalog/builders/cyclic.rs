//! `prod GL(U_i)` (or its intersection with `SL(U)`) on the cyclic quiver
//! `M = (M_1, ..., M_k)`, realised as a `kn x kn` block matrix with `M_i` at
//! block `(i, i+1 mod k)`; `g` acts by the commutator.

use std::sync::Arc;

use super::{arc, classical, invariance_identity, symbolic_blocks};
use crate::catalog::check::{CheckResult, Expect, Witness};
use crate::catalog::entry::{Construction, ExtraCheck};
use crate::covariant::{independence_rank_at, Covariant, DualPolynomial};
use crate::exact::zero_test::{random_int, random_point, rng_for};
use crate::exact::{rank_of_vectors, Mat, Matrix, MultiPoly, Ring, Scalar};
use crate::lie::{BlockKind, ClassicalType, Factor, LieAlgebra, MatrixLayout, Representation};
use crate::semidirect::SemidirectProduct;
use crate::Result;

fn algebra(n: usize, k: usize, gl: bool) -> Result<LieAlgebra> {
    if gl {
        let parts: Vec<LieAlgebra> = (0..k).map(|_| classical(ClassicalType::Gl, n)).collect::<Result<_>>()?;
        return LieAlgebra::product(format!("gl{n}^{k}"), &parts);
    }
    let size = n * k;
    let mut basis = Vec::new();
    for b in 0..k {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(Matrix::unit(size, size, b * n + i, b * n + j));
                }
            }
        }
    }
    for p in 0..size - 1 {
        basis.push(Matrix::unit(size, size, p, p).sub(&Matrix::unit(size, size, p + 1, p + 1))?);
    }
    let factors = (0..k).map(|b| Factor { name: format!("gl(U_{})", b + 1), offset: b * n, size: n }).collect();
    LieAlgebra::from_basis(format!("s(gl{n}^{k})"), basis, factors)
}

/// The block matrix with `blocks[i]` at block `(i, i+1 mod k)`.
fn assemble<R: Ring>(blocks: &[Mat<R>], proto: &R) -> Mat<R> {
    let (k, n) = (blocks.len(), blocks[0].rows());
    let mut out = Mat::zeros_like(k * n, k * n, proto);
    for (i, b) in blocks.iter().enumerate() {
        let c = (i + 1) % k;
        for r in 0..n {
            for s in 0..n {
                out.set(i * n + r, c * n + s, b.get(r, s).clone());
            }
        }
    }
    out
}

fn extract<R: Ring>(m: &Mat<R>, k: usize, n: usize) -> Vec<Mat<R>> {
    (0..k)
        .map(|i| {
            let c = (i + 1) % k;
            let rows: Vec<usize> = (i * n..(i + 1) * n).collect();
            let cols: Vec<usize> = (c * n..(c + 1) * n).collect();
            m.submatrix(&rows, &cols)
        })
        .collect()
}

fn module(n: usize, k: usize, gl: bool) -> Result<Arc<Representation>> {
    let g = Arc::new(algebra(n, k, gl)?);
    let layout = MatrixLayout::new(vec![BlockKind::Full { rows: n, cols: n }; k]);
    let rep = Representation::from_matrix_action("cyclic quiver", g, layout, move |x, v| {
        let m = assemble(v, &Scalar::zero());
        Ok(extract(&x.commutator(&m)?, k, n))
    })?;
    Ok(arc(rep))
}

/// Whether `P` is non-derogatory: `I, P, ..., P^(n-1)` are independent.
fn non_derogatory(p: &Matrix) -> Result<bool> {
    let n = p.rows();
    let mut powers = vec![Matrix::identity(n)];
    for i in 1..n {
        powers.push(powers[i - 1].mul(p)?);
    }
    let vecs: Vec<Vec<Scalar>> = powers.iter().map(|m| m.entries().to_vec()).collect();
    Ok(rank_of_vectors(&vecs) == n)
}

pub(super) fn build(n: usize, k: usize, gl: bool) -> Result<Construction> {
    let rep = module(n, k, gl)?;
    let d = rep.dim();
    let blocks = symbolic_blocks(&rep)?;
    let zero = MultiPoly::zero(d);
    let big = assemble(&blocks, &zero);
    let mk = big.pow(k as u32)?;
    let start = if gl { 0 } else { 1 };
    let mut family = Vec::new();
    let mut labels = Vec::new();
    for i in start..n {
        let p = mk.pow(i as u32)?;
        let p = if gl { p } else { p.traceless_part()? };
        family.push(Covariant::from_matrix(rep.clone(), (k * i) as u32, &p)?);
        labels.push(format!("M^{}", k * i));
    }
    let mut c = Construction::new(rep.clone(), family.clone(), labels);

    // M^k is block diagonal with the cyclic products M_i M_{i+1} ... M_{i-1}.
    let (b2, mk2) = (blocks.clone(), mk.clone());
    c.extras.push(ExtraCheck::new("M^k is block diagonal with cyclic products", move |_| {
        for i in 0..k {
            let mut prod = b2[i].clone();
            for j in 1..k {
                prod = prod.mul(&b2[(i + j) % k])?;
            }
            let idx: Vec<usize> = (i * n..(i + 1) * n).collect();
            if mk2.submatrix(&idx, &idx) != prod {
                return Ok(CheckResult::fail("", Witness::note(format!("block {}", i + 1)), "block differs from the cyclic product"));
            }
        }
        Ok(CheckResult::pass("", "exact polynomial identity"))
    }));

    let product = {
        let mut p = blocks[0].clone();
        for b in &blocks[1..] {
            p = p.mul(b)?;
        }
        p
    };
    let cp = product.char_poly()?;
    let cp2 = cp.clone();
    let r = rep.clone();
    c.extras.push(ExtraCheck::new("char-poly coefficients of M_1...M_k are invariants of degrees k..nk", move |cfg| {
        for j in 1..=n {
            let f = &cp[n - j];
            if !f.is_homogeneous((k * j) as u32) || f.is_zero() {
                return Ok(CheckResult::fail("", Witness::note(format!("sigma_{j}")), format!("not homogeneous of degree {}", k * j)));
            }
            let id = invariance_identity(&r, f, cfg, "cyclic/invariant")?;
            if !id.holds() {
                let mut res = CheckResult::from_identity("", Expect::Holds, &id);
                res.detail = format!("sigma_{j} is moved: {}", res.detail);
                return Ok(res);
            }
        }
        Ok(CheckResult::pass("", format!("sigma_1..sigma_{n} invariant, degrees k, 2k, ..., {}k", n)))
    }));

    // The invariants pulled back to q* are fixed by the unipotent radical:
    // f(xi + mu(v, zeta), v) = f(xi, v) at sampled (eta, zeta).
    let r = rep.clone();
    c.extras.push(ExtraCheck::new("char-poly coefficients lift to R_u(Q)-invariants on q*", move |cfg| {
        let q = SemidirectProduct::new(r.clone());
        let lifts: Vec<DualPolynomial> = (1..=n).map(|j| DualPolynomial::from_v(q.dim_g(), &cp2[n - j])).collect();
        let mut rng = rng_for(cfg.seed, "cyclic/unipotent");
        let trials = cfg.trials_for((k * n) as u32);
        for _ in 0..trials {
            let eta = q.random_point(&mut rng);
            let zeta = random_point(&mut rng, q.dim_v());
            let moved = q.coadjoint_unipotent(&zeta, &eta);
            for (j, f) in lifts.iter().enumerate() {
                let diff = &f.eval(&moved) - &f.eval(&eta);
                if !diff.is_zero() {
                    let w = Witness { point: eta.concat(), component: Some(j), value: Some(diff), note: format!("sigma_{}", j + 1) };
                    return Ok(CheckResult::fail("", w, "lift is moved by the unipotent radical"));
                }
            }
        }
        Ok(CheckResult::sampled_pass("", format!("{trials} random (eta, zeta)")))
    }));

    let r = rep;
    let l = family.len();
    c.extras.push(ExtraCheck::new("witness plane is non-derogatory off the origin", move |cfg| {
        let mut rng = rng_for(cfg.seed, "cyclic/plane");
        let layout = r.layout().expect("cyclic module has a layout");
        let ident = Matrix::identity(n);
        let a = Matrix::diag(&(1..=n as i64).map(Scalar::from_int).collect::<Vec<_>>());
        let e = Matrix::from_fn(n, n, |i, j| if j == i + 1 { Scalar::one() } else { Scalar::zero() });
        let mut m1 = vec![ident.clone(); k];
        m1[k - 1] = a;
        let mut m2 = vec![ident; k];
        m2[k - 2] = e;
        let (v1, v2) = (layout.from_matrices(&m1)?, layout.from_matrices(&m2)?);
        // The line alpha + beta = 0 is tested explicitly: for k >= 3 the
        // first k - 2 blocks vanish there.
        let mut points = vec![(Scalar::one(), Scalar::from_int(-1))];
        while points.len() < 11 {
            let (x, y) = (random_int(&mut rng), random_int(&mut rng));
            if !x.is_zero() || !y.is_zero() {
                points.push((x, y));
            }
        }
        for (al, be) in points {
            let v: Vec<Scalar> = v1.iter().zip(&v2).map(|(x, y)| &(&al * x) + &(&be * y)).collect();
            let mats = layout.numeric(&v);
            let mut p = mats[0].clone();
            for m in &mats[1..] {
                p = p.mul(m)?;
            }
            let rank = independence_rank_at(&family, &v);
            if !non_derogatory(&p)? || rank != l {
                let note = format!("alpha = {al}, beta = {be}: derogatory or family rank {rank}");
                return Ok(CheckResult::fail("", Witness::at(v, note), "plane meets the bad locus"));
            }
        }
        Ok(CheckResult::pass("", format!("alpha + beta = 0 and 10 random points of the plane, family rank {l}")))
    }));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covariant::{is_equivariant, is_in_ker_phi};
    use crate::exact::CheckConfig;

    #[test]
    fn small_cases_satisfy_the_identities() {
        for (n, k, gl) in [(2, 2, true), (2, 2, false), (3, 2, false)] {
            let c = build(n, k, gl).unwrap();
            assert!(c.rep.homomorphism_violation(None).is_none());
            let dim_g = c.rep.algebra().dim();
            assert_eq!(dim_g, if gl { k * n * n } else { k * n * n - 1 });
            let cfg = CheckConfig::exact();
            let all: Vec<usize> = (0..dim_g).collect();
            for f in &c.family {
                assert!(is_in_ker_phi(f, &cfg).unwrap().holds());
                assert!(is_equivariant(f, &all, &cfg).unwrap().holds());
            }
            for x in &c.extras {
                let r = x.run(&CheckConfig::auto(3));
                assert!(r.verdict.is_pass(), "{} {:?}", x.name, r);
            }
        }
    }

    #[test]
    fn witness_plane_degenerates_for_three_vertices() {
        let c = build(2, 3, false).unwrap();
        let x = c.extras.iter().find(|x| x.name.starts_with("witness plane")).unwrap();
        let r = x.run(&CheckConfig::auto(3));
        assert!(!r.verdict.is_pass());
        assert!(r.witness.unwrap().note.starts_with("alpha = 1, beta = -1"));
    }
}
