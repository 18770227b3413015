//! The checks run on one built entry.

use std::time::Instant;

use sdcov_core::catalog::{BuiltEntry, CheckResult, Expect, Witness};
use sdcov_core::covariant::{
    degree_audit, is_equivariant, is_in_ker_phi, ker_phi_basis_check, lift_hat, lift_invariance, span_is_stable,
    weight_under, AuditVerdict, DualPolynomial,
};
use sdcov_core::exact::zero_test::{random_point, rng_for};
use sdcov_core::exact::{rank_of_vectors, CheckConfig, CheckMode, Identity, Scalar};
use sdcov_core::lie::{generic_stabiliser_dim, is_abelian, sample_regular_point};
use sdcov_core::semidirect::SemidirectProduct;
use sdcov_core::Result;

use crate::report::{CheckRecord, EntryReport, TableComparison};

struct Runner {
    base: CheckConfig,
    timings: bool,
    records: Vec<CheckRecord>,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce(&CheckConfig) -> Result<CheckResult>) {
        let cfg = self.base.derive(name);
        let start = Instant::now();
        let r = match f(&cfg) {
            Ok(r) => r.named(name),
            Err(e) => CheckResult::from_error(name, &e),
        };
        let ms = self.timings.then(|| start.elapsed().as_millis() as u64);
        self.records.push(CheckRecord::new(&r, ms));
    }

    fn push(&mut self, r: &CheckResult, start: Instant) {
        let ms = self.timings.then(|| start.elapsed().as_millis() as u64);
        self.records.push(CheckRecord::new(r, ms));
    }
}

/// Verdict of an equivariance test, with the failing basis index in the note.
fn equivariance_result(f: &sdcov_core::covariant::Covariant, indices: &[usize], expect: Expect, cfg: &CheckConfig) -> Result<CheckResult> {
    let eq = is_equivariant(f, indices, cfg)?;
    let id = match &eq.failure {
        Some((_, id)) => id.clone(),
        None if eq.proved => Identity::Proved,
        None => Identity::SampledHolds { trials: cfg.trials_for(f.degree() + 1) },
    };
    let mut r = CheckResult::from_identity("", expect, &id);
    if let (Some((a, _)), Some(w)) = (&eq.failure, r.witness.as_mut()) {
        w.note = format!("e_{a} * F != 0");
    }
    if eq.failure.is_none() {
        r.detail = format!("{} basis elements, {}", eq.checked, r.detail);
    }
    Ok(r)
}

fn mode_name(m: CheckMode) -> &'static str {
    match m {
        CheckMode::Exact => "exact",
        CheckMode::Sampled => "sampled",
        CheckMode::Auto => "auto",
    }
}

/// Runs the suite on `e`. `mode` is the requested mode; auto mode samples
/// when the entry is above its exact ceiling.
pub fn run_entry(e: &BuiltEntry, mode: CheckMode, seed: u64, samples: usize, negative_controls: bool, timings: bool) -> EntryReport {
    let mode = if mode == CheckMode::Auto && !e.exact_ok { CheckMode::Sampled } else { mode };
    let base = CheckConfig { mode, seed, trials: None };
    let mut r = Runner { base, timings, records: Vec::new() };
    let rep = &e.rep;
    let g = rep.algebra();
    let x = &e.expected;
    let q = SemidirectProduct::new(rep.clone());
    let degrees: Vec<u32> = e.family.iter().map(|f| f.degree()).collect();

    // construction audit
    r.run("construction: dim V", |_| Ok(CheckResult::equal("", rep.dim(), x.dim_v)));
    r.run("construction: dim g", |_| Ok(CheckResult::equal("", g.dim(), x.dim_g)));
    r.run("construction: family size = l", |_| Ok(CheckResult::equal("", e.family.len(), x.l)));
    r.run("construction: covariant degrees", |_| Ok(CheckResult::equal("", degrees.clone(), x.family_degrees.clone())));
    r.run("construction: family members nonzero", |_| {
        let zero = e.family.iter().position(|f| f.is_zero());
        Ok(CheckResult::check("", zero.is_none(), format!("{} members", e.family.len()), || {
            Witness::note(format!("member {} is zero", zero.unwrap_or(0)))
        }))
    });
    r.run("construction: q(V//G) from degrees = closed form", |_| Ok(CheckResult::equal("", x.q, x.q_closed_form)));
    r.run("construction: action is a Lie homomorphism", |_| {
        let v = rep.homomorphism_violation(None);
        Ok(CheckResult::check("", v.is_none(), "[rho(e_a), rho(e_b)] = rho([e_a, e_b]) for all a, b", || {
            Witness::note(format!("pair {v:?}"))
        }))
    });

    r.run("Jacobi on q", |cfg| {
        let v = q.jacobi_violation(cfg.seed);
        Ok(CheckResult::check("", v.is_none(), format!("dim q = {}", q.dim()), || Witness::note(format!("triple {v:?}"))))
    });

    for (f, label) in e.family.iter().zip(&e.labels) {
        r.run(&format!("Ker(phi): {label}"), |cfg| Ok(CheckResult::from_identity("", Expect::Holds, &is_in_ker_phi(f, cfg)?)));
    }
    for (f, label) in e.family.iter().zip(&e.labels) {
        r.run(&format!("equivariance under {}: {label}", e.scope.name), |cfg| {
            equivariance_result(f, &e.scope.indices, Expect::Holds, cfg)
        });
    }
    if let Some(big) = &e.fails_beyond {
        for (f, label) in e.family.iter().zip(&e.labels) {
            r.run(&format!("equivariance under {} fails: {label}", big.name), |cfg| {
                equivariance_result(f, &big.indices, Expect::Fails, cfg)
            });
        }
    }
    for w in &e.weights {
        r.run(&format!("weight: {}", w.name), |_| {
            let got = weight_under(&w.x, &e.family[w.member]);
            let ok = got.as_ref() == Some(&w.weight);
            let detail = match &got {
                Some(c) => format!("x * F = {c} F"),
                None => "x * F is not a multiple of F".into(),
            };
            Ok(CheckResult::check("", ok, detail, || Witness::note(format!("expected weight {}", w.weight))))
        });
    }
    if let Some(s) = &e.stable_under {
        r.run(&format!("span stable under {}", s.name), |_| {
            let ok = span_is_stable(&e.family, &s.indices)?.is_some();
            Ok(CheckResult::check("", ok, "e_a * F_i in span{F_j} for every basis element", || {
                Witness::note("some e_a * F_i leaves the span")
            }))
        });
    }

    let mut generic_dim = None;
    r.run("generic stabiliser dimension = l", |cfg| {
        let d = generic_stabiliser_dim(rep, &mut rng_for(cfg.seed, "generic"), samples);
        generic_dim = Some(d);
        Ok(CheckResult::equal("", d, x.l))
    });
    r.run(&format!("g_v abelian of dimension l at {samples} regular points"), |cfg| {
        let mut rng = rng_for(cfg.seed, "regular");
        for _ in 0..samples {
            let (v, gv) = sample_regular_point(rep, x.l, &mut rng)?;
            if !is_abelian(g, &gv)? {
                return Ok(CheckResult::fail("", Witness::at(v, "g_v is not abelian"), "non-abelian stabiliser"));
            }
        }
        Ok(CheckResult::sampled_pass("", format!("dim g_v = {} at every sampled point", x.l)))
    });
    if x.audit_surplus == 0 {
        r.run(&format!("span F_i(v) = g_v at {samples} regular points"), |cfg| {
            let sc = ker_phi_basis_check(rep, &e.family, x.l, &mut rng_for(cfg.seed, "span"), samples)?;
            Ok(match sc.failure {
                None => CheckResult::sampled_pass("", format!("{} points", sc.points)),
                Some((v, rank, dim)) => {
                    CheckResult::fail("", Witness::at(v, format!("rank {rank}, dim g_v = {dim}")), "values do not span g_v")
                }
            })
        });
    } else {
        // With a degree surplus the family is not a basis of Ker(phi): the
        // values still lie in g_v, but their rank drops on a divisor of V_reg.
        r.run(&format!("F_i(v) in g_v and generically independent at {samples} regular points"), |cfg| {
            let mut rng = rng_for(cfg.seed, "span");
            let mut drops = 0;
            for _ in 0..samples {
                let (v, gv) = sample_regular_point(rep, x.l, &mut rng)?;
                let vals: Vec<Vec<Scalar>> = e.family.iter().map(|f| f.eval(&v)).collect();
                if let Some(i) = vals.iter().position(|y| !gv.contains(y)) {
                    return Ok(CheckResult::fail("", Witness::at(v, format!("F_{i}(v) outside g_v")), "value outside the stabiliser"));
                }
                if rank_of_vectors(&vals) < x.l {
                    drops += 1;
                }
            }
            let detail = format!("rank l at {} of {samples} points, surplus {}", samples - drops, x.audit_surplus);
            Ok(if drops < samples {
                CheckResult::sampled_pass("", detail)
            } else {
                CheckResult::fail("", Witness::note("rank below l at every point"), detail)
            })
        });
    }

    r.run("degree audit: sum deg F_i + q(V//G) = dim V", |_| {
        let a = degree_audit(&degrees, x.dim_v, x.q, x.l);
        let want = if x.audit_surplus == 0 { AuditVerdict::Equality } else { AuditVerdict::Surplus(x.audit_surplus) };
        let detail = format!("sum deg = {}, dim V - q = {}, {:?}", a.sum_degrees, a.dim_v as i64 - a.q as i64, a.verdict);
        Ok(CheckResult::check("", a.verdict == want, detail, || Witness::note(format!("expected {want:?}"))))
    });
    r.run("bookkeeping: q(V//G) + sum (deg F_i + 1) = dim V + l", |_| {
        let a = degree_audit(&degrees, x.dim_v, x.q, x.l);
        let off = a.bookkeeping_offset();
        let detail = format!("{} vs {}, offset {off}, expected offset {}", a.bookkeeping_lhs, a.bookkeeping_rhs, x.audit_surplus);
        Ok(CheckResult::check("", off == x.audit_surplus as i64, detail, || Witness::note("offset differs from the degree surplus")))
    });

    let lifts: Vec<DualPolynomial> = e.family.iter().map(lift_hat).collect();
    for (f, label) in lifts.iter().zip(&e.labels) {
        r.run(&format!("lift invariance under R_u(Q): {label}"), |cfg| {
            Ok(CheckResult::from_identity("", Expect::Holds, &lift_invariance(f, &q, cfg)?))
        });
    }
    r.run(&format!("Poisson brackets of lifts vanish at {samples} points"), |cfg| {
        let mut rng = rng_for(cfg.seed, "poisson");
        for _ in 0..samples {
            let eta = q.random_point(&mut rng);
            let b = q.kirillov_matrix(&eta);
            let grads: Vec<Vec<Scalar>> = lifts.iter().map(|f| f.gradient(&eta)).collect();
            for i in 0..grads.len() {
                let bg = b.mul_vec(&grads[i]);
                for (j, gj) in grads.iter().enumerate().take(i) {
                    let v: Scalar = gj.iter().zip(&bg).map(|(a, b)| a * b).sum();
                    if !v.is_zero() {
                        let w = Witness { point: eta.concat(), component: Some(j * grads.len() + i), value: Some(v), note: format!("{{F_{j}, F_{i}}}") };
                        return Ok(CheckResult::fail("", w, "nonzero bracket"));
                    }
                }
            }
        }
        let pairs = lifts.len() * lifts.len().saturating_sub(1) / 2;
        Ok(CheckResult::sampled_pass("", format!("{pairs} pairs")))
    });
    r.run(&format!("Kirillov rank even at {samples} points"), |cfg| {
        let mut rng = rng_for(cfg.seed, "kirillov");
        for _ in 0..samples {
            let eta = q.random_point(&mut rng);
            let rank = q.kirillov_rank(&eta);
            if rank % 2 == 1 {
                return Ok(CheckResult::fail("", Witness::at(eta.concat(), format!("rank {rank}")), "odd rank"));
            }
        }
        Ok(CheckResult::sampled_pass("", "B(eta) has even rank"))
    });
    r.run("Rais: ind q = dim V - dim g + dim g_x + ind g_x", |cfg| {
        let rr = q.rais_consistency(cfg.seed, samples)?;
        let detail = format!(
            "ind q = {}, rhs = {} - {} + {} + {}",
            rr.index, rr.dim_v, rr.dim_g, rr.dim_gx, rr.ind_gx
        );
        let ok = rr.holds();
        Ok(if ok { CheckResult::sampled_pass("", detail) } else { CheckResult::fail("", Witness::at(rr.point.clone(), "generic point of V"), detail) })
    });
    r.run("b(q) = dim V + l", |cfg| {
        let est = q.index_estimate(cfg.seed, samples)?;
        let b = q.b_of(&est);
        let want = Scalar::from_int((x.dim_v + x.l) as i64);
        let detail = format!("ind q = {}, b(q) = {b}, dim V + l = {want}", est.index);
        Ok(if b == want { CheckResult::sampled_pass("", detail) } else { CheckResult::fail("", Witness::note(detail.clone()), detail) })
    });

    let needs_vg = x.dim_vg.is_some() || e.table_rows.iter().any(|(_, t)| t.dim_vg.is_some());
    let mut vg_estimate = None;
    if needs_vg {
        r.run("dim V//G = dim V - max orbit dimension", |cfg| {
            let mut rng = rng_for(cfg.seed, "orbit");
            let max = (0..samples.max(1)).map(|_| rep.orbit_matrix(&random_point(&mut rng, rep.dim())).rank()).max().unwrap_or(0);
            let est = rep.dim() - max;
            vg_estimate = Some(est);
            Ok(match x.dim_vg {
                Some(want) => CheckResult::equal("", est, want),
                None => CheckResult::sampled_pass("", format!("estimate {est}")),
            })
        });
    }

    let mut table = Vec::new();
    for (row, vals) in &e.table_rows {
        let start = Instant::now();
        let mut fields: Vec<(&str, String, Option<String>)> = vec![("dim h", vals.h.to_string(), generic_dim.map(|d| d.to_string()))];
        if let Some(v) = vals.dim_v {
            fields.push(("dim V", v.to_string(), Some(rep.dim().to_string())));
        }
        if let Some(v) = vals.dim_vg {
            fields.push(("dim V//G", v.to_string(), vg_estimate.map(|d| d.to_string())));
        }
        if let Some(v) = vals.q {
            fields.push(("q(V//G)", v.to_string(), Some(x.q.to_string())));
        }
        let mut bad = Vec::new();
        for (field, printed, computed) in fields {
            let computed = computed.unwrap_or_else(|| "unavailable".into());
            let matches = printed == computed;
            if !matches {
                bad.push(format!("{field}: printed {printed}, computed {computed}"));
            }
            table.push(TableComparison { row: row.id.clone(), field: field.into(), printed, computed, matches });
        }
        let name = format!("table row {}", row.id);
        let res = CheckResult::check(&name, bad.is_empty(), "printed values match", || Witness::note(bad.join("; ")));
        r.push(&res, start);
    }

    for c in &e.extras {
        let start = Instant::now();
        let res = c.run(&r.base);
        r.push(&res, start);
    }
    if negative_controls {
        for c in &e.negative_controls {
            let start = Instant::now();
            let res = c.run(&r.base).named(format!("negative control: {}", c.name));
            r.push(&res, start);
        }
    }

    EntryReport {
        id: e.id.clone(),
        title: e.title.clone(),
        provenance: e.provenance.clone(),
        parameters: e.params.clone(),
        mode: mode_name(mode),
        group: g.name().to_string(),
        module: rep.name().to_string(),
        checks: r.records,
        table_row_comparison: table,
    }
}

/// An entry that could not be built at the requested parameters.
pub fn skipped_entry(id: &str, title: &str, reason: String) -> EntryReport {
    let r = CheckResult::skipped("parameters", reason);
    EntryReport {
        id: id.to_string(),
        title: title.to_string(),
        provenance: String::new(),
        parameters: Default::default(),
        mode: "skipped",
        group: String::new(),
        module: String::new(),
        checks: vec![CheckRecord::new(&r, None)],
        table_row_comparison: Vec::new(),
    }
}
