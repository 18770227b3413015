//! Suite behaviour on injected faults, scoped equivariance and determinism.

use sdcov_core::catalog::{cubic_combination, Catalog, Params};
use sdcov_core::covariant::apply_phi;
use sdcov_core::exact::Scalar;
use sdcov_verify::{run_suite, Mode, RunConfig};

fn parse(s: &str) -> Scalar {
    s.parse().unwrap_or_else(|_| panic!("bad scalar {s}"))
}

#[test]
fn injected_cubic_fault_is_caught_with_a_reproducible_witness() {
    let cfg = RunConfig::default().entries(&["cubic"]).mode(Mode::Exact).with_hook(|e| {
        e.family[0] = cubic_combination(&e.rep, 1, 1, 1).unwrap();
    });
    let report = run_suite(&cfg).unwrap();
    assert!(report.has_failures());
    let entry = report.entry("ex5.2/cubic").unwrap();
    let check = entry.checks.iter().find(|c| c.name.starts_with("Ker(phi)") && c.is_fail()).expect("a Ker(phi) failure");
    let w = check.witness.as_ref().expect("witness");
    let point: Vec<Scalar> = w.point.iter().map(|s| parse(s)).collect();
    let component = w.component.expect("component");
    let value = parse(w.value.as_ref().expect("value"));
    assert_ne!(value, Scalar::zero());

    let cubic = Catalog::load().unwrap().build("cubic", &Params::new()).unwrap();
    let f = cubic_combination(&cubic.rep, 1, 1, 1).unwrap();
    assert_eq!(apply_phi(&f)[component].eval(&point), value);
}

#[test]
fn unmodified_cubic_entry_passes() {
    let report = run_suite(&RunConfig::default().entries(&["cubic"]).mode(Mode::Exact)).unwrap();
    assert!(!report.has_failures(), "{}", report.to_text());
}

#[test]
fn tri_sl_equivariance_is_scoped_to_the_matrix_factors() {
    let report = run_suite(&RunConfig::default().entries(&["tri-sl"]).param("n", 3)).unwrap();
    let e = &report.entries[0];
    let find = |prefix: &str| e.checks.iter().filter(move |c| c.name.starts_with(prefix)).collect::<Vec<_>>();
    let fails = find("equivariance under");
    assert!(fails.iter().any(|c| c.expect == "fails" && c.verdict == "pass"), "{fails:?}");
    assert!(fails.iter().any(|c| c.expect == "holds" && c.verdict != "fail"), "{fails:?}");
    let stable = find("span stable under");
    assert!(!stable.is_empty() && stable.iter().all(|c| !c.is_fail()), "{stable:?}");
    assert!(!report.has_failures(), "{}", report.to_text());
}

#[test]
fn reports_do_not_depend_on_the_thread_count() {
    let base = RunConfig::default().entries(&["cubic", "adjoint", "ex6.4"]).seed(11);
    let one = run_suite(&RunConfig { jobs: 1, ..base.clone() }).unwrap().to_json();
    let many = run_suite(&RunConfig { jobs: 3, ..base }).unwrap().to_json();
    assert_eq!(one, many);
}

#[test]
fn unknown_entries_are_errors() {
    assert!(run_suite(&RunConfig::default().entries(&["bogus"])).is_err());
}
