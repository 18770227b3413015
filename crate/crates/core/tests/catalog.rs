//! Catalog listing, descriptions, parameter handling and the covariant
//! families of the builders.

use sdcov_core::catalog::{cubic_combination, Catalog, Params};
use sdcov_core::covariant::{apply_phi, is_in_ker_phi, Covariant};
use sdcov_core::exact::{CheckConfig, Scalar};
use sdcov_core::Error;

fn params(p: &[(&str, i64)]) -> Params {
    p.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn list_marks_executable_and_metadata_entries() {
    let list = Catalog::load().unwrap().list();
    assert!(list.contains("table1/4b (metadata)"), "{list}");
    assert!(list.contains("ex6.3/i (executable)"), "{list}");
}

#[test]
fn show_prints_degree_pattern_and_rejects_unknown_ids() {
    let c = Catalog::load().unwrap();
    assert!(c.show("ex5.3").unwrap().contains("k, 2k, ..., nk"));
    assert!(matches!(c.show("bogus"), Err(Error::UnknownEntry(_))));
    assert!(matches!(c.build("bogus", &Params::new()), Err(Error::UnknownEntry(_))));
}

#[test]
fn out_of_range_parameters_are_rejected() {
    let c = Catalog::load().unwrap();
    assert!(matches!(c.build("adjoint", &params(&[("n", 99)])), Err(Error::InvalidParams(_))));
}

#[test]
fn built_entries_match_their_expected_shapes() {
    let c = Catalog::load().unwrap();
    for e in c.entries() {
        let b = c.build(&e.id, &Params::new()).unwrap();
        assert_eq!(b.rep.dim(), b.expected.dim_v, "{}", e.id);
        assert_eq!(b.rep.algebra().dim(), b.expected.dim_g, "{}", e.id);
        let degrees: Vec<u32> = b.family.iter().map(Covariant::degree).collect();
        assert_eq!(degrees, b.expected.family_degrees, "{}", e.id);
        assert_eq!(b.expected.q, b.expected.q_closed_form, "{}", e.id);
    }
}

#[test]
fn tri_sl_with_n_2_is_the_cubic_entry() {
    let b = Catalog::load().unwrap().build("tri-sl", &params(&[("n", 2)])).unwrap();
    assert_eq!(b.id, "ex5.2/cubic");
}

#[test]
fn cubic_combinations_are_in_the_kernel_iff_coefficients_sum_to_zero() {
    let b = Catalog::load().unwrap().build("cubic", &Params::new()).unwrap();
    let cfg = CheckConfig::exact();
    for l in -2i64..=2 {
        for m in -2i64..=2 {
            for n in -2i64..=2 {
                let f = cubic_combination(&b.rep, l, m, n).unwrap();
                let holds = is_in_ker_phi(&f, &cfg).unwrap().holds();
                assert_eq!(holds, l + m + n == 0, "({l}, {m}, {n})");
            }
        }
    }
}

#[test]
fn phi_of_the_injected_cubic_fault_is_reproduced_by_its_witness() {
    let b = Catalog::load().unwrap().build("cubic", &Params::new()).unwrap();
    let f = cubic_combination(&b.rep, 1, 1, 1).unwrap();
    match is_in_ker_phi(&f, &CheckConfig::exact()).unwrap() {
        sdcov_core::exact::Identity::Fails { point, component, value } => {
            let again = apply_phi(&f)[component].eval(&point);
            assert_eq!(again, value);
            assert_ne!(value, Scalar::zero());
        }
        other => panic!("expected a failure, got {other:?}"),
    }
}
