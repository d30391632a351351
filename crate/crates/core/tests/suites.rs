use bduplex_core::commutant::{self, Mode, Side};
use bduplex_core::heckeb;
use bduplex_core::iquantum;
use bduplex_core::report::Status;
use bduplex_core::tensorspace::{TensorSpace, DEFAULT_BASIS_CAP};

#[test]
fn mutated_hecke_generators_fail_with_witnesses() {
    let rep = heckeb::check_mutated_relations(1, 2);
    assert_eq!(rep.status, Status::Fail);
    let failed: Vec<_> = rep.subchecks.iter().filter(|s| s.status == Status::Fail).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|s| !s.witnesses.is_empty()));
}

#[test]
fn dropping_b0_opens_a_dimension_gap() {
    let rep = commutant::double_centralizer_without_b0(1, 2, Mode::Evaluated { seed: 0 }).unwrap();
    assert_eq!(rep.status, Status::Fail);
    let d = &rep.dimensions;
    assert!(d["closure_left"] < d["centralizer_right"]);
}

#[test]
fn exact_and_evaluated_dimensions_agree() {
    for (r, m) in [(1, 1), (2, 1)] {
        let space = TensorSpace::enhanced(r, m);
        let left: Vec<_> = iquantum::levi_generators(space).into_iter().map(|(_, o)| o).collect();
        let exact = commutant::centralizer_dimension(&left, Mode::Exact).unwrap();
        let eval = commutant::centralizer_dimension(&left, Mode::Evaluated { seed: 5 }).unwrap();
        assert_eq!(exact.dimension, eval.dimension);
        let ce = commutant::algebra_closure(space, &left, Mode::Exact).unwrap();
        let cv = commutant::algebra_closure(space, &left, Mode::Evaluated { seed: 5 }).unwrap();
        assert_eq!(ce.certificate.dimension, cv.certificate.dimension);
    }
}

#[test]
fn duality_at_one_factor() {
    for side in [Side::Levi, Side::Full] {
        let rep = commutant::double_centralizer_check(1, 1, side, Mode::Exact, DEFAULT_BASIS_CAP);
        assert_eq!(rep.status, Status::Pass, "{}", rep.summary());
    }
}

#[test]
fn full_side_hecke_image_is_faithful() {
    // dim Ψ(H(B_2)) = |W(B_2)| = 8 once the ambient space has at least two weight slots.
    let rep = commutant::double_centralizer_check(1, 2, Side::Full, Mode::Evaluated { seed: 3 }, DEFAULT_BASIS_CAP);
    assert_eq!(rep.status, Status::Pass);
    assert_eq!(rep.dimensions["closure_right"], 8);
}

#[test]
fn schur_weight_count() {
    let rep = commutant::permutation_module_check(1, 2, 4, Mode::Exact, DEFAULT_BASIS_CAP);
    assert_eq!(rep.status, Status::Pass);
    assert_eq!(rep.dimensions["weights"], 3);
}

#[test]
fn caps_skip_instead_of_failing() {
    let rep = commutant::double_centralizer_check(9, 9, Side::Levi, Mode::Exact, DEFAULT_BASIS_CAP);
    assert_eq!(rep.status, Status::Skipped);
    assert!(rep.notes[0].contains("cap"));
}
