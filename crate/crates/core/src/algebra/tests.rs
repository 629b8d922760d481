use super::*;

fn alg(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[&[&str]]) -> Result<BoundQuiverAlgebra, AlgebraError> {
    let q = Quiver::new(vertices, arrows)?;
    let rels: Vec<Vec<&str>> = rels.iter().map(|r| r.to_vec()).collect();
    BoundQuiverAlgebra::new(q, &rels)
}

fn a2() -> BoundQuiverAlgebra {
    alg(&["1", "2"], &[("a", "1", "2")], &[]).unwrap()
}

fn loop_eps(power: usize) -> BoundQuiverAlgebra {
    let rel = vec!["e"; power];
    alg(&["1"], &[("e", "1", "1")], &[&rel]).unwrap()
}

fn kronecker() -> BoundQuiverAlgebra {
    alg(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]).unwrap()
}

#[test]
fn a2_has_three_basis_paths() {
    let a = a2();
    assert_eq!(a.dimension(), 3);
    assert_eq!(a.paths_from(0).len(), 2);
}

#[test]
fn truncated_loop_dimension() {
    assert_eq!(loop_eps(2).dimension(), 2);
    assert_eq!(loop_eps(3).dimension(), 3);
}

#[test]
fn free_loop_not_admissible() {
    let err = alg(&["1"], &[("e", "1", "1")], &[]).unwrap_err();
    assert_eq!(err, AlgebraError::NotAdmissible(vec!["e".into()]));
}

#[test]
fn two_cycle_admissibility() {
    let ok = alg(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b"], &["b", "a"]]).unwrap();
    assert_eq!(ok.dimension(), 4);
    let long = alg(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b", "a", "b", "a"], &["b", "a", "b", "a", "b"]]);
    assert_eq!(long.unwrap().dimension(), 2 + 2 * 4);
    let one_side = alg(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b", "a"]]);
    assert_eq!(one_side.unwrap().dimension(), 7);
    let alive = alg(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "1"), ("c", "2", "3")], &[&["a", "c"]]);
    assert!(matches!(alive, Err(AlgebraError::NotAdmissible(_))));
}

#[test]
fn malformed_relations_rejected() {
    let q = || Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
    assert_eq!(
        BoundQuiverAlgebra::new(q(), &[vec!["a"]]).unwrap_err(),
        AlgebraError::ArrowInIdeal("a".into())
    );
    assert!(matches!(
        BoundQuiverAlgebra::new(q(), &[vec!["a", "a"]]),
        Err(AlgebraError::RelationNotAPath(_))
    ));
    assert!(matches!(
        BoundQuiverAlgebra::new(q(), &[vec!["z", "a"]]),
        Err(AlgebraError::UnknownArrow(_))
    ));
    assert!(matches!(
        Quiver::new(&["1", "1"], &[]),
        Err(AlgebraError::DuplicateVertex(_))
    ));
    assert!(matches!(
        Quiver::new(&["1"], &[("a", "1", "9")]),
        Err(AlgebraError::UnknownVertex(_))
    ));
}

#[test]
fn string_algebra_examples() {
    assert!(kronecker().is_string_algebra().holds);
    let d4 = alg(&["1", "2", "3", "4"], &[("a", "4", "1"), ("b", "4", "2"), ("c", "4", "3")], &[]).unwrap();
    let check = d4.is_string_algebra();
    assert!(!check.holds);
    assert_eq!(check.violation.unwrap().clause(), "a");
    for arrows in [
        [("a", "1", "2"), ("b", "2", "3")],
        [("a", "1", "2"), ("b", "3", "2")],
        [("a", "2", "1"), ("b", "2", "3")],
    ] {
        assert!(alg(&["1", "2", "3"], &arrows, &[]).unwrap().is_string_algebra().holds);
    }
    // two exits after one entering arrow, neither composite killed
    let fork = alg(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "2", "4")], &[]).unwrap();
    assert_eq!(fork.is_string_algebra().violation.unwrap().clause(), "b");
}

#[test]
fn bands() {
    let a3 = alg(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]).unwrap();
    assert_eq!(a3.find_band().unwrap(), None);
    let band = kronecker().find_band().unwrap().unwrap();
    assert_eq!(band.display, "a·b⁻¹");
    assert_eq!(loop_eps(2).find_band().unwrap(), None);
    let d4 = alg(&["1", "2", "3", "4"], &[("a", "4", "1"), ("b", "4", "2"), ("c", "4", "3")], &[]).unwrap();
    assert!(matches!(d4.find_band(), Err(AlgebraError::NotStringAlgebra(_))));
}

#[test]
fn two_loops_with_square_zero_have_band() {
    let a = alg(
        &["1"],
        &[("x", "1", "1"), ("y", "1", "1")],
        &[&["x", "x"], &["x", "y"], &["y", "x"], &["y", "y"]],
    )
    .unwrap();
    assert_eq!(a.dimension(), 3);
    assert_eq!(a.find_band().unwrap().unwrap().display, "x·y⁻¹");
}

#[test]
fn string_counts() {
    let a2s = a2().enumerate_strings().unwrap();
    assert_eq!(a2s.len(), 3);
    let sink = alg(&["1", "2", "3"], &[("a", "1", "2"), ("c", "3", "2")], &[]).unwrap();
    let strings = sink.enumerate_strings().unwrap();
    assert_eq!(strings.len(), 6);
    assert!(strings.iter().all(|s| s.is_canonical(sink.quiver())));
    assert_eq!(loop_eps(2).enumerate_strings().unwrap().len(), 2);
    assert!(matches!(kronecker().enumerate_strings(), Err(AlgebraError::BandPresent(_))));
}

#[test]
fn distributivity_examples() {
    let linear = alg(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]).unwrap();
    assert!(linear.distributivity_criterion().holds);
    let sink = alg(&["1", "2", "3"], &[("a", "1", "2"), ("c", "3", "2")], &[]).unwrap();
    let w = sink.distributivity_criterion().witness.unwrap();
    assert_eq!(w.family(), "i");
    assert!(loop_eps(3).distributivity_criterion().holds);
    let exit = alg(&["1", "2"], &[("e", "1", "1"), ("m", "1", "2")], &[&["e", "e", "e"]]).unwrap();
    assert_eq!(exit.distributivity_criterion().witness.unwrap().family(), "iii");
    let exit_killed = alg(&["1", "2"], &[("e", "1", "1"), ("m", "1", "2")], &[&["e", "m"], &["e", "e", "e"]]).unwrap();
    assert!(exit_killed.distributivity_criterion().holds);
    let d4 = alg(&["1", "2", "3", "4"], &[("a", "4", "1"), ("b", "4", "2"), ("c", "4", "3")], &[]).unwrap();
    assert_eq!(d4.distributivity_criterion().witness.unwrap().family(), "ii");
}

#[test]
fn lrd_examples() {
    let linear = alg(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]).unwrap();
    assert!(linear.lrd_criterion().holds);
    assert!(matches!(
        loop_eps(2).lrd_criterion().witness,
        Some(LrdWitness::Loop { .. })
    ));
    let cyc = alg(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b"], &["b", "a"]]).unwrap();
    assert!(cyc.lrd_criterion().holds);
    let half = alg(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&["a", "b"], &["b", "a", "b"]]).unwrap();
    assert_eq!(
        half.lrd_criterion().witness,
        Some(LrdWitness::CycleNotInIdeal { arrows: vec![1, 0] })
    );
}

#[test]
fn components() {
    assert_eq!(a2().connected_components().len(), 1);
    let split = alg(&["1", "2", "3"], &[("a", "2", "3")], &[]).unwrap();
    let comps = split.connected_components();
    let dims: Vec<usize> = comps.iter().map(|c| c.dimension()).collect();
    assert_eq!(dims, vec![1, 3]);
    let empty = alg(&[], &[], &[]).unwrap();
    assert!(empty.connected_components().is_empty());
}
