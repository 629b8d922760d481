use std::sync::Arc;

use super::*;
use crate::algebra::{Letter, Quiver};
use crate::module::is_isomorphic;

fn alg(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[&[&str]]) -> Arc<BoundQuiverAlgebra> {
    let q = Quiver::new(vertices, arrows).unwrap();
    let rels: Vec<Vec<&str>> = rels.iter().map(|r| r.to_vec()).collect();
    Arc::new(BoundQuiverAlgebra::new(q, &rels).unwrap())
}

fn brute(bound: usize) -> CatalogOptions {
    CatalogOptions {
        force_brute: true,
        dim_bound: bound,
        ..CatalogOptions::default()
    }
}

#[test]
fn linear_a3_catalog_labels() {
    let a = alg(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], &[]);
    let c = IndecCatalog::build(a, &CatalogOptions::default()).unwrap();
    assert_eq!(c.labels(), vec!["1", "2", "3", "1/2", "2/3", "1/2/3"]);
    assert_eq!(c.method(), CatalogMethod::Strings);
}

#[test]
fn small_catalog_sizes() {
    let a2 = alg(&["1", "2"], &[("a", "1", "2")], &[]);
    assert_eq!(IndecCatalog::build(a2, &CatalogOptions::default()).unwrap().len(), 3);
    let l = alg(&["1"], &[("e", "1", "1")], &[&["e", "e"]]);
    let c = IndecCatalog::build(l, &CatalogOptions::default()).unwrap();
    assert_eq!(c.labels(), vec!["1", "1/1"]);
}

#[test]
fn string_module_shapes() {
    let sink = alg(&["1", "2", "3"], &[("a", "1", "2"), ("c", "3", "2")], &[]);
    let q = sink.quiver();
    let w = StringWalk::from_letters(q, vec![Letter::direct(0), Letter::inverse(1)]);
    let m = string_to_module(&sink, Field::Rational, &w);
    assert_eq!(m.dims(), &[1, 1, 1]);
    assert_eq!(layer_label(&m), "1 3/2");
    let inv = string_to_module(&sink, Field::Rational, &w.inverse(q));
    assert!(is_isomorphic(&m, &inv).unwrap());
    let e = string_to_module(&sink, Field::Rational, &StringWalk::trivial(1));
    assert_eq!(e.dims(), &[0, 1, 0]);
}

#[test]
fn brute_force_agrees_with_strings_on_a2() {
    let a2 = alg(&["1", "2"], &[("a", "1", "2")], &[]);
    let c = IndecCatalog::build(a2, &brute(1)).unwrap();
    assert_eq!(c.labels(), vec!["1", "2", "1/2"]);
}

#[test]
fn d4_subspace_has_twelve() {
    let d4 = alg(
        &["1", "2", "3", "4"],
        &[("a", "4", "1"), ("b", "4", "2"), ("c", "4", "3")],
        &[],
    );
    let c = IndecCatalog::build(d4, &brute(2)).unwrap();
    assert_eq!(c.len(), 12);
    assert!(c.index_of("4 4/1 2 3").is_some());
}

#[test]
fn kronecker_refused() {
    let k = alg(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")], &[]);
    assert!(matches!(
        IndecCatalog::build(k.clone(), &CatalogOptions::default()),
        Err(IndecError::Algebra(AlgebraError::BandPresent(_)))
    ));
    for bound in [1, 2] {
        assert!(matches!(
            IndecCatalog::build(k.clone(), &brute(bound)),
            Err(IndecError::DimBoundReached { .. })
        ));
    }
}

#[test]
fn oversized_search_refused() {
    let d4 = alg(
        &["1", "2", "3", "4"],
        &[("a", "4", "1"), ("b", "4", "2"), ("c", "4", "3")],
        &[],
    );
    assert!(matches!(
        IndecCatalog::build(d4, &brute(3)),
        Err(IndecError::SearchSpaceTooLarge { .. })
    ));
}
