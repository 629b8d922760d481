use super::*;

fn boolean(n: usize) -> FiniteLattice {
    let gens: Vec<Bits> = (0..n).map(|i| 1 << i).collect();
    FiniteLattice::generate_from_closure(n, |s| s, &gens).unwrap()
}

fn chain(n: usize) -> FiniteLattice {
    // down-sets of a chain of length n - 1
    let family: Vec<Bits> = (0..n).map(|k| (1 << k) - 1).collect();
    FiniteLattice::from_meet_closed(n - 1, &family).unwrap()
}

/// The pentagon N5: 0 < a < b < 1 and 0 < c < 1.
fn pentagon() -> FiniteLattice {
    FiniteLattice::from_meet_closed(3, &[0b000, 0b001, 0b011, 0b100, 0b111]).unwrap()
}

/// The diamond M3 as a meet-closed family.
fn diamond() -> FiniteLattice {
    FiniteLattice::from_meet_closed(3, &[0b000, 0b001, 0b010, 0b100, 0b111]).unwrap()
}

#[test]
fn boolean_and_chain_shapes() {
    let b = boolean(2);
    assert_eq!(b.len(), 4);
    assert_eq!(b.hasse_edges().len(), 4);
    assert!(b.is_distributive().is_ok());
    let c = chain(3);
    assert_eq!(c.hasse_edges(), vec![(0, 1), (1, 2)]);
    assert_eq!(c.join_irreducibles().len(), 2);
    assert!(c.is_distributive().is_ok());
    assert!(c.is_semidistributive().holds);
}

#[test]
fn non_distributive_examples() {
    let n5 = pentagon();
    assert!(n5.is_distributive().is_err());
    assert!(n5.is_semidistributive().holds);
    let m3 = diamond();
    assert!(m3.is_distributive().is_err());
    let r = m3.is_semidistributive();
    assert!(!r.holds);
    assert_eq!(r.kappa_failures.len(), 3);
}

#[test]
fn closure_validation() {
    let bad = FiniteLattice::generate_from_closure(2, |s| s & 1, &[0b10]);
    assert!(matches!(bad, Err(LatticeError::ClosureNotIdempotent { .. })));
    let dup = FiniteLattice::from_meet_closed(2, &[0b00, 0b01, 0b10, 0b11, 0b11]);
    assert!(dup.is_ok());
    assert!(matches!(
        FiniteLattice::from_meet_closed(2, &[0b01, 0b10, 0b11]),
        Err(LatticeError::MeetNotClosed { .. })
    ));
}

#[test]
fn order_ideals() {
    let p = Poset::antichain(vec!["a".into(), "b".into()]);
    let l = order_ideal_lattice(&p);
    assert!(lattice_isomorphic(&l, &boolean(2)).is_some());
    let empty = order_ideal_lattice(&Poset::antichain(Vec::new()));
    assert_eq!(empty.len(), 1);
    // a chain of two plus an isolated point
    let leq = vec![
        vec![true, true, false],
        vec![false, true, false],
        vec![false, false, true],
    ];
    let p = Poset::new(vec!["x".into(), "y".into(), "z".into()], leq).unwrap();
    assert_eq!(order_ideal_lattice(&p).len(), 6);
    assert_eq!(p.covers(), vec![(0, 1)]);
}

#[test]
fn poset_validation() {
    let cyc = vec![vec![true, true], vec![true, true]];
    assert_eq!(
        Poset::new(vec!["a".into(), "b".into()], cyc).unwrap_err(),
        PosetError::NotAntisymmetric(0, 1)
    );
    let nontrans = vec![
        vec![true, true, false],
        vec![false, true, true],
        vec![false, false, true],
    ];
    assert!(matches!(
        Poset::new(vec!["a".into(), "b".into(), "c".into()], nontrans),
        Err(PosetError::NotTransitive(0, 1, 2))
    ));
}

#[test]
fn isomorphism_search() {
    let b = boolean(3);
    let id = lattice_isomorphic(&b, &b).unwrap();
    for i in 0..b.len() {
        for j in 0..b.len() {
            assert_eq!(b.leq(i, j), b.leq(id[i], id[j]));
        }
    }
    assert!(lattice_isomorphic(&chain(3), &boolean(2)).is_none());
    assert!(lattice_isomorphic(&chain(4), &boolean(2)).is_none());
    assert!(lattice_isomorphic(&pentagon(), &diamond()).is_none());
}

#[test]
fn birkhoff_on_small_lattices() {
    for l in [boolean(3), chain(5), pentagon(), diamond()] {
        let dual = order_ideal_lattice(&l.join_irreducibles());
        assert_eq!(l.is_distributive().is_ok(), lattice_isomorphic(&l, &dual).is_some());
    }
}
