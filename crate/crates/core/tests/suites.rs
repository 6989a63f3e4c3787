use orderkit::generators::{enumerate_lattices, enumerate_posets, lattices_up_to, m3, n5, named};
use orderkit::properties::{
    is_completely_distributive_oracle, is_distributive, is_frame, is_join_continuous, is_meet_continuous_algebraic,
    Property, JOIN_CONTINUITY_SCAN_MAX,
};
use orderkit::verifier::{run_suite, search, Suite, Universe};
use orderkit::{as_lattice, is_isomorphic, FinitePoset, OrderError};

#[test]
fn lattice_counts_small() {
    let counts: Vec<usize> = (1..=6).map(|n| enumerate_lattices(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 5, 15]);
    let counts: Vec<usize> = (1..=4).map(|n| enumerate_posets(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 2, 5, 16]);
}

#[test]
fn enumeration_is_deterministic_and_sorted() {
    let a = enumerate_posets(4).unwrap();
    let b = enumerate_posets(4).unwrap();
    assert_eq!(a, b);
    let certs: Vec<_> = a.iter().map(orderkit::certificate).collect();
    assert!(certs.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn complete_distributivity_agrees_on_small_lattices() {
    for l in lattices_up_to(6).unwrap() {
        let d = is_distributive(&l).unwrap().holds;
        assert_eq!(
            is_completely_distributive_oracle(&l, 2).unwrap().holds,
            d,
            "{}",
            l.poset().name()
        );
        assert_eq!(is_join_continuous(&l).unwrap().holds, d);
        assert_eq!(is_frame(&l).unwrap().holds, d);
        assert!(is_meet_continuous_algebraic(&l).unwrap().holds);
    }
}

/// M3 stacked under a chain: non-distributive and too large for the subset scan.
fn m3_under_chain(k: usize) -> FinitePoset {
    let n = 5 + k;
    let labels = (0..n).map(|i| i.to_string()).collect();
    let mut covers = vec![(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)];
    covers.extend((4..n - 1).map(|i| (i, i + 1)));
    FinitePoset::from_index_pairs("m3-chain", labels, &covers).unwrap()
}

#[test]
fn join_continuity_on_large_lattices() {
    let big = as_lattice(&named("boolean(5)").unwrap()).unwrap();
    assert!(big.len() > JOIN_CONTINUITY_SCAN_MAX);
    assert!(is_join_continuous(&big).unwrap().holds);
    assert!(is_frame(&big).unwrap().holds);

    let big = as_lattice(&m3_under_chain(14)).unwrap();
    assert!(big.len() > JOIN_CONTINUITY_SCAN_MAX);
    assert!(!is_join_continuous(&big).unwrap().holds);
    assert!(!is_frame(&big).unwrap().holds);
    assert!(!is_distributive(&big).unwrap().holds);

    let small = as_lattice(&m3_under_chain(2)).unwrap();
    assert!(!is_join_continuous(&small).unwrap().holds);
}

#[test]
fn lattice_only_predicates_skip_posets() {
    let p = named("antichain(2)").unwrap();
    assert!(Property::JoinContinuous.evaluate(&p, None).unwrap().is_none());
    assert!(Property::Continuous.evaluate(&p, None).unwrap().unwrap().holds);
    assert!(matches!(as_lattice(&p), Err(OrderError::NotALattice { .. })));
}

#[test]
fn suites_over_small_universes() {
    for suite in Suite::ALL {
        let universe = if suite.on_lattices() {
            Universe::lattices(5)
        } else {
            Universe::posets(4)
        };
        let r = run_suite(suite, &universe, 2).unwrap();
        assert!(r.passed(), "{}: {:?}", suite.name(), r.failures.first());
    }
}

#[test]
fn search_finds_minimal_non_distributive() {
    let u = Universe::lattices(5);
    let hit = search(&u, "lattice & !distributive", 3).unwrap().unwrap();
    assert_eq!(hit.len(), 5);
    assert!(is_isomorphic(&hit, &m3()) || is_isomorphic(&hit, &n5()));
    assert!(search(&Universe::lattices(4), "!distributive", 1).unwrap().is_none());
}
