use tarkit_core::bounds::{
    characterize_gt120, check_disconnected, check_lemma1, check_lemma2, check_observation1, check_theorem1,
    replace_degree4_with_crossing, BoundError, DisconnectedOutcome, Gt120, Theorem1Outcome,
};
use tarkit_core::exceptions::{catalog, recognize_graph, ExceptionId};
use tarkit_core::generators::{layered_8gon, random_connected_drawing};
use tarkit_core::{AngleClass, Drawing, Graph};

#[test]
fn unit_square_is_the_excluded_four_gon() {
    let sq = Drawing::from_ints(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    assert_eq!(check_lemma2(&sq), Err(BoundError::Excluded("4-gon")));
    let r = check_lemma1(&sq).unwrap();
    assert_eq!((r.k, r.bound), (Some(4), 4));
    assert!(r.holds);
}

#[test]
fn triangle_with_tail_exceeds_lemma2_at_sixty() {
    // four vertices, four edges: above 2n - 5 = 3 and not excluded
    let d = Drawing::from_ints(4, &[(0, 1), (1, 2), (2, 0), (2, 3)], &[(0, 0), (4, 0), (2, 3), (2, 7)]).unwrap();
    let r = check_lemma2(&d).unwrap();
    assert!(!r.holds);
    assert!(r.tar_class_60.at_most());
}

#[test]
fn observation1_counts_inner_degrees() {
    // square with one diagonal: inner degrees 1 + 1, bound 2·4 - 7
    let d = Drawing::from_ints(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], &[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
    let r = check_observation1(&d).unwrap();
    assert_eq!((r.p, r.value, r.bound), (Some(4), 2, 1));
    assert!(!r.refutes());
    assert_eq!(r.tar_class_60, AngleClass::Below);
}

#[test]
fn theorem1_classifies_catalog_and_family() {
    for e in catalog().iter().filter(|e| e.graph.n() >= 3) {
        assert!(e.graph.m() + 6 > 2 * e.graph.n(), "{}", e.id);
        assert_eq!(check_theorem1(&e.graph, Some(&e.witness)).unwrap(), Theorem1Outcome::Exception(e.id));
    }
    let d = layered_8gon(3).unwrap();
    assert!(matches!(check_theorem1(d.graph(), None).unwrap(), Theorem1Outcome::BoundHolds { .. }));
    // K4 has 6 > 2 edges and is no exception
    let k4 = random_connected_drawing(4, 6, 5, 20).unwrap();
    assert!(matches!(
        check_theorem1(k4.graph(), Some(&k4)).unwrap(),
        Theorem1Outcome::ExceedsBound { witness_class: Some(c) } if c.at_most()
    ));
}

#[test]
fn disconnected_drawings() {
    let e0 = Drawing::from_ints(3, &[(0, 1)], &[(0, 0), (1, 0), (0, 5)]).unwrap();
    assert_eq!(check_disconnected(&e0).unwrap(), DisconnectedOutcome::Exception(ExceptionId::E0));
    let two = Drawing::from_ints(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)], &[(0, 0), (4, 0), (2, 3), (10, 0), (12, 1), (14, 0)])
        .unwrap();
    match check_disconnected(&two).unwrap() {
        DisconnectedOutcome::Report(r) => {
            assert_eq!(r.components.len(), 2);
            assert!(r.holds);
            // a triangle exceeds its own bound but only at 60°
            assert!(!r.components[0].holds && !r.components[0].refutes());
            assert!(r.components[1].holds);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(check_disconnected(&layered_8gon(1).unwrap()), Err(BoundError::Connected));
}

#[test]
fn degree4_replacement_needs_degree_four() {
    let e = catalog().into_iter().find(|e| e.id == ExceptionId::E9_CYCLE).unwrap();
    let deg = e.graph.degrees();
    let v = (0..e.graph.n()).find(|&v| deg[v] != 4).unwrap();
    assert!(matches!(replace_degree4_with_crossing(&e.witness, v), Err(BoundError::Degree { .. })));
}

#[test]
fn above_120_characterization() {
    let mut g = Graph::new(12, (0..7).map(|i| (i, (i + 1) % 7)).chain([(7, 8), (8, 9), (10, 11)])).unwrap();
    match characterize_gt120(&g) {
        Gt120::Yes(w) => assert_eq!(w.tar().unwrap().classify(tarkit_core::Threshold::Deg120), AngleClass::Above),
        Gt120::No(why) => panic!("{why}"),
    }
    g = Graph::new(7, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    assert_eq!(characterize_gt120(&g), Gt120::No("cycle of length 6".into()));
    assert_eq!(characterize_gt120(&Graph::star(3)), Gt120::No("vertex of degree 3".into()));
    assert!(recognize_graph(&Graph::star(3)).is_some());
}
