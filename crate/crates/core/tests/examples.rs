use extremal_core::builders::{pendant_path_family, s_c_n, u_m, FamilyKind};
use extremal_core::degseq::{enumerate_sequences, CyclicClass, DegreeSequence};
use extremal_core::graphs::{base_graph, Graph};
use extremal_core::indices::{builtin, classify, connectivity_function, Value};
use extremal_core::oracle::{
    are_isomorphic, class_extremal, verify_extremal_construction, verify_majorization, Direction,
    EnumerationOptions, Oracle, OracleError,
};
use extremal_core::Error;

fn pi(s: &str) -> DegreeSequence {
    s.parse().unwrap()
}

fn opts() -> EnumerationOptions {
    EnumerationOptions::default()
}

#[test]
fn bicyclic_pendant_path_graph_is_extremal() {
    let m2 = builtin("second_zagreb", None).unwrap();
    let oracle = Oracle::new(opts());
    let best = class_extremal(
        7,
        CyclicClass::BICYCLIC,
        Some(1),
        &m2,
        Direction::Max,
        &oracle,
    )
    .unwrap();
    let g = pendant_path_family(FamilyKind::Bicyclic, 7, 1).unwrap();
    assert_eq!(connectivity_function(&g, &m2).unwrap(), best.value);
    assert!(best.optimizers.iter().any(|o| are_isomorphic(o, &g)));
}

#[test]
fn pendant_path_families_are_extremal_among_same_pendant_count() {
    let m2 = builtin("second_zagreb", None).unwrap();
    let oracle = Oracle::new(opts());
    for (kind, c, n, k) in [
        (FamilyKind::Tree, 0, 8, 3),
        (FamilyKind::Unicyclic, 1, 7, 2),
        (FamilyKind::Bicyclic, 2, 8, 2),
    ] {
        let best =
            class_extremal(n, CyclicClass(c), Some(k), &m2, Direction::Max, &oracle).unwrap();
        let g = pendant_path_family(kind, n, k).unwrap();
        assert_eq!(
            connectivity_function(&g, &m2).unwrap(),
            best.value,
            "{kind:?}"
        );
    }
}

#[test]
fn star_like_graphs_maximize_second_zagreb_too() {
    let m2 = builtin("second_zagreb", None).unwrap();
    let oracle = Oracle::new(opts());
    for c in 0..=2 {
        let best = class_extremal(6, CyclicClass(c), None, &m2, Direction::Max, &oracle).unwrap();
        let s = s_c_n(c, 6).unwrap();
        assert_eq!(
            connectivity_function(&s, &m2).unwrap(),
            best.value,
            "c = {c}"
        );
    }
}

#[test]
fn small_pendant_families() {
    let f5 = pendant_path_family(FamilyKind::Tree, 5, 2).unwrap();
    assert!(are_isomorphic(
        &f5,
        &Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap()
    ));
    let f6 = pendant_path_family(FamilyKind::Unicyclic, 6, 1).unwrap();
    assert_eq!(f6.degree_sequence().unwrap(), pi("3,2,2,2,2,1"));
    assert_eq!(base_graph(&f6).unwrap().vertices, vec![0, 1, 2]);
}

#[test]
fn unicyclic_constructions_match_in_both_directions() {
    let m2 = builtin("second_zagreb", None).unwrap();
    let abc = builtin("abc", None).unwrap();
    let (m2_class, abc_class) = (classify(&m2, 12), classify(&abc, 12));
    for n in 4..=7 {
        for p in enumerate_sequences(n, CyclicClass::UNICYCLIC, 1) {
            if p.min_degree() != 1 {
                continue;
            }
            let r = verify_extremal_construction(&p, &m2, &m2_class, &opts()).unwrap();
            assert_eq!(r.direction, Direction::Max);
            let r = verify_extremal_construction(&p, &abc, &abc_class, &opts()).unwrap();
            assert_eq!(r.direction, Direction::Min);
            assert_eq!(r.bfs_optimizer, Some(true));
            assert_eq!(r.triangle_optimizer, Some(true));
        }
    }
}

#[test]
fn bicyclic_constructions_match_for_reformulated_zagreb() {
    let z2 = builtin("reformulated_zagreb", None).unwrap();
    let class = classify(&z2, 12);
    for n in 4..=7 {
        for p in enumerate_sequences(n, CyclicClass::BICYCLIC, 1) {
            let r = verify_extremal_construction(&p, &z2, &class, &opts()).unwrap();
            assert_eq!(r.constructor, Some("b_m"));
        }
    }
}

#[test]
fn cycle_to_triangle_with_pendant_strictly_increases() {
    let z2 = builtin("reformulated_zagreb", None).unwrap();
    let v = verify_majorization(&pi("2,2,2,2,2"), &pi("3,2,2,2,1"), &z2, &opts()).unwrap();
    assert!(v.strict_inequality_holds);
    assert_eq!(v.value_pi, Value::Exact(20));
    assert_eq!(v.value_pi_prime, Value::Exact(32));
    let u = u_m(&pi("3,2,2,2,1")).unwrap();
    assert_eq!(connectivity_function(&u, &z2).unwrap(), Value::Exact(32));
}

#[test]
fn equal_sequences_are_not_comparable() {
    let z2 = builtin("reformulated_zagreb", None).unwrap();
    let p = pi("3,2,2,2,1");
    let err = verify_majorization(&p, &p, &z2, &opts()).unwrap_err();
    assert!(matches!(err, OracleError::NotComparable(_)));
    assert!(matches!(Error::from(err), Error::Oracle(_)));
}

#[test]
fn enumeration_bound_is_enforced() {
    let small = EnumerationOptions {
        max_n: 5,
        ..EnumerationOptions::default()
    };
    let m2 = builtin("second_zagreb", None).unwrap();
    let class = classify(&m2, 12);
    let err = verify_extremal_construction(&pi("2,2,2,2,2,2"), &m2, &class, &small).unwrap_err();
    assert!(matches!(err, OracleError::TooLarge { n: 6, max: 5 }));
}
