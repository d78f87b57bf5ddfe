mod common;

use std::fs::File;
use std::io::BufReader;

use proptest::prelude::*;
use zfl_core::graph::{disjoint_union, join};
use zfl_core::{family, graph6, Graph};

proptest! {
    #[test]
    fn graph6_round_trip(g in common::graphs(1, 70)) {
        let text = graph6::encode(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn union_and_join_sizes(a in common::graphs(1, 9), b in common::graphs(1, 9)) {
        let u = disjoint_union(&a, &b);
        prop_assert_eq!(u.n(), a.n() + b.n());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        let j = join(&a, &b);
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        prop_assert_eq!(j.induced(&(0..a.n()).collect::<Vec<_>>()).unwrap(), a);
    }
}

#[test]
fn connected_corpus_has_expected_counts() {
    let file = File::open(common::connected_corpus_path()).unwrap();
    let graphs = graph6::read_all(BufReader::new(file)).unwrap();
    // connected unlabeled graphs on 1..8 vertices
    let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (n, &want) in (1..=8).zip(expected.iter()) {
        let got: Vec<&Graph> = graphs.iter().filter(|g| g.n() == n).collect();
        assert_eq!(got.len(), want, "n = {n}");
        assert!(got.iter().all(|g| g.is_connected()));
    }
    assert_eq!(graphs.len(), 12113);
}

#[test]
fn family_shapes() {
    let cases = [
        ("path:6", 6, 5),
        ("cycle:6", 6, 6),
        ("complete:5", 5, 10),
        ("nk1:4", 4, 0),
        ("star:4", 5, 4),
        ("wheel:6", 6, 10),
        ("rgraph:6", 6, 6),
        ("grid:3x4", 12, 17),
        ("hypercube:4", 16, 32),
        ("bintree:7", 7, 6),
        ("multipartite:2,3", 5, 6),
    ];
    for (desc, n, m) in cases {
        let g = family(desc).unwrap();
        assert_eq!((g.n(), g.edge_count()), (n, m), "{desc}");
    }
    assert!(family("cycle:2").is_err());
    assert!(family("moebius:8").is_err());
}
