mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use zfl_core::forcing::{closure_in_order, closure_mask, Closer};
use zfl_core::{closure, family, is_zfs, zero_forcing_number, Graph, VertexSet};

fn random_set(g: &Graph, bits: &[bool]) -> VertexSet {
    VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| bits[v])).unwrap()
}

proptest! {
    #[test]
    fn closures_agree_with_naive_rescan(g in common::graphs(1, 70), bits in proptest::collection::vec(any::<bool>(), 70)) {
        let b = random_set(&g, &bits);
        let blue: Vec<bool> = (0..g.n()).map(|v| bits[v]).collect();
        let want = common::naive_closure(&common::matrix(&g), &blue);
        let want: Vec<usize> = (0..g.n()).filter(|&v| want[v]).collect();

        let record = closure(&g, &b);
        prop_assert_eq!(record.final_blue.to_vec(), want.clone());

        let mut closer = Closer::new(&g);
        closer.blue_words_mut().copy_from_slice(b.words());
        prop_assert_eq!(closer.run(), want.len());

        if let Some(rows) = g.mask_rows() {
            let m = closure_mask(&rows, b.as_mask().unwrap());
            prop_assert_eq!(VertexSet::from_mask(g.n(), m).to_vec(), want);
        }
    }

    #[test]
    fn closure_ignores_scan_order(g in common::graphs(1, 30), bits in proptest::collection::vec(any::<bool>(), 30), seed in any::<u64>()) {
        let b = random_set(&g, &bits);
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.shuffle(&mut common::rng(seed));
        prop_assert_eq!(closure_in_order(&g, &b, &order), closure(&g, &b).final_blue);
    }

    #[test]
    fn closure_is_monotone(g in common::graphs(1, 30), a in proptest::collection::vec(any::<bool>(), 30), extra in proptest::collection::vec(any::<bool>(), 30)) {
        let small = random_set(&g, &a);
        let big = small.union(&random_set(&g, &extra));
        prop_assert!(closure(&g, &small).final_blue.is_subset(&closure(&g, &big).final_blue));
    }

    #[test]
    fn chains_partition_final_blue(g in common::graphs(1, 30), bits in proptest::collection::vec(any::<bool>(), 30)) {
        let b = random_set(&g, &bits);
        let rec = closure(&g, &b);
        let chains = rec.maximal_forcing_chains();
        let mut seen = VertexSet::empty(g.n());
        for c in &chains {
            prop_assert!(b.contains(c[0]));
            prop_assert!(rec.reversal.contains(*c.last().unwrap()));
            for w in c.windows(2) {
                prop_assert!(g.has_edge(w[0], w[1]));
            }
            for &v in c {
                prop_assert!(!seen.contains(v));
                seen.insert(v);
            }
        }
        prop_assert_eq!(seen, rec.final_blue.clone());
        prop_assert_eq!(chains.len(), b.len());
        prop_assert_eq!(rec.reversal.len(), b.len());
    }
}

#[test]
fn zero_forcing_number_matches_brute_force() {
    let mut rng = common::rng(17);
    for _ in 0..200 {
        let n = 1 + (rand::Rng::random_range(&mut rng, 0..9usize));
        let g = common::random_graph(&mut rng, n, 0.4);
        let adj = common::matrix(&g);
        let brute = (0u64..1 << n).filter(|&m| common::naive_is_zfs(&adj, m)).map(u64::count_ones).min().unwrap();
        assert_eq!(zero_forcing_number(&g).unwrap(), brute as usize, "{g:?}");
    }
}

#[test]
fn consecutive_pair_forces_a_cycle() {
    let c4 = family("cycle:4").unwrap();
    let rec = closure(&c4, &VertexSet::from_indices(4, [1, 2]).unwrap());
    assert!(rec.is_zero_forcing());
    assert!(!is_zfs(&c4, &VertexSet::from_indices(4, [0, 2]).unwrap()));
}
