mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use zfl_core::binomial::binom;
use zfl_core::family::{complete, path};
use zfl_core::graph::disjoint_union;
use zfl_core::poly::{prob_kn_closed_form, prob_path_log_space, zf_path_closed_form};
use zfl_core::{family, zf_polynomial_exact, ExactCurve};

#[test]
fn path_counts_match_the_closed_form() {
    for n in 1..=14 {
        let z = zf_polynomial_exact(&path(n)).unwrap();
        for k in 0..=n {
            let expected = binom(n as i64, k as i64) - binom(n as i64 - k as i64 - 1, k as i64);
            assert_eq!(z.coeff(k), expected, "n = {n}, k = {k}");
            assert_eq!(zf_path_closed_form(n, k), expected);
        }
    }
    assert_eq!(zf_polynomial_exact(&path(5)).unwrap().coeffs(), &[0, 2, 9, 10, 5, 1]);
}

#[test]
fn enumeration_matches_naive_counts() {
    let mut rng = common::rng(23);
    for _ in 0..60 {
        let n = 1 + rand::Rng::random_range(&mut rng, 0..10usize);
        let g = common::random_graph(&mut rng, n, 0.35);
        assert_eq!(zf_polynomial_exact(&g).unwrap().coeffs(), common::naive_counts(&g).as_slice(), "{g:?}");
    }
    for desc in ["cycle:7", "wheel:7", "grid:3x3", "hypercube:3", "bintree:9"] {
        let g = family(desc).unwrap();
        assert_eq!(zf_polynomial_exact(&g).unwrap().coeffs(), common::naive_counts(&g).as_slice(), "{desc}");
    }
}

#[test]
fn enumeration_is_independent_of_worker_count() {
    let g = family("grid:4x5").unwrap();
    let counts: Vec<_> = [1, 2, 3, 5]
        .iter()
        .map(|&t| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
            pool.install(|| zf_polynomial_exact(&g).unwrap())
        })
        .collect();
    assert!(counts.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn disjoint_union_multiplies_probabilities() {
    let mut rng = common::rng(5);
    let grid: Vec<BigRational> =
        [(1, 7), (1, 2), (5, 6)].iter().map(|&(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))).collect();
    for _ in 0..200 {
        let n1 = 1 + rand::Rng::random_range(&mut rng, 0..10usize);
        let n2 = 1 + rand::Rng::random_range(&mut rng, 0..(16 - n1).min(10));
        let a = common::random_graph(&mut rng, n1, 0.4);
        let b = common::random_graph(&mut rng, n2, 0.4);
        let (za, zb) = (zf_polynomial_exact(&a).unwrap(), zf_polynomial_exact(&b).unwrap());
        let zu = zf_polynomial_exact(&disjoint_union(&a, &b)).unwrap();
        for p in &grid {
            assert_eq!(zu.prob_rational(p), za.prob_rational(p) * zb.prob_rational(p));
        }
    }
}

#[test]
fn clique_and_path_closed_forms_match_enumeration() {
    for n in 2..=12 {
        let z = zf_polynomial_exact(&complete(n)).unwrap();
        for i in 1..100 {
            let p = i as f64 / 100.0;
            let f = prob_kn_closed_form(n, p).unwrap();
            assert!((z.prob(p) - f).abs() <= 1e-12 * f.max(1e-300), "n = {n}, p = {p}");
        }
    }
    for n in [10, 30, 64] {
        let curve = ExactCurve::Path(n);
        for i in 1..20 {
            let p = i as f64 / 20.0;
            let a = curve.eval(p);
            let b = prob_path_log_space(n, p);
            assert!((a - b).abs() <= 1e-12 * a, "n = {n}, p = {p}: {a} vs {b}");
        }
    }
}

#[test]
fn probability_is_the_subset_sum() {
    let g = family("rgraph:7").unwrap();
    let adj = common::matrix(&g);
    let z = zf_polynomial_exact(&g).unwrap();
    let p = BigRational::new(BigInt::from(2), BigInt::from(9));
    let q = BigRational::new(BigInt::from(7), BigInt::from(9));
    let mut direct = BigRational::from_integer(BigInt::from(0));
    for mask in 0u64..1 << 7 {
        if common::naive_is_zfs(&adj, mask) {
            let k = mask.count_ones() as usize;
            direct += num_traits::pow(p.clone(), k) * num_traits::pow(q.clone(), 7 - k);
        }
    }
    assert_eq!(z.prob_rational(&p), direct);
}
