mod common;

use std::fs::File;
use std::io::BufReader;

use zfl_core::family::{complete, path};
use zfl_core::lab::{count_zfs_samples, exact_curve, sample_bp, threshold_bounds_kn, StreamKey};
use zfl_core::{family, graph6, mc_prob, threshold_exact, zf_polynomial_exact, ExactCurve, SampleConfig};

#[test]
fn sample_sizes_have_binomial_mean() {
    let key = StreamKey::new(2024);
    let draws = 1_000_000u64;
    let total: usize = (0..draws).map(|i| sample_bp(20, 0.5, key, i).unwrap().len()).sum();
    let mean = total as f64 / draws as f64;
    let sigma = (20.0 * 0.25 / draws as f64).sqrt();
    assert!((mean - 10.0).abs() < 3.0 * sigma, "mean {mean}");
}

#[test]
fn forcing_indicator_is_monotone_per_sample() {
    let mut rng = common::rng(3);
    for _ in 0..30 {
        let g = common::random_graph(&mut rng, 14, 0.3);
        let key = StreamKey { seed: 8, stream: 1 };
        for i in 0..200 {
            let mut prev = false;
            for step in 1..10 {
                let b = sample_bp(14, step as f64 / 10.0, key, i).unwrap();
                let now = zfl_core::is_zfs(&g, &b);
                assert!(!prev || now);
                prev = now;
            }
        }
    }
}

#[test]
fn monte_carlo_agrees_with_exact_values() {
    let file = File::open(common::connected_corpus_path()).unwrap();
    let small: Vec<_> = graph6::read_all(BufReader::new(file)).unwrap().into_iter().filter(|g| g.n() <= 5).collect();
    let (mut cells, mut inside) = (0, 0);
    for (i, g) in small.iter().enumerate() {
        let z = zf_polynomial_exact(g).unwrap();
        for step in 1..10 {
            let p = step as f64 / 10.0;
            let cfg = SampleConfig { stream: i as u64, ..SampleConfig::new(p, 100_000, 77) };
            let est = mc_prob(g, &cfg).unwrap();
            cells += 1;
            inside += est.contains(z.prob(p)) as usize;
        }
    }
    assert_eq!(cells, 31 * 9);
    assert!(inside * 100 >= cells * 99, "{inside} of {cells}");
}

#[test]
fn estimates_do_not_depend_on_thread_count() {
    let g = family("hypercube:6").unwrap();
    let runs: Vec<u64> = [1, 2, 4]
        .iter()
        .map(|&t| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().unwrap();
            pool.install(|| count_zfs_samples(&g, 0.6, StreamKey::new(1), 0, 20_000).unwrap())
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn no_connected_graph_has_a_larger_threshold_than_the_clique() {
    let file = File::open(common::connected_corpus_path()).unwrap();
    let graphs = graph6::read_all(BufReader::new(file)).unwrap();
    let clique: Vec<f64> = (0..=8)
        .map(|n| if n == 0 { 0.0 } else { threshold_exact(&exact_curve(&complete(n)).unwrap(), 1e-12).unwrap().p_hat })
        .collect();
    for g in &graphs {
        let t = threshold_exact(&exact_curve(g).unwrap(), 1e-12).unwrap().p_hat;
        assert!(t <= clique[g.n()] + 1e-9, "{g:?}: {t} > {}", clique[g.n()]);
    }
}

#[test]
fn clique_thresholds_lie_in_the_proven_window() {
    for n in 5..=12 {
        let t = threshold_exact(&ExactCurve::Clique(n), 1e-12).unwrap().p_hat;
        let (lo, hi) = threshold_bounds_kn(n).unwrap();
        assert!(lo < t && t < hi, "n = {n}: {t}");
    }
}

/// Union bound `2p + n p^2` and disjoint pairs `1 - (1 - p^2)^floor((n-1)/2)`
/// pin the path threshold between two explicit values.
#[test]
fn path_threshold_scales_like_inverse_root() {
    for n in 8..=24 {
        let t = threshold_exact(&exact_curve(&path(n)).unwrap(), 1e-12).unwrap().p_hat;
        let nf = n as f64;
        let lower = ((4.0 + 2.0 * nf).sqrt() - 2.0) / (2.0 * nf);
        let pairs = ((n - 1) / 2) as f64;
        let upper = (1.0 - 0.5f64.powf(1.0 / pairs)).sqrt();
        assert!(lower <= t && t <= upper, "n = {n}: {lower} <= {t} <= {upper}");
        let scaled = t * nf.sqrt();
        assert!((0.4..=1.3).contains(&scaled), "n = {n}: {scaled}");
    }
}

#[test]
fn rgraph_threshold_stays_above_a_quarter() {
    for n in 3..=20 {
        let g = family(&format!("rgraph:{n}")).unwrap();
        let z = zf_polynomial_exact(&g).unwrap();
        for step in 1..100 {
            let p = step as f64 / 100.0;
            assert!(z.prob(p) <= 2.0 * p + 1e-15, "n = {n}, p = {p}");
        }
        let t = threshold_exact(&ExactCurve::Polynomial(z), 1e-12).unwrap().p_hat;
        assert!(t >= 0.25, "n = {n}: {t}");
    }
}
