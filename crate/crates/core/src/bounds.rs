//! Degree-based upper bounds on the zero forcing probability and on the
//! coefficients `z(G; k)`, plus the path-side lower bounds they are compared
//! against.
//!
//! Probability bounds are generic over [`Scalar`] so the same formula can be
//! evaluated in `f64` or exactly in rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num};

use crate::binomial::{binom, binom_big};
use crate::error::{check_probability, Error, Result};
use crate::graph::Graph;

/// Number types a probability bound can be evaluated in.
pub trait Scalar: Num + Clone + FromPrimitive {}

impl<T: Num + Clone + FromPrimitive> Scalar for T {}

fn lift<T: Scalar>(x: usize) -> T {
    T::from_usize(x).expect("small integers are representable")
}

/// `sum_v d(v) p^d(v)`.
pub fn degree_sum_value<T: Scalar>(g: &Graph, p: &T) -> T {
    (0..g.n()).fold(T::zero(), |acc, v| {
        let d = g.degree(v);
        acc + lift::<T>(d) * num_traits::pow(p.clone(), d)
    })
}

/// Union bound over "some vertex performs the first force".
pub fn degree_sum_bound(g: &Graph, p: f64) -> Result<f64> {
    check_probability(p)?;
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(degree_sum_value(g, &p))
}

/// `delta * n * p^delta`.
pub fn min_degree_value<T: Scalar>(g: &Graph, p: &T) -> T {
    let delta = g.min_degree();
    lift::<T>(delta * g.n()) * num_traits::pow(p.clone(), delta)
}

/// Minimum-degree bound, valid when there is no isolated vertex.
pub fn min_degree_bound(g: &Graph, p: f64) -> Result<f64> {
    check_probability(p)?;
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(min_degree_value(g, &p))
}

/// Number of vertices of each degree `0..=max_degree`.
pub fn degree_histogram(g: &Graph) -> Vec<usize> {
    let mut h = vec![0; g.max_degree() + 1];
    for v in 0..g.n() {
        h[g.degree(v)] += 1;
    }
    h
}

/// Smallest `N` with at most `N^k` vertices of degree `k` for every `1 <= k < d`.
pub fn min_low_degree_parameter(g: &Graph, d: usize) -> u64 {
    let hist = degree_histogram(g);
    (1..d)
        .map(|k| {
            let count = hist.get(k).copied().unwrap_or(0) as u64;
            (0u64..).find(|&n| n.checked_pow(k as u32).is_none_or(|nk| nk >= count)).unwrap()
        })
        .max()
        .unwrap_or(0)
}

/// Checks the hypotheses of [`few_low_degree_bound`] other than the range of `p`.
pub fn check_few_low_degree(g: &Graph, d: usize, big_n: u64) -> Result<()> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(v));
    }
    if d < 1 || d > g.n() {
        return Err(Error::Hypothesis(format!("need 1 <= d <= n, got d = {d}, n = {}", g.n())));
    }
    let hist = degree_histogram(g);
    for k in 1..d {
        let count = hist.get(k).copied().unwrap_or(0) as u64;
        let allowed = big_n.checked_pow(k as u32).unwrap_or(u64::MAX);
        if count > allowed {
            return Err(Error::Hypothesis(format!("{count} vertices of degree {k} exceed N^{k} = {allowed}")));
        }
    }
    Ok(())
}

/// Whether `p <= e^(-1/d)`.
pub fn below_calculus_cutoff(p: f64, d: usize) -> bool {
    p <= (-1.0 / d as f64).exp()
}

/// `4 p N + d n p^d`.
pub fn few_low_degree_value<T: Scalar>(g: &Graph, p: &T, d: usize, big_n: u64) -> T {
    lift::<T>(4) * p.clone() * T::from_u64(big_n).expect("fits") + lift::<T>(d * g.n()) * num_traits::pow(p.clone(), d)
}

/// Bound for graphs with few low-degree vertices. Requires no isolated
/// vertices, `1 <= d <= n`, at most `N^k` vertices of degree `k` for
/// `1 <= k < d`, and `p <= e^(-1/d)`.
pub fn few_low_degree_bound(g: &Graph, p: f64, d: usize, big_n: u64) -> Result<f64> {
    check_probability(p)?;
    check_few_low_degree(g, d, big_n)?;
    if !below_calculus_cutoff(p, d) {
        return Err(Error::Hypothesis(format!("p = {p} exceeds e^(-1/{d})")));
    }
    Ok(few_low_degree_value(g, &p, d, big_n))
}

/// `sum_v d(v) C(n - d(v), k - d(v))`, an upper bound on `z(G; k)`.
pub fn degree_count_bound(g: &Graph, k: usize) -> Result<u128> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let n = g.n() as i64;
    Ok((0..g.n())
        .map(|v| {
            let d = g.degree(v) as i64;
            d as u128 * binom(n - d, k as i64 - d)
        })
        .sum())
}

/// `k^2 / (n + k^2) * C(n, k)`, a lower bound on `z(P_n; k)`.
pub fn path_count_lower_bound(n: usize, k: usize) -> BigRational {
    let denom = n + k * k;
    if denom == 0 || k > n {
        return BigRational::from_integer(0.into());
    }
    let num = binom_big(n as i64, k as i64) * BigInt::from(k * k);
    BigRational::new(num, BigInt::from(denom))
}

/// Largest `k <= (2 delta)^(-1/delta) n^(1 - 1/delta)`, the range where a
/// graph of minimum degree `delta >= 3` has at most as many size-`k` zero
/// forcing sets as the path.
pub fn small_k_range(n: usize, delta: usize) -> Result<usize> {
    if delta < 3 {
        return Err(Error::Hypothesis(format!("needs minimum degree >= 3, got {delta}")));
    }
    let (nf, d) = (n as f64, delta as f64);
    let x = (2.0 * d).powf(-1.0 / d) * nf.powf(1.0 - 1.0 / d);
    // guard against x landing a hair under an integer
    let r = x.round();
    Ok(if (x - r).abs() < 1e-9 { r as usize } else { x.floor() as usize })
}

/// Whether `delta >= log2(n) + 2 log2(log2(n))`, under which the size-`k`
/// comparison with the path holds for every `k`.
pub fn covers_all_k(n: usize, delta: usize) -> bool {
    if n <= 2 {
        return true;
    }
    let l = (n as f64).log2();
    delta as f64 >= l + 2.0 * l.log2()
}

/// `4p + n p^2`, for graphs where one vertex anchors two pendant paths.
pub fn double_pendant_value<T: Scalar>(n: usize, p: &T) -> T {
    lift::<T>(4) * p.clone() + lift::<T>(n) * p.clone() * p.clone()
}

/// Exact check of `z(T; k) <= 13 k^4 / n^2 * C(n, k)` for non-path trees.
pub fn tree_count_bound_holds(n: usize, k: usize, z: u128) -> bool {
    let lhs = BigInt::from(z) * BigInt::from(n * n);
    let rhs = BigInt::from(13u32) * BigInt::from(k).pow(4) * binom_big(n as i64, k as i64);
    lhs <= rhs
}

pub fn tree_count_bound(n: usize, k: usize) -> f64 {
    13.0 * (k as f64).powi(4) / (n as f64).powi(2) * binom(n as i64, k as i64) as f64
}

/// `1 - (1-p)^2`: an endpoint pair `{v_1, v_n}` meets `B_p`.
pub fn endpoint_probability(p: f64) -> f64 {
    1.0 - (1.0 - p) * (1.0 - p)
}

/// `1 - (1 - p^2)^floor((n-1)/2)`: some disjoint consecutive pair lies in `B_p`.
pub fn consecutive_pair_lower_bound(n: usize, p: f64) -> f64 {
    1.0 - (1.0 - p * p).powi(((n.saturating_sub(1)) / 2) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, family, path};
    use crate::poly::zf_polynomial_exact;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn degree_sum_examples() {
        let star = family("star:3").unwrap();
        assert!(close(degree_sum_bound(&star, 0.5).unwrap(), 1.875));
        let c4 = family("cycle:4").unwrap();
        assert!(close(degree_sum_bound(&c4, 0.1).unwrap(), 0.08));
        let exact = zf_polynomial_exact(&c4).unwrap().prob(0.1);
        assert!(close(exact, 0.0361) && exact <= 0.08);
        assert_eq!(degree_sum_bound(&c4, 0.0).unwrap(), 0.0);
        assert!(matches!(degree_sum_bound(&family("empty:3").unwrap(), 0.5), Err(Error::Edgeless)));
    }

    #[test]
    fn min_degree_examples() {
        let k2 = complete(2);
        for i in 0..=10 {
            let p = i as f64 / 10.0;
            let bound = min_degree_bound(&k2, p).unwrap();
            assert!(close(bound, 2.0 * p));
            let exact = zf_polynomial_exact(&k2).unwrap().prob(p);
            assert!(close(bound - exact, p * p));
        }
        assert!(close(min_degree_bound(&family("cycle:6").unwrap(), 0.2).unwrap(), 0.48));
        assert!(close(min_degree_bound(&family("hypercube:3").unwrap(), 0.3).unwrap(), 0.648));
        let with_isolated = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(min_degree_bound(&with_isolated, 0.3), Err(Error::IsolatedVertex(2))));
    }

    #[test]
    fn few_low_degree_examples() {
        let c8 = family("cycle:8").unwrap();
        for p in [0.1, 0.3, 0.5] {
            assert!(close(few_low_degree_bound(&c8, p, 2, 0).unwrap(), 16.0 * p * p));
        }
        assert!(close(few_low_degree_bound(&path(8), 0.1, 2, 2).unwrap(), 0.96));
        assert!(matches!(few_low_degree_bound(&path(8), 0.1, 2, 1), Err(Error::Hypothesis(_))));
        assert!(matches!(few_low_degree_bound(&c8, 0.9, 2, 0), Err(Error::Hypothesis(_))));
        assert_eq!(min_low_degree_parameter(&path(8), 2), 2);
        // 3x3 grid: 4 corners of degree 2, 4 sides of degree 3, center of degree 4
        let grid = family("grid:3x3").unwrap();
        assert_eq!(min_low_degree_parameter(&grid, 4), 2);
        let bound = few_low_degree_bound(&grid, 0.1, 4, 3).unwrap();
        assert!(zf_polynomial_exact(&grid).unwrap().prob(0.1) <= bound);
    }

    #[test]
    fn degree_count_examples() {
        assert_eq!(degree_count_bound(&complete(3), 2).unwrap(), 6);
        assert_eq!(degree_count_bound(&path(3), 1).unwrap(), 2);
        assert_eq!(degree_count_bound(&family("cycle:4").unwrap(), 2).unwrap(), 8);
    }

    #[test]
    fn path_lower_bound_examples() {
        let b = path_count_lower_bound(5, 2);
        assert_eq!(b, BigRational::new(40.into(), 9.into()));
        assert_eq!(path_count_lower_bound(7, 0), BigRational::from_integer(0.into()));
        let b = path_count_lower_bound(10, 3);
        assert_eq!(b, BigRational::new(1080.into(), 19.into()));
        assert!(b <= BigRational::from_integer(100.into()));
    }

    #[test]
    fn small_k_examples() {
        assert_eq!(small_k_range(1000, 3).unwrap(), 55);
        assert!(small_k_range(5, 3).unwrap() >= 1);
        assert!(small_k_range(5, 2).is_err());
        assert!(covers_all_k(8, 7));
        assert!(!covers_all_k(64, 8));
    }

    #[test]
    fn endpoint_vs_pair_examples() {
        assert!(close(endpoint_probability(0.5), 0.75));
        assert!(close(consecutive_pair_lower_bound(5, 0.5), 1.0 - 0.75f64.powi(2)));
    }
}
