//! Zero forcing polynomials: exact counts `z(G; k)` of zero forcing sets of
//! each size, closed forms, and the probability that a Bernoulli(p) vertex
//! set is zero forcing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::binomial::{binom, ln_binom, ln_factorials};
use crate::error::{check_probability, Error, Result};
use crate::forcing::closure_mask;
use crate::graph::Graph;
use crate::vertex_set::low_mask;

/// Default vertex cap for exhaustive enumeration.
pub const ENUMERATION_CAP: usize = 24;
/// Largest cap accepted by [`zf_polynomial_exact_capped`].
pub const ENUMERATION_HARD_CAP: usize = 30;
/// Largest path order whose closed-form coefficients fit in 128 bits.
pub const PATH_COEFF_CAP: usize = 120;

/// Exact coefficients `z(G; k)` for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZfPolynomial {
    n: usize,
    coeffs: Vec<u128>,
}

impl ZfPolynomial {
    /// Wraps coefficients; `coeffs.len()` must be `n + 1`.
    pub fn from_coeffs(coeffs: Vec<u128>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::EmptyGraph);
        }
        let n = coeffs.len() - 1;
        for (k, &c) in coeffs.iter().enumerate() {
            if c > binom(n as i64, k as i64) {
                return Err(Error::Config(format!("z({k}) = {c} exceeds C({n},{k})")));
            }
        }
        Ok(ZfPolynomial { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Smallest `k` with a zero forcing set of size `k`.
    pub fn zero_forcing_number(&self) -> usize {
        self.coeffs.iter().position(|&c| c > 0).unwrap_or(self.n)
    }

    /// Number of zero forcing sets of any size.
    pub fn total(&self) -> u128 {
        self.coeffs.iter().sum()
    }

    /// `Pr[B_p is zero forcing]` in floating point.
    pub fn prob(&self, p: f64) -> f64 {
        let n = self.n;
        let q = 1.0 - p;
        let mut pp = vec![1.0f64; n + 1];
        let mut qq = vec![1.0f64; n + 1];
        for i in 1..=n {
            pp[i] = pp[i - 1] * p;
            qq[i] = qq[i - 1] * q;
        }
        let s: f64 = (1..=n).map(|k| self.coeffs[k] as f64 * pp[k] * qq[n - k]).sum();
        s.clamp(0.0, 1.0)
    }

    /// `Pr[B_p is zero forcing]` in exact rational arithmetic.
    pub fn prob_rational(&self, p: &BigRational) -> BigRational {
        let q = BigRational::one() - p;
        let mut acc = BigRational::zero();
        let mut pk = BigRational::one();
        let qpow: Vec<BigRational> =
            std::iter::successors(Some(BigRational::one()), |x| Some(x * &q)).take(self.n + 1).collect();
        for k in 1..=self.n {
            pk *= p;
            if self.coeffs[k] != 0 {
                acc += BigRational::from_integer(BigInt::from(self.coeffs[k])) * &pk * &qpow[self.n - k];
            }
        }
        acc
    }

    /// Integer coefficients `a_d` with `Pr[B_p is zero forcing] = sum_d a_d p^d`,
    /// from expanding each `(1 - p)^(n - k)`.
    pub fn power_basis(&self) -> Vec<BigInt> {
        let n = self.n as i64;
        (0..=n)
            .map(|d| {
                (0..=d).fold(BigInt::zero(), |acc, k| {
                    let term = BigInt::from(self.coeffs[k as usize]) * BigInt::from(binom(n - k, d - k));
                    if (d - k) % 2 == 0 {
                        acc + term
                    } else {
                        acc - term
                    }
                })
            })
            .collect()
    }
}

impl Serialize for ZfPolynomial {
    /// `{"n": .., "z": ["..", ..]}` with coefficients as decimal strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let z: Vec<String> = self.coeffs.iter().map(u128::to_string).collect();
        let mut s = serializer.serialize_struct("ZfPolynomial", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("z", &z)?;
        s.end()
    }
}

/// Exhaustive polynomial with the default cap of 24 vertices.
pub fn zf_polynomial_exact(g: &Graph) -> Result<ZfPolynomial> {
    zf_polynomial_exact_capped(g, ENUMERATION_CAP)
}

/// Exhaustive polynomial: closes every one of the `2^n` subsets.
///
/// The subset space is split on its high bits into at least as many blocks as
/// rayon has workers; block counts are summed, so the result does not depend
/// on the worker count.
pub fn zf_polynomial_exact_capped(g: &Graph, cap: usize) -> Result<ZfPolynomial> {
    let n = g.n();
    let cap = cap.min(ENUMERATION_HARD_CAP);
    if n > cap {
        return Err(Error::CapExceeded { what: "exact zero forcing polynomial", n, cap });
    }
    let adj = g.mask_rows().expect("n <= 30");
    let full = low_mask(n);
    let workers = rayon::current_num_threads().max(1);
    let high_bits = (usize::BITS - (workers - 1).leading_zeros()).min(n as u32) as usize;
    let low_bits = n - high_bits;
    let blocks = 1u64 << high_bits;
    let counts = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut c = vec![0u64; n + 1];
            let base = block << low_bits;
            for low in 0..(1u64 << low_bits) {
                let s = base | low;
                if closure_mask(&adj, s) == full {
                    c[s.count_ones() as usize] += 1;
                }
            }
            c
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(ZfPolynomial { n, coeffs: counts.into_iter().map(u128::from).collect() })
}

/// `z(P_n; k) = C(n, k) - C(n-k-1, k)`.
pub fn zf_path_closed_form(n: usize, k: usize) -> u128 {
    let (n, k) = (n as i64, k as i64);
    binom(n, k) - binom(n - k - 1, k)
}

/// Path polynomial from the closed form.
pub fn path_polynomial(n: usize) -> Result<ZfPolynomial> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > PATH_COEFF_CAP {
        return Err(Error::CapExceeded { what: "closed-form path coefficients", n, cap: PATH_COEFF_CAP });
    }
    Ok(ZfPolynomial { n, coeffs: (0..=n).map(|k| zf_path_closed_form(n, k)).collect() })
}

/// `Pr[B_p is zero forcing]` for a polynomial, checking `p`.
pub fn prob_zfs_exact(poly: &ZfPolynomial, p: f64) -> Result<f64> {
    check_probability(p)?;
    Ok(poly.prob(p))
}

/// Probability that `B_p(K_n)` has at least `n - 1` vertices, which is exactly
/// the probability that it is zero forcing in `K_n`.
pub fn prob_kn_closed_form(n: usize, p: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Config(format!("clique closed form needs n >= 2, got {n}")));
    }
    check_probability(p)?;
    Ok(n as f64 * (1.0 - p) * p.powi(n as i32 - 1) + p.powi(n as i32))
}

/// Path probability summed term by term in log space; stable for any `n`.
pub fn prob_path_log_space(n: usize, p: f64) -> f64 {
    if p <= 0.0 {
        return 0.0;
    }
    if p >= 1.0 {
        return 1.0;
    }
    let table = ln_factorials(n);
    let (lp, lq) = (p.ln(), (-p).ln_1p());
    let ni = n as i64;
    let terms: Vec<f64> = (1..=ni)
        .map(|k| {
            let full = ln_binom(&table, ni, k);
            let sub = ln_binom(&table, ni - k - 1, k);
            // ln(C(n,k) - C(n-k-1,k)) = ln C(n,k) + ln(1 - C(n-k-1,k)/C(n,k))
            let lz = full + (-(sub - full).exp()).ln_1p();
            lz + k as f64 * lp + (ni - k) as f64 * lq
        })
        .collect();
    let m = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let s: f64 = terms.iter().map(|t| (t - m).exp()).sum();
    (m + s.ln()).exp().clamp(0.0, 1.0)
}

/// A probability curve `p -> Pr[B_p(G) is zero forcing]` with an exact
/// description: enumerated coefficients or a family closed form.
#[derive(Clone, Debug)]
pub enum ExactCurve {
    Polynomial(ZfPolynomial),
    Path(usize),
    Clique(usize),
    /// `n` isolated vertices: the only zero forcing set is everything.
    Empty(usize),
}

impl ExactCurve {
    pub fn n(&self) -> usize {
        match self {
            ExactCurve::Polynomial(poly) => poly.n(),
            ExactCurve::Path(n) | ExactCurve::Clique(n) | ExactCurve::Empty(n) => *n,
        }
    }

    /// Explicit coefficients; paths are limited to [`PATH_COEFF_CAP`].
    pub fn polynomial(&self) -> Result<ZfPolynomial> {
        match *self {
            ExactCurve::Polynomial(ref poly) => Ok(poly.clone()),
            ExactCurve::Path(n) => path_polynomial(n),
            ExactCurve::Clique(n) | ExactCurve::Empty(n) => {
                let mut coeffs = vec![0u128; n + 1];
                coeffs[n] = 1;
                if matches!(self, ExactCurve::Clique(_)) && n >= 2 {
                    coeffs[n - 1] = n as u128;
                }
                ZfPolynomial::from_coeffs(coeffs)
            }
        }
    }

    pub fn eval(&self, p: f64) -> f64 {
        match *self {
            ExactCurve::Polynomial(ref poly) => poly.prob(p),
            ExactCurve::Path(n) if n <= 64 => path_polynomial(n).expect("n <= 64").prob(p),
            ExactCurve::Path(n) => prob_path_log_space(n, p),
            ExactCurve::Clique(1) | ExactCurve::Empty(_) => p.powi(self.n() as i32),
            ExactCurve::Clique(n) => prob_kn_closed_form(n, p).expect("n >= 2"),
        }
    }
}
