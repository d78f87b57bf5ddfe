//! Bernoulli sampling of `B_p(G)`, Monte Carlo estimation of
//! `Pr[B_p(G) is zero forcing]`, and threshold solving.
//!
//! Randomness is counter based: sample `i` of stream `(seed, stream)` reads
//! the ChaCha8 key stream at a fixed offset, one 64-bit word per vertex. A
//! vertex is included when its word is below `p * 2^64`, so for a fixed
//! sample the drawn sets are nested in `p` and every estimate is independent
//! of how samples are split across threads.

use std::collections::HashMap;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{check_probability, Error, Result};
use crate::forcing::{closure_mask, Closer};
use crate::graph::Graph;
use crate::poly::{zf_polynomial_exact_capped, ExactCurve, ENUMERATION_CAP};
use crate::vertex_set::{low_mask, VertexSet};

/// Samples per parallel work unit.
const CHUNK: u64 = 1024;

/// Identifies an independent random stream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StreamKey {
    pub seed: u64,
    pub stream: u64,
}

impl StreamKey {
    pub fn new(seed: u64) -> Self {
        StreamKey { seed, stream: 0 }
    }

    fn rng_at(&self, n: usize, index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        // two 32-bit words per vertex per sample
        rng.set_word_pos(2 * n as u128 * index as u128);
        rng
    }
}

/// Inclusion rule for one `p`: a vertex is drawn when its word is below
/// `cut`, or always when `all` is set.
#[derive(Clone, Copy, Debug)]
struct Cut {
    cut: u64,
    all: bool,
}

impl Cut {
    fn new(p: f64) -> Self {
        // `as` saturates, and p = 1 must include the word u64::MAX too
        Cut { cut: (p * 18_446_744_073_709_551_616.0) as u64, all: p >= 1.0 }
    }

    #[inline]
    fn take(&self, word: u64) -> bool {
        self.all || word < self.cut
    }
}

/// Draws sample `index` of `B_p` on `n` vertices.
pub fn sample_bp(n: usize, p: f64, key: StreamKey, index: u64) -> Result<VertexSet> {
    check_probability(p)?;
    let cut = Cut::new(p);
    let mut rng = key.rng_at(n, index);
    let mut set = VertexSet::empty(n);
    for v in 0..n {
        if cut.take(rng.next_u64()) {
            set.insert(v);
        }
    }
    Ok(set)
}

/// Counts zero forcing samples among indices `range`, drawn in order from one
/// positioned generator.
fn count_range(g: &Graph, masks: Option<&[u64]>, cut: Cut, key: StreamKey, range: (u64, u64)) -> u64 {
    let n = g.n();
    let mut rng = key.rng_at(n, range.0);
    let mut hits = 0;
    match masks {
        Some(adj) => {
            let full = low_mask(n);
            for _ in range.0..range.1 {
                let mut blue = 0u64;
                for v in 0..n {
                    blue |= (cut.take(rng.next_u64()) as u64) << v;
                }
                hits += (closure_mask(adj, blue) == full) as u64;
            }
        }
        None => {
            let mut closer = Closer::new(g);
            for _ in range.0..range.1 {
                let words = closer.blue_words_mut();
                words.fill(0);
                for v in 0..n {
                    words[v / 64] |= (cut.take(rng.next_u64()) as u64) << (v % 64);
                }
                hits += (closer.run() == n) as u64;
            }
        }
    }
    hits
}

/// Number of zero forcing sets among samples `start..end` of `B_p(G)`.
pub fn count_zfs_samples(g: &Graph, p: f64, key: StreamKey, start: u64, end: u64) -> Result<u64> {
    check_probability(p)?;
    let masks = g.mask_rows();
    let cut = Cut::new(p);
    let chunks: Vec<(u64, u64)> = (start..end).step_by(CHUNK as usize).map(|s| (s, (s + CHUNK).min(end))).collect();
    Ok(chunks.into_par_iter().map(|r| count_range(g, masks.as_deref(), cut, key, r)).sum())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalKind {
    /// Distribution-free, half-width `sqrt(ln(2/alpha) / (2m))`.
    #[default]
    Hoeffding,
    Wilson,
}

/// Monte Carlo run parameters. `alpha` is the total miss probability of the
/// two-sided interval, so `0.01` gives 99% coverage.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleConfig {
    pub p: f64,
    pub samples: u64,
    pub seed: u64,
    pub alpha: f64,
    pub stream: u64,
    pub interval: IntervalKind,
}

impl SampleConfig {
    pub fn new(p: f64, samples: u64, seed: u64) -> Self {
        SampleConfig { p, samples, seed, alpha: 0.01, stream: 0, interval: IntervalKind::Hoeffding }
    }

    pub fn validate(&self) -> Result<()> {
        check_probability(self.p)?;
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        check_alpha(self.alpha)
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::Config(format!("alpha must lie in (0, 1), got {alpha}")))
    }
}

pub fn hoeffding_half_width(samples: u64, alpha: f64) -> f64 {
    ((2.0 / alpha).ln() / (2.0 * samples as f64)).sqrt()
}

/// Two-sided interval for a binomial proportion, clamped to `[0, 1]`.
pub fn confidence_interval(successes: u64, samples: u64, alpha: f64, kind: IntervalKind) -> (f64, f64) {
    let m = samples as f64;
    let est = successes as f64 / m;
    match kind {
        IntervalKind::Hoeffding => {
            let h = hoeffding_half_width(samples, alpha);
            ((est - h).max(0.0), (est + h).min(1.0))
        }
        IntervalKind::Wilson => {
            let z = Normal::standard().inverse_cdf(1.0 - alpha / 2.0);
            let z2 = z * z;
            let center = (est + z2 / (2.0 * m)) / (1.0 + z2 / m);
            let half = z / (1.0 + z2 / m) * (est * (1.0 - est) / m + z2 / (4.0 * m * m)).sqrt();
            ((center - half).max(0.0), (center + half).min(1.0))
        }
    }
}

/// A Monte Carlo estimate of `Pr[B_p(G) is zero forcing]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub p: f64,
    pub estimate: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub successes: u64,
    pub samples: u64,
    pub seed: u64,
    pub alpha: f64,
    pub interval: IntervalKind,
}

impl McEstimate {
    pub fn contains(&self, x: f64) -> bool {
        self.ci_lo <= x && x <= self.ci_hi
    }
}

pub fn mc_prob(g: &Graph, cfg: &SampleConfig) -> Result<McEstimate> {
    cfg.validate()?;
    let key = StreamKey { seed: cfg.seed, stream: cfg.stream };
    let successes = count_zfs_samples(g, cfg.p, key, 0, cfg.samples)?;
    let (ci_lo, ci_hi) = confidence_interval(successes, cfg.samples, cfg.alpha, cfg.interval);
    Ok(McEstimate {
        p: cfg.p,
        estimate: successes as f64 / cfg.samples as f64,
        ci_lo,
        ci_hi,
        successes,
        samples: cfg.samples,
        seed: cfg.seed,
        alpha: cfg.alpha,
        interval: cfg.interval,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdMethod {
    ExactBisection,
    MonteCarlo,
}

/// Why a Monte Carlo threshold search stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    /// Bracket narrower than the tolerance.
    Tolerance,
    /// A probe reached its sample cap with 1/2 still inside its interval,
    /// so the probe is within noise of the threshold.
    ProbeUndecided,
    /// Total budget spent before either of the above.
    BudgetExhausted,
}

/// Estimated threshold `p(G)`, where the zero forcing probability is 1/2.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThresholdEstimate {
    pub p_hat: f64,
    pub method: ThresholdMethod,
    /// Exact: final bisection bracket. Monte Carlo: bracket of decided probes.
    pub interval: (f64, f64),
    pub tolerance: f64,
    pub seed: Option<u64>,
    /// Curve evaluations (exact) or samples drawn (Monte Carlo).
    pub evaluations: u64,
    pub conclusive: bool,
    pub stop: Option<StopReason>,
}

/// The exact curve for `g`: a closed form when `g` is a path, clique or
/// edgeless, otherwise the enumerated polynomial.
pub fn exact_curve(g: &Graph) -> Result<ExactCurve> {
    exact_curve_capped(g, ENUMERATION_CAP)
}

/// [`exact_curve`] with an explicit enumeration cap.
pub fn exact_curve_capped(g: &Graph, cap: usize) -> Result<ExactCurve> {
    let n = g.n();
    let m = g.edge_count();
    if m == 0 {
        Ok(ExactCurve::Empty(n))
    } else if m == n * (n - 1) / 2 {
        Ok(ExactCurve::Clique(n))
    } else if g.is_path() {
        Ok(ExactCurve::Path(n))
    } else {
        Ok(ExactCurve::Polynomial(zf_polynomial_exact_capped(g, cap)?))
    }
}

/// Bisection for `Pr = 1/2` on an exact curve; stops once the bracket is
/// within `tol` and the value at its midpoint is within `tol` of 1/2.
pub fn threshold_exact(curve: &ExactCurve, tol: f64) -> Result<ThresholdEstimate> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut evaluations = 0;
    let mut mid = 0.5;
    // 2^-1100 is below any f64 spacing on [0, 1], so this always terminates
    for _ in 0..1100 {
        mid = 0.5 * (lo + hi);
        let f = curve.eval(mid);
        evaluations += 1;
        if (f - 0.5).abs() <= tol && hi - lo <= tol {
            break;
        }
        if f < 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
        if mid == lo && mid == hi {
            break;
        }
    }
    Ok(ThresholdEstimate {
        p_hat: mid,
        method: ThresholdMethod::ExactBisection,
        interval: (lo, hi),
        tolerance: tol,
        seed: None,
        evaluations,
        conclusive: true,
        stop: Some(StopReason::Tolerance),
    })
}

/// Parameters of the stochastic bisection in [`threshold_mc`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McThresholdConfig {
    /// Total samples over all probes.
    pub budget: u64,
    /// Samples a single probe may draw before it is declared undecided.
    pub probe_cap: u64,
    /// Samples per look at a probe.
    pub batch: u64,
    pub seed: u64,
    pub tol: f64,
    /// Miss probability shared across every look of the search.
    pub alpha: f64,
}

impl McThresholdConfig {
    pub fn new(budget: u64, seed: u64, tol: f64) -> Self {
        let batch = 1000.min(budget.max(1));
        McThresholdConfig { budget, probe_cap: (budget / 8).max(batch), batch, seed, tol, alpha: 0.01 }
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha)?;
        if self.batch == 0 || self.budget < self.batch || self.probe_cap < self.batch {
            return Err(Error::Config(format!(
                "need 1 <= batch ({}) <= probe cap ({}) and batch <= budget ({})",
                self.batch, self.probe_cap, self.budget
            )));
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::Config(format!("tolerance must lie in (0, 1), got {}", self.tol)));
        }
        Ok(())
    }

    fn max_probes(&self) -> u64 {
        (1.0 / self.tol).log2().ceil() as u64 + 1
    }

    fn looks_per_probe(&self) -> u64 {
        self.probe_cap.div_ceil(self.batch)
    }
}

/// Stochastic bisection for `p(G)`. Every probe uses the same sample
/// indices, so per-sample outcomes are monotone in `p`; each look at a probe
/// uses a Hoeffding interval at level `alpha / (probes * looks)`.
pub fn threshold_mc(g: &Graph, cfg: &McThresholdConfig) -> Result<ThresholdEstimate> {
    cfg.validate()?;
    let key = StreamKey::new(cfg.seed);
    let look_alpha = cfg.alpha / (cfg.max_probes() * cfg.looks_per_probe()) as f64;
    let mut cache: HashMap<u64, (u64, u64)> = HashMap::new();
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut used = 0u64;
    let mut stop = StopReason::Tolerance;
    let mut p_hat = 0.5;
    while hi - lo > cfg.tol {
        let mid = 0.5 * (lo + hi);
        p_hat = mid;
        let (hits, drawn) = cache.entry(mid.to_bits()).or_insert((0, 0));
        let verdict = loop {
            if *drawn > 0 {
                let h = hoeffding_half_width(*drawn, look_alpha);
                let est = *hits as f64 / *drawn as f64;
                if est - h > 0.5 {
                    break Some(true);
                }
                if est + h < 0.5 {
                    break Some(false);
                }
            }
            if *drawn >= cfg.probe_cap {
                stop = StopReason::ProbeUndecided;
                break None;
            }
            if used >= cfg.budget {
                stop = StopReason::BudgetExhausted;
                break None;
            }
            let take = cfg.batch.min(cfg.probe_cap - *drawn).min(cfg.budget - used);
            *hits += count_zfs_samples(g, mid, key, *drawn, *drawn + take)?;
            *drawn += take;
            used += take;
        };
        match verdict {
            Some(true) => hi = mid,
            Some(false) => lo = mid,
            None => break,
        }
    }
    if stop == StopReason::Tolerance {
        p_hat = 0.5 * (lo + hi);
    }
    Ok(ThresholdEstimate {
        p_hat,
        method: ThresholdMethod::MonteCarlo,
        interval: (lo, hi),
        tolerance: cfg.tol,
        seed: Some(cfg.seed),
        evaluations: used,
        conclusive: stop != StopReason::BudgetExhausted,
        stop: Some(stop),
    })
}

/// An interval guaranteed to contain `p(K_n)` for `n >= 5`.
pub fn threshold_bounds_kn(n: usize) -> Result<(f64, f64)> {
    if n < 5 {
        return Err(Error::Hypothesis(format!("clique threshold bounds need n >= 5, got {n}")));
    }
    let n = n as f64;
    Ok((1.0 - 5.0 / n, 1.0 - 1.0 / (2.0 * n)))
}
