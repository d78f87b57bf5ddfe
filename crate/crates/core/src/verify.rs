//! Exhaustive verification of inequalities about zero forcing counts and
//! probabilities over graph corpora, with exact rational verdicts.

use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::bounds;
use crate::error::{Error, Result};
use crate::family::family;
use crate::forcing::is_zfs;
use crate::graph::Graph;
use crate::graph6;
use crate::lab::{exact_curve, sample_bp, threshold_exact, StreamKey};
use crate::poly::{path_polynomial, zf_polynomial_exact, ZfPolynomial};
use crate::structure::{add_leaf_clique, core_project_set, double_pendant_anchor};
use crate::trees::enumerate_free_trees;
use crate::vertex_set::VertexSet;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A named list of graphs.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub descriptor: String,
    pub graphs: Vec<Graph>,
}

impl Corpus {
    /// All free trees with `lo..=hi` vertices.
    pub fn trees(lo: usize, hi: usize) -> Result<Corpus> {
        let mut graphs = Vec::new();
        for n in lo.max(1)..=hi {
            graphs.extend(enumerate_free_trees(n)?);
        }
        let descriptor = if lo <= 1 { format!("trees:{hi}") } else { format!("trees:{lo}-{hi}") };
        Ok(Corpus { descriptor, graphs })
    }

    pub fn from_graph6_file(path: &Path) -> Result<Corpus> {
        let graphs = graph6::read_all(BufReader::new(File::open(path)?))?;
        let name = path.file_name().map_or_else(|| path.display().to_string(), |f| f.to_string_lossy().into_owned());
        Ok(Corpus { descriptor: format!("file:{name}"), graphs })
    }

    /// Parses `trees:N` (orders 1..=N), `trees:A-B`, a graph6 file path, or
    /// several of these joined with `+`.
    pub fn parse(descriptor: &str) -> Result<Corpus> {
        let mut parts = Vec::new();
        for part in descriptor.split('+') {
            parts.push(match part.strip_prefix("trees:") {
                Some(range) => {
                    let bad = || Error::Config(format!("bad tree range `{range}`"));
                    let (lo, hi) = match range.split_once('-') {
                        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
                        None => (1, range.parse().map_err(|_| bad())?),
                    };
                    Corpus::trees(lo, hi)?
                }
                None => Corpus::from_graph6_file(Path::new(part))?,
            });
        }
        Ok(Corpus {
            descriptor: parts.iter().map(|c| c.descriptor.as_str()).collect::<Vec<_>>().join("+"),
            graphs: parts.into_iter().flat_map(|c| c.graphs).collect(),
        })
    }

    /// SHA-256 over the graph6 lines of the corpus, as lowercase hex.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        for g in &self.graphs {
            h.update(graph6::encode(g).as_bytes());
            h.update(b"\n");
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// `{1/m, 2/m, .., (m-1)/m}`.
pub fn uniform_grid(m: u32) -> Vec<BigRational> {
    (1..m).map(|i| BigRational::new(i.into(), m.into())).collect()
}

/// A probability written as a fraction `a/b` or a decimal.
pub fn parse_probability(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Config(format!("bad probability `{s}`"));
    let r = if s.contains('/') {
        BigRational::from_str(s).map_err(|_| bad())?
    } else {
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        BigRational::new(digits, num_traits::pow(BigInt::from(10), frac.len()))
    };
    if r < BigRational::zero() || r > BigRational::one() {
        return Err(Error::InvalidProbability(r.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(r)
}

/// `uniform:M` or a comma-separated list of probabilities.
pub fn parse_grid(spec: &str) -> Result<Vec<BigRational>> {
    if let Some(m) = spec.strip_prefix("uniform:") {
        let m: u32 = m.parse().map_err(|_| Error::Config(format!("bad grid `{spec}`")))?;
        if m < 2 {
            return Err(Error::Config("uniform grid needs at least 2 steps".into()));
        }
        return Ok(uniform_grid(m));
    }
    spec.split(',').map(parse_probability).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `z(G; k) <= z(P_n; k)` for every `k`.
    PathCount,
    /// Trees other than `P_n` are strictly less likely to be zero forced by
    /// `B_p` than `P_n` for `0 < p < 1`.
    TreePath,
    /// The degree-based probability and count bounds dominate exact values.
    DegreeBounds,
    /// `Pr <= 4p + n p^2` when a vertex anchors two pendant paths.
    DoublePendant,
    /// `Pr(G) <= Pr(G~) + pM` for `G~` = `G` plus a clique on its `M` leaves.
    LeafClique,
    /// A zero forcing set projects to a zero forcing set of the 2-core.
    CoreProjection,
    /// No graph has a smaller threshold than the path of the same order.
    MinThreshold,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::PathCount,
        Claim::TreePath,
        Claim::DegreeBounds,
        Claim::DoublePendant,
        Claim::LeafClique,
        Claim::CoreProjection,
        Claim::MinThreshold,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::PathCount => "path-count",
            Claim::TreePath => "tree-path",
            Claim::DegreeBounds => "degree-bounds",
            Claim::DoublePendant => "double-pendant",
            Claim::LeafClique => "leaf-clique",
            Claim::CoreProjection => "core-projection",
            Claim::MinThreshold => "min-threshold",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Config(format!("unknown claim `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    /// Which inequality failed, for claims that check several.
    pub check: String,
    /// `k=..` or `p=..`.
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: Claim,
    /// Comparison family when it is not the default one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
    pub corpus: String,
    pub corpus_hash: String,
    pub graphs: usize,
    pub tool_version: String,
    pub seed: Option<u64>,
    pub grid: Vec<String>,
    /// Individual inequalities checked.
    pub instances: u64,
    /// Graphs or cells outside a statement's hypotheses.
    pub skipped: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Smallest `rhs - lhs` seen over checked inequalities.
    pub min_margin: Option<f64>,
    pub min_margin_exact: Option<String>,
    pub runtime_secs: Option<f64>,
    pub pass: bool,
}

/// Per-graph accumulator, merged in corpus order.
#[derive(Default)]
struct Tally {
    instances: u64,
    skipped: u64,
    counterexamples: Vec<Counterexample>,
    min_margin: Option<BigRational>,
}

impl Tally {
    /// Records `lhs <= rhs` (or `lhs < rhs` when `strict`).
    fn check(
        &mut self,
        g: &Graph,
        check: &str,
        at: impl FnOnce() -> String,
        lhs: &BigRational,
        rhs: &BigRational,
        strict: bool,
    ) {
        self.instances += 1;
        let margin = rhs - lhs;
        let ok = if strict { margin > BigRational::zero() } else { margin >= BigRational::zero() };
        if !ok {
            self.counterexamples.push(Counterexample {
                graph6: graph6::encode(g),
                check: check.to_string(),
                at: at(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        if self.min_margin.as_ref().is_none_or(|m| &margin < m) {
            self.min_margin = Some(margin);
        }
    }

    fn check_count(&mut self, g: &Graph, check: &str, k: usize, lhs: u128, rhs: &BigRational) {
        self.check(g, check, || format!("k={k}"), &int(lhs), rhs, false);
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.skipped += other.skipped;
        self.counterexamples.extend(other.counterexamples);
        if let Some(m) = other.min_margin {
            if self.min_margin.as_ref().is_none_or(|cur| &m < cur) {
                self.min_margin = Some(m);
            }
        }
    }
}

fn int(x: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn p_at(p: &BigRational) -> impl FnOnce() -> String + '_ {
    move || format!("p={p}")
}

fn checked_poly(g: &Graph) -> Result<ZfPolynomial> {
    zf_polynomial_exact(g)
}

/// Exact polynomial of the path, cached per order.
fn path_polys(corpus: &Corpus) -> Result<Vec<Option<ZfPolynomial>>> {
    let max = corpus.graphs.iter().map(Graph::n).max().unwrap_or(0);
    let mut out = vec![None; max + 1];
    for g in &corpus.graphs {
        if out[g.n()].is_none() {
            out[g.n()] = Some(path_polynomial(g.n())?);
        }
    }
    Ok(out)
}

fn run(
    claim: Claim,
    corpus: &Corpus,
    grid: &[BigRational],
    seed: Option<u64>,
    per_graph: impl Fn(&Graph) -> Result<Tally> + Sync,
    finish: impl FnOnce(&mut Tally) -> Result<()>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let parts: Vec<Tally> = corpus.graphs.par_iter().map(&per_graph).collect::<Result<_>>()?;
    let mut total = Tally::default();
    for t in parts {
        total.merge(t);
    }
    finish(&mut total)?;
    Ok(VerificationReport {
        claim,
        reference: None,
        corpus: corpus.descriptor.clone(),
        corpus_hash: corpus.hash(),
        graphs: corpus.graphs.len(),
        tool_version: TOOL_VERSION.to_string(),
        seed,
        grid: grid.iter().map(ToString::to_string).collect(),
        instances: total.instances,
        skipped: total.skipped,
        pass: total.counterexamples.is_empty(),
        counterexamples: total.counterexamples,
        min_margin: total.min_margin.as_ref().and_then(ToPrimitive::to_f64),
        min_margin_exact: total.min_margin.as_ref().map(ToString::to_string),
        runtime_secs: Some(start.elapsed().as_secs_f64()),
    })
}

/// Coefficientwise comparison with the path, which implies the probability
/// comparison for every `p`.
pub fn verify_path_count_conjecture(corpus: &Corpus) -> Result<VerificationReport> {
    let paths = path_polys(corpus)?;
    count_dominance(corpus, |n| Ok(paths[n].clone().expect("cached")))
}

/// Checks `z(G;k) <= z(R_n;k)` against the member `R_n` of another family
/// of the same order, e.g. `cycle`. Reported under the path-count claim with
/// `reference` set.
pub fn verify_count_dominance(corpus: &Corpus, reference: &str) -> Result<VerificationReport> {
    if reference == "path" {
        return verify_path_count_conjecture(corpus);
    }
    let max = corpus.graphs.iter().map(Graph::n).max().unwrap_or(0);
    let mut polys = vec![None; max + 1];
    for g in &corpus.graphs {
        if polys[g.n()].is_none() {
            polys[g.n()] = Some(checked_poly(&family(&format!("{reference}:{}", g.n()))?)?);
        }
    }
    let mut report = count_dominance(corpus, |n| Ok(polys[n].clone().expect("cached")))?;
    report.reference = Some(reference.to_string());
    Ok(report)
}

fn count_dominance(
    corpus: &Corpus,
    reference: impl Fn(usize) -> Result<ZfPolynomial> + Sync,
) -> Result<VerificationReport> {
    run(
        Claim::PathCount,
        corpus,
        &[],
        None,
        |g| {
            let z = checked_poly(g)?;
            let r = reference(g.n())?;
            let mut t = Tally::default();
            for k in 0..=g.n() {
                t.check_count(g, "coefficient", k, z.coeff(k), &int(r.coeff(k)));
            }
            Ok(t)
        },
        |_| Ok(()),
    )
}

/// For every tree on `n` vertices and grid point: strict inequality against
/// `P_n` inside `(0, 1)`, equality for `P_n` itself and at `p` in `{0, 1}`.
pub fn verify_tree_theorem(n: usize, grid: &[BigRational]) -> Result<VerificationReport> {
    verify_tree_corpus(&Corpus::trees(n, n)?, grid)
}

fn verify_tree_corpus(corpus: &Corpus, grid: &[BigRational]) -> Result<VerificationReport> {
    let paths = path_polys(corpus)?;
    run(
        Claim::TreePath,
        corpus,
        grid,
        None,
        |g| {
            let mut t = Tally::default();
            if !g.is_tree() {
                t.skipped += 1;
                return Ok(t);
            }
            let z = checked_poly(g)?;
            let path = paths[g.n()].as_ref().expect("cached");
            let is_path = g.is_path();
            for p in grid {
                let (lhs, rhs) = (z.prob_rational(p), path.prob_rational(p));
                if is_path || p.is_zero() || p.is_one() {
                    t.instances += 1;
                    if lhs != rhs {
                        t.counterexamples.push(Counterexample {
                            graph6: graph6::encode(g),
                            check: "equality".into(),
                            at: format!("p={p}"),
                            lhs: lhs.to_string(),
                            rhs: rhs.to_string(),
                        });
                    }
                } else {
                    t.check(g, "strict", p_at(p), &lhs, &rhs, true);
                }
            }
            Ok(t)
        },
        |_| Ok(()),
    )
}

/// Checks every applicable degree bound on every corpus graph: the degree-sum
/// and minimum-degree probability bounds, the few-low-degree bound for each
/// `d` with the smallest admissible `N`, the degree count bound, the
/// non-path tree count bound, the small-`k` and large-degree comparisons with
/// the path, and the lower bound on path counts for each order present.
pub fn verify_degree_bounds(corpus: &Corpus, grid: &[BigRational]) -> Result<VerificationReport> {
    let paths = path_polys(corpus)?;
    run(
        Claim::DegreeBounds,
        corpus,
        grid,
        None,
        |g| {
            let z = checked_poly(g)?;
            let n = g.n();
            let path = paths[n].as_ref().expect("cached");
            let probs: Vec<BigRational> = grid.iter().map(|p| z.prob_rational(p)).collect();
            let mut t = Tally::default();
            let has_edge = g.edge_count() > 0;
            let no_isolated = g.isolated_vertices().is_empty();

            if has_edge {
                for (p, pr) in grid.iter().zip(&probs) {
                    t.check(g, "degree-sum", p_at(p), pr, &bounds::degree_sum_value(g, p), false);
                }
                for k in 0..=n {
                    let b = bounds::degree_count_bound(g, k)?;
                    t.check_count(g, "degree-count", k, z.coeff(k), &int(b));
                }
            } else {
                t.skipped += 1;
            }

            if no_isolated {
                for (p, pr) in grid.iter().zip(&probs) {
                    t.check(g, "min-degree", p_at(p), pr, &bounds::min_degree_value(g, p), false);
                }
                for d in 1..=n {
                    let big_n = bounds::min_low_degree_parameter(g, d);
                    for (p, pr) in grid.iter().zip(&probs) {
                        let pf = p.to_f64().expect("finite");
                        if bounds::below_calculus_cutoff(pf, d) {
                            let rhs = bounds::few_low_degree_value(g, p, d, big_n);
                            t.check(g, &format!("few-low-degree(d={d},N={big_n})"), p_at(p), pr, &rhs, false);
                        } else {
                            t.skipped += 1;
                        }
                    }
                }
            } else {
                t.skipped += 1;
            }

            let delta = g.min_degree();
            if delta >= 3 {
                let all = bounds::covers_all_k(n, delta);
                let top = if all { n } else { bounds::small_k_range(n, delta)? };
                for k in 0..=top.min(n) {
                    let name = if all { "large-degree" } else { "small-k" };
                    t.check_count(g, name, k, z.coeff(k), &int(path.coeff(k)));
                }
            }

            if g.is_tree() && !g.is_path() {
                for k in 0..=n {
                    let rhs = BigRational::new(
                        BigInt::from(13u32) * BigInt::from(k).pow(4) * crate::binomial::binom_big(n as i64, k as i64),
                        BigInt::from(n * n),
                    );
                    t.check_count(g, "tree-count", k, z.coeff(k), &rhs);
                }
            }
            Ok(t)
        },
        |t| {
            for (n, path) in paths.iter().enumerate() {
                let Some(path) = path else { continue };
                let g = crate::family::path(n);
                for k in 0..=n {
                    let lhs = bounds::path_count_lower_bound(n, k);
                    t.check(&g, "path-count-lower", || format!("k={k}"), &lhs, &int(path.coeff(k)), false);
                }
            }
            Ok(())
        },
    )
}

/// `Pr <= 4p + n p^2` for graphs with a vertex anchoring two pendant paths.
pub fn verify_double_pendant(corpus: &Corpus, grid: &[BigRational]) -> Result<VerificationReport> {
    run(
        Claim::DoublePendant,
        corpus,
        grid,
        None,
        |g| {
            let mut t = Tally::default();
            if double_pendant_anchor(g).is_none() {
                t.skipped += 1;
                return Ok(t);
            }
            let z = checked_poly(g)?;
            for p in grid {
                t.check(
                    g,
                    "double-pendant",
                    p_at(p),
                    &z.prob_rational(p),
                    &bounds::double_pendant_value(g.n(), p),
                    false,
                );
            }
            Ok(t)
        },
        |_| Ok(()),
    )
}

/// `Pr(G) <= Pr(G~) + pM` where `G~` adds a clique on all `M >= 1` leaves.
pub fn verify_leaf_clique(corpus: &Corpus, grid: &[BigRational]) -> Result<VerificationReport> {
    run(
        Claim::LeafClique,
        corpus,
        grid,
        None,
        |g| {
            let mut t = Tally::default();
            let leaves = VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| g.degree(v) == 1))?;
            if leaves.is_empty() {
                t.skipped += 1;
                return Ok(t);
            }
            let m = BigRational::from_integer(leaves.len().into());
            let z = checked_poly(g)?;
            let zt = checked_poly(&add_leaf_clique(g, &leaves)?)?;
            for p in grid {
                let rhs = zt.prob_rational(p) + p * &m;
                t.check(g, "leaf-clique", p_at(p), &z.prob_rational(p), &rhs, false);
            }
            Ok(t)
        },
        |_| Ok(()),
    )
}

/// For `samples` random sets `B_{1/2}` per graph (stream = corpus position),
/// every zero forcing `B` projects to a zero forcing set of the 2-core.
pub fn verify_core_projection(corpus: &Corpus, samples: u64, seed: u64) -> Result<VerificationReport> {
    let indexed: Vec<(u64, &Graph)> = corpus.graphs.iter().enumerate().map(|(i, g)| (i as u64, g)).collect();
    let start = Instant::now();
    let parts: Vec<Tally> = indexed
        .par_iter()
        .map(|&(i, g)| {
            let mut t = Tally::default();
            let key = StreamKey { seed, stream: i };
            for s in 0..samples {
                let b = sample_bp(g.n(), 0.5, key, s)?;
                if !is_zfs(g, &b) {
                    t.skipped += 1;
                    continue;
                }
                t.instances += 1;
                let proj = core_project_set(g, &b);
                if let Some(core) = &proj.core.core {
                    if !is_zfs(core, &proj.projected_set) {
                        t.counterexamples.push(Counterexample {
                            graph6: graph6::encode(g),
                            check: "core-projection".into(),
                            at: format!("B={:?}", b.to_vec()),
                            lhs: format!("{:?}", proj.projected_set.to_vec()),
                            rhs: "zero forcing in the 2-core".into(),
                        });
                    }
                }
            }
            Ok(t)
        })
        .collect::<Result<_>>()?;
    let mut total = Tally::default();
    for t in parts {
        total.merge(t);
    }
    Ok(VerificationReport {
        claim: Claim::CoreProjection,
        reference: None,
        corpus: corpus.descriptor.clone(),
        corpus_hash: corpus.hash(),
        graphs: corpus.graphs.len(),
        tool_version: TOOL_VERSION.to_string(),
        seed: Some(seed),
        grid: vec!["1/2".into()],
        instances: total.instances,
        skipped: total.skipped,
        pass: total.counterexamples.is_empty(),
        counterexamples: total.counterexamples,
        min_margin: None,
        min_margin_exact: None,
        runtime_secs: Some(start.elapsed().as_secs_f64()),
    })
}

/// Bisection tolerance for threshold comparisons, and the slack allowed
/// before a smaller threshold counts as a counterexample.
const THRESHOLD_TOL: f64 = 1e-12;
const THRESHOLD_SLACK: f64 = 1e-9;

/// Threshold of every graph is at least that of the path of the same order.
/// Thresholds come from floating-point bisection, so the comparison allows a
/// slack of `1e-9`.
pub fn verify_min_threshold(corpus: &Corpus) -> Result<VerificationReport> {
    let max = corpus.graphs.iter().map(Graph::n).max().unwrap_or(0);
    let mut path_thresholds = vec![f64::NAN; max + 1];
    for g in &corpus.graphs {
        if path_thresholds[g.n()].is_nan() {
            let curve = exact_curve(&crate::family::path(g.n()))?;
            path_thresholds[g.n()] = threshold_exact(&curve, THRESHOLD_TOL)?.p_hat;
        }
    }
    run(
        Claim::MinThreshold,
        corpus,
        &[],
        None,
        |g| {
            let mut t = Tally::default();
            let p = threshold_exact(&exact_curve(g)?, THRESHOLD_TOL)?.p_hat;
            let q = path_thresholds[g.n()];
            let rat = |x: f64| BigRational::from_float(x).expect("finite");
            t.check(g, "threshold", || format!("n={}", g.n()), &rat(q - THRESHOLD_SLACK), &rat(p), false);
            Ok(t)
        },
        |_| Ok(()),
    )
}

/// Dispatches a claim. Claims without a grid ignore it; only
/// `core-projection` uses the seed and draws `samples` sets per graph.
pub fn verify(
    claim: Claim,
    corpus: &Corpus,
    grid: &[BigRational],
    seed: u64,
    samples: u64,
) -> Result<VerificationReport> {
    match claim {
        Claim::PathCount => verify_path_count_conjecture(corpus),
        Claim::TreePath => verify_tree_corpus(corpus, grid),
        Claim::DegreeBounds => verify_degree_bounds(corpus, grid),
        Claim::DoublePendant => verify_double_pendant(corpus, grid),
        Claim::LeafClique => verify_leaf_clique(corpus, grid),
        Claim::CoreProjection => verify_core_projection(corpus, samples, seed),
        Claim::MinThreshold => verify_min_threshold(corpus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family, path};

    fn corpus(gs: Vec<Graph>) -> Corpus {
        Corpus { descriptor: "test".into(), graphs: gs }
    }

    #[test]
    fn probability_parsing() {
        assert_eq!(parse_probability("0.05").unwrap(), BigRational::new(1.into(), 20.into()));
        assert_eq!(parse_probability("1/3").unwrap(), BigRational::new(1.into(), 3.into()));
        assert_eq!(parse_probability("1").unwrap(), BigRational::one());
        assert!(parse_probability("1.5").is_err());
        assert!(parse_probability("x").is_err());
        assert!(parse_probability(".").is_err());
        assert_eq!(parse_grid("uniform:4").unwrap().len(), 3);
        assert_eq!(parse_grid("0.1,1/2").unwrap().len(), 2);
    }

    #[test]
    fn claim_names_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.name().parse::<Claim>().unwrap(), c);
        }
        assert!("lemma".parse::<Claim>().is_err());
    }

    #[test]
    fn path_is_equal_to_itself() {
        let r = verify_path_count_conjecture(&corpus(vec![path(7)])).unwrap();
        assert!(r.pass);
        assert_eq!(r.instances, 8);
        assert_eq!(r.min_margin, Some(0.0));
    }

    #[test]
    fn small_tree_sweep() {
        let r = verify_tree_theorem(8, &uniform_grid(10)).unwrap();
        assert!(r.pass, "{:?}", r.counterexamples);
        assert_eq!(r.graphs, 23);
        assert!(r.min_margin.unwrap() > 0.0);
        let mut grid = uniform_grid(10);
        grid.push(BigRational::zero());
        grid.push(BigRational::one());
        assert!(verify_tree_theorem(6, &grid).unwrap().pass);
    }

    #[test]
    fn a_violated_inequality_is_reported() {
        let mut t = Tally::default();
        let g = path(3);
        let (one, two) = (int(1), int(2));
        t.check(&g, "x", || "k=1".into(), &two, &one, false);
        t.check(&g, "x", || "k=2".into(), &one, &one, true);
        assert_eq!(t.counterexamples.len(), 2);
        assert_eq!(t.counterexamples[0].graph6, "Bg");
        assert_eq!(t.min_margin, Some(int(0) - int(1)));
    }

    #[test]
    fn degree_bounds_on_families() {
        let gs = ["cycle:5", "cycle:8", "star:4", "complete:5", "hypercube:3", "grid:3x3", "rgraph:6"]
            .iter()
            .map(|d| family(d).unwrap())
            .collect();
        let r = verify_degree_bounds(&corpus(gs), &uniform_grid(20)).unwrap();
        assert!(r.pass, "{:?}", r.counterexamples);
        assert!(r.instances > 500);
    }

    #[test]
    fn reports_are_deterministic_apart_from_runtime() {
        let c = Corpus::trees(1, 7).unwrap();
        let a = verify_core_projection(&c, 50, 9).unwrap();
        let b = verify_core_projection(&c, 50, 9).unwrap();
        assert_eq!(a.instances, b.instances);
        assert_eq!(a.corpus_hash, b.corpus_hash);
        assert_eq!(a.corpus_hash.len(), 64);
        assert_eq!(c.descriptor, "trees:7");
    }

    #[test]
    fn corpus_descriptors() {
        let c = Corpus::parse("trees:4+trees:6-6").unwrap();
        assert_eq!(c.graphs.len(), 1 + 1 + 1 + 2 + 6);
        assert_eq!(c.descriptor, "trees:4+trees:6-6");
        assert!(Corpus::parse("trees:x").is_err());
        assert!(Corpus::parse("/nonexistent/file.g6").is_err());
    }
}
