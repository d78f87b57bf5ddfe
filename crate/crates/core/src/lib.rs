//! Zero forcing on graphs whose initial blue set is random.
//!
//! Each vertex of a graph `G` starts blue independently with probability
//! `p`. This crate computes the probability that the random set is zero
//! forcing, exactly (via the zero forcing polynomial or closed forms) or by
//! Monte Carlo, locates the threshold where that probability crosses 1/2,
//! and checks structural bounds on exhaustive graph corpora.

pub mod binomial;
pub mod bounds;
pub mod error;
pub mod experiments;
pub mod family;
pub mod forcing;
pub mod graph;
pub mod graph6;
pub mod lab;
pub mod poly;
pub mod structure;
pub mod trees;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use family::{family, Family};
pub use forcing::{closure, is_zfs, zero_forcing_number, ForcingRecord};
pub use graph::Graph;
pub use lab::{mc_prob, threshold_exact, threshold_mc, McEstimate, SampleConfig, ThresholdEstimate};
pub use poly::{zf_polynomial_exact, ExactCurve, ZfPolynomial};
pub use structure::{CoreProjection, PendantPath, PendantTree};
pub use trees::enumerate_free_trees;
pub use verify::{Claim, Corpus, VerificationReport};
pub use vertex_set::VertexSet;
