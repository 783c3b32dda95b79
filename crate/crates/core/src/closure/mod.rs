//! Cluster sizes from the fundamental matrix, from bounded power sums, and
//! from a brute-force oracle, plus expected absorption times for a
//! transient block of an absorbing Markov chain.

mod fundamental;
mod markov;
mod reach;
mod weights;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::LinalgError;

pub use fundamental::{
    cluster_sizes_fundamental, exact_fundamental, float_fundamental, FundamentalMatrix,
    DEFAULT_NONZERO_THRESHOLD, PAPER_TRANSFORM_FLOAT_MAX_K,
};
pub use markov::expected_absorption_steps;
pub use reach::{
    cluster_size_within_n, cluster_sizes_oracle, cluster_sizes_within_n, reflexive_transitive_closure,
    UnionFind,
};
pub use weights::{
    paper_row_bound, paper_row_bound_limit, row_sum_bounds, substochastic_transform, RowBound, WeightMatrix,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClosureError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(
        "float backend with the paper transform underflows above k = {max_k} (got k = {k}); \
         use the exact backend or uniform scaling"
    )]
    UnderflowSuspected { k: usize, max_k: usize },
    #[error("node {node} out of range for {k} nodes")]
    IndexOutOfRange { node: usize, k: usize },
    #[error("row {row} of the transformed matrix sums to {sum}, not below 1")]
    BoundViolated { row: usize, sum: String },
    #[error("row bounds are defined for the paper transform only")]
    NotPaperTransform,
    #[error("transient block is not substochastic: {0}")]
    NotSubstochastic(String),
    #[error("the {0:?} backend cannot run this engine")]
    UnsupportedBackend(Backend),
    #[error("nonzero threshold must be a finite nonnegative number, got {0}")]
    BadThreshold(f64),
}

/// How the adjacency matrix is rescaled into a substochastic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Entry (i, j), 1-based, divided by (i+1)^j.
    PaperTransform,
    /// Every entry divided by k+1.
    UniformScaling,
}

/// Scalar backend used for the fundamental matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    Exact,
    Float,
    Boolean,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    Fundamental,
    PowerSum,
    Oracle,
}

/// Per-node cluster sizes and how they were obtained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterReport {
    pub engine: Engine,
    pub backend: Backend,
    pub variant: Option<Variant>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_limit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nonzero_threshold: Option<f64>,
    pub sizes: Vec<usize>,
}
