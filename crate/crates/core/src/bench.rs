//! Timing comparison of the cluster-size engines on random graphs.
//!
//! Every engine runs on the same generated graph and must produce the same
//! sizes; a run aborts on the first disagreement. The harness reports times
//! and never decides a winner.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closure::{
    cluster_sizes_fundamental, cluster_sizes_oracle, cluster_sizes_within_n, Backend, ClosureError, Variant,
    DEFAULT_NONZERO_THRESHOLD,
};
use crate::graph::{gen_random_graph, AdjacencyMatrix, GraphError};

/// Default cap on k for the exact engine; rational entries grow quickly.
pub const DEFAULT_EXACT_MAX_K: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BenchEngine {
    FundamentalExact,
    FundamentalFloatUniform,
    Oracle,
    PowerSumBoolean,
}

impl BenchEngine {
    pub const ALL: [BenchEngine; 4] = [
        BenchEngine::FundamentalExact,
        BenchEngine::FundamentalFloatUniform,
        BenchEngine::Oracle,
        BenchEngine::PowerSumBoolean,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchEngine::FundamentalExact => "fundamental_exact",
            BenchEngine::FundamentalFloatUniform => "fundamental_float_uniform",
            BenchEngine::Oracle => "oracle",
            BenchEngine::PowerSumBoolean => "power_sum_boolean",
        }
    }

    fn run(self, s: &AdjacencyMatrix) -> Result<Vec<usize>, ClosureError> {
        let report = match self {
            BenchEngine::FundamentalExact => {
                cluster_sizes_fundamental(s, Variant::PaperTransform, Backend::Exact, 0.0)?
            }
            BenchEngine::FundamentalFloatUniform => {
                cluster_sizes_fundamental(s, Variant::UniformScaling, Backend::Float, DEFAULT_NONZERO_THRESHOLD)?
            }
            BenchEngine::Oracle => cluster_sizes_oracle(s),
            BenchEngine::PowerSumBoolean => cluster_sizes_within_n(s, s.dim().saturating_sub(1)),
        };
        Ok(report.sizes)
    }
}

impl fmt::Display for BenchEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchEngine {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| BenchError::InvalidSpec(format!("unknown engine {s:?}")))
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid benchmark spec: {0}")]
    InvalidSpec(String),
    #[error("engine {engine} unavailable at k = {k}: {reason}")]
    EngineUnavailable { engine: BenchEngine, k: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("engine {engine} failed at k = {k}, p = {p}, seed = {seed}: {source}")]
    EngineFailed { engine: BenchEngine, k: usize, p: f64, seed: u64, source: ClosureError },
    #[error(
        "engine {engine} disagrees with {reference} at k = {k}, p = {p}, seed = {seed} \
         (checksum {found:#018x} vs {expected:#018x})"
    )]
    Disagreement { engine: BenchEngine, reference: BenchEngine, k: usize, p: f64, seed: u64, expected: u64, found: u64 },
    #[error("engine {engine} is not deterministic at k = {k}, p = {p}, seed = {seed}")]
    Nondeterministic { engine: BenchEngine, k: usize, p: f64, seed: u64 },
    #[error("report serialization failed: {0}")]
    Report(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchSpec {
    pub sizes: Vec<usize>,
    pub densities: Vec<f64>,
    pub seeds: Vec<u64>,
    pub engines: Vec<BenchEngine>,
    pub repetitions: usize,
    /// Largest k the exact engine is allowed to run on.
    pub exact_max_k: usize,
}

impl BenchSpec {
    pub fn new(sizes: Vec<usize>, densities: Vec<f64>, seeds: Vec<u64>, engines: Vec<BenchEngine>) -> Self {
        Self { sizes, densities, seeds, engines, repetitions: 1, exact_max_k: DEFAULT_EXACT_MAX_K }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        let invalid = |msg: &str| Err(BenchError::InvalidSpec(msg.to_string()));
        if self.sizes.is_empty() {
            return invalid("sizes must not be empty");
        }
        if self.sizes.contains(&0) {
            return invalid("sizes must be positive");
        }
        if self.densities.is_empty() {
            return invalid("densities must not be empty");
        }
        if let Some(p) = self.densities.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return Err(BenchError::InvalidSpec(format!("density {p} is outside [0, 1]")));
        }
        if self.seeds.is_empty() {
            return invalid("seeds must not be empty");
        }
        if self.engines.is_empty() {
            return invalid("engines must not be empty");
        }
        if self.repetitions == 0 {
            return invalid("repetitions must be at least 1");
        }
        if self.engines.contains(&BenchEngine::FundamentalExact) {
            if let Some(&k) = self.sizes.iter().find(|&&k| k > self.exact_max_k) {
                return Err(BenchError::EngineUnavailable {
                    engine: BenchEngine::FundamentalExact,
                    k,
                    reason: format!("exact engine is capped at k = {}", self.exact_max_k),
                });
            }
        }
        Ok(())
    }
}

/// One (engine, graph) measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub engine: BenchEngine,
    pub k: usize,
    pub p: f64,
    pub seed: u64,
    /// Minimum over the repetitions.
    pub wall_time_ns: u64,
    pub sizes_checksum: u64,
}

/// FNV-1a over the sizes, each as a little-endian u64.
pub fn sizes_checksum(sizes: &[usize]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    sizes
        .iter()
        .flat_map(|&n| (n as u64).to_le_bytes())
        .fold(OFFSET, |h, b| (h ^ u64::from(b)).wrapping_mul(PRIME))
}

/// Runs every engine on every (k, p, seed) graph, sequentially.
pub fn run_benchmark(spec: &BenchSpec) -> Result<Vec<BenchRecord>, BenchError> {
    spec.validate()?;
    let mut records = Vec::new();
    for &k in &spec.sizes {
        for &p in &spec.densities {
            for &seed in &spec.seeds {
                let s = gen_random_graph(k, p, seed)?.to_adjacency();
                let mut reference: Option<(BenchEngine, u64)> = None;
                for &engine in &spec.engines {
                    let record = time_engine(engine, &s, k, p, seed, spec.repetitions)?;
                    match reference {
                        None => reference = Some((engine, record.sizes_checksum)),
                        Some((ref_engine, expected)) if expected != record.sizes_checksum => {
                            return Err(BenchError::Disagreement {
                                engine,
                                reference: ref_engine,
                                k,
                                p,
                                seed,
                                expected,
                                found: record.sizes_checksum,
                            });
                        }
                        Some(_) => {}
                    }
                    records.push(record);
                }
            }
        }
    }
    Ok(records)
}

fn time_engine(
    engine: BenchEngine,
    s: &AdjacencyMatrix,
    k: usize,
    p: f64,
    seed: u64,
    repetitions: usize,
) -> Result<BenchRecord, BenchError> {
    let mut best = u64::MAX;
    let mut checksum = None;
    for _ in 0..repetitions {
        let start = Instant::now();
        let sizes = engine
            .run(s)
            .map_err(|source| BenchError::EngineFailed { engine, k, p, seed, source })?;
        let elapsed = u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX).max(1);
        best = best.min(elapsed);
        let sum = sizes_checksum(&sizes);
        if *checksum.get_or_insert(sum) != sum {
            return Err(BenchError::Nondeterministic { engine, k, p, seed });
        }
    }
    Ok(BenchRecord {
        engine,
        k,
        p,
        seed,
        wall_time_ns: best,
        sizes_checksum: checksum.expect("repetitions >= 1"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// Renders records sorted by (k, p, seed, engine name).
///
/// CSV columns: `engine,k,p,seed,wall_time_ns,sizes_checksum`, with a
/// header row. JSON is an array of objects with the same keys.
pub fn emit_report(records: &[BenchRecord], format: ReportFormat) -> Result<String, BenchError> {
    let mut sorted = records.to_vec();
    sorted.sort_by(|a, b| {
        a.k.cmp(&b.k)
            .then(a.p.total_cmp(&b.p))
            .then(a.seed.cmp(&b.seed))
            .then(a.engine.name().cmp(b.engine.name()))
    });
    let fail = |e: &dyn fmt::Display| BenchError::Report(e.to_string());
    match format {
        ReportFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for r in &sorted {
                writer.serialize(r).map_err(|e| fail(&e))?;
            }
            let bytes = writer.into_inner().map_err(|e| fail(&e))?;
            String::from_utf8(bytes).map_err(|e| fail(&e))
        }
        ReportFormat::Json => serde_json::to_string_pretty(&sorted).map_err(|e| fail(&e)),
    }
}

/// Reads back a JSON report.
pub fn parse_json_report(text: &str) -> Result<Vec<BenchRecord>, BenchError> {
    serde_json::from_str(text).map_err(|e| BenchError::Report(e.to_string()))
}
