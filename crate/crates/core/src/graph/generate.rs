use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// Known-answer graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuredKind {
    /// 0–1–…–(k-1)
    Path,
    /// A path closed by the edge (k-1, 0).
    Ring,
    /// Node 0 joined to every other node.
    Star,
    /// `parts` disjoint complete graphs of k/parts nodes each.
    Cliques,
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::BadProbability(p))
    }
}

/// Undirected G(k, p). The edge set is a pure function of `(k, p, seed)`.
pub fn gen_random_graph(k: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(k, edges, false)
}

/// Directed G(k, p): every ordered pair `(u, v)`, `u != v`, independently.
pub fn gen_random_digraph(k: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in 0..k {
            if u != v && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(k, edges, true)
}

/// Undirected graph of the given family. `parts` is only read for
/// [`StructuredKind::Cliques`].
pub fn gen_structured_graph(kind: StructuredKind, k: usize, parts: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::EmptyInput);
    }
    let edges: Vec<(usize, usize)> = match kind {
        StructuredKind::Path => (1..k).map(|v| (v - 1, v)).collect(),
        StructuredKind::Ring => {
            let mut e: Vec<_> = (1..k).map(|v| (v - 1, v)).collect();
            if k > 1 {
                e.push((k - 1, 0));
            }
            e
        }
        StructuredKind::Star => (1..k).map(|v| (0, v)).collect(),
        StructuredKind::Cliques => {
            if parts == 0 || !k.is_multiple_of(parts) {
                return Err(GraphError::BadPartition { k, parts });
            }
            let size = k / parts;
            (0..parts)
                .flat_map(|b| {
                    let base = b * size;
                    (0..size).flat_map(move |i| (i + 1..size).map(move |j| (base + i, base + j)))
                })
                .collect()
        }
    };
    Graph::undirected(k, edges)
}
