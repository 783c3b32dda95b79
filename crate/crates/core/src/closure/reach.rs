use std::collections::VecDeque;

use crate::graph::AdjacencyMatrix;
use crate::linalg::{power_sum, Matrix};

use super::{Backend, ClosureError, ClusterReport, Engine};

/// Number of nodes within `n` links of `node`, counting `node` itself: the
/// nonzero count of row `node` of `S^0 + … + S^n` over (OR, AND).
pub fn cluster_size_within_n(s: &AdjacencyMatrix, node: usize, n: usize) -> Result<usize, ClosureError> {
    let k = s.dim();
    if node >= k {
        return Err(ClosureError::IndexOutOfRange { node, k });
    }
    let x = power_sum(s.matrix(), n as u64);
    Ok(x.row(node).iter().filter(|&&b| b).count())
}

/// [`cluster_size_within_n`] for every node, from a single power sum.
pub fn cluster_sizes_within_n(s: &AdjacencyMatrix, n: usize) -> ClusterReport {
    let x = power_sum(s.matrix(), n as u64);
    ClusterReport {
        engine: Engine::PowerSum,
        backend: Backend::Boolean,
        variant: None,
        n_limit: Some(n),
        nonzero_threshold: None,
        sizes: x.row_nonzero_counts(),
    }
}

/// Brute-force cluster sizes.
///
/// Symmetric input goes through union-find and reports component sizes.
/// Otherwise each node runs a BFS and reports the size of its reachable
/// set, itself included.
pub fn cluster_sizes_oracle(s: &AdjacencyMatrix) -> ClusterReport {
    let k = s.dim();
    let sizes = if s.is_symmetric() {
        let mut uf = UnionFind::new(k);
        for (u, v, &linked) in s.matrix().entries() {
            if linked && u < v {
                uf.union(u, v);
            }
        }
        (0..k).map(|i| uf.set_size(i)).collect()
    } else {
        (0..k).map(|i| reachable_count(s, i)).collect()
    };
    ClusterReport {
        engine: Engine::Oracle,
        backend: Backend::Boolean,
        variant: None,
        n_limit: None,
        nonzero_threshold: None,
        sizes,
    }
}

fn reachable_count(s: &AdjacencyMatrix, start: usize) -> usize {
    let mut seen = vec![false; s.dim()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for v in s.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count
}

/// Reachability in zero or more steps, by Warshall's algorithm seeded with
/// `I OR S`.
pub fn reflexive_transitive_closure(s: &AdjacencyMatrix) -> Matrix<bool> {
    let k = s.dim();
    let mut reach: Vec<Vec<bool>> = s.matrix().rows().map(<[bool]>::to_vec).collect();
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for mid in 0..k {
        let via = reach[mid].clone();
        for row in reach.iter_mut() {
            if row[mid] {
                for (r, &v) in row.iter_mut().zip(&via) {
                    *r |= v;
                }
            }
        }
    }
    Matrix::from_rows(reach).expect("square by construction")
}

/// Disjoint sets with union by size and path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already one.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn set_size(&mut self, x: usize) -> usize {
        let root = self.find(x);
        self.size[root]
    }
}
