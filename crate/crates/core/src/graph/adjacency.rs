use crate::linalg::Matrix;

use super::{Graph, GraphError};

/// Binary k×k matrix of direct links with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyMatrix(Matrix<bool>);

impl AdjacencyMatrix {
    pub(super) fn from_graph(g: &Graph) -> Self {
        let k = g.node_count();
        let mut m = Matrix::zeros(k);
        for &(u, v) in g.edges() {
            m[(u, v)] = true;
        }
        Self(m)
    }

    /// Wraps a boolean matrix, rejecting any `true` on the diagonal.
    pub fn from_matrix(m: Matrix<bool>) -> Result<Self, GraphError> {
        match (0..m.dim()).find(|&i| m[(i, i)]) {
            Some(node) => Err(GraphError::SelfLoop { node, line: None }),
            None => Ok(Self(m)),
        }
    }

    /// Builds from 0/1 rows.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self, GraphError> {
        let k = rows.len();
        if k == 0 {
            return Err(GraphError::EmptyInput);
        }
        let mut m = Matrix::zeros(k);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != k {
                return Err(GraphError::MalformedLine {
                    line: r + 1,
                    reason: format!("expected {k} entries, found {}", row.len()),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                m[(r, c)] = match v {
                    0 => false,
                    1 => true,
                    other => {
                        return Err(GraphError::MalformedLine {
                            line: r + 1,
                            reason: format!("entry {other} is not 0 or 1"),
                        })
                    }
                };
            }
        }
        Self::from_matrix(m)
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &Matrix<bool> {
        &self.0
    }

    pub fn has_link(&self, u: usize, v: usize) -> bool {
        self.0[(u, v)]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.0.row(u).iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v)
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.entries().all(|(r, c, &v)| v == self.0[(c, r)])
    }

    /// The same graph with node `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let k = self.dim();
        assert_eq!(perm.len(), k, "permutation length must equal k");
        let mut m = Matrix::zeros(k);
        for (r, c, &v) in self.0.entries() {
            m[(perm[r], perm[c])] = v;
        }
        Self(m)
    }
}
