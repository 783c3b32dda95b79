use num_rational::BigRational;

use crate::graph::AdjacencyMatrix;
use crate::linalg::{solve_inverse, Invertible, Matrix};

use super::weights::{substochastic_transform, WeightMatrix};
use super::{Backend, ClosureError, ClusterReport, Engine, Variant};

/// Largest k for which the float backend may run the paper transform.
///
/// A nonzero F entry is at least the weight of a shortest path: at most
/// k-1 links, each weighing at least (k+1)^(-k). At k = 16 that bound is
/// 17^(-240) ≈ 5e-296, above [`DEFAULT_NONZERO_THRESHOLD`]; at k = 17 it is
/// 18^(-272) ≈ 4e-342, below the smallest positive float.
pub const PAPER_TRANSFORM_FLOAT_MAX_K: usize = 16;

/// Float entries at or below this count as zero.
pub const DEFAULT_NONZERO_THRESHOLD: f64 = 1e-300;

/// `F = (I - W)⁻¹` for a substochastic W.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalMatrix<T> {
    matrix: Matrix<T>,
}

impl<T: Invertible> FundamentalMatrix<T> {
    pub fn from_weights(w: &WeightMatrix<T>) -> Result<Self, ClosureError> {
        let matrix = solve_inverse(&w.matrix().identity_minus())?;
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }
}

impl FundamentalMatrix<BigRational> {
    /// Entries that are exactly nonzero.
    pub fn pattern(&self) -> Matrix<bool> {
        self.matrix.pattern()
    }
}

impl FundamentalMatrix<f64> {
    /// Entries strictly above `threshold`.
    pub fn pattern_above(&self, threshold: f64) -> Matrix<bool> {
        self.matrix.map(|&v| v > threshold)
    }
}

/// Exact F for either transform variant.
pub fn exact_fundamental(
    s: &AdjacencyMatrix,
    variant: Variant,
) -> Result<FundamentalMatrix<BigRational>, ClosureError> {
    FundamentalMatrix::from_weights(&substochastic_transform(s, variant))
}

/// Float F. Refuses the paper transform above
/// [`PAPER_TRANSFORM_FLOAT_MAX_K`] nodes, where true nonzeros would
/// underflow to zero.
pub fn float_fundamental(s: &AdjacencyMatrix, variant: Variant) -> Result<FundamentalMatrix<f64>, ClosureError> {
    let k = s.dim();
    if variant == Variant::PaperTransform && k > PAPER_TRANSFORM_FLOAT_MAX_K {
        return Err(ClosureError::UnderflowSuspected { k, max_k: PAPER_TRANSFORM_FLOAT_MAX_K });
    }
    FundamentalMatrix::from_weights(&substochastic_transform(s, variant))
}

/// Cluster size of each node as the number of nonzero entries in its row
/// of F.
///
/// The exact backend tests exact positivity and ignores
/// `nonzero_threshold`; the float backend counts entries above it.
pub fn cluster_sizes_fundamental(
    s: &AdjacencyMatrix,
    variant: Variant,
    backend: Backend,
    nonzero_threshold: f64,
) -> Result<ClusterReport, ClosureError> {
    let (sizes, threshold) = match backend {
        Backend::Exact => (exact_fundamental(s, variant)?.pattern().row_nonzero_counts(), None),
        Backend::Float => {
            if !(nonzero_threshold.is_finite() && nonzero_threshold >= 0.0) {
                return Err(ClosureError::BadThreshold(nonzero_threshold));
            }
            let f = float_fundamental(s, variant)?;
            (f.pattern_above(nonzero_threshold).row_nonzero_counts(), Some(nonzero_threshold))
        }
        Backend::Boolean => return Err(ClosureError::UnsupportedBackend(backend)),
    };
    debug_assert!(sizes.iter().all(|&n| n >= 1), "F has a positive diagonal");
    Ok(ClusterReport {
        engine: Engine::Fundamental,
        backend,
        variant: Some(variant),
        n_limit: None,
        nonzero_threshold: threshold,
        sizes,
    })
}
