use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::AdjacencyMatrix;
use crate::linalg::{Matrix, Numeric};

use super::{ClosureError, Variant};

/// Nonnegative k×k matrix with every row sum below 1.
///
/// Produced by [`substochastic_transform`] (tagged with its variant) or
/// read from a file as the transient block of a Markov chain (untagged).
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<T> {
    matrix: Matrix<T>,
    variant: Option<Variant>,
}

impl<T> WeightMatrix<T> {
    pub(crate) fn transient(matrix: Matrix<T>) -> Self {
        Self { matrix, variant: None }
    }

    #[cfg(test)]
    pub(crate) fn tagged(matrix: Matrix<T>, variant: Variant) -> Self {
        Self { matrix, variant: Some(variant) }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    pub fn variant(&self) -> Option<Variant> {
        self.variant
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

impl WeightMatrix<BigRational> {
    /// Nearest-float copy.
    pub fn to_float(&self) -> WeightMatrix<f64> {
        WeightMatrix {
            matrix: self.matrix.map(|v| num_traits::ToPrimitive::to_f64(v).unwrap_or(0.0)),
            variant: self.variant,
        }
    }
}

/// Rescales a 0/1 adjacency matrix into a strictly substochastic one with
/// the same nonzero pattern.
///
/// With [`Variant::PaperTransform`], the entry in 0-based row r and column c
/// is divided by (r+2)^(c+1), i.e. (i+1)^j with 1-based i and j, so row 1
/// is bounded by 1/2 + 1/4 + … < 1. With [`Variant::UniformScaling`],
/// every entry is divided by k+1.
///
/// In `f64` the paper transform underflows to zero once (k+1)^k exceeds the
/// float range; callers that count nonzeros must stay under
/// [`PAPER_TRANSFORM_FLOAT_MAX_K`](super::PAPER_TRANSFORM_FLOAT_MAX_K).
pub fn substochastic_transform<T: Numeric>(s: &AdjacencyMatrix, variant: Variant) -> WeightMatrix<T> {
    let k = s.dim();
    let uniform = T::recip_pow(k as u64 + 1, 1);
    let matrix = Matrix::from_fn(k, |r, c| {
        if !s.has_link(r, c) {
            return T::zero();
        }
        match variant {
            Variant::PaperTransform => T::recip_pow(r as u64 + 2, c as u32 + 1),
            Variant::UniformScaling => uniform.clone(),
        }
    });
    WeightMatrix { matrix, variant: Some(variant) }
}

/// Row sum of the paper transform against its closed-form ceiling.
#[derive(Debug, Clone, PartialEq)]
pub struct RowBound {
    /// 0-based row.
    pub row: usize,
    pub sum: BigRational,
    /// Σ_{j=1..k} (i+1)^(-j) for 1-based i = row + 1.
    pub bound: BigRational,
    /// `sum <= bound && sum < 1`
    pub ok: bool,
}

/// `(1 - (i+1)^(-k)) / i`: the largest possible row sum of row `i`
/// (1-based) of the paper transform, reached when the node links to every
/// column including its own.
pub fn paper_row_bound(i: usize, k: usize) -> BigRational {
    assert!(i >= 1, "rows are 1-based here");
    let base = BigInt::from(i as u64 + 1);
    let tail = BigRational::new(BigInt::one(), num_traits::pow(base, k));
    (BigRational::one() - tail) / BigRational::from_integer(BigInt::from(i as u64))
}

/// Limit of [`paper_row_bound`] as k → ∞: the geometric series with first
/// term and ratio 1/(i+1), which is `a / (1 - a)` = 1/i. For row 1 this is
/// (1/2)·[1/(1 - 1/2)] = 1, never reached by a finite graph.
pub fn paper_row_bound_limit(i: usize) -> BigRational {
    assert!(i >= 1, "rows are 1-based here");
    let ratio = BigRational::new(BigInt::one(), BigInt::from(i as u64 + 1));
    &ratio * (BigRational::one() / (BigRational::one() - &ratio))
}

/// Checks every row of a paper-transform matrix against
/// [`paper_row_bound`] and against 1.
pub fn row_sum_bounds(w: &WeightMatrix<BigRational>) -> Result<Vec<RowBound>, ClosureError> {
    if w.variant != Some(Variant::PaperTransform) {
        return Err(ClosureError::NotPaperTransform);
    }
    let k = w.dim();
    let one = BigRational::one();
    w.matrix
        .rows()
        .enumerate()
        .map(|(row, entries)| {
            let sum = entries.iter().fold(BigRational::zero(), |acc, v| acc + v);
            if sum >= one {
                return Err(ClosureError::BoundViolated { row, sum: sum.to_string() });
            }
            let bound = paper_row_bound(row + 1, k);
            let ok = sum <= bound;
            Ok(RowBound { row, sum, bound, ok })
        })
        .collect()
}
