//! Dense matrix arithmetic over boolean, integer, rational and float scalars.

mod inverse;
mod matrix;
mod scalar;

use thiserror::Error;

pub use inverse::{solve_inverse, Invertible, FLOAT_PIVOT_RELATIVE_TOLERANCE};
pub use matrix::Matrix;
pub use scalar::{Domain, Numeric, Semiring};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix must have at least one row")]
    Empty,
    #[error("row {row} has {len} entries, expected {k}")]
    NotSquare { row: usize, len: usize, k: usize },
    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is singular (no usable pivot in column {column})")]
    Singular { column: usize },
    #[error("series did not converge within {terms} terms (last increment {last_increment:e})")]
    NoConvergence { terms: usize, last_increment: f64 },
    #[error("invalid convergence config: {0}")]
    BadConfig(&'static str),
}

/// Truncation rule for [`neumann_sum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceConfig {
    /// Stop once the sup-norm of the newest term drops below this.
    pub tolerance: f64,
    pub max_terms: usize,
}

impl ConvergenceConfig {
    pub const DEFAULT_TOLERANCE: f64 = 1e-12;

    pub fn new(tolerance: f64, max_terms: usize) -> Result<Self, LinalgError> {
        if tolerance.is_nan() || tolerance < 0.0 {
            return Err(LinalgError::BadConfig("tolerance must be nonnegative"));
        }
        if max_terms == 0 {
            return Err(LinalgError::BadConfig("max_terms must be at least 1"));
        }
        Ok(Self { tolerance, max_terms })
    }

    /// Tolerance 1e-12 and at most 10·k terms.
    pub fn for_dim(k: usize) -> Self {
        Self { tolerance: Self::DEFAULT_TOLERANCE, max_terms: 10 * k.max(1) }
    }
}

/// `a · b` in the scalar's semiring.
pub fn mat_mul<T: Semiring>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
    a.mul(b)
}

/// `s^n`, with `s^0` the identity.
pub fn mat_power<T: Semiring>(s: &Matrix<T>, n: u64) -> Matrix<T> {
    s.pow(n)
}

/// `X = s^0 + s^1 + … + s^n`.
///
/// Evaluated in Horner form `X ← I + s·X`. Over the boolean semiring the
/// loop stops as soon as X is a fixed point, which happens after at most
/// k-1 steps.
pub fn power_sum<T: Semiring>(s: &Matrix<T>, n: u64) -> Matrix<T> {
    let identity = Matrix::identity(s.dim());
    let mut acc = identity.clone();
    for _ in 0..n {
        let next = identity.add(&s.mul(&acc).expect("same dimension")).expect("same dimension");
        if T::DOMAIN == Domain::Boolean && next == acc {
            break;
        }
        acc = next;
    }
    acc
}

/// Truncated Neumann series `Σ_{m=0..T} s^m`.
///
/// T is the first exponent whose term has sup-norm below
/// `cfg.tolerance`; that term is included in the sum. Returns the partial
/// sum together with T.
pub fn neumann_sum<T: Numeric>(
    s: &Matrix<T>,
    cfg: &ConvergenceConfig,
) -> Result<(Matrix<T>, usize), LinalgError> {
    let mut sum = Matrix::identity(s.dim());
    let mut term = Matrix::identity(s.dim());
    let mut last = f64::INFINITY;
    for t in 1..=cfg.max_terms {
        term = term.mul(s)?;
        sum = sum.add(&term)?;
        last = term.sup_norm();
        if last < cfg.tolerance {
            return Ok((sum, t));
        }
    }
    Err(LinalgError::NoConvergence { terms: cfg.max_terms, last_increment: last })
}

/// Sup-norm of `f·(I - s) - I`.
pub fn residual_norm<T: Numeric>(f: &Matrix<T>, s: &Matrix<T>) -> Result<f64, LinalgError> {
    let product = f.mul(&s.identity_minus())?;
    Ok(product.sub(&Matrix::identity(f.dim()))?.sup_norm())
}
