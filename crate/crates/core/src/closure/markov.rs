use crate::linalg::{solve_inverse, Invertible, Matrix, Numeric};

use super::ClosureError;

/// Squarings of the transient block tried before giving up on finding a
/// power with every row sum below 1.
const MAX_SQUARINGS: usize = 64;

/// Expected number of steps before absorption from each transient state:
/// the row sums of `(I - q)⁻¹`.
///
/// `q` is the transient-to-transient block of an absorbing chain. It must
/// be nonnegative and some power of it must have every row sum below 1
/// (equivalently, spectral radius below 1). Row sums are checked exactly
/// first; otherwise q^(2^m) is inspected in floating point.
pub fn expected_absorption_steps<T: Invertible>(q: &Matrix<T>) -> Result<Vec<T>, ClosureError> {
    if let Some((r, c, _)) = q.entries().find(|(_, _, v)| v.is_negative()) {
        return Err(ClosureError::NotSubstochastic(format!("entry ({r}, {c}) is negative")));
    }
    let one = T::one();
    let rows_below_one = q.row_sums().iter().all(|sum| sum.sub(&one).is_negative());
    if !rows_below_one {
        check_power_contracts(q)?;
    }
    let fundamental = solve_inverse(&q.identity_minus())?;
    Ok(fundamental.row_sums())
}

fn check_power_contracts<T: Numeric>(q: &Matrix<T>) -> Result<(), ClosureError> {
    let mut power = q.map(Numeric::magnitude);
    for step in 0..MAX_SQUARINGS {
        let max_row = power.row_sums().into_iter().fold(0.0, f64::max);
        if !max_row.is_finite() {
            break;
        }
        if max_row < 1.0 {
            return Ok(());
        }
        if step + 1 < MAX_SQUARINGS {
            power = power.mul(&power)?;
        }
    }
    Err(ClosureError::NotSubstochastic(format!(
        "no power q^(2^m), m < {MAX_SQUARINGS}, has all row sums below 1"
    )))
}
