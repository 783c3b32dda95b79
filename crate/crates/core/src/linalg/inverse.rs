//! Dense matrix inversion.
//!
//! Floats go through an LU factorization with partial pivoting. Rationals
//! are cleared to an integer matrix row by row and inverted with
//! fraction-free (Bareiss) Gauss-Jordan elimination, so every intermediate
//! value is an integer and the result is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::scalar::Numeric;
use super::LinalgError;

/// Pivots smaller than this fraction of the largest entry count as zero in
/// the float LU.
pub const FLOAT_PIVOT_RELATIVE_TOLERANCE: f64 = 1e-12;

/// Scalars with a direct inversion routine.
pub trait Invertible: Numeric + Sized {
    fn invert(m: &Matrix<Self>) -> Result<Matrix<Self>, LinalgError>;
}

/// Inverse of a square numeric matrix.
pub fn solve_inverse<T: Invertible>(m: &Matrix<T>) -> Result<Matrix<T>, LinalgError> {
    T::invert(m)
}

impl Invertible for f64 {
    fn invert(m: &Matrix<f64>) -> Result<Matrix<f64>, LinalgError> {
        let lu = LuFactors::factor(m)?;
        Ok(lu.inverse())
    }
}

/// `P·A = L·U` packed into one row-major buffer: the strict lower triangle
/// holds L (unit diagonal implied), the upper triangle holds U.
struct LuFactors {
    k: usize,
    lu: Vec<f64>,
    perm: Vec<usize>,
}

impl LuFactors {
    fn factor(m: &Matrix<f64>) -> Result<Self, LinalgError> {
        let k = m.dim();
        let mut lu = m.clone().into_vec();
        let mut perm: Vec<usize> = (0..k).collect();
        let scale = m.sup_norm();
        if scale == 0.0 || !scale.is_finite() {
            return Err(LinalgError::Singular { column: 0 });
        }
        let threshold = FLOAT_PIVOT_RELATIVE_TOLERANCE * scale;

        for col in 0..k {
            let (pivot_row, pivot_abs) = (col..k)
                .map(|r| (r, lu[r * k + col].abs()))
                .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot_abs < threshold {
                return Err(LinalgError::Singular { column: col });
            }
            if pivot_row != col {
                for c in 0..k {
                    lu.swap(pivot_row * k + c, col * k + c);
                }
                perm.swap(pivot_row, col);
            }

            let (upper, lower) = lu.split_at_mut((col + 1) * k);
            let pivot_tail = &upper[col * k + col..col * k + k];
            let pivot = pivot_tail[0];
            for row in lower.chunks_mut(k) {
                let factor = row[col] / pivot;
                row[col] = factor;
                if factor == 0.0 {
                    continue;
                }
                for (x, u) in row[col + 1..].iter_mut().zip(&pivot_tail[1..]) {
                    *x -= factor * u;
                }
            }
        }
        Ok(Self { k, lu, perm })
    }

    /// Solves `A·X = I` with row operations on X so that all inner loops run
    /// over contiguous rows.
    fn inverse(&self) -> Matrix<f64> {
        let k = self.k;
        let mut x = vec![0.0; k * k];
        for (i, &p) in self.perm.iter().enumerate() {
            x[i * k + p] = 1.0;
        }

        // L·Y = P
        for i in 1..k {
            let (done, rest) = x.split_at_mut(i * k);
            let target = &mut rest[..k];
            for j in 0..i {
                let l = self.lu[i * k + j];
                if l == 0.0 {
                    continue;
                }
                for (t, y) in target.iter_mut().zip(&done[j * k..(j + 1) * k]) {
                    *t -= l * y;
                }
            }
        }

        // U·X = Y
        for i in (0..k).rev() {
            let (head, solved) = x.split_at_mut((i + 1) * k);
            let target = &mut head[i * k..];
            for j in i + 1..k {
                let u = self.lu[i * k + j];
                if u == 0.0 {
                    continue;
                }
                let src = &solved[(j - i - 1) * k..(j - i) * k];
                for (t, s) in target.iter_mut().zip(src) {
                    *t -= u * s;
                }
            }
            let d = self.lu[i * k + i];
            for t in target.iter_mut() {
                *t /= d;
            }
        }
        Matrix::from_vec(k, x)
    }
}

impl Invertible for BigRational {
    fn invert(m: &Matrix<BigRational>) -> Result<Matrix<BigRational>, LinalgError> {
        let k = m.dim();

        // Row r of m equals (integer row r) / row_scale[r].
        let mut row_scale = Vec::with_capacity(k);
        let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(k);
        for row in m.rows() {
            let scale = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            let mut int_row: Vec<BigInt> = row
                .iter()
                .map(|v| v.numer() * (&scale / v.denom()))
                .collect();
            int_row.resize(2 * k, BigInt::zero());
            work.push(int_row);
            row_scale.push(scale);
        }
        for (r, row) in work.iter_mut().enumerate() {
            row[k + r] = BigInt::one();
        }

        let mut prev = BigInt::one();
        for col in 0..k {
            let pivot_row = (col..k)
                .find(|&r| !work[r][col].is_zero())
                .ok_or(LinalgError::Singular { column: col })?;
            work.swap(pivot_row, col);

            let pivot_line = std::mem::take(&mut work[col]);
            let pivot = &pivot_line[col];
            for (i, row) in work.iter_mut().enumerate() {
                if i == col {
                    continue;
                }
                if i < col {
                    // Earlier pivot rows: their diagonal tracks the latest pivot.
                    row[i] = pivot.clone();
                }
                let factor = std::mem::take(&mut row[col]);
                for j in col + 1..2 * k {
                    let cross = &pivot_line[j];
                    if row[j].is_zero() && (factor.is_zero() || cross.is_zero()) {
                        continue;
                    }
                    let mut num = pivot * &row[j];
                    if !factor.is_zero() && !cross.is_zero() {
                        num -= &factor * cross;
                    }
                    row[j] = exact_div(num, &prev);
                }
            }
            prev = pivot.clone();
            work[col] = pivot_line;
        }

        // work = [det·I | det·A_int⁻¹] and A⁻¹ = A_int⁻¹ · diag(row_scale).
        let det = prev;
        let data = (0..k * k)
            .map(|idx| {
                let (r, c) = (idx / k, idx % k);
                BigRational::new(&work[r][k + c] * &row_scale[c], det.clone())
            })
            .collect();
        Ok(Matrix::from_vec(k, data))
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    if den.is_one() {
        return num;
    }
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "Bareiss step left a remainder");
    q
}

