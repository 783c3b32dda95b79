use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{Numeric, Semiring};
use super::LinalgError;

/// Dense square matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    k: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.k.max(1))).finish()
    }
}

impl<T> Matrix<T> {
    /// Builds a matrix from its rows. Fails unless the rows form a
    /// non-empty square.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let k = rows.len();
        if k == 0 {
            return Err(LinalgError::Empty);
        }
        let mut data = Vec::with_capacity(k * k);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != k {
                return Err(LinalgError::NotSquare { row: r, len: row.len(), k });
            }
            data.extend(row);
        }
        Ok(Self { k, data })
    }

    pub(crate) fn from_vec(k: usize, data: Vec<T>) -> Self {
        debug_assert_eq!(data.len(), k * k);
        Self { k, data }
    }

    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(k >= 1, "matrix dimension must be positive");
        let data = (0..k * k).map(|idx| f(idx / k, idx % k)).collect();
        Self { k, data }
    }

    /// Dimension k of the k×k matrix.
    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.k..(r + 1) * self.k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.k)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let k = self.k;
        self.data.iter().enumerate().map(move |(idx, v)| (idx / k, idx % k, v))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { k: self.k, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Self::from_fn(self.k, |r, c| self[(c, r)].clone())
    }

    pub(crate) fn into_vec(self) -> Vec<T> {
        self.data
    }
}

impl<T: Semiring> Matrix<T> {
    pub fn zeros(k: usize) -> Self {
        Self::from_fn(k, |_, _| T::zero())
    }

    /// The k×k identity: ones (or `true`) on the diagonal.
    pub fn identity(k: usize) -> Self {
        Self::from_fn(k, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Semiring::is_zero)
    }

    /// Boolean pattern of nonzero entries.
    pub fn pattern(&self) -> Matrix<bool> {
        self.map(|v| !v.is_zero())
    }

    /// Number of nonzero entries in each row.
    pub fn row_nonzero_counts(&self) -> Vec<usize> {
        self.rows().map(|row| row.iter().filter(|v| !v.is_zero()).count()).collect()
    }

    /// Entrywise sum.
    pub fn add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        check_dims(self, rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Ok(Self { k: self.k, data })
    }

    /// Matrix product in the scalar's semiring.
    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        check_dims(self, rhs)?;
        let k = self.k;
        let mut out = vec![T::zero(); k * k];
        for i in 0..k {
            let out_row = &mut out[i * k..(i + 1) * k];
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (o, b) in out_row.iter_mut().zip(rhs.row(l)) {
                    if !b.is_zero() {
                        o.add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(Self { k, data: out })
    }

    /// `self^n` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut result = Self::identity(self.k);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base).expect("same dimension");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        result
    }
}

impl<T: Numeric> Matrix<T> {
    /// Entrywise difference.
    pub fn sub(&self, rhs: &Self) -> Result<Self, LinalgError> {
        check_dims(self, rhs)?;
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Ok(Self { k: self.k, data })
    }

    /// Largest entry magnitude.
    pub fn sup_norm(&self) -> f64 {
        self.data.iter().map(Numeric::magnitude).fold(0.0, f64::max)
    }

    /// `I - self`.
    pub fn identity_minus(&self) -> Self {
        Self::identity(self.k).sub(self).expect("same dimension")
    }

    /// Sum of each row.
    pub fn row_sums(&self) -> Vec<T> {
        self.rows()
            .map(|row| row.iter().fold(T::zero(), |acc, v| acc.add(v)))
            .collect()
    }
}

fn check_dims<T>(a: &Matrix<T>, b: &Matrix<T>) -> Result<(), LinalgError> {
    if a.k != b.k {
        return Err(LinalgError::DimensionMismatch { left: a.k, right: b.k });
    }
    Ok(())
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.k && c < self.k, "index ({r}, {c}) out of range for dimension {}", self.k);
        &self.data[r * self.k + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.k && c < self.k, "index ({r}, {c}) out of range for dimension {}", self.k);
        &mut self.data[r * self.k + c]
    }
}
