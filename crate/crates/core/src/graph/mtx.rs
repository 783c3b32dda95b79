//! Reader for the `coordinate real general` subset of the Matrix Market
//! exchange format.
//!
//! Values are read as exact decimals, so `0.5` becomes 1/2 and `0.1`
//! becomes 1/10 rather than the nearest binary float.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::closure::WeightMatrix;
use crate::linalg::Matrix;

/// Errors from [`parse_matrix_market`]. Row and column numbers are 1-based,
/// as in the file.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MtxError {
    #[error("bad header: {0}")]
    BadHeader(String),
    #[error("line {line}: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("line {line}: entry ({row}, {col}) outside the declared dimensions")]
    EntryOutOfRange { line: usize, row: usize, col: usize },
    #[error("line {line}: entry ({row}, {col}) given twice")]
    DuplicateEntry { line: usize, row: usize, col: usize },
    #[error("header declares {declared} entries, file has {found}")]
    EntryCountMismatch { declared: usize, found: usize },
    #[error("entry ({row}, {col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("row {row} sums to {sum}, must be below 1")]
    RowSumNotSubstochastic { row: usize, sum: BigRational },
}

const HEADER: [&str; 5] = ["%%matrixmarket", "matrix", "coordinate", "real", "general"];

/// Parses a square, nonnegative, strictly substochastic matrix.
pub fn parse_matrix_market(text: &str) -> Result<WeightMatrix<BigRational>, MtxError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));

    let header = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .map(|(_, l)| l)
        .ok_or_else(|| MtxError::BadHeader("empty input".into()))?;
    let tokens: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if tokens != HEADER {
        return Err(MtxError::BadHeader(format!(
            "expected {:?}, found {header:?}",
            "%%MatrixMarket matrix coordinate real general"
        )));
    }

    let mut body = lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('%'));

    let (dim_line, dims) = body
        .next()
        .ok_or_else(|| MtxError::BadHeader("missing dimensions line".into()))?;
    let dims: Vec<usize> = dims
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| malformed(dim_line, "dimensions must be nonnegative integers"))?;
    let [rows, cols, nnz] = dims[..] else {
        return Err(malformed(dim_line, "expected `rows cols nnz`"));
    };
    if rows != cols {
        return Err(MtxError::NotSquare { rows, cols });
    }
    if rows == 0 {
        return Err(malformed(dim_line, "dimension must be positive"));
    }

    let k = rows;
    let mut m: Matrix<BigRational> = Matrix::zeros(k);
    let mut seen = HashSet::new();
    let mut found = 0;
    for (line, text) in body {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let [r, c, v] = parts[..] else {
            return Err(malformed(line, "expected `row col value`"));
        };
        let index = |t: &str| t.parse::<usize>().map_err(|_| malformed(line, &format!("{t:?} is not an index")));
        let (row, col) = (index(r)?, index(c)?);
        if row == 0 || col == 0 || row > k || col > k {
            return Err(MtxError::EntryOutOfRange { line, row, col });
        }
        if !seen.insert((row, col)) {
            return Err(MtxError::DuplicateEntry { line, row, col });
        }
        let value = parse_decimal(v).ok_or_else(|| malformed(line, &format!("{v:?} is not a number")))?;
        if value.is_negative() {
            return Err(MtxError::NegativeEntry { row, col });
        }
        m[(row - 1, col - 1)] = value;
        found += 1;
    }
    if found != nnz {
        return Err(MtxError::EntryCountMismatch { declared: nnz, found });
    }

    for (r, row) in m.rows().enumerate() {
        let sum = row.iter().fold(BigRational::zero(), |acc, v| acc + v);
        if sum >= BigRational::one() {
            return Err(MtxError::RowSumNotSubstochastic { row: r + 1, sum });
        }
    }
    Ok(WeightMatrix::transient(m))
}

fn malformed(line: usize, reason: &str) -> MtxError {
    MtxError::MalformedLine { line, reason: reason.to_string() }
}

/// Exact value of a decimal literal such as `-1.25e-3`.
pub(crate) fn parse_decimal(s: &str) -> Option<BigRational> {
    let (negative, rest) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match rest.find(['e', 'E']) {
        Some(pos) => (&rest[..pos], rest[pos + 1..].parse::<i32>().ok()?),
        None => (rest, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
    let scale = exponent.checked_sub(i32::try_from(frac_part.len()).ok()?)?;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(digits);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, scale.unsigned_abs() as usize));
    }
    Some(if negative { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEAD: &str = "%%MatrixMarket matrix coordinate real general\n";

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn single_entry() {
        let w = parse_matrix_market(&format!("{HEAD}1 1 1\n1 1 0.5\n")).unwrap();
        assert_eq!(w.matrix(), &Matrix::from_rows(vec![vec![q(1, 2)]]).unwrap());
        assert_eq!(w.variant(), None);
    }

    #[test]
    fn coordinate_placement_and_comments() {
        let w = parse_matrix_market(&format!("{HEAD}% a comment\n\n2 2 1\n1 2 0.25\n")).unwrap();
        assert_eq!(
            w.matrix(),
            &Matrix::from_rows(vec![vec![q(0, 1), q(1, 4)], vec![q(0, 1), q(0, 1)]]).unwrap()
        );
    }

    #[test]
    fn crlf_line_endings() {
        let text = format!("{HEAD}2 2 2\n1 2 0.25\n2 1 1e-1\n").replace('\n', "\r\n");
        let w = parse_matrix_market(&text).unwrap();
        assert_eq!(w.matrix()[(1, 0)], q(1, 10));
    }

    #[test]
    fn rejects_row_sum_at_or_above_one() {
        let err = parse_matrix_market(&format!("{HEAD}2 2 2\n1 1 0.6\n1 2 0.6\n")).unwrap_err();
        assert_eq!(err, MtxError::RowSumNotSubstochastic { row: 1, sum: q(6, 5) });
        let err = parse_matrix_market(&format!("{HEAD}1 1 1\n1 1 1.0\n")).unwrap_err();
        assert!(matches!(err, MtxError::RowSumNotSubstochastic { row: 1, .. }));
    }

    #[test]
    fn error_cases() {
        assert!(matches!(parse_matrix_market(""), Err(MtxError::BadHeader(_))));
        assert!(matches!(
            parse_matrix_market("%%MatrixMarket matrix array real general\n1 1\n0.5\n"),
            Err(MtxError::BadHeader(_))
        ));
        assert!(matches!(
            parse_matrix_market(&format!("{HEAD}2 3 0\n")),
            Err(MtxError::NotSquare { rows: 2, cols: 3 })
        ));
        assert!(matches!(
            parse_matrix_market(&format!("{HEAD}2 2 1\n1 2 -0.1\n")),
            Err(MtxError::NegativeEntry { row: 1, col: 2 })
        ));
        assert!(matches!(
            parse_matrix_market(&format!("{HEAD}2 2 1\n3 1 0.1\n")),
            Err(MtxError::EntryOutOfRange { row: 3, col: 1, .. })
        ));
        assert!(matches!(
            parse_matrix_market(&format!("{HEAD}2 2 2\n1 1 0.1\n1 1 0.2\n")),
            Err(MtxError::DuplicateEntry { .. })
        ));
        assert!(matches!(
            parse_matrix_market(&format!("{HEAD}2 2 2\n1 1 0.1\n")),
            Err(MtxError::EntryCountMismatch { declared: 2, found: 1 })
        ));
        assert!(matches!(
            parse_matrix_market(&format!("{HEAD}2 2 1\n1 1 abc\n")),
            Err(MtxError::MalformedLine { line: 3, .. })
        ));
    }

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(parse_decimal("0.1"), Some(q(1, 10)));
        assert_eq!(parse_decimal("-1.25e-3"), Some(q(-1, 800)));
        assert_eq!(parse_decimal("2E2"), Some(q(200, 1)));
        assert_eq!(parse_decimal(".5"), Some(q(1, 2)));
        assert_eq!(parse_decimal("5."), Some(q(5, 1)));
        assert_eq!(parse_decimal("+3"), Some(q(3, 1)));
        for bad in ["", ".", "-", "1.2.3", "1e", "0x10", "nan", "1e5.5"] {
            assert_eq!(parse_decimal(bad), None, "{bad:?}");
        }
    }
}
