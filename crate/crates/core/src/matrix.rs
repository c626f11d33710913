//! Dense matrices over an exact field with labeled row and column bases.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::field::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("expected {expected} {axis} labels, got {found}")]
    LabelCount {
        axis: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("shape mismatch: {left_rows}x{left_cols} times {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("the product of the two maps is not zero")]
    NotAComplex,
    #[error("vector of length {found} does not match dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Labels `prefix_1, prefix_2, ...`.
pub fn numbered_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}_{i}")).collect()
}

fn check_labels(axis: &'static str, labels: &[String], expected: usize) -> Result<(), LinalgError> {
    if labels.len() != expected {
        return Err(LinalgError::LabelCount {
            axis,
            expected,
            found: labels.len(),
        });
    }
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(LinalgError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Row-major dense matrix. Row labels name the codomain basis, column labels the domain basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl FieldMatrix {
    pub fn zeros(field: Field, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self, LinalgError> {
        let (rows, cols) = (row_labels.len(), col_labels.len());
        check_labels("row", &row_labels, rows)?;
        check_labels("column", &col_labels, cols)?;
        Ok(Self::zeros_unchecked(field, row_labels, col_labels))
    }

    pub(crate) fn zeros_unchecked(field: Field, row_labels: Vec<String>, col_labels: Vec<String>) -> Self {
        let (rows, cols) = (row_labels.len(), col_labels.len());
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
            row_labels,
            col_labels,
        }
    }

    pub fn identity(field: Field, labels: Vec<String>) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, labels.clone(), labels)?;
        for i in 0..m.rows {
            m.set(i, i, field.one());
        }
        Ok(m)
    }

    /// Integer matrix with numbered labels `r_i` / `c_j`.
    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros_unchecked(field, numbered_labels("r", n_rows), numbered_labels("c", n_cols));
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged integer matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(v));
            }
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(
        field: Field,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        columns: &[Vec<Scalar>],
    ) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(field, row_labels, col_labels)?;
        if columns.len() != m.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: m.cols,
                found: columns.len(),
            });
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != m.rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: m.rows,
                    found: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn with_labels(mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<Self, LinalgError> {
        check_labels("row", &row_labels, self.rows)?;
        check_labels("column", &col_labels, self.cols)?;
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        debug_assert_eq!(v.field(), self.field);
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn column_is_zero(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.data[i * self.cols..(i + 1) * self.cols].iter().all(Scalar::is_zero)
    }

    /// First nonzero row of column `j`, scanning top to bottom.
    pub fn top_nonzero_row(&self, j: usize) -> Option<usize> {
        (0..self.rows).find(|&i| !self.get(i, j).is_zero())
    }

    /// First nonzero column of row `i`, scanning left to right.
    pub fn leading_column(&self, i: usize) -> Option<usize> {
        (0..self.cols).find(|&j| !self.get(i, j).is_zero())
    }

    /// Product `self * rhs`. Zero entries are skipped, which matters for the
    /// sparse coboundary matrices this crate multiplies most.
    pub fn mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::ShapeMismatch {
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: rhs.rows,
                right_cols: rhs.cols,
            });
        }
        let mut out = FieldMatrix::zeros_unchecked(self.field, self.row_labels.clone(), rhs.col_labels.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut out = FieldMatrix::zeros_unchecked(self.field, self.col_labels.clone(), self.row_labels.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> FieldMatrix {
        let labels = cols.iter().map(|&j| self.col_labels[j].clone()).collect();
        let mut out = FieldMatrix::zeros_unchecked(self.field, self.row_labels.clone(), labels);
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> FieldMatrix {
        let labels = rows.iter().map(|&i| self.row_labels[i].clone()).collect();
        let mut out = FieldMatrix::zeros_unchecked(self.field, labels, self.col_labels.clone());
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// `col_target += c * col_source`.
    pub(crate) fn add_column_multiple(&mut self, target: usize, source: usize, c: &Scalar) {
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let v = &self.data[i * self.cols + target] + &(c * s);
            self.data[i * self.cols + target] = v;
        }
    }

    /// `row_target += c * row_source`.
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, c: &Scalar) {
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = &self.data[target * self.cols + j] + &(c * s);
            self.data[target * self.cols + j] = v;
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: &Scalar) {
        for j in 0..self.cols {
            let v = &self.data[i * self.cols + j] * c;
            self.data[i * self.cols + j] = v;
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].len())
                    .chain(std::iter::once(self.col_labels[j].chars().count()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let header: Vec<String> = self
            .col_labels
            .iter()
            .zip(&widths)
            .map(|(l, w)| format!("{l:>w$}"))
            .collect();
        writeln!(f, "{}", header.join(" "))?;
        for (i, row) in cells.iter().enumerate() {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            writeln!(f, "{}  {}", line.join(" "), self.row_labels[i])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_labels() {
        let f = Field::Rational;
        let err = FieldMatrix::zeros(f, vec!["a".into(), "a".into()], vec![]).unwrap_err();
        assert_eq!(err, LinalgError::DuplicateLabel("a".into()));
        let m = FieldMatrix::from_ints(f, &[vec![1, 2]]);
        let err = m.with_labels(vec!["x".into()], vec!["y".into()]).unwrap_err();
        assert!(matches!(err, LinalgError::LabelCount { axis: "column", .. }));
    }

    #[test]
    fn product_keeps_outer_labels() {
        let f = Field::Rational;
        let a = FieldMatrix::from_ints(f, &[vec![1, 2], vec![0, 1]]);
        let b = FieldMatrix::from_ints(f, &[vec![1, -2], vec![0, 1]]);
        let p = a.mul(&b).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.row_labels(), a.row_labels());
        assert_eq!(p.col_labels(), b.col_labels());
    }

    #[test]
    fn product_shape_mismatch() {
        let f = Field::Rational;
        let a = FieldMatrix::from_ints(f, &[vec![1, 2, 3]]);
        assert!(matches!(a.mul(&a), Err(LinalgError::ShapeMismatch { .. })));
    }

    #[test]
    fn empty_shapes_multiply() {
        let f = Field::Rational;
        let a = FieldMatrix::zeros(f, numbered_labels("r", 3), vec![]).unwrap();
        let b = FieldMatrix::zeros(f, vec![], numbered_labels("c", 2)).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!((p.rows(), p.cols()), (3, 2));
        assert!(p.is_zero());
    }
}
