//! Small integer matrices: a column-compressed sparse form for boundary maps and a
//! dense row-major form for Laplacians.

use crate::error::{Error, Result};

/// Column-compressed integer matrix. Each column keeps its entries sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from per-column entry lists; zero values are dropped and rows sorted.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|mut col| {
                col.retain(|&(_, v)| v != 0);
                col.sort_unstable_by_key(|&(r, _)| r);
                debug_assert!(col.iter().all(|&(r, _)| r < rows));
                col
            })
            .collect();
        SparseMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.columns[c]
            .binary_search_by_key(&r, |&(row, _)| row)
            .map_or(0, |k| self.columns[c][k].1)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Nonzero `(row, col, value)` triples sorted by row, then column.
    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        let mut t: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r, c, v)))
            .collect();
        t.sort_unstable();
        t
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triples() {
            columns[r].push((c, v));
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    pub fn apply(&self, x: &[i64]) -> Result<Vec<i64>> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut y = vec![0i64; self.rows];
        for (col, &xc) in self.columns.iter().zip(x) {
            if xc == 0 {
                continue;
            }
            for &(r, v) in col {
                y[r] += v * xc;
            }
        }
        Ok(y)
    }

    /// Exact product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<DenseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for (c, col) in rhs.columns.iter().enumerate() {
            for &(k, v) in col {
                for &(r, w) in &self.columns[k] {
                    *out.get_mut(r, c) += w * v;
                }
            }
        }
        Ok(out)
    }

    /// `A * A^T`.
    pub fn gram_rows(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.rows, self.rows);
        for col in &self.columns {
            for &(r1, v1) in col {
                for &(r2, v2) in col {
                    *out.get_mut(r1, r2) += v1 * v2;
                }
            }
        }
        out
    }

    /// `A^T * A`.
    pub fn gram_cols(&self) -> DenseMatrix {
        self.transpose().gram_rows()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.rows, self.cols);
        for (r, c, v) in self.triples() {
            *out.get_mut(r, c) = v;
        }
        out
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        DenseMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut i64 {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| v as f64).collect())
            .collect()
    }
}
