use std::fmt;

use super::RealMatrix;
use crate::error::{check_index, Error, Result};

/// The unit column `δ_n^i`, stored by its 1-based index.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct LogicalVector {
    dim: usize,
    index: usize,
}

impl LogicalVector {
    pub fn new(dim: usize, index: usize) -> Result<Self> {
        check_index("logical vector index", index, dim)?;
        Ok(LogicalVector { dim, index })
    }

    pub fn dim(self) -> usize {
        self.dim
    }

    /// 1-based position of the nonzero entry.
    pub fn index(self) -> usize {
        self.index
    }

    pub fn to_matrix(self) -> RealMatrix {
        let mut m = RealMatrix::zeros(self.dim, 1);
        m.set(self.index - 1, 0, 1.0);
        m
    }

    /// `self ⋉ other`, which for unit columns is again a unit column.
    pub fn stp(self, other: LogicalVector) -> LogicalVector {
        LogicalVector {
            dim: self.dim * other.dim,
            index: (self.index - 1) * other.dim + other.index,
        }
    }
}

impl fmt::Debug for LogicalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ_{}^{}", self.dim, self.index)
    }
}

/// A matrix whose every column is a unit vector, written `δ_rows[i_1, …, i_cols]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LogicalMatrix {
    rows: usize,
    indices: Vec<usize>,
}

impl LogicalMatrix {
    /// `indices` are 1-based row positions, one per column.
    pub fn new(rows: usize, indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::DimensionMismatch("logical matrix needs a column".into()));
        }
        for &i in &indices {
            check_index("logical matrix column index", i, rows)?;
        }
        Ok(LogicalMatrix { rows, indices })
    }

    pub(crate) fn from_parts(rows: usize, indices: Vec<usize>) -> Self {
        debug_assert!(indices.iter().all(|&i| i >= 1 && i <= rows));
        LogicalMatrix { rows, indices }
    }

    pub fn identity(n: usize) -> Self {
        LogicalMatrix::from_parts(n, (1..=n).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.indices.len()
    }

    /// 1-based row index of each column.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn to_real(&self) -> RealMatrix {
        let mut m = RealMatrix::zeros(self.rows, self.indices.len());
        for (c, &i) in self.indices.iter().enumerate() {
            m.set(i - 1, c, 1.0);
        }
        m
    }

    /// Recovers a logical matrix from a real one whose columns are exact unit vectors.
    pub fn from_real(m: &RealMatrix) -> Option<LogicalMatrix> {
        let mut indices = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            let col = m.column(c);
            let ones: Vec<usize> = col
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0.0)
                .map(|(r, _)| r)
                .collect();
            match ones.as_slice() {
                [r] if col[*r] == 1.0 => indices.push(r + 1),
                _ => return None,
            }
        }
        Some(LogicalMatrix { rows: m.rows(), indices })
    }

    /// Ordinary product `self · other` of two logical matrices.
    pub fn compose(&self, other: &LogicalMatrix) -> Result<LogicalMatrix> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        Ok(LogicalMatrix {
            rows: self.rows,
            indices: other.indices.iter().map(|&j| self.indices[j - 1]).collect(),
        })
    }

    /// Applies the matrix to a unit column.
    pub fn apply(&self, x: LogicalVector) -> Result<LogicalVector> {
        if x.dim() != self.cols() {
            return Err(Error::DimensionMismatch(format!(
                "vector of dim {} against {} columns",
                x.dim(),
                self.cols()
            )));
        }
        LogicalVector::new(self.rows, self.indices[x.index() - 1])
    }

    /// Columnwise Kronecker product of two logical matrices.
    pub fn khatri_rao(&self, other: &LogicalMatrix) -> Result<LogicalMatrix> {
        if self.cols() != other.cols() {
            return Err(Error::ColumnMismatch {
                left: self.cols(),
                right: other.cols(),
            });
        }
        Ok(LogicalMatrix {
            rows: self.rows * other.rows,
            indices: self
                .indices
                .iter()
                .zip(&other.indices)
                .map(|(&i, &j)| (i - 1) * other.rows + j)
                .collect(),
        })
    }
}

impl fmt::Debug for LogicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ_{}{:?}", self.rows, self.indices)
    }
}
