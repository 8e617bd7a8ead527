//! Semi-tensor-product kernel.
//!
//! The (left) STP of `A` (m×n) and `B` (p×q) is `(A ⊗ I_{t/n})(B ⊗ I_{t/p})`
//! with `t = lcm(n, p)`. It coincides with the ordinary product when `n = p`.

mod logical;
mod matrix;
mod profile;

pub use logical::{LogicalMatrix, LogicalVector};
pub use matrix::RealMatrix;
pub use profile::{profile_index, profile_unindex, ProfileIter, ProfileSpace};

use crate::error::{Error, Result};
use crate::ext::ExtReal;

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Scalars that can sit on the left of an STP whose right factor is real.
pub(crate) trait StpScalar: Copy {
    fn zero() -> Self;
    fn plus(self, other: Self) -> Self;
    fn weighted(self, w: f64) -> Self;
}

impl StpScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn weighted(self, w: f64) -> Self {
        self * w
    }
}

impl StpScalar for ExtReal {
    fn zero() -> Self {
        ExtReal::ZERO
    }
    fn plus(self, other: Self) -> Self {
        self + other
    }
    fn weighted(self, w: f64) -> Self {
        self.scale(w)
    }
}

/// Row-major STP of a generic left factor with a real right factor.
///
/// Zero entries of `b` contribute nothing, so `-inf` cells multiplied by a
/// structural zero vanish.
pub(crate) fn stp_kernel<T: StpScalar>(
    a: &[T],
    a_rows: usize,
    a_cols: usize,
    b: &RealMatrix,
) -> (Vec<T>, usize, usize) {
    let n = a_cols;
    let p = b.rows();
    let t = lcm(n, p);
    let alpha = t / n;
    let beta = t / p;
    let out_rows = a_rows * alpha;
    let out_cols = b.cols() * beta;
    let mut out = vec![T::zero(); out_rows * out_cols];
    for r in 0..out_rows {
        let ar = r / alpha;
        let off = r % alpha;
        for j in 0..n {
            let av = a[ar * n + j];
            let c = j * alpha + off;
            let brow = c / beta;
            let phase = c % beta;
            for m in 0..b.cols() {
                let w = b.get(brow, m);
                if w == 0.0 {
                    continue;
                }
                let slot = &mut out[r * out_cols + m * beta + phase];
                *slot = slot.plus(av.weighted(w));
            }
        }
    }
    (out, out_rows, out_cols)
}

/// Semi-tensor product `A ⋉ B`.
pub fn stp(a: &RealMatrix, b: &RealMatrix) -> RealMatrix {
    let (data, rows, cols) = stp_kernel(a.as_slice(), a.rows(), a.cols(), b);
    RealMatrix::from_parts(rows, cols, data)
}

/// Left-to-right STP of a chain of factors.
pub fn stp_chain(factors: &[&RealMatrix]) -> Result<RealMatrix> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Invalid("empty STP chain".into()))?;
    Ok(rest.iter().fold((*first).clone(), |acc, f| stp(&acc, f)))
}

/// STP of an extended-real row vector with a real matrix.
///
/// The result is again a row when `b.rows()` divides the row length, which
/// holds for every structure-vector contraction in this crate.
pub fn stp_ext_row(row: &[ExtReal], b: &RealMatrix) -> Result<Vec<ExtReal>> {
    if row.is_empty() || !row.len().is_multiple_of(b.rows()) {
        return Err(Error::DimensionMismatch(format!(
            "row of length {} cannot be contracted with {} rows",
            row.len(),
            b.rows()
        )));
    }
    let (data, rows, _) = stp_kernel(row, 1, row.len(), b);
    debug_assert_eq!(rows, 1);
    Ok(data)
}

/// Kronecker product `A ⊗ B`.
pub fn kron(a: &RealMatrix, b: &RealMatrix) -> RealMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = RealMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = a.get(i, j);
            if x == 0.0 {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out.set(i * br + k, j * bc + l, x * b.get(k, l));
                }
            }
        }
    }
    out
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_chain(factors: &[RealMatrix]) -> RealMatrix {
    factors
        .iter()
        .fold(RealMatrix::identity(1), |acc, f| kron(&acc, f))
}

/// Columnwise Kronecker (Khatri-Rao) product.
pub fn khatri_rao(a: &RealMatrix, b: &RealMatrix) -> Result<RealMatrix> {
    if a.cols() != b.cols() {
        return Err(Error::ColumnMismatch {
            left: a.cols(),
            right: b.cols(),
        });
    }
    let rows = a.rows() * b.rows();
    let mut out = RealMatrix::zeros(rows, a.cols());
    for c in 0..a.cols() {
        for i in 0..a.rows() {
            let x = a.get(i, c);
            if x == 0.0 {
                continue;
            }
            for j in 0..b.rows() {
                out.set(i * b.rows() + j, c, x * b.get(j, c));
            }
        }
    }
    Ok(out)
}

/// Swap matrix `W_[m,n]`: `W ⋉ X ⋉ Y = Y ⋉ X` for `X ∈ ℝ^m`, `Y ∈ ℝ^n`.
pub fn swap_matrix(m: usize, n: usize) -> Result<LogicalMatrix> {
    if m == 0 || n == 0 {
        return Err(Error::Invalid("swap matrix dimensions must be positive".into()));
    }
    // column k: j_k = k mod n taken in 1..=n, i_k = (k - j_k)/n + 1
    let indices = (1..=m * n)
        .map(|k| {
            let j = (k - 1) % n + 1;
            let i = (k - j) / n + 1;
            (j - 1) * m + i
        })
        .collect();
    Ok(LogicalMatrix::from_parts(m * n, indices))
}

/// Order-reducing matrix `PR_n` with `PR_n ⋉ x = x ⋉ x` for unit columns `x`.
pub fn order_reducing_matrix(n: usize) -> Result<LogicalMatrix> {
    if n == 0 {
        return Err(Error::Invalid("order must be positive".into()));
    }
    Ok(LogicalMatrix::from_parts(
        n * n,
        (1..=n).map(|i| (i - 1) * n + i).collect(),
    ))
}

/// `δ_n^i`.
pub fn delta(n: usize, i: usize) -> Result<LogicalVector> {
    LogicalVector::new(n, i)
}
