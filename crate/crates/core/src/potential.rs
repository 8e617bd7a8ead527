//! Exact and weighted potential games via the potential equation `Ψξ = b`.

use crate::error::{check_index, Error, Result};
use crate::normal::NormalGame;
use crate::stp::{kron_chain, RealMatrix};

/// Absolute tolerance of the exhaustive potential checks.
pub const VERIFY_TOL: f64 = 1e-9;
/// Relative residual tolerance of the potential equation.
pub const SOLVE_TOL: f64 = 1e-8;

/// `E_i = I_{α_i} ⊗ 1ᵀ_{k_i} ⊗ I_{β_i}`, of size `(κ/k_i) × κ`.
pub fn face_matrix(i: usize, cardinalities: &[usize]) -> Result<RealMatrix> {
    check_index("player", i, cardinalities.len())?;
    if cardinalities.contains(&0) {
        return Err(Error::Invalid("cardinalities must be positive".into()));
    }
    let alpha: usize = cardinalities[..i - 1].iter().product();
    let beta: usize = cardinalities[i..].iter().product();
    Ok(kron_chain(&[
        RealMatrix::identity(alpha),
        RealMatrix::ones_row(cardinalities[i - 1]),
        RealMatrix::identity(beta),
    ]))
}

/// The linear system whose solvability characterizes potential games.
#[derive(Clone, Debug)]
pub struct PotentialSystem {
    pub psi: RealMatrix,
    pub b: RealMatrix,
    pub face_matrices: Vec<RealMatrix>,
}

impl PotentialSystem {
    /// Block sizes of `ξ = [ξ_1; …; ξ_n]`.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.face_matrices.iter().map(RealMatrix::rows).collect()
    }
}

/// Outcome of a potential test.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialResult {
    pub is_potential: bool,
    pub xi: Option<Vec<f64>>,
    pub potential_vector: Option<Vec<f64>>,
    pub residual: f64,
}

/// Assembles `Ψ` from deletion operators `D_i` and `b` from per-player rows.
///
/// Block row `i-1` is `[-D_1ᵀ | 0 … D_iᵀ … 0]` and `b` stacks `V_i - V_1`.
pub(crate) fn assemble_system(
    deletions: &[RealMatrix],
    rows: &[Vec<f64>],
) -> Result<(RealMatrix, RealMatrix)> {
    let n = deletions.len();
    if n < 2 || rows.len() != n {
        return Err(Error::NotApplicable(
            "the potential equation needs at least two players".into(),
        ));
    }
    let kappa = deletions[0].cols();
    let widths: Vec<usize> = deletions.iter().map(RealMatrix::rows).collect();
    let total: usize = widths.iter().sum();
    let mut psi = RealMatrix::zeros((n - 1) * kappa, total);
    let first_t = deletions[0].transpose().scale(-1.0);
    let mut offset = widths[0];
    for i in 1..n {
        psi.put_block((i - 1) * kappa, 0, &first_t);
        psi.put_block((i - 1) * kappa, offset, &deletions[i].transpose());
        offset += widths[i];
    }
    let b: Vec<f64> = rows[1..]
        .iter()
        .flat_map(|r| r.iter().zip(&rows[0]).map(|(x, y)| x - y))
        .collect();
    Ok((psi, RealMatrix::column_vector(&b)?))
}

/// Minimum-norm least-squares solution and its sup-norm residual.
pub(crate) fn least_squares(a: &RealMatrix, b: &RealMatrix) -> Result<(Vec<f64>, f64)> {
    let an = a.to_nalgebra();
    let bn = b.to_nalgebra();
    let svd = an.clone().svd(true, true);
    let smax = svd.singular_values.iter().fold(0.0_f64, |m, &s| m.max(s));
    let eps = (smax * 1e-12).max(1e-300);
    let x = svd
        .solve(&bn, eps)
        .map_err(|e| Error::Invalid(format!("least squares failed: {e}")))?;
    let residual = (&an * &x - &bn).amax();
    Ok((x.iter().copied().collect(), residual))
}

pub(crate) fn within_tolerance(residual: f64, b: &RealMatrix) -> bool {
    residual <= SOLVE_TOL * b.max_abs().max(1.0)
}

/// Builds `Ψ` and `b = W_Gᵀ` for a finite game with at least two players.
pub fn build_potential_system(g: &NormalGame) -> Result<PotentialSystem> {
    let rows = g.finite_payoffs()?;
    let faces = (1..=g.players())
        .map(|i| face_matrix(i, g.cardinalities()))
        .collect::<Result<Vec<_>>>()?;
    let (psi, b) = assemble_system(&faces, &rows)?;
    Ok(PotentialSystem {
        psi,
        b,
        face_matrices: faces,
    })
}

/// `V^P = V_1 - ξ_1ᵀ D_1`.
pub(crate) fn recover_potential(v1: &[f64], xi1: &[f64], d1: &RealMatrix) -> Vec<f64> {
    let correction = RealMatrix::row_vector(xi1)
        .and_then(|x| x.matmul(d1))
        .expect("conformable deletion operator");
    v1.iter()
        .zip(correction.as_slice())
        .map(|(v, c)| v - c)
        .collect()
}

/// Decides whether `g` is an exact potential game and recovers `V^P`.
pub fn solve_potential(g: &NormalGame) -> Result<PotentialResult> {
    let rows = g.finite_payoffs()?;
    if g.players() == 1 {
        return Ok(PotentialResult {
            is_potential: true,
            xi: Some(Vec::new()),
            potential_vector: Some(rows[0].clone()),
            residual: 0.0,
        });
    }
    let sys = build_potential_system(g)?;
    let (xi, residual) = least_squares(&sys.psi, &sys.b)?;
    if !within_tolerance(residual, &sys.b) {
        return Ok(PotentialResult {
            is_potential: false,
            xi: None,
            potential_vector: None,
            residual,
        });
    }
    let k1 = sys.face_matrices[0].rows();
    let pv = recover_potential(&rows[0], &xi[..k1], &sys.face_matrices[0]);
    Ok(PotentialResult {
        is_potential: true,
        xi: Some(xi),
        potential_vector: Some(pv),
        residual,
    })
}

/// Checks `c_i(y, s_{-i}) - c_i(x, s_{-i}) = P(y, s_{-i}) - P(x, s_{-i})` exhaustively.
pub fn verify_potential(g: &NormalGame, p_vec: &[f64]) -> Result<bool> {
    verify_weighted_potential(g, p_vec, &vec![1.0; g.players()])
}

/// Weighted check: payoff differences equal `w_i` times potential differences.
pub fn verify_weighted_potential(g: &NormalGame, p_vec: &[f64], weights: &[f64]) -> Result<bool> {
    if weights.len() != g.players() {
        return Err(Error::DimensionMismatch("one weight per player".into()));
    }
    if let Some((i, &w)) = weights.iter().enumerate().find(|(_, &w)| w.is_nan() || w <= 0.0) {
        return Err(Error::NonpositiveWeight { player: i + 1, weight: w });
    }
    if p_vec.len() != g.space().total() {
        return Err(Error::DimensionMismatch(format!(
            "potential has {} entries, expected {}",
            p_vec.len(),
            g.space().total()
        )));
    }
    let rows = g.finite_payoffs()?;
    let space = g.space();
    for (i, row) in rows.iter().enumerate() {
        let stride = space.suffix(i);
        let k = space.cardinalities()[i];
        for (idx, p) in space.iter().enumerate() {
            if p[i] != 1 {
                continue;
            }
            // idx is the profile with s_i = 1; siblings differ by multiples of stride
            for y in 1..k {
                let j = idx + y * stride;
                let dc = row[j] - row[idx];
                let dp = p_vec[j] - p_vec[idx];
                if (dc - weights[i] * dp).abs() > VERIFY_TOL {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
