//! Finite normal-form games in structure-vector form.

use crate::error::{check_index, Error, Result};
use crate::ext::ExtReal;
use crate::stp::{ProfileSpace, RealMatrix};

/// A finite game `G = (N, S, C)` stored as one payoff row per player.
///
/// Players and strategies are 1-based. Row `i` has one entry per profile in
/// lexicographic order with player 1 most significant.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalGame {
    space: ProfileSpace,
    payoffs: Vec<Vec<ExtReal>>,
}

impl NormalGame {
    pub fn new(cardinalities: Vec<usize>, payoffs: Vec<Vec<ExtReal>>) -> Result<Self> {
        if cardinalities.is_empty() {
            return Err(Error::Invalid("a game needs at least one player".into()));
        }
        let space = ProfileSpace::new(cardinalities)?;
        if payoffs.len() != space.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} payoff rows for {} players",
                payoffs.len(),
                space.len()
            )));
        }
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != space.total() {
                return Err(Error::DimensionMismatch(format!(
                    "payoff row of player {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    space.total()
                )));
            }
        }
        Ok(NormalGame { space, payoffs })
    }

    /// Builds a game whose payoffs are all finite.
    pub fn from_finite(cardinalities: Vec<usize>, payoffs: Vec<Vec<f64>>) -> Result<Self> {
        if payoffs.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Invalid("payoffs must be finite".into()));
        }
        let rows = payoffs
            .into_iter()
            .map(|r| r.into_iter().map(ExtReal::new).collect())
            .collect();
        Self::new(cardinalities, rows)
    }

    pub fn players(&self) -> usize {
        self.space.len()
    }

    pub fn cardinalities(&self) -> &[usize] {
        self.space.cardinalities()
    }

    pub fn space(&self) -> &ProfileSpace {
        &self.space
    }

    /// `V_i^c`, for 1-based `i`.
    pub fn payoff_vector(&self, i: usize) -> &[ExtReal] {
        &self.payoffs[i - 1]
    }

    pub fn payoff_vectors(&self) -> &[Vec<ExtReal>] {
        &self.payoffs
    }

    /// Payoff of player `i` at a profile.
    pub fn payoff(&self, i: usize, profile: &[usize]) -> Result<ExtReal> {
        check_index("player", i, self.players())?;
        let idx = self.space.index(profile)?;
        Ok(self.payoffs[i - 1][idx - 1])
    }

    /// Payoff of player `i` at a 1-based flat profile index.
    pub fn payoff_at(&self, i: usize, idx: usize) -> ExtReal {
        self.payoffs[i - 1][idx - 1]
    }

    /// Whether every payoff entry is finite.
    pub fn is_finite(&self) -> bool {
        self.payoffs.iter().flatten().all(|v| v.is_finite())
    }

    /// Payoff rows as plain reals, failing on any `-inf` cell.
    pub fn finite_payoffs(&self) -> Result<Vec<Vec<f64>>> {
        self.payoffs
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(k, v)| {
                        v.value().ok_or_else(|| {
                            Error::InfinitePayoff(format!("player {}, profile {}", i + 1, k + 1))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Best replies of player `i` to the strategies of the other players,
    /// given in player order without player `i`.
    pub fn best_responses(&self, i: usize, opponents: &[usize]) -> Result<Vec<usize>> {
        check_index("player", i, self.players())?;
        if opponents.len() + 1 != self.players() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} opponent strategies, got {}",
                self.players() - 1,
                opponents.len()
            )));
        }
        let mut profile = Vec::with_capacity(self.players());
        profile.extend_from_slice(&opponents[..i - 1]);
        profile.push(1);
        profile.extend_from_slice(&opponents[i - 1..]);
        self.space.index(&profile)?;
        Ok(self.best_replies_at(i, &mut profile))
    }

    fn best_replies_at(&self, i: usize, profile: &mut [usize]) -> Vec<usize> {
        let k = self.cardinalities()[i - 1];
        let own = profile[i - 1];
        let values: Vec<ExtReal> = (1..=k)
            .map(|s| {
                profile[i - 1] = s;
                let idx = self.space.index(profile).expect("valid profile");
                self.payoffs[i - 1][idx - 1]
            })
            .collect();
        profile[i - 1] = own;
        let best = values.iter().copied().max().unwrap_or(ExtReal::NEG_INF);
        if best.is_neg_inf() {
            return Vec::new();
        }
        (1..=k).filter(|&s| values[s - 1].ties(best)).collect()
    }

    /// All pure Nash equilibria, in lexicographic order.
    pub fn pure_nash(&self) -> Vec<Vec<usize>> {
        self.space
            .iter()
            .filter(|s| {
                let idx = self.space.index(s).expect("valid profile");
                (1..=self.players()).all(|i| {
                    let own = self.payoffs[i - 1][idx - 1];
                    own.is_finite() && {
                        let mut p = s.clone();
                        self.best_replies_at(i, &mut p).contains(&s[i - 1])
                    }
                })
            })
            .collect()
    }

    /// `W_G = [V_2 - V_1, …, V_n - V_1]` as one row of length `(n-1)κ`.
    ///
    /// For a single player the row is empty.
    pub fn equivalent_vector_form(&self) -> Result<Vec<f64>> {
        let rows = self.finite_payoffs()?;
        let base = &rows[0];
        Ok(rows[1..]
            .iter()
            .flat_map(|r| r.iter().zip(base).map(|(x, y)| x - y))
            .collect())
    }

    /// `W_G` as a `1 × (n-1)κ` matrix. Fails for one-player games.
    pub fn equivalent_vector_matrix(&self) -> Result<RealMatrix> {
        RealMatrix::row_vector(&self.equivalent_vector_form()?)
    }

    /// Adds one common row to every payoff vector.
    pub fn shifted(&self, v: &[f64]) -> Result<NormalGame> {
        if v.len() != self.space.total() {
            return Err(Error::DimensionMismatch("shift row has the wrong length".into()));
        }
        let payoffs = self
            .payoffs
            .iter()
            .map(|r| r.iter().zip(v).map(|(x, &y)| *x + ExtReal::new(y)).collect())
            .collect();
        NormalGame::new(self.cardinalities().to_vec(), payoffs)
    }

    /// The subgame on the product box `Π_i boxes[i]` of 1-based strategies.
    pub fn restrict(&self, boxes: &[Vec<usize>]) -> Result<NormalGame> {
        if boxes.len() != self.players() {
            return Err(Error::DimensionMismatch("one strategy set per player".into()));
        }
        for (b, &k) in boxes.iter().zip(self.cardinalities()) {
            if b.is_empty() {
                return Err(Error::Invalid("empty strategy set".into()));
            }
            for &s in b {
                check_index("strategy", s, k)?;
            }
        }
        let sub = ProfileSpace::new(boxes.iter().map(Vec::len).collect())?;
        let cells: Vec<usize> = sub
            .iter()
            .map(|p| {
                let full: Vec<usize> = p.iter().zip(boxes).map(|(&j, b)| b[j - 1]).collect();
                self.space.index(&full).expect("valid profile")
            })
            .collect();
        let payoffs = self
            .payoffs
            .iter()
            .map(|r| cells.iter().map(|&c| r[c - 1]).collect())
            .collect();
        NormalGame::new(sub.cardinalities().to_vec(), payoffs)
    }

    /// Per-player strategy sets of the all-finite region, when it is a product box.
    pub fn finite_box(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.players();
        let mut support = Vec::new();
        let mut sets = vec![Vec::new(); n];
        for (k, p) in self.space.iter().enumerate() {
            if self.payoffs.iter().all(|r| r[k].is_finite()) {
                for (set, &s) in sets.iter_mut().zip(&p) {
                    if !set.contains(&s) {
                        set.push(s);
                    }
                }
                support.push(k + 1);
            }
        }
        if support.is_empty() {
            return None;
        }
        for set in &mut sets {
            set.sort_unstable();
        }
        let boxed: usize = sets.iter().map(Vec::len).product();
        (boxed == support.len()).then_some(sets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pennies() -> NormalGame {
        NormalGame::from_finite(
            vec![2, 2],
            vec![vec![1.0, -1.0, -1.0, 1.0], vec![-1.0, 1.0, 1.0, -1.0]],
        )
        .unwrap()
    }

    #[test]
    fn payoff_lookup_and_bounds() {
        let g = pennies();
        assert_eq!(g.payoff(1, &[2, 1]).unwrap(), ExtReal::new(-1.0));
        assert!(g.payoff(3, &[1, 1]).is_err());
        assert!(g.payoff(1, &[1, 3]).is_err());
        let z = NormalGame::from_finite(vec![2, 3], vec![vec![0.0; 6]; 2]).unwrap();
        assert!(z.space().iter().all(|p| z.payoff(2, &p).unwrap() == ExtReal::ZERO));
    }

    #[test]
    fn best_responses_handle_ties_and_padding() {
        let g = NormalGame::from_finite(vec![3, 2], vec![vec![1.0; 6], vec![0.0; 6]]).unwrap();
        assert_eq!(g.best_responses(1, &[2]).unwrap(), vec![1, 2, 3]);
        let inf = ExtReal::NEG_INF;
        let padded = NormalGame::new(
            vec![2, 1],
            vec![vec![inf, ExtReal::new(-5.0)], vec![ExtReal::ZERO; 2]],
        )
        .unwrap();
        assert_eq!(padded.best_responses(1, &[1]).unwrap(), vec![2]);
        let dead = NormalGame::new(vec![2, 1], vec![vec![inf, inf], vec![ExtReal::ZERO; 2]]).unwrap();
        assert!(dead.best_responses(1, &[1]).unwrap().is_empty());
        assert!(g.best_responses(1, &[]).is_err());
    }

    #[test]
    fn pure_nash_examples() {
        assert!(pennies().pure_nash().is_empty());
        let solo = NormalGame::from_finite(vec![3], vec![vec![1.0, 4.0, 2.0]]).unwrap();
        assert_eq!(solo.pure_nash(), vec![vec![2]]);
        let inf = ExtReal::NEG_INF;
        // the only profile without a finite deviation is itself -inf: excluded
        let g = NormalGame::new(vec![1, 1], vec![vec![inf], vec![inf]]).unwrap();
        assert!(g.pure_nash().is_empty());
    }

    #[test]
    fn equivalent_vector_form_examples() {
        let g = NormalGame::from_finite(
            vec![2, 2],
            vec![vec![1.0, 2.0, 3.0, 4.0], vec![4.0, 3.0, 2.0, 1.0]],
        )
        .unwrap();
        assert_eq!(g.equivalent_vector_form().unwrap(), vec![3.0, 1.0, -1.0, -3.0]);
        let same = NormalGame::from_finite(vec![2], vec![vec![1.0, 2.0]]).unwrap();
        assert!(same.equivalent_vector_form().unwrap().is_empty());
        let shifted = g.shifted(&[5.0, -1.0, 0.5, 2.0]).unwrap();
        assert_eq!(
            shifted.equivalent_vector_form().unwrap(),
            g.equivalent_vector_form().unwrap()
        );
        let inf = NormalGame::new(
            vec![1, 1],
            vec![vec![ExtReal::NEG_INF], vec![ExtReal::ZERO]],
        )
        .unwrap();
        assert!(matches!(inf.equivalent_vector_form(), Err(Error::InfinitePayoff(_))));
    }

    #[test]
    fn finite_box_and_restrict() {
        let inf = ExtReal::NEG_INF;
        let f = ExtReal::new;
        let g = NormalGame::new(
            vec![2, 2],
            vec![vec![f(1.0), inf, f(2.0), inf], vec![f(0.0), inf, f(3.0), inf]],
        )
        .unwrap();
        assert_eq!(g.finite_box(), Some(vec![vec![1, 2], vec![1]]));
        let sub = g.restrict(&[vec![1, 2], vec![1]]).unwrap();
        assert_eq!(sub.payoff_vector(2), &[f(0.0), f(3.0)]);
        let ragged = NormalGame::new(
            vec![2, 2],
            vec![vec![f(1.0), inf, inf, f(1.0)], vec![f(1.0), inf, inf, f(1.0)]],
        )
        .unwrap();
        assert_eq!(ragged.finite_box(), None);
    }
}
