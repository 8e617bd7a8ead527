//! Static Bayesian games with type-dependent admissible actions.

use crate::error::{check_index, Error, Result};
use crate::ext::ExtReal;
use crate::stp::{ProfileSpace, RealMatrix};

/// Tolerance on the prior summing to one.
pub const PRIOR_TOL: f64 = 1e-12;

/// A finite static Bayesian game.
///
/// Payoff rows have `τ·r` entries indexed by `(t, a)`, type profile major.
/// Inadmissible cells hold `-inf`.
#[derive(Clone, Debug, PartialEq)]
pub struct BayesianGame {
    types: ProfileSpace,
    actions: ProfileSpace,
    admissible: Vec<Vec<Vec<usize>>>,
    payoffs: Vec<Vec<ExtReal>>,
    prior: Vec<f64>,
}

/// Beliefs of one player: column `j` is `p_i(· | t_i^j)` over lexicographic `t_{-i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BeliefMatrix {
    pub player: usize,
    pub columns: Vec<Vec<f64>>,
}

impl BeliefMatrix {
    /// The `(τ/τ_i) × τ_i` matrix `p_i`.
    pub fn to_matrix(&self) -> RealMatrix {
        let rows = self.columns[0].len();
        let cols = self.columns.len();
        let mut data = vec![0.0; rows * cols];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, &x) in col.iter().enumerate() {
                data[r * cols + c] = x;
            }
        }
        RealMatrix::new(rows, cols, data).expect("beliefs are finite")
    }
}

/// A pure type-contingent strategy profile: `maps[i][j-1]` is player `i+1`'s
/// action under its type `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeStrategy {
    pub maps: Vec<Vec<usize>>,
}

impl TypeStrategy {
    /// Action profile played at a type profile.
    pub fn actions_at(&self, types: &[usize]) -> Vec<usize> {
        self.maps
            .iter()
            .zip(types)
            .map(|(m, &t)| m[t - 1])
            .collect()
    }
}

fn check_prior(prior: &[f64], tau: usize) -> Result<()> {
    if prior.len() != tau {
        return Err(Error::BadPrior(format!(
            "{} entries for {} type profiles",
            prior.len(),
            tau
        )));
    }
    if let Some(k) = prior.iter().position(|&p| !p.is_finite() || p < 0.0) {
        return Err(Error::BadPrior(format!("entry {} is {}", k + 1, prior[k])));
    }
    let sum: f64 = prior.iter().sum();
    if (sum - 1.0).abs() > PRIOR_TOL {
        return Err(Error::BadPrior(format!("entries sum to {sum}")));
    }
    Ok(())
}

fn check_admissible(
    admissible: &[Vec<Vec<usize>>],
    type_cards: &[usize],
    action_cards: &[usize],
) -> Result<Vec<Vec<Vec<usize>>>> {
    if admissible.len() != type_cards.len() {
        return Err(Error::DimensionMismatch("one admissible list per player".into()));
    }
    let mut out = Vec::with_capacity(admissible.len());
    for (i, per_type) in admissible.iter().enumerate() {
        if per_type.len() != type_cards[i] {
            return Err(Error::DimensionMismatch(format!(
                "player {} has {} types but {} admissible sets",
                i + 1,
                type_cards[i],
                per_type.len()
            )));
        }
        let mut sets = Vec::with_capacity(per_type.len());
        for (j, set) in per_type.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::Invalid(format!(
                    "admissible set of player {}, type {} is empty",
                    i + 1,
                    j + 1
                )));
            }
            for &a in set {
                check_index("admissible action", a, action_cards[i])?;
            }
            let mut s = set.clone();
            s.sort_unstable();
            s.dedup();
            sets.push(s);
        }
        out.push(sets);
    }
    Ok(out)
}

impl BayesianGame {
    /// Builds a game from padded payoff rows, checking that `-inf` cells
    /// coincide exactly with inadmissible `(t, a)`.
    pub fn new(
        type_cards: Vec<usize>,
        action_cards: Vec<usize>,
        admissible: Vec<Vec<Vec<usize>>>,
        payoffs: Vec<Vec<ExtReal>>,
        prior: Vec<f64>,
    ) -> Result<Self> {
        let g = Self::unchecked(type_cards, action_cards, admissible, payoffs, prior)?;
        for (i, row) in g.payoffs.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                let (t, a) = g.split_cell(k);
                if v.is_finite() != g.is_admissible(&t, &a) {
                    return Err(Error::Invalid(format!(
                        "player {} payoff at t={:?}, a={:?} is {} but the cell is {}",
                        i + 1,
                        t,
                        a,
                        v,
                        if g.is_admissible(&t, &a) { "admissible" } else { "inadmissible" }
                    )));
                }
            }
        }
        Ok(g)
    }

    fn unchecked(
        type_cards: Vec<usize>,
        action_cards: Vec<usize>,
        admissible: Vec<Vec<Vec<usize>>>,
        payoffs: Vec<Vec<ExtReal>>,
        prior: Vec<f64>,
    ) -> Result<Self> {
        if type_cards.is_empty() || type_cards.len() != action_cards.len() {
            return Err(Error::DimensionMismatch(
                "type and action cardinalities must list the same players".into(),
            ));
        }
        let types = ProfileSpace::new(type_cards)?;
        let actions = ProfileSpace::new(action_cards)?;
        let admissible =
            check_admissible(&admissible, types.cardinalities(), actions.cardinalities())?;
        check_prior(&prior, types.total())?;
        let len = types.total() * actions.total();
        if payoffs.len() != types.len() {
            return Err(Error::DimensionMismatch("one payoff row per player".into()));
        }
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != len {
                return Err(Error::DimensionMismatch(format!(
                    "payoff row of player {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    len
                )));
            }
        }
        Ok(BayesianGame {
            types,
            actions,
            admissible,
            payoffs,
            prior,
        })
    }

    /// Pads per-type payoff tables with `-inf`.
    ///
    /// `tables[t-1][i-1]` lists player `i`'s payoffs over the admissible box
    /// `Π_j A_j(t_j)` of type profile `t`, in lexicographic order.
    pub fn assemble(
        type_cards: Vec<usize>,
        action_cards: Vec<usize>,
        admissible: Vec<Vec<Vec<usize>>>,
        prior: Vec<f64>,
        tables: &[Vec<Vec<f64>>],
    ) -> Result<Self> {
        let n = type_cards.len();
        let r: usize = action_cards.iter().product();
        let tau: usize = type_cards.iter().product();
        let mut g = Self::unchecked(
            type_cards,
            action_cards,
            admissible,
            vec![vec![ExtReal::NEG_INF; tau * r]; n],
            prior,
        )?;
        if tables.len() != tau {
            return Err(Error::MissingEntry(format!(
                "{} tables for {} type profiles",
                tables.len(),
                tau
            )));
        }
        for (ti, t) in g.types.clone().iter().enumerate() {
            let boxes = g.admissible_box(&t);
            let sub = ProfileSpace::new(boxes.iter().map(Vec::len).collect())?;
            let table = &tables[ti];
            if table.len() != n {
                return Err(Error::MissingEntry(format!("table for t={t:?} lacks players")));
            }
            for (i, row) in table.iter().enumerate() {
                if row.len() != sub.total() {
                    return Err(Error::MissingEntry(format!(
                        "player {} at t={:?}: {} entries for {} admissible profiles",
                        i + 1,
                        t,
                        row.len(),
                        sub.total()
                    )));
                }
                for (k, p) in sub.iter().enumerate() {
                    let a: Vec<usize> = p.iter().zip(&boxes).map(|(&j, b)| b[j - 1]).collect();
                    let v = row[k];
                    if !v.is_finite() {
                        return Err(Error::MissingEntry(format!(
                            "player {} at t={:?}, a={:?} is not finite",
                            i + 1,
                            t,
                            a
                        )));
                    }
                    let cell = g.cell(&t, &a)?;
                    g.payoffs[i][cell] = ExtReal::new(v);
                }
            }
        }
        Ok(g)
    }

    /// A game where every action is admissible under every type.
    pub fn fully_admissible(
        type_cards: Vec<usize>,
        action_cards: Vec<usize>,
        payoffs: Vec<Vec<f64>>,
        prior: Vec<f64>,
    ) -> Result<Self> {
        let admissible = type_cards
            .iter()
            .zip(&action_cards)
            .map(|(&tau, &r)| vec![(1..=r).collect(); tau])
            .collect();
        let rows = payoffs
            .into_iter()
            .map(|row| row.into_iter().map(ExtReal::from).collect())
            .collect();
        Self::new(type_cards, action_cards, admissible, rows, prior)
    }

    pub fn players(&self) -> usize {
        self.types.len()
    }

    pub fn type_cards(&self) -> &[usize] {
        self.types.cardinalities()
    }

    pub fn action_cards(&self) -> &[usize] {
        self.actions.cardinalities()
    }

    pub fn type_space(&self) -> &ProfileSpace {
        &self.types
    }

    pub fn action_space(&self) -> &ProfileSpace {
        &self.actions
    }

    /// `A_i(t_i^j)`, sorted.
    pub fn admissible(&self, i: usize, j: usize) -> &[usize] {
        &self.admissible[i - 1][j - 1]
    }

    pub fn admissible_sets(&self) -> &[Vec<Vec<usize>>] {
        &self.admissible
    }

    /// `Π_j A_j(t_j)` for a type profile.
    pub fn admissible_box(&self, t: &[usize]) -> Vec<Vec<usize>> {
        t.iter()
            .enumerate()
            .map(|(i, &tj)| self.admissible[i][tj - 1].clone())
            .collect()
    }

    pub fn is_admissible(&self, t: &[usize], a: &[usize]) -> bool {
        t.iter()
            .zip(a)
            .enumerate()
            .all(|(i, (&tj, aj))| self.admissible[i][tj - 1].binary_search(aj).is_ok())
    }

    pub fn is_fully_admissible(&self) -> bool {
        self.admissible
            .iter()
            .zip(self.action_cards())
            .all(|(sets, &r)| sets.iter().all(|s| s.len() == r))
    }

    /// Zero-based position of `(t, a)` in a payoff row.
    pub fn cell(&self, t: &[usize], a: &[usize]) -> Result<usize> {
        let ti = self.types.index(t)?;
        let ai = self.actions.index(a)?;
        Ok((ti - 1) * self.actions.total() + (ai - 1))
    }

    /// Inverse of [`BayesianGame::cell`].
    pub fn split_cell(&self, k: usize) -> (Vec<usize>, Vec<usize>) {
        let r = self.actions.total();
        (
            self.types.unindex(k / r + 1).expect("cell in range"),
            self.actions.unindex(k % r + 1).expect("cell in range"),
        )
    }

    /// `V_i^{c̄}`, for 1-based `i`.
    pub fn payoff_vector(&self, i: usize) -> &[ExtReal] {
        &self.payoffs[i - 1]
    }

    pub fn payoff_vectors(&self) -> &[Vec<ExtReal>] {
        &self.payoffs
    }

    /// `c̄_i(a, t)`.
    pub fn payoff(&self, i: usize, t: &[usize], a: &[usize]) -> Result<ExtReal> {
        check_index("player", i, self.players())?;
        Ok(self.payoffs[i - 1][self.cell(t, a)?])
    }

    /// Common prior over lexicographic type profiles.
    pub fn prior(&self) -> &[f64] {
        &self.prior
    }

    /// The prior as a `τ × 1` column.
    pub fn prior_column(&self) -> RealMatrix {
        RealMatrix::column_vector(&self.prior).expect("validated prior")
    }

    /// `Pr(t_i = t_i^j)` for each `j`.
    pub fn marginal_prior(&self, i: usize) -> Vec<f64> {
        let mut out = vec![0.0; self.type_cards()[i - 1]];
        for (t, &p) in self.types.iter().zip(&self.prior) {
            out[t[i - 1] - 1] += p;
        }
        out
    }

    /// Type profiles of the other players, in lexicographic order.
    pub fn others_space(&self, i: usize) -> ProfileSpace {
        let cards = self
            .type_cards()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i - 1)
            .map(|(_, &c)| c)
            .collect();
        ProfileSpace::new(cards).expect("positive cardinalities")
    }

    /// Inserts `t_i = j` into a profile of the other players' types.
    pub fn join_types(&self, i: usize, j: usize, others: &[usize]) -> Vec<usize> {
        let mut t = Vec::with_capacity(others.len() + 1);
        t.extend_from_slice(&others[..i - 1]);
        t.push(j);
        t.extend_from_slice(&others[i - 1..]);
        t
    }

    /// `p_i(t_{-i} | t_i^j)` over lexicographic `t_{-i}`.
    pub fn belief(&self, i: usize, j: usize) -> Result<Vec<f64>> {
        check_index("player", i, self.players())?;
        check_index("type", j, self.type_cards()[i - 1])?;
        let marginal = self.marginal_prior(i)[j - 1];
        if marginal <= 0.0 {
            return Err(Error::ZeroProbabilityType { player: i, ty: j });
        }
        Ok(self
            .others_space(i)
            .iter()
            .map(|o| {
                let t = self.join_types(i, j, &o);
                self.prior[self.types.index(&t).expect("valid") - 1] / marginal
            })
            .collect())
    }

    pub fn belief_matrix(&self, i: usize) -> Result<BeliefMatrix> {
        let columns = (1..=self.type_cards()[i - 1])
            .map(|j| self.belief(i, j))
            .collect::<Result<Vec<_>>>()?;
        Ok(BeliefMatrix { player: i, columns })
    }

    /// Fails if any type of any player has zero marginal probability.
    pub fn check_positive_marginals(&self) -> Result<()> {
        for i in 1..=self.players() {
            if let Some(j) = self.marginal_prior(i).iter().position(|&p| p <= 0.0) {
                return Err(Error::ZeroProbabilityType { player: i, ty: j + 1 });
            }
        }
        Ok(())
    }

    /// `Σ_t Pr(t) c̄_i(a, t)`.
    pub fn expected_payoff_tn(&self, i: usize, a: &[usize]) -> Result<ExtReal> {
        check_index("player", i, self.players())?;
        let ai = self.actions.index(a)?;
        let r = self.actions.total();
        Ok(self
            .prior
            .iter()
            .enumerate()
            .fold(ExtReal::ZERO, |acc, (ti, &p)| {
                acc + self.payoffs[i - 1][ti * r + ai - 1].scale(p)
            }))
    }

    /// `Σ_{t_{-i}} p_i(t_{-i} | t_i^j) c̄_i(a, t_i^j, t_{-i})`.
    pub fn expected_payoff_th(&self, i: usize, a: &[usize], j: usize) -> Result<ExtReal> {
        let belief = self.belief(i, j)?;
        self.actions.index(a)?;
        self.others_space(i)
            .iter()
            .zip(&belief)
            .try_fold(ExtReal::ZERO, |acc, (o, &p)| {
                let t = self.join_types(i, j, &o);
                Ok(acc + self.payoff(i, &t, a)?.scale(p))
            })
    }

    /// All type-contingent strategy profiles respecting admissibility.
    pub fn type_strategies(&self) -> Vec<TypeStrategy> {
        // one coordinate per (player, type), ranging over its admissible set
        let sets: Vec<&Vec<usize>> = self.admissible.iter().flatten().collect();
        let space = ProfileSpace::new(sets.iter().map(|s| s.len()).collect()).expect("nonempty");
        space
            .iter()
            .map(|p| {
                let mut flat = p.iter().zip(&sets).map(|(&j, s)| s[j - 1]);
                TypeStrategy {
                    maps: self
                        .type_cards()
                        .iter()
                        .map(|&tau| flat.by_ref().take(tau).collect())
                        .collect(),
                }
            })
            .collect()
    }

    /// Interim value of type `j` of player `i` playing `ai` against `sigma`.
    fn interim_value(&self, sigma: &TypeStrategy, i: usize, j: usize, ai: usize, belief: &[f64]) -> ExtReal {
        self.others_space(i)
            .iter()
            .zip(belief)
            .fold(ExtReal::ZERO, |acc, (o, &p)| {
                let t = self.join_types(i, j, &o);
                let mut a = sigma.actions_at(&t);
                a[i - 1] = ai;
                acc + self.payoffs[i - 1][self.cell(&t, &a).expect("valid")].scale(p)
            })
    }

    /// Pure Bayesian-Nash equilibria in the interim sense.
    pub fn interim_bne(&self) -> Result<Vec<TypeStrategy>> {
        self.check_positive_marginals()?;
        let beliefs = (1..=self.players())
            .map(|i| self.belief_matrix(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(self
            .type_strategies()
            .into_iter()
            .filter(|sigma| {
                (1..=self.players()).all(|i| {
                    (1..=self.type_cards()[i - 1]).all(|j| {
                        let belief = &beliefs[i - 1].columns[j - 1];
                        let own = self.interim_value(sigma, i, j, sigma.maps[i - 1][j - 1], belief);
                        own.is_finite()
                            && self.admissible(i, j).iter().all(|&alt| {
                                let v = self.interim_value(sigma, i, j, alt, belief);
                                v <= own || own.ties(v)
                            })
                    })
                })
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    fn ex33() -> BayesianGame {
        BayesianGame::assemble(
            vec![2, 2],
            vec![3, 3],
            vec![vec![vec![1, 2], vec![2, 3]], vec![vec![1, 2, 3], vec![1, 3]]],
            vec![0.3, 0.1, 0.2, 0.4],
            &[
                vec![vec![2., 1., 1., 1., 2., 0.], vec![3., 4., -2., -2., 1., -3.]],
                vec![vec![-1., 1., 1., -2.], vec![2., 3., -2., 0.]],
                vec![vec![3., 2., 2., 2., -2., 3.], vec![5., 4., 0., -2., 4., 3.]],
                vec![vec![2., -1., 2., -1.], vec![-1., 3., 2., -2.]],
            ],
        )
        .unwrap()
    }

    #[test]
    fn padding_matches_listing() {
        let g = ex33();
        let n = f64::NEG_INFINITY;
        let v1 = [
            2., 1., 1., 1., 2., 0., n, n, n, -1., n, 1., 1., n, -2., n, n, n, n, n, n, 3., 2., 2.,
            2., -2., 3., n, n, n, 2., n, -1., 2., n, -1.,
        ];
        let got: Vec<f64> = g.payoff_vector(1).iter().map(|v| v.to_f64()).collect();
        assert_eq!(got, v1);
        for row in g.payoff_vectors() {
            for (k, v) in row.iter().enumerate() {
                let (t, a) = g.split_cell(k);
                assert_eq!(v.is_finite(), g.is_admissible(&t, &a));
            }
        }
    }

    #[test]
    fn assemble_rejects_short_tables_and_bad_priors() {
        let r = BayesianGame::assemble(
            vec![1],
            vec![2],
            vec![vec![vec![1, 2]]],
            vec![1.0],
            &[vec![vec![1.0]]],
        );
        assert!(matches!(r, Err(Error::MissingEntry(_))));
        let r = BayesianGame::fully_admissible(vec![2], vec![1], vec![vec![0.0, 0.0]], vec![0.5, 0.4]);
        assert!(matches!(r, Err(Error::BadPrior(_))));
        let r = BayesianGame::fully_admissible(vec![2], vec![1], vec![vec![0.0, 0.0]], vec![1.5, -0.5]);
        assert!(matches!(r, Err(Error::BadPrior(_))));
    }

    #[test]
    fn new_rejects_padding_mismatch() {
        let r = BayesianGame::new(
            vec![1],
            vec![2],
            vec![vec![vec![1]]],
            vec![vec![ExtReal::new(1.0), ExtReal::new(2.0)]],
            vec![1.0],
        );
        assert!(r.is_err());
    }

    #[test]
    fn marginals() {
        assert!(close(&ex33().marginal_prior(1), &[0.4, 0.6], 1e-15));
        assert!(close(&ex33().marginal_prior(2), &[0.5, 0.5], 1e-15));
        let g = BayesianGame::fully_admissible(
            vec![2, 2],
            vec![1, 1],
            vec![vec![0.0; 4]; 2],
            vec![0.1, 0.3, 0.4, 0.2],
        )
        .unwrap();
        assert!(close(&g.marginal_prior(1), &[0.4, 0.6], 1e-15));
        let u = BayesianGame::fully_admissible(vec![2, 3], vec![1, 1], vec![vec![0.0; 6]; 2], vec![1.0 / 6.0; 6])
            .unwrap();
        assert!(close(&u.marginal_prior(2), &[1.0 / 3.0; 3], 1e-15));
    }

    #[test]
    fn beliefs() {
        let g = ex33();
        assert!(close(&g.belief(1, 1).unwrap(), &[0.75, 0.25], 1e-12));
        assert!(close(&g.belief(1, 2).unwrap(), &[1.0 / 3.0, 2.0 / 3.0], 1e-12));
        assert!(close(&g.belief(2, 1).unwrap(), &[0.6, 0.4], 1e-12));
        assert!(close(&g.belief(2, 2).unwrap(), &[0.2, 0.8], 1e-12));
        let indep = BayesianGame::fully_admissible(
            vec![2, 2],
            vec![1, 1],
            vec![vec![0.0; 4]; 2],
            vec![0.12, 0.28, 0.18, 0.42],
        )
        .unwrap();
        for j in 1..=2 {
            assert!(close(&indep.belief(1, j).unwrap(), &[0.3, 0.7], 1e-12));
        }
        let single = BayesianGame::fully_admissible(vec![2, 1], vec![1, 1], vec![vec![0.0; 2]; 2], vec![0.5, 0.5])
            .unwrap();
        assert_eq!(single.belief_matrix(1).unwrap().to_matrix(), RealMatrix::ones_row(2));
        let zero = BayesianGame::fully_admissible(vec![2, 1], vec![1, 1], vec![vec![0.0; 2]; 2], vec![1.0, 0.0])
            .unwrap();
        assert!(matches!(
            zero.belief(1, 2),
            Err(Error::ZeroProbabilityType { player: 1, ty: 2 })
        ));
    }

    #[test]
    fn expected_payoffs() {
        let g = ex33();
        // 0.3·1 + 0.1·1 + 0.2·3 + 0.4·2
        assert!((g.expected_payoff_tn(1, &[2, 1]).unwrap().to_f64() - 1.8).abs() < 1e-12);
        assert!(g.expected_payoff_tn(1, &[1, 1]).unwrap().is_neg_inf());
        assert!((g.expected_payoff_th(1, &[1, 1], 1).unwrap().to_f64() - 1.25).abs() < 1e-12);
        assert!((g.expected_payoff_th(1, &[2, 3], 1).unwrap().to_f64() + 0.5).abs() < 1e-12);
        let one = BayesianGame::fully_admissible(vec![1, 1], vec![2, 1], vec![vec![3.0, 4.0], vec![0.0, 0.0]], vec![1.0])
            .unwrap();
        assert_eq!(one.expected_payoff_tn(1, &[2, 1]).unwrap(), ExtReal::new(4.0));
        assert_eq!(one.expected_payoff_th(1, &[2, 1], 1).unwrap(), ExtReal::new(4.0));
    }

    #[test]
    fn interim_bne_single_type_is_pure_nash() {
        // prisoner's dilemma with one type each
        let g = BayesianGame::fully_admissible(
            vec![1, 1],
            vec![2, 2],
            vec![vec![3.0, 0.0, 5.0, 1.0], vec![3.0, 5.0, 0.0, 1.0]],
            vec![1.0],
        )
        .unwrap();
        let eq = g.interim_bne().unwrap();
        assert_eq!(eq, vec![TypeStrategy { maps: vec![vec![2], vec![2]] }]);
    }

    #[test]
    fn interim_bne_dominant_actions() {
        // identical interest; action equal to own type index is strictly dominant
        let mut rows = vec![Vec::new(); 2];
        let base = BayesianGame::fully_admissible(
            vec![2, 2],
            vec![2, 2],
            vec![vec![0.0; 16]; 2],
            vec![0.25; 4],
        )
        .unwrap();
        for k in 0..16 {
            let (t, a) = base.split_cell(k);
            let v = (a[0] == t[0]) as u8 as f64 + (a[1] == t[1]) as u8 as f64;
            rows[0].push(v);
            rows[1].push(v);
        }
        let g = BayesianGame::fully_admissible(vec![2, 2], vec![2, 2], rows, vec![0.25; 4]).unwrap();
        assert_eq!(
            g.interim_bne().unwrap(),
            vec![TypeStrategy { maps: vec![vec![1, 2], vec![1, 2]] }]
        );
    }
}
