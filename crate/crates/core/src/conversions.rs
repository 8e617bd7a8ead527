//! Harsanyi, Selten and Action-Type conversions of a Bayesian game.

use crate::bayesian::BayesianGame;
use crate::error::{check_index, Error, Result};
use crate::ext::ExtReal;
use crate::normal::NormalGame;
use crate::stp::{khatri_rao, kron_chain, stp_ext_row, swap_matrix, ProfileSpace, RealMatrix};

/// Which conversion produced a game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConversionKind {
    Harsanyi,
    /// Realized type profile, 1-based.
    Selten(Vec<usize>),
    ActionType,
}

/// A complete-information game obtained from a Bayesian game.
#[derive(Clone, Debug, PartialEq)]
pub enum ConvertedGame {
    Harsanyi {
        game: NormalGame,
    },
    Selten {
        type_profile: Vec<usize>,
        game: NormalGame,
    },
    /// `rows[i]` has `τ_i·r` entries indexed by `(t_i, a)`.
    ActionType {
        type_cards: Vec<usize>,
        action_cards: Vec<usize>,
        rows: Vec<Vec<ExtReal>>,
    },
}

/// A joint type/action profile of an Action-Type game.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtProfile {
    pub types: Vec<usize>,
    pub actions: Vec<usize>,
}

impl ConvertedGame {
    pub fn kind(&self) -> ConversionKind {
        match self {
            ConvertedGame::Harsanyi { .. } => ConversionKind::Harsanyi,
            ConvertedGame::Selten { type_profile, .. } => ConversionKind::Selten(type_profile.clone()),
            ConvertedGame::ActionType { .. } => ConversionKind::ActionType,
        }
    }

    /// Payoff row of player `i`: `V_i^H`, `V_i^S` or the compact `V_i^{AT}`.
    pub fn row(&self, i: usize) -> &[ExtReal] {
        match self {
            ConvertedGame::Harsanyi { game } | ConvertedGame::Selten { game, .. } => {
                game.payoff_vector(i)
            }
            ConvertedGame::ActionType { rows, .. } => &rows[i - 1],
        }
    }

    pub fn players(&self) -> usize {
        match self {
            ConvertedGame::Harsanyi { game } | ConvertedGame::Selten { game, .. } => game.players(),
            ConvertedGame::ActionType { rows, .. } => rows.len(),
        }
    }

    /// The converted game in normal form. Action-Type strategies are
    /// `(t_i, a_i)` pairs numbered `(t_i - 1)·r_i + a_i`.
    pub fn to_normal_game(&self) -> NormalGame {
        match self {
            ConvertedGame::Harsanyi { game } | ConvertedGame::Selten { game, .. } => game.clone(),
            ConvertedGame::ActionType {
                type_cards,
                action_cards,
                rows,
            } => {
                let cards: Vec<usize> = type_cards
                    .iter()
                    .zip(action_cards)
                    .map(|(t, r)| t * r)
                    .collect();
                let space = ProfileSpace::new(cards.clone()).expect("positive");
                let actions = ProfileSpace::new(action_cards.clone()).expect("positive");
                let r = actions.total();
                let mut payoffs = vec![Vec::with_capacity(space.total()); rows.len()];
                for s in space.iter() {
                    let (types, acts) = split_at_strategies(&s, action_cards);
                    let ai = actions.index(&acts).expect("valid") - 1;
                    for (i, row) in rows.iter().enumerate() {
                        payoffs[i].push(row[(types[i] - 1) * r + ai]);
                    }
                }
                NormalGame::new(cards, payoffs).expect("consistent shapes")
            }
        }
    }

    /// `c_i^{AT}(a, t_i)` for an Action-Type game.
    pub fn at_payoff(&self, i: usize, t_i: usize, a: &[usize]) -> Result<ExtReal> {
        match self {
            ConvertedGame::ActionType {
                type_cards,
                action_cards,
                rows,
            } => {
                check_index("player", i, rows.len())?;
                check_index("type", t_i, type_cards[i - 1])?;
                let actions = ProfileSpace::new(action_cards.clone())?;
                let ai = actions.index(a)?;
                Ok(rows[i - 1][(t_i - 1) * actions.total() + ai - 1])
            }
            _ => Err(Error::NotApplicable("not an Action-Type game".into())),
        }
    }
}

/// Splits Action-Type strategies `(t_i - 1)·r_i + a_i` into types and actions.
pub fn split_at_strategies(s: &[usize], action_cards: &[usize]) -> (Vec<usize>, Vec<usize>) {
    s.iter()
        .zip(action_cards)
        .map(|(&x, &r)| ((x - 1) / r + 1, (x - 1) % r + 1))
        .unzip()
}

/// `V_i^H = V_i^{c̄} ⋉ p`.
pub fn harsanyi_convert(g: &BayesianGame) -> ConvertedGame {
    let p = g.prior_column();
    let payoffs = g
        .payoff_vectors()
        .iter()
        .map(|v| stp_ext_row(v, &p).expect("row length is a multiple of τ"))
        .collect();
    ConvertedGame::Harsanyi {
        game: NormalGame::new(g.action_cards().to_vec(), payoffs).expect("consistent shapes"),
    }
}

fn front_swap(g: &BayesianGame, i: usize) -> Result<RealMatrix> {
    let before: usize = g.type_cards()[..i - 1].iter().product();
    Ok(swap_matrix(g.type_cards()[i - 1], before)?.to_real())
}

/// `V_i^S = V_i^{c̄} ⋉ W_{[τ_i, Π_{k<i} τ_k]} ⋉ δ_{τ_i}^{t̄_i} ⋉ p_i(t̄_i)`.
pub fn selten_convert(g: &BayesianGame, type_profile: &[usize]) -> Result<ConvertedGame> {
    g.type_space().index(type_profile)?;
    let mut payoffs = Vec::with_capacity(g.players());
    for i in 1..=g.players() {
        let ti = type_profile[i - 1];
        let belief = RealMatrix::column_vector(&g.belief(i, ti)?)?;
        let w = front_swap(g, i)?;
        let d = crate::stp::delta(g.type_cards()[i - 1], ti)?.to_matrix();
        let mut row = stp_ext_row(g.payoff_vector(i), &w)?;
        row = stp_ext_row(&row, &d)?;
        row = stp_ext_row(&row, &belief)?;
        payoffs.push(row);
    }
    Ok(ConvertedGame::Selten {
        type_profile: type_profile.to_vec(),
        game: NormalGame::new(g.action_cards().to_vec(), payoffs)?,
    })
}

/// `V_i^{AT} = V_i^{c̄} ⋉ W_{[τ_i, Π_{k<i} τ_k]} ⋉ (I_{τ_i} * p_i)`.
pub fn at_convert(g: &BayesianGame) -> Result<ConvertedGame> {
    g.check_positive_marginals()?;
    let mut rows = Vec::with_capacity(g.players());
    for i in 1..=g.players() {
        let tau_i = g.type_cards()[i - 1];
        let pi = g.belief_matrix(i)?.to_matrix();
        let kr = khatri_rao(&RealMatrix::identity(tau_i), &pi)?;
        let row = stp_ext_row(g.payoff_vector(i), &front_swap(g, i)?)?;
        rows.push(stp_ext_row(&row, &kr)?);
    }
    Ok(ConvertedGame::ActionType {
        type_cards: g.type_cards().to_vec(),
        action_cards: g.action_cards().to_vec(),
        rows,
    })
}

/// `φ_i = ⊗_j γ_j` with `γ_i = I_{τ_i}` and `γ_j = 1ᵀ_{τ_j}` otherwise.
pub fn lift_operator(type_cards: &[usize], i: usize) -> RealMatrix {
    let factors: Vec<RealMatrix> = type_cards
        .iter()
        .enumerate()
        .map(|(j, &tau)| {
            if j == i - 1 {
                RealMatrix::identity(tau)
            } else {
                RealMatrix::ones_row(tau)
            }
        })
        .collect();
    kron_chain(&factors)
}

/// `V_i^{AT} ⋉ φ_i`: the Action-Type row over the full `(t, a)` space.
pub fn at_lift(cg: &ConvertedGame, i: usize) -> Result<Vec<ExtReal>> {
    match cg {
        ConvertedGame::ActionType { type_cards, rows, .. } => {
            check_index("player", i, rows.len())?;
            stp_ext_row(&rows[i - 1], &lift_operator(type_cards, i))
        }
        _ => Err(Error::NotApplicable("at_lift needs an Action-Type game".into())),
    }
}

/// Harsanyi-Bayesian-Nash equilibria (action profiles).
pub fn h_bne(g: &BayesianGame) -> Vec<Vec<usize>> {
    harsanyi_convert(g).to_normal_game().pure_nash()
}

/// Selten-Bayesian-Nash equilibria at a realized type profile.
pub fn s_bne(g: &BayesianGame, type_profile: &[usize]) -> Result<Vec<Vec<usize>>> {
    Ok(selten_convert(g, type_profile)?.to_normal_game().pure_nash())
}

/// Action-Type-Bayesian-Nash equilibria.
pub fn at_bne(g: &BayesianGame) -> Result<Vec<AtProfile>> {
    let cg = at_convert(g)?;
    Ok(cg
        .to_normal_game()
        .pure_nash()
        .into_iter()
        .map(|s| {
            let (types, actions) = split_at_strategies(&s, g.action_cards());
            AtProfile { types, actions }
        })
        .collect())
}
