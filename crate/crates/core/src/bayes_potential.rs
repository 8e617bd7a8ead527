//! Potential tests for Bayesian games and their converted games.

use crate::bayesian::BayesianGame;
use crate::conversions::{at_convert, at_lift, harsanyi_convert, selten_convert, ConvertedGame};
use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::normal::NormalGame;
use crate::potential::{
    assemble_system, least_squares, recover_potential, solve_potential, within_tolerance,
    VERIFY_TOL,
};
use crate::stp::{kron_chain, ProfileSpace, RealMatrix};

/// Which potential notion a report refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PotentialNotion {
    /// Potential under each type profile separately.
    Tn,
    /// One potential over joint type/action deviations.
    Th,
    Harsanyi,
    Selten(Vec<usize>),
    ActionType,
}

/// Result of a Bayesian potential test.
///
/// `potential_vector` lives on `(t, a)` for TN, TH and Action-Type, and on
/// action profiles for Harsanyi and Selten. Cells outside the analysed
/// region hold `-inf`.
#[derive(Clone, Debug, PartialEq)]
pub struct BayesPotentialReport {
    pub notion: PotentialNotion,
    pub is_potential: bool,
    pub potential_vector: Option<Vec<ExtReal>>,
    pub residual: f64,
}

fn joint_space(g: &BayesianGame) -> ProfileSpace {
    let mut cards = g.type_cards().to_vec();
    cards.extend_from_slice(g.action_cards());
    ProfileSpace::new(cards).expect("positive cardinalities")
}

/// Potential of each per-type subgame on its admissible box.
pub fn tn_potential(g: &BayesianGame) -> Result<BayesPotentialReport> {
    let r = g.action_space().total();
    let mut out = vec![ExtReal::NEG_INF; g.type_space().total() * r];
    let mut residual = 0.0_f64;
    let mut ok = true;
    for (ti, t) in g.type_space().iter().enumerate() {
        let rows = g
            .payoff_vectors()
            .iter()
            .map(|v| v[ti * r..(ti + 1) * r].to_vec())
            .collect();
        let full = NormalGame::new(g.action_cards().to_vec(), rows)?;
        let boxes = g.admissible_box(&t);
        let res = solve_potential(&full.restrict(&boxes)?)?;
        residual = residual.max(res.residual);
        match res.potential_vector {
            Some(pv) if ok => {
                let sub = ProfileSpace::new(boxes.iter().map(Vec::len).collect())?;
                for (k, p) in sub.iter().enumerate() {
                    let a: Vec<usize> = p.iter().zip(&boxes).map(|(&j, b)| b[j - 1]).collect();
                    out[g.cell(&t, &a)?] = ExtReal::new(pv[k]);
                }
            }
            Some(_) => {}
            None => ok = false,
        }
    }
    Ok(BayesPotentialReport {
        notion: PotentialNotion::Tn,
        is_potential: ok,
        potential_vector: ok.then_some(out),
        residual,
    })
}

/// The normal game whose player `i` picks `(t_i, a_i)` and earns `c̄_i(a, t)`.
pub fn type_action_game(g: &BayesianGame) -> Result<NormalGame> {
    let cards: Vec<usize> = g
        .type_cards()
        .iter()
        .zip(g.action_cards())
        .map(|(t, r)| t * r)
        .collect();
    let space = ProfileSpace::new(cards.clone())?;
    let cells: Vec<usize> = space
        .iter()
        .map(|s| {
            let (t, a) = crate::conversions::split_at_strategies(&s, g.action_cards());
            g.cell(&t, &a).expect("valid")
        })
        .collect();
    let rows = g
        .payoff_vectors()
        .iter()
        .map(|v| cells.iter().map(|&c| v[c]).collect())
        .collect();
    NormalGame::new(cards, rows)
}

/// Reorders a vector over `(t_1,a_1,…,t_n,a_n)` strategies into `(t, a)` cells.
fn strategies_to_cells(g: &BayesianGame, boxes: &[Vec<usize>], pv: &[f64]) -> Vec<ExtReal> {
    let sub = ProfileSpace::new(boxes.iter().map(Vec::len).collect()).expect("nonempty");
    let mut out = vec![ExtReal::NEG_INF; g.type_space().total() * g.action_space().total()];
    for (k, p) in sub.iter().enumerate() {
        let s: Vec<usize> = p.iter().zip(boxes).map(|(&j, b)| b[j - 1]).collect();
        let (t, a) = crate::conversions::split_at_strategies(&s, g.action_cards());
        out[g.cell(&t, &a).expect("valid")] = ExtReal::new(pv[k]);
    }
    out
}

/// One potential for deviations in own type and action jointly. Needs a
/// fully admissible game.
pub fn th_potential(g: &BayesianGame) -> Result<BayesPotentialReport> {
    if !g.is_fully_admissible() {
        return Err(Error::InfinitePayoff(
            "TH potential requires every action to be admissible under every type".into(),
        ));
    }
    let game = type_action_game(g)?;
    let res = solve_potential(&game)?;
    let full: Vec<Vec<usize>> = game.cardinalities().iter().map(|&k| (1..=k).collect()).collect();
    Ok(BayesPotentialReport {
        notion: PotentialNotion::Th,
        is_potential: res.is_potential,
        potential_vector: res.potential_vector.map(|pv| strategies_to_cells(g, &full, &pv)),
        residual: res.residual,
    })
}

/// Solves the potential equation on the all-finite product box of a game.
fn boxed_potential(game: &NormalGame) -> Result<(Vec<Vec<usize>>, crate::potential::PotentialResult)> {
    let boxes = game.finite_box().ok_or_else(|| {
        Error::NotApplicable("the finite region of the converted game is not a product box".into())
    })?;
    let res = solve_potential(&game.restrict(&boxes)?)?;
    Ok((boxes, res))
}

fn embed(space: &ProfileSpace, boxes: &[Vec<usize>], pv: &[f64]) -> Vec<ExtReal> {
    let sub = ProfileSpace::new(boxes.iter().map(Vec::len).collect()).expect("nonempty");
    let mut out = vec![ExtReal::NEG_INF; space.total()];
    for (k, p) in sub.iter().enumerate() {
        let s: Vec<usize> = p.iter().zip(boxes).map(|(&j, b)| b[j - 1]).collect();
        out[space.index(&s).expect("valid") - 1] = ExtReal::new(pv[k]);
    }
    out
}

fn converted_potential(cg: &ConvertedGame, notion: PotentialNotion) -> Result<BayesPotentialReport> {
    let game = cg.to_normal_game();
    let (boxes, res) = boxed_potential(&game)?;
    Ok(BayesPotentialReport {
        notion,
        is_potential: res.is_potential,
        potential_vector: res.potential_vector.map(|pv| embed(game.space(), &boxes, pv.as_slice())),
        residual: res.residual,
    })
}

/// Potential of the Harsanyi game, `Q^H`.
pub fn harsanyi_potential(g: &BayesianGame) -> Result<BayesPotentialReport> {
    converted_potential(&harsanyi_convert(g), PotentialNotion::Harsanyi)
}

/// Potential of the Selten game at `t̄`, `Q^S`.
pub fn selten_potential(g: &BayesianGame, type_profile: &[usize]) -> Result<BayesPotentialReport> {
    converted_potential(
        &selten_convert(g, type_profile)?,
        PotentialNotion::Selten(type_profile.to_vec()),
    )
}

/// Deletion operator `I_{θ_i} ⊗ 1ᵀ_{τ_i} ⊗ I_{ϑ_i} ⊗ 1ᵀ_{r_i} ⊗ I_{ρ_i}` over `(t, a)`.
pub fn at_deletion_operator(type_cards: &[usize], action_cards: &[usize], i: usize) -> RealMatrix {
    let theta: usize = type_cards[..i - 1].iter().product();
    let vartheta: usize =
        type_cards[i..].iter().product::<usize>() * action_cards[..i - 1].iter().product::<usize>();
    let rho: usize = action_cards[i..].iter().product();
    kron_chain(&[
        RealMatrix::identity(theta),
        RealMatrix::ones_row(type_cards[i - 1]),
        RealMatrix::identity(vartheta),
        RealMatrix::ones_row(action_cards[i - 1]),
        RealMatrix::identity(rho),
    ])
}

/// `Ψ^{AT}`: block row `i-1` is `[-φ_1ᵀ | 0 … φ_iᵀ … 0]` with the deletion operators.
pub fn at_psi(type_cards: &[usize], action_cards: &[usize]) -> Result<RealMatrix> {
    let n = type_cards.len();
    let dels: Vec<RealMatrix> = (1..=n)
        .map(|i| at_deletion_operator(type_cards, action_cards, i))
        .collect();
    let kappa = dels[0].cols();
    Ok(assemble_system(&dels, &vec![vec![0.0; kappa]; n])?.0)
}

/// Action-Type potential of an already converted game.
pub fn at_potential_converted(cg: &ConvertedGame) -> Result<BayesPotentialReport> {
    let (type_cards, action_cards, n) = match cg {
        ConvertedGame::ActionType {
            type_cards,
            action_cards,
            rows,
        } => (type_cards, action_cards, rows.len()),
        _ => return Err(Error::NotApplicable("not an Action-Type game".into())),
    };
    let lifted = (1..=n).map(|i| at_lift(cg, i)).collect::<Result<Vec<_>>>()?;
    let finite: Option<Vec<Vec<f64>>> =
        lifted.iter().map(|r| crate::ext::finite_row(r)).collect();
    let Some(rows) = finite else {
        // restricted route: the generic potential equation on the finite box
        let game = cg.to_normal_game();
        let (boxes, res) = boxed_potential(&game)?;
        let tau: usize = type_cards.iter().product();
        let r: usize = action_cards.iter().product();
        let pv = res.potential_vector.map(|pv| {
            let strat = embed(game.space(), &boxes, &pv);
            let joint = ProfileSpace::new([type_cards.clone(), action_cards.clone()].concat())
                .expect("positive");
            let mut out = vec![ExtReal::NEG_INF; tau * r];
            for (k, p) in joint.iter().enumerate() {
                let s: Vec<usize> = (0..n)
                    .map(|i| (p[i] - 1) * action_cards[i] + p[n + i])
                    .collect();
                out[k] = strat[game.space().index(&s).expect("valid") - 1];
            }
            out
        });
        return Ok(BayesPotentialReport {
            notion: PotentialNotion::ActionType,
            is_potential: res.is_potential,
            potential_vector: pv,
            residual: res.residual,
        });
    };
    if n == 1 {
        return Ok(BayesPotentialReport {
            notion: PotentialNotion::ActionType,
            is_potential: true,
            potential_vector: Some(lifted[0].clone()),
            residual: 0.0,
        });
    }
    let dels: Vec<RealMatrix> = (1..=n)
        .map(|i| at_deletion_operator(type_cards, action_cards, i))
        .collect();
    let (psi, b) = assemble_system(&dels, &rows)?;
    let (xi, residual) = least_squares(&psi, &b)?;
    let ok = within_tolerance(residual, &b);
    let pv = ok.then(|| {
        let k1 = dels[0].rows();
        recover_potential(&rows[0], &xi[..k1], &dels[0])
            .into_iter()
            .map(ExtReal::new)
            .collect()
    });
    Ok(BayesPotentialReport {
        notion: PotentialNotion::ActionType,
        is_potential: ok,
        potential_vector: pv,
        residual,
    })
}

/// Potential of the Action-Type game, `Q^{AT}` over `(t, a)`.
pub fn at_potential(g: &BayesianGame) -> Result<BayesPotentialReport> {
    at_potential_converted(&at_convert(g)?)
}

/// Checks the defining difference identity of a notion exhaustively.
///
/// Only deviations between cells where every payoff is finite are
/// constrained; `q_vec` must be finite on those cells.
pub fn verify_bayes_potential(
    g: &BayesianGame,
    notion: &PotentialNotion,
    q_vec: &[ExtReal],
) -> Result<bool> {
    let n = g.players();
    match notion {
        PotentialNotion::Tn | PotentialNotion::Th => {
            let space = joint_space(g);
            let movers: Vec<Vec<usize>> = (0..n)
                .map(|i| {
                    if *notion == PotentialNotion::Tn {
                        vec![n + i]
                    } else {
                        vec![i, n + i]
                    }
                })
                .collect();
            unilateral_check(&space, &movers, |i, k| g.payoff_vectors()[i][k], q_vec)
        }
        PotentialNotion::ActionType => {
            let cg = at_convert(g)?;
            verify_at_potential(&cg, q_vec)
        }
        PotentialNotion::Harsanyi => {
            let game = harsanyi_convert(g).to_normal_game();
            verify_normal(&game, q_vec)
        }
        PotentialNotion::Selten(t) => {
            let game = selten_convert(g, t)?.to_normal_game();
            verify_normal(&game, q_vec)
        }
    }
}

/// Exhaustive check of an Action-Type potential over `(t, a)`.
pub fn verify_at_potential(cg: &ConvertedGame, q_vec: &[ExtReal]) -> Result<bool> {
    let ConvertedGame::ActionType {
        type_cards,
        action_cards,
        rows,
    } = cg
    else {
        return Err(Error::NotApplicable("not an Action-Type game".into()));
    };
    let n = rows.len();
    let lifted = (1..=n).map(|i| at_lift(cg, i)).collect::<Result<Vec<_>>>()?;
    let space = ProfileSpace::new([type_cards.clone(), action_cards.clone()].concat())?;
    let movers: Vec<Vec<usize>> = (0..n).map(|i| vec![i, n + i]).collect();
    unilateral_check(&space, &movers, |i, k| lifted[i][k], q_vec)
}

fn verify_normal(game: &NormalGame, q_vec: &[ExtReal]) -> Result<bool> {
    let movers: Vec<Vec<usize>> = (0..game.players()).map(|i| vec![i]).collect();
    unilateral_check(game.space(), &movers, |i, k| game.payoff_vectors()[i][k], q_vec)
}

/// For each player `i` and each pair of cells differing only in the
/// coordinates `movers[i]`, payoff and potential differences must agree.
fn unilateral_check(
    space: &ProfileSpace,
    movers: &[Vec<usize>],
    payoff: impl Fn(usize, usize) -> ExtReal,
    q_vec: &[ExtReal],
) -> Result<bool> {
    if q_vec.len() != space.total() {
        return Err(Error::DimensionMismatch(format!(
            "potential has {} entries, expected {}",
            q_vec.len(),
            space.total()
        )));
    }
    let cards = space.cardinalities();
    for (i, coords) in movers.iter().enumerate() {
        let local = ProfileSpace::new(coords.iter().map(|&c| cards[c]).collect())?;
        for (x, p) in space.iter().enumerate() {
            if coords.iter().any(|&c| p[c] != 1) {
                continue;
            }
            // the cells reachable from p by moving player i's coordinates
            let group: Vec<usize> = local
                .iter()
                .map(|l| {
                    let mut q = p.clone();
                    for (&c, &v) in coords.iter().zip(&l) {
                        q[c] = v;
                    }
                    space.index(&q).expect("valid") - 1
                })
                .collect();
            debug_assert_eq!(group[0], x);
            let live: Vec<usize> = group
                .into_iter()
                .filter(|&k| (0..movers.len()).all(|j| payoff(j, k).is_finite()))
                .collect();
            let Some(&base) = live.first() else { continue };
            let (Some(c0), Some(q0)) = (payoff(i, base).value(), q_vec[base].value()) else {
                return Ok(false);
            };
            for &k in &live[1..] {
                let Some(qk) = q_vec[k].value() else {
                    return Ok(false);
                };
                let ck = payoff(i, k).to_f64();
                if ((ck - c0) - (qk - q0)).abs() > VERIFY_TOL {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
