#![allow(dead_code)]

use std::path::PathBuf;

use bayes_stp::document::parse_game;
use bayes_stp::{BayesianGame, ExtReal, NormalGame, ProfileSpace};
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture(name: &str) -> BayesianGame {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture readable");
    parse_game(&text).expect("fixture parses")
}

pub fn to_f64(row: &[ExtReal]) -> Vec<f64> {
    row.iter().map(|v| v.to_f64()).collect()
}

pub fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "length mismatch");
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Spread of `a - b`; zero when the two differ by a constant.
pub fn constancy_gap(a: &[f64], b: &[f64]) -> f64 {
    let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
    let hi = d.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = d.iter().copied().fold(f64::INFINITY, f64::min);
    hi - lo
}

/// Integrates unilateral differences along coordinate paths from the
/// all-ones profile; the game is potential iff the result satisfies every
/// unilateral identity.
pub fn path_potential(cards: &[usize], payoff: impl Fn(usize, &[usize]) -> f64) -> Option<Vec<f64>> {
    let space = ProfileSpace::new(cards.to_vec()).unwrap();
    let n = cards.len();
    let p: Vec<f64> = space
        .iter()
        .map(|a| {
            let mut cur = vec![1; n];
            let mut acc = 0.0;
            for i in 0..n {
                let mut next = cur.clone();
                next[i] = a[i];
                acc += payoff(i, &next) - payoff(i, &cur);
                cur = next;
            }
            acc
        })
        .collect();
    for a in space.iter() {
        let ka = space.index(&a).unwrap() - 1;
        for i in 0..n {
            for x in 1..=cards[i] {
                let mut b = a.clone();
                b[i] = x;
                let kb = space.index(&b).unwrap() - 1;
                let lhs = payoff(i, &b) - payoff(i, &a);
                let rhs = p[kb] - p[ka];
                if (lhs - rhs).abs() > 1e-9 * (1.0 + lhs.abs()) {
                    return None;
                }
            }
        }
    }
    Some(p)
}

pub fn normal_path_potential(g: &NormalGame) -> Option<Vec<f64>> {
    path_potential(g.cardinalities(), |i, a| g.payoff(i + 1, a).unwrap().to_f64())
}

/// Pure Nash equilibria by checking every unilateral deviation.
pub fn brute_nash(cards: &[usize], payoff: impl Fn(usize, &[usize]) -> f64) -> Vec<Vec<usize>> {
    let space = ProfileSpace::new(cards.to_vec()).unwrap();
    space
        .iter()
        .filter(|a| {
            (0..cards.len()).all(|i| {
                let own = payoff(i, a);
                own.is_finite()
                    && (1..=cards[i]).all(|x| {
                        let mut b = a.clone();
                        b[i] = x;
                        payoff(i, &b) <= own
                    })
            })
        })
        .collect()
}

pub fn random_cards(rng: &mut impl Rng, n: usize, max: usize) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(1..=max)).collect()
}

pub fn random_row(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(-5..=5) as f64).collect()
}

pub fn random_game(rng: &mut impl Rng, cards: &[usize]) -> NormalGame {
    let k: usize = cards.iter().product();
    let rows = (0..cards.len()).map(|_| random_row(rng, k)).collect();
    NormalGame::from_finite(cards.to_vec(), rows).unwrap()
}

/// `V_i = P + h_i(a_{-i})` with random `P` and `h_i`.
pub fn random_potential_game(rng: &mut impl Rng, cards: &[usize]) -> (NormalGame, Vec<f64>) {
    let space = ProfileSpace::new(cards.to_vec()).unwrap();
    let p = random_row(rng, space.total());
    let rows = (0..cards.len())
        .map(|i| {
            let mut others = cards.to_vec();
            others[i] = 1;
            let h_space = ProfileSpace::new(others).unwrap();
            let h = random_row(rng, h_space.total());
            space
                .iter()
                .enumerate()
                .map(|(k, a)| {
                    let mut b = a.clone();
                    b[i] = 1;
                    p[k] + h[h_space.index(&b).unwrap() - 1]
                })
                .collect()
        })
        .collect();
    (NormalGame::from_finite(cards.to_vec(), rows).unwrap(), p)
}

pub fn random_prior(rng: &mut impl Rng, len: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..len).map(|_| rng.random_range(1..=9) as f64).collect();
    let s: f64 = w.iter().sum();
    w.into_iter().map(|x| x / s).collect()
}

/// A fully admissible Bayesian game with integer payoffs and a positive prior.
pub fn random_bayesian(rng: &mut impl Rng, types: &[usize], actions: &[usize]) -> BayesianGame {
    let tau: usize = types.iter().product();
    let r: usize = actions.iter().product();
    let rows = (0..types.len()).map(|_| random_row(rng, tau * r)).collect();
    BayesianGame::fully_admissible(types.to_vec(), actions.to_vec(), rows, random_prior(rng, tau)).unwrap()
}

/// `Pr(t_{-i} | t_i = j)` by direct enumeration, ordered lexicographically in `t_{-i}`.
pub fn belief_oracle(types: &[usize], prior: &[f64], i: usize, j: usize) -> Vec<f64> {
    let space = ProfileSpace::new(types.to_vec()).unwrap();
    let picked: Vec<f64> = space
        .iter()
        .zip(prior)
        .filter(|(t, _)| t[i - 1] == j)
        .map(|(_, &p)| p)
        .collect();
    let s: f64 = picked.iter().sum();
    picked.into_iter().map(|p| p / s).collect()
}
