//! Deterministic inputs shared by the benchmarks under `benches/`.

use bayes_stp::{BayesianGame, NormalGame, RealMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform values in `[-1, 1)` from a seeded generator, stable across runs.
pub fn values(len: usize, salt: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(salt);
    (0..len).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn matrix(rows: usize, cols: usize, salt: u64) -> RealMatrix {
    RealMatrix::new(rows, cols, values(rows * cols, salt)).expect("finite entries")
}

/// An exact potential game: common payoff plus a term free of the player's own action.
pub fn potential_game(cards: &[usize]) -> NormalGame {
    let space = bayes_stp::ProfileSpace::new(cards.to_vec()).expect("positive");
    let common = values(space.total(), 1);
    let rows = (0..cards.len())
        .map(|i| {
            let h = values(space.total(), 10 + i as u64);
            space
                .iter()
                .enumerate()
                .map(|(k, mut a)| {
                    a[i] = 1;
                    common[k] + h[space.index(&a).expect("valid") - 1]
                })
                .collect()
        })
        .collect();
    NormalGame::from_finite(cards.to_vec(), rows).expect("consistent shapes")
}

pub fn bayesian_game(types: &[usize], actions: &[usize]) -> BayesianGame {
    let tau: usize = types.iter().product();
    let r: usize = actions.iter().product();
    let rows = (0..types.len()).map(|i| values(tau * r, 100 + i as u64)).collect();
    let prior: Vec<f64> = values(tau, 7).iter().map(|x| x + 1.5).collect();
    let z: f64 = prior.iter().sum();
    let prior = prior.iter().map(|p| p / z).collect();
    BayesianGame::fully_admissible(types.to_vec(), actions.to_vec(), rows, prior).expect("valid game")
}
