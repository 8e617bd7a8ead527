mod common;

use bayes_stp::document::{parse_game, serialize_game};
use bayes_stp::potential::{solve_potential, verify_potential, verify_weighted_potential};
use bayes_stp::{BayesianGame, ExtReal, NormalGame, ProfileSpace};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random game where some cells are `-inf`.
fn sparse_game(rng: &mut ChaCha8Rng, cards: &[usize]) -> NormalGame {
    let k: usize = cards.iter().product();
    let rows = (0..cards.len())
        .map(|_| {
            (0..k)
                .map(|_| {
                    if rng.random_bool(0.2) {
                        ExtReal::NEG_INF
                    } else {
                        ExtReal::new(rng.random_range(-4..=4) as f64)
                    }
                })
                .collect()
        })
        .collect();
    NormalGame::new(cards.to_vec(), rows).unwrap()
}

fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

proptest! {
    #[test]
    fn pure_nash_matches_deviation_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=3);
        let cards = random_cards(&mut rng, n, 4);
        let g = sparse_game(&mut rng, &cards);
        let oracle = brute_nash(&cards, |i, a| g.payoff(i + 1, a).unwrap().to_f64());
        prop_assert_eq!(sorted(g.pure_nash()), sorted(oracle));
    }

    #[test]
    fn common_shift_keeps_equivalent_form(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=3);
        let cards = random_cards(&mut rng, n, 3);
        let g = random_game(&mut rng, &cards);
        let v = random_row(&mut rng, g.space().total());
        let w = g.equivalent_vector_form().unwrap();
        prop_assert_eq!(w, g.shifted(&v).unwrap().equivalent_vector_form().unwrap());
    }

    #[test]
    fn own_action_free_shifts_keep_equilibria(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=3);
        let cards = random_cards(&mut rng, n, 3);
        let g = random_game(&mut rng, &cards);
        let space = g.space().clone();
        let rows = (1..=n)
            .map(|i| {
                let h = random_row(&mut rng, space.total());
                space
                    .iter()
                    .map(|a| {
                        let mut b = a.clone();
                        b[i - 1] = 1;
                        g.payoff(i, &a).unwrap().to_f64() + h[space.index(&b).unwrap() - 1]
                    })
                    .collect()
            })
            .collect();
        let h = NormalGame::from_finite(cards, rows).unwrap();
        prop_assert_eq!(sorted(g.pure_nash()), sorted(h.pure_nash()));
    }

    #[test]
    fn best_responses_avoid_neg_inf(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cards = random_cards(&mut rng, 2, 4);
        let g = sparse_game(&mut rng, &cards);
        for i in 1..=2 {
            for o in 1..=cards[2 - i] {
                let br = g.best_responses(i, &[o]).unwrap();
                let feasible = (1..=cards[i - 1]).any(|x| {
                    let a = if i == 1 { vec![x, o] } else { vec![o, x] };
                    g.payoff(i, &a).unwrap().is_finite()
                });
                prop_assert_eq!(br.is_empty(), !feasible);
                for x in br {
                    let a = if i == 1 { vec![x, o] } else { vec![o, x] };
                    prop_assert!(g.payoff(i, &a).unwrap().is_finite());
                }
            }
        }
    }

    #[test]
    fn solver_agrees_with_path_oracle(seed in any::<u64>(), planted in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=3);
        let cards = random_cards(&mut rng, n, 3);
        let g = if planted { random_potential_game(&mut rng, &cards).0 } else { random_game(&mut rng, &cards) };
        let res = solve_potential(&g).unwrap();
        let oracle = normal_path_potential(&g);
        prop_assert_eq!(res.is_potential, oracle.is_some());
        if let Some(p) = res.potential_vector {
            prop_assert!(verify_potential(&g, &p).unwrap());
            prop_assert!(constancy_gap(&p, &oracle.unwrap()) <= 1e-8);
        }
    }

    #[test]
    fn potential_unique_up_to_constant_and_maximizers_are_nash(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=3);
        let cards = random_cards(&mut rng, n, 3);
        let (g, planted) = random_potential_game(&mut rng, &cards);
        let p = solve_potential(&g).unwrap().potential_vector.unwrap();
        prop_assert!(constancy_gap(&p, &planted) <= 1e-8);
        let nash = g.pure_nash();
        prop_assert!(!nash.is_empty());
        let top = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        for (k, a) in g.space().iter().enumerate() {
            if p[k] >= top - 1e-9 {
                prop_assert!(nash.contains(&a));
            }
        }
    }

    #[test]
    fn potential_games_are_closed_under_sums(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(2..=3);
        let cards = random_cards(&mut rng, n, 3);
        let (g1, p1) = random_potential_game(&mut rng, &cards);
        let (g2, p2) = random_potential_game(&mut rng, &cards);
        let rows = (1..=n)
            .map(|i| {
                g1.payoff_vector(i).iter().zip(g2.payoff_vector(i)).map(|(a, b)| *a + *b).collect()
            })
            .collect();
        let sum = NormalGame::new(cards, rows).unwrap();
        let p = solve_potential(&sum).unwrap().potential_vector.unwrap();
        let planted: Vec<f64> = p1.iter().zip(&p2).map(|(a, b)| a + b).collect();
        prop_assert!(constancy_gap(&p, &planted) <= 1e-8);
    }

    #[test]
    fn weighted_potential_scales(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cards = random_cards(&mut rng, 2, 3);
        let (g, p) = random_potential_game(&mut rng, &cards);
        let w = [rng.random_range(1..=4) as f64, rng.random_range(1..=4) as f64];
        let rows = (1..=2)
            .map(|i| g.payoff_vector(i).iter().map(|x| x.to_f64() * w[i - 1]).collect())
            .collect();
        let scaled = NormalGame::from_finite(cards, rows).unwrap();
        prop_assert!(verify_weighted_potential(&scaled, &p, &w).unwrap());
    }

    #[test]
    fn game_files_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.random_range(1..=3);
        let types = random_cards(&mut rng, n, 2);
        let actions = random_cards(&mut rng, n, 3);
        let admissible: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|i| {
                (0..types[i])
                    .map(|_| {
                        let set: Vec<usize> = (1..=actions[i]).filter(|_| rng.random_bool(0.7)).collect();
                        if set.is_empty() { vec![1] } else { set }
                    })
                    .collect()
            })
            .collect();
        let tspace = ProfileSpace::new(types.clone()).unwrap();
        let aspace = ProfileSpace::new(actions.clone()).unwrap();
        let rows = (0..n)
            .map(|_| {
                tspace
                    .iter()
                    .flat_map(|t| aspace.iter().map(move |a| (t.clone(), a)))
                    .map(|(t, a)| {
                        if (0..n).all(|j| admissible[j][t[j] - 1].contains(&a[j])) {
                            ExtReal::new(rng.random_range(-1e3..1e3))
                        } else {
                            ExtReal::NEG_INF
                        }
                    })
                    .collect()
            })
            .collect();
        let g = BayesianGame::new(types, actions, admissible, rows, random_prior(&mut rng, tspace.total())).unwrap();
        let back = parse_game(&serialize_game(&g)).unwrap();
        prop_assert_eq!(back, g);
    }
}
