//! Strategy-updating dynamics on converted games and Markov-chain analysis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bayesian::BayesianGame;
use crate::conversions::{at_convert, selten_convert, ConvertedGame};
use crate::error::{check_index, Error, Result};
use crate::ext::ExtReal;
use crate::stp::{khatri_rao, kron_chain, LogicalMatrix, LogicalVector, ProfileSpace, RealMatrix};

/// Column sums must be within this of one.
pub const STOCHASTIC_TOL: f64 = 1e-12;
/// L1 change at which power iteration stops.
pub const STATIONARY_TOL: f64 = 1e-10;
pub const STATIONARY_MAX_ITERS: usize = 1_000_000;

/// Which converted game drives the dynamics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conversion {
    /// Selten game at a realized type profile (1-based).
    Selten(Vec<usize>),
    /// Action-Type game; each player picks `(t_i, a_i)` in one move.
    ActionTypeConcurrent,
    /// Action-Type game; each player revises action and type as two moves.
    ActionTypeSeparate,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum UpdateRule {
    /// Myopic best response.
    Mbra,
    /// Logit response with inverse temperature `λ ≥ 0`.
    Logit(f64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Schedule {
    /// Everybody revises at once.
    Synchronous,
    /// Players revise one at a time in the given 1-based order.
    AsyncRoundRobin(Vec<usize>),
    /// A uniformly drawn mover revises at each step.
    AsyncUniform,
}

/// How MBRA resolves ties among best replies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    LowestIndex,
    /// Uniform over the argmax set; randomness enters only when sampling.
    Uniform,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurConfig {
    pub conversion: Conversion,
    pub rule: UpdateRule,
    pub schedule: Schedule,
    pub tie_break: TieBreak,
}

/// A column-stochastic matrix: column `j` is the law of the next state given `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransitionMatrix {
    matrix: RealMatrix,
}

impl TransitionMatrix {
    pub fn new(matrix: RealMatrix) -> Result<Self> {
        for c in 0..matrix.cols() {
            let col = matrix.column(c);
            if col.iter().any(|&x| x < 0.0) {
                return Err(Error::Invalid(format!("column {} has a negative entry", c + 1)));
            }
            let s: f64 = col.iter().sum();
            if (s - 1.0).abs() > STOCHASTIC_TOL {
                return Err(Error::Invalid(format!("column {} sums to {s}", c + 1)));
            }
        }
        Ok(TransitionMatrix { matrix })
    }

    pub fn from_logical(m: &LogicalMatrix) -> Self {
        TransitionMatrix { matrix: m.to_real() }
    }

    /// The logical form, when every column is a unit vector.
    pub fn to_logical(&self) -> Option<LogicalMatrix> {
        LogicalMatrix::from_real(&self.matrix)
    }

    pub fn is_logical(&self) -> bool {
        self.to_logical().is_some()
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.matrix
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// `M·x` for a distribution `x`.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        let col = RealMatrix::column_vector(x)?;
        Ok(self.matrix.matmul(&col)?.into_vec())
    }

    /// `next · self`: first `self`, then `next`.
    pub fn then(&self, next: &TransitionMatrix) -> Result<TransitionMatrix> {
        Ok(TransitionMatrix {
            matrix: next.matrix.matmul(&self.matrix)?,
        })
    }
}

/// Result of power iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct StationaryResult {
    pub distribution: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub irreducible: bool,
    pub warnings: Vec<String>,
}

/// One revision opportunity: a player and the state coordinates it resets.
#[derive(Clone, Debug)]
struct Mover {
    player: usize,
    coords: Vec<usize>,
}

/// The updating maps of one configuration.
#[derive(Clone, Debug)]
pub struct Dynamics {
    /// State space: action profiles (Selten) or `(t_1..t_n, a_1..a_n)` (Action-Type).
    pub space: ProfileSpace,
    /// Per-mover maps from the current state to the mover's new coordinates.
    pub player_maps: Vec<TransitionMatrix>,
    /// State-to-state matrices applied cyclically, one per time step.
    pub steps: Vec<TransitionMatrix>,
}

impl Dynamics {
    /// The map over one full cycle of `steps`.
    pub fn period_map(&self) -> TransitionMatrix {
        let mut it = self.steps.iter();
        let first = it.next().expect("at least one step").clone();
        it.fold(first, |acc, m| acc.then(m).expect("square steps"))
    }
}

type PayoffFn<'a> = Box<dyn Fn(usize, &[usize]) -> ExtReal + 'a>;

struct Setup<'a> {
    space: ProfileSpace,
    movers: Vec<Mover>,
    payoff: PayoffFn<'a>,
}

impl Setup<'_> {
    fn local_space(&self, m: &Mover) -> ProfileSpace {
        let cards = self.space.cardinalities();
        ProfileSpace::new(m.coords.iter().map(|&c| cards[c]).collect()).expect("positive")
    }

    /// Law of the mover's new coordinates at a state.
    fn mover_law(&self, m: &Mover, state: &[usize], rule: UpdateRule, tie: TieBreak) -> Result<Vec<f64>> {
        let local = self.local_space(m);
        let values: Vec<ExtReal> = local
            .iter()
            .map(|y| {
                let mut s = state.to_vec();
                for (&c, &v) in m.coords.iter().zip(&y) {
                    s[c] = v;
                }
                (self.payoff)(m.player, &s)
            })
            .collect();
        let best = values.iter().copied().max().unwrap_or(ExtReal::NEG_INF);
        if best.is_neg_inf() {
            return Err(Error::InfeasibleUpdate {
                player: m.player + 1,
                state: self.space.index(state).expect("valid"),
            });
        }
        let mut law = vec![0.0; values.len()];
        match rule {
            UpdateRule::Mbra => {
                let arg: Vec<usize> = (0..values.len()).filter(|&k| values[k].ties(best)).collect();
                match tie {
                    TieBreak::LowestIndex => law[arg[0]] = 1.0,
                    TieBreak::Uniform => {
                        for &k in &arg {
                            law[k] = 1.0 / arg.len() as f64;
                        }
                    }
                }
            }
            UpdateRule::Logit(lambda) => {
                let top = best.to_f64();
                for (w, v) in law.iter_mut().zip(&values) {
                    if let Some(x) = v.value() {
                        *w = (lambda * (x - top)).exp();
                    }
                }
                let z: f64 = law.iter().sum();
                law.iter_mut().for_each(|w| *w /= z);
            }
        }
        Ok(law)
    }

    fn player_map(&self, m: &Mover, rule: UpdateRule, tie: TieBreak) -> Result<TransitionMatrix> {
        let local = self.local_space(m);
        let mut mat = RealMatrix::zeros(local.total(), self.space.total());
        for (c, s) in self.space.iter().enumerate() {
            for (r, p) in self.mover_law(m, &s, rule, tie)?.into_iter().enumerate() {
                mat.set(r, c, p);
            }
        }
        Ok(TransitionMatrix { matrix: mat })
    }

    /// State-to-state matrix when only `m` revises.
    fn step_matrix(&self, m: &Mover, map: &TransitionMatrix) -> TransitionMatrix {
        let local = self.local_space(m);
        let kappa = self.space.total();
        let mut mat = RealMatrix::zeros(kappa, kappa);
        for (c, s) in self.space.iter().enumerate() {
            for (r, y) in local.iter().enumerate() {
                let p = map.matrix.get(r, c);
                if p == 0.0 {
                    continue;
                }
                let mut next = s.clone();
                for (&k, &v) in m.coords.iter().zip(&y) {
                    next[k] = v;
                }
                let j = self.space.index(&next).expect("valid") - 1;
                mat.set(j, c, mat.get(j, c) + p);
            }
        }
        TransitionMatrix { matrix: mat }
    }

    /// `P · (M_1 * M_2 * …)`, with `P` reordering mover coordinates into state order.
    fn synchronous(&self, maps: &[TransitionMatrix]) -> Result<TransitionMatrix> {
        let mut kr = maps[0].matrix.clone();
        for m in &maps[1..] {
            kr = khatri_rao(&kr, &m.matrix)?;
        }
        let locals: Vec<ProfileSpace> = self.movers.iter().map(|m| self.local_space(m)).collect();
        let joint = ProfileSpace::new(locals.iter().map(ProfileSpace::total).collect())?;
        let mut indices = Vec::with_capacity(joint.total());
        for combo in joint.iter() {
            let mut state = vec![0; self.space.len()];
            for ((m, l), &k) in self.movers.iter().zip(&locals).zip(&combo) {
                let y = l.unindex(k)?;
                for (&c, &v) in m.coords.iter().zip(&y) {
                    state[c] = v;
                }
            }
            indices.push(self.space.index(&state)?);
        }
        let perm = LogicalMatrix::new(self.space.total(), indices)?.to_real();
        Ok(TransitionMatrix {
            matrix: perm.matmul(&kr)?,
        })
    }
}

fn selten_setup(cg: &ConvertedGame) -> Result<Setup<'_>> {
    let ConvertedGame::Selten { game, .. } = cg else {
        return Err(Error::NotApplicable("expected a Selten game".into()));
    };
    let space = game.space().clone();
    let movers = (0..game.players())
        .map(|i| Mover { player: i, coords: vec![i] })
        .collect();
    Ok(Setup {
        space,
        movers,
        payoff: Box::new(move |i, s| game.payoff_at(i + 1, game.space().index(s).expect("valid"))),
    })
}

fn at_setup(cg: &ConvertedGame, separate: bool) -> Result<Setup<'_>> {
    let ConvertedGame::ActionType {
        type_cards,
        action_cards,
        rows,
    } = cg
    else {
        return Err(Error::NotApplicable("expected an Action-Type game".into()));
    };
    let n = rows.len();
    let space = ProfileSpace::new([type_cards.clone(), action_cards.clone()].concat())?;
    let actions = ProfileSpace::new(action_cards.clone())?;
    let r = actions.total();
    let movers = (0..n)
        .flat_map(|i| {
            if separate {
                vec![
                    Mover { player: i, coords: vec![n + i] },
                    Mover { player: i, coords: vec![i] },
                ]
            } else {
                vec![Mover { player: i, coords: vec![i, n + i] }]
            }
        })
        .collect();
    Ok(Setup {
        space,
        movers,
        payoff: Box::new(move |i, s| {
            let ai = actions.index(&s[n..]).expect("valid");
            rows[i][(s[i] - 1) * r + ai - 1]
        }),
    })
}

fn build(cg: &ConvertedGame, cfg: &SurConfig) -> Result<Dynamics> {
    if let UpdateRule::Logit(l) = cfg.rule {
        if l < 0.0 || !l.is_finite() {
            return Err(Error::Invalid(format!("lambda must be finite and nonnegative, got {l}")));
        }
    }
    let setup = match (&cfg.conversion, cg) {
        (Conversion::Selten(t), ConvertedGame::Selten { type_profile, .. }) => {
            if t != type_profile {
                return Err(Error::Invalid("configured type profile differs from the game's".into()));
            }
            selten_setup(cg)?
        }
        (Conversion::ActionTypeConcurrent, ConvertedGame::ActionType { .. }) => at_setup(cg, false)?,
        (Conversion::ActionTypeSeparate, ConvertedGame::ActionType { .. }) => at_setup(cg, true)?,
        _ => {
            return Err(Error::NotApplicable(
                "conversion in the configuration does not match the game".into(),
            ))
        }
    };
    let maps = setup
        .movers
        .iter()
        .map(|m| setup.player_map(m, cfg.rule, cfg.tie_break))
        .collect::<Result<Vec<_>>>()?;
    let steps = match &cfg.schedule {
        Schedule::Synchronous => vec![setup.synchronous(&maps)?],
        Schedule::AsyncUniform => {
            let k = setup.movers.len() as f64;
            let kappa = setup.space.total();
            let sum = setup
                .movers
                .iter()
                .zip(&maps)
                .fold(RealMatrix::zeros(kappa, kappa), |acc, (m, map)| {
                    &acc + setup.step_matrix(m, map).matrix()
                });
            vec![TransitionMatrix { matrix: sum.scale(1.0 / k) }]
        }
        Schedule::AsyncRoundRobin(order) => {
            let n = cg.players();
            let mut seen = order.clone();
            seen.sort_unstable();
            if seen != (1..=n).collect::<Vec<_>>() {
                return Err(Error::Invalid(format!("{order:?} is not a permutation of 1..={n}")));
            }
            order
                .iter()
                .flat_map(|&p| {
                    setup
                        .movers
                        .iter()
                        .zip(&maps)
                        .filter(move |(m, _)| m.player == p - 1)
                })
                .map(|(m, map)| setup.step_matrix(m, map))
                .collect()
        }
    };
    Ok(Dynamics {
        space: setup.space.clone(),
        player_maps: maps,
        steps,
    })
}

/// Myopic-best-response dynamics of a converted game.
pub fn mbra_map(cg: &ConvertedGame, cfg: &SurConfig) -> Result<Dynamics> {
    if cfg.rule != UpdateRule::Mbra {
        return Err(Error::Invalid("mbra_map needs the MBRA rule".into()));
    }
    build(cg, cfg)
}

/// Logit-response dynamics of a converted game.
pub fn logit_matrix(cg: &ConvertedGame, cfg: &SurConfig) -> Result<Dynamics> {
    if !matches!(cfg.rule, UpdateRule::Logit(_)) {
        return Err(Error::Invalid("logit_matrix needs the logit rule".into()));
    }
    build(cg, cfg)
}

/// Converts `g` as configured and builds its dynamics.
pub fn dynamics(g: &BayesianGame, cfg: &SurConfig) -> Result<Dynamics> {
    let cg = match &cfg.conversion {
        Conversion::Selten(t) => selten_convert(g, t)?,
        Conversion::ActionTypeConcurrent | Conversion::ActionTypeSeparate => at_convert(g)?,
    };
    build(&cg, cfg)
}

/// Player `i`'s concurrent best-response map from `(t_i, a)` to its new `(t_i, a_i)`.
pub fn at_cmbra_player_map(cg: &ConvertedGame, i: usize, tie: TieBreak) -> Result<TransitionMatrix> {
    let ConvertedGame::ActionType {
        type_cards,
        action_cards,
        rows,
    } = cg
    else {
        return Err(Error::NotApplicable("expected an Action-Type game".into()));
    };
    check_index("player", i, rows.len())?;
    let space = ProfileSpace::new([vec![type_cards[i - 1]], action_cards.clone()].concat())?;
    let actions = ProfileSpace::new(action_cards.clone())?;
    let r = actions.total();
    let row = &rows[i - 1];
    let setup = Setup {
        space,
        movers: vec![Mover { player: i - 1, coords: vec![0, i] }],
        payoff: Box::new(move |_, s| row[(s[0] - 1) * r + actions.index(&s[1..]).expect("valid") - 1]),
    };
    setup.player_map(&setup.movers[0], UpdateRule::Mbra, tie)
}

fn sample(col: &[f64], rng: &mut ChaCha8Rng) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (k, &p) in col.iter().enumerate() {
        acc += p;
        if u < acc {
            return k;
        }
    }
    // rounding left a sliver above the last positive entry
    col.iter().rposition(|&p| p > 0.0).unwrap_or(0)
}

/// Draws the next state from column `state` of `m`.
pub fn step(state: LogicalVector, m: &TransitionMatrix, rng: &mut ChaCha8Rng) -> Result<LogicalVector> {
    if state.dim() != m.cols() {
        return Err(Error::DimensionMismatch(format!(
            "state of dim {} against {} columns",
            state.dim(),
            m.cols()
        )));
    }
    let col = m.matrix.column(state.index() - 1);
    LogicalVector::new(m.rows(), sample(&col, rng) + 1)
}

/// Trajectory of 1-based states, starting with `x0`, applying `maps` cyclically.
pub fn simulate(maps: &[TransitionMatrix], x0: usize, steps: usize, seed: u64) -> Result<Vec<usize>> {
    let first = maps.first().ok_or_else(|| Error::Invalid("no transition matrices".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut x = LogicalVector::new(first.cols(), x0)?;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(x0);
    for k in 0..steps {
        x = step(x, &maps[k % maps.len()], &mut rng)?;
        out.push(x.index());
    }
    Ok(out)
}

/// States `x` with `Mx = x` for a logical `M`.
pub fn fixed_points(m: &TransitionMatrix) -> Result<Vec<usize>> {
    let l = m
        .to_logical()
        .ok_or_else(|| Error::Invalid("fixed points need a logical matrix".into()))?;
    if l.rows() != l.cols() {
        return Err(Error::DimensionMismatch("fixed points need a square matrix".into()));
    }
    Ok(l.indices()
        .iter()
        .enumerate()
        .filter(|&(j, &i)| i == j + 1)
        .map(|(j, _)| j + 1)
        .collect())
}

fn reachable(m: &RealMatrix, start: usize, forward: bool) -> Vec<bool> {
    let mut seen = vec![false; m.rows()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(j) = stack.pop() {
        for (k, s) in seen.iter_mut().enumerate() {
            let w = if forward { m.get(k, j) } else { m.get(j, k) };
            if w > 0.0 && !*s {
                *s = true;
                stack.push(k);
            }
        }
    }
    seen
}

/// Power iteration from the uniform distribution.
pub fn stationary_distribution(m: &TransitionMatrix) -> Result<StationaryResult> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch("transition matrix must be square".into()));
    }
    let n = m.rows();
    let irreducible =
        reachable(&m.matrix, 0, true).iter().all(|&b| b) && reachable(&m.matrix, 0, false).iter().all(|&b| b);
    let mut warnings = Vec::new();
    if !irreducible {
        warnings.push("chain is reducible; the stationary distribution is not unique".into());
    }
    let mut mu = vec![1.0 / n as f64; n];
    let mut converged = false;
    let mut iterations = 0;
    while iterations < STATIONARY_MAX_ITERS {
        let next = m.apply(&mu)?;
        iterations += 1;
        let change: f64 = next.iter().zip(&mu).map(|(a, b)| (a - b).abs()).sum();
        mu = next;
        if change < STATIONARY_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        warnings.push(format!("power iteration did not converge in {iterations} iterations"));
    }
    Ok(StationaryResult {
        distribution: mu,
        iterations,
        converged,
        irreducible,
        warnings,
    })
}

/// `exp(λ q) / Σ exp(λ q)`.
pub fn gibbs_distribution(q_vec: &[f64], lambda: f64) -> Result<Vec<f64>> {
    if q_vec.is_empty() || q_vec.iter().any(|x| !x.is_finite()) {
        return Err(Error::Invalid("Gibbs distribution needs finite values".into()));
    }
    let top = q_vec.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = q_vec.iter().map(|&x| (lambda * (x - top)).exp()).collect();
    let z: f64 = w.iter().sum();
    Ok(w.into_iter().map(|x| x / z).collect())
}

/// `μ_a M(a'|a) = μ_{a'} M(a|a')` for all pairs, within `tol`.
pub fn detailed_balance_check(m: &TransitionMatrix, mu: &[f64], tol: f64) -> Result<bool> {
    if m.rows() != m.cols() || mu.len() != m.cols() {
        return Err(Error::DimensionMismatch("distribution does not match the chain".into()));
    }
    let p = &m.matrix;
    for a in 0..mu.len() {
        for b in a + 1..mu.len() {
            if (mu[a] * p.get(b, a) - mu[b] * p.get(a, b)).abs() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Player `i`'s marginal: `(1ᵀ_{α_i} ⊗ I_{k_i} ⊗ 1ᵀ_{β_i}) · dist`.
pub fn marginal(dist: &[f64], i: usize, space: &ProfileSpace) -> Result<Vec<f64>> {
    check_index("player", i, space.len())?;
    if dist.len() != space.total() {
        return Err(Error::DimensionMismatch(format!(
            "distribution has {} entries, space has {}",
            dist.len(),
            space.total()
        )));
    }
    let op = kron_chain(&[
        RealMatrix::ones_row(space.prefix(i - 1)),
        RealMatrix::identity(space.cardinalities()[i - 1]),
        RealMatrix::ones_row(space.suffix(i - 1)),
    ]);
    Ok(op.matmul(&RealMatrix::column_vector(dist)?)?.into_vec())
}
