//! JSON game files.
//!
//! ```json
//! {
//!   "order": "lex-tma",
//!   "players": 2,
//!   "types": [2, 2],
//!   "actions": [2, 2],
//!   "admissible": [[[1, 2], [1, 2]], [[1, 2], [1, 2]]],
//!   "prior": [0.1, 0.3, 0.4, 0.2],
//!   "payoffs": [[...16 entries...], [...]]
//! }
//! ```
//!
//! Payoff rows are type-major, action-minor, player 1 most significant;
//! `null` marks an inadmissible cell. All indices are 1-based.

use serde::{Deserialize, Serialize};

use crate::bayesian::BayesianGame;
use crate::error::{Error, Result};
use crate::ext::ExtReal;
use crate::stp::ProfileSpace;

/// The only accepted entry order.
pub const ORDER: &str = "lex-tma";
/// Allowed deviation of the prior's sum from one.
pub const DOCUMENT_PRIOR_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    pub order: String,
    pub players: usize,
    pub types: Vec<usize>,
    pub actions: Vec<usize>,
    pub admissible: Vec<Vec<Vec<usize>>>,
    pub prior: Vec<f64>,
    pub payoffs: Vec<Vec<Option<f64>>>,
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Validation {
        field: field.into(),
        message: message.into(),
    }
}

impl GameDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_game(g: &BayesianGame) -> Self {
        GameDocument {
            order: ORDER.to_string(),
            players: g.players(),
            types: g.type_cards().to_vec(),
            actions: g.action_cards().to_vec(),
            admissible: g.admissible_sets().to_vec(),
            prior: g.prior().to_vec(),
            payoffs: g
                .payoff_vectors()
                .iter()
                .map(|row| row.iter().map(|v| v.value()).collect())
                .collect(),
        }
    }

    /// Checks shapes, prior and the `null` pattern; every error names its field and coordinate.
    pub fn validate(&self) -> Result<()> {
        if self.order != ORDER {
            return Err(invalid("order", format!("expected \"{ORDER}\", found \"{}\"", self.order)));
        }
        let n = self.players;
        if n == 0 {
            return Err(invalid("players", "must be at least 1"));
        }
        for (field, list) in [("types", &self.types), ("actions", &self.actions)] {
            if list.len() != n {
                return Err(invalid(field, format!("{} entries for {n} players", list.len())));
            }
            if let Some(i) = list.iter().position(|&k| k == 0) {
                return Err(invalid(format!("{field}[{}]", i + 1), "must be at least 1"));
            }
        }
        if self.admissible.len() != n {
            return Err(invalid("admissible", format!("{} entries for {n} players", self.admissible.len())));
        }
        for (i, per_type) in self.admissible.iter().enumerate() {
            if per_type.len() != self.types[i] {
                return Err(invalid(
                    format!("admissible[{}]", i + 1),
                    format!("{} sets for {} types", per_type.len(), self.types[i]),
                ));
            }
            for (j, set) in per_type.iter().enumerate() {
                let at = format!("admissible[{}][{}]", i + 1, j + 1);
                if set.is_empty() {
                    return Err(invalid(at, "empty admissible set"));
                }
                if let Some(&a) = set.iter().find(|&&a| a == 0 || a > self.actions[i]) {
                    return Err(invalid(at, format!("action {a} outside 1..={}", self.actions[i])));
                }
            }
        }
        let tau: usize = self.types.iter().product();
        if self.prior.len() != tau {
            return Err(invalid("prior", format!("{} entries for {tau} type profiles", self.prior.len())));
        }
        if let Some(k) = self.prior.iter().position(|p| !p.is_finite() || *p < 0.0) {
            return Err(invalid(format!("prior[{}]", k + 1), format!("{} is not a probability", self.prior[k])));
        }
        let sum: f64 = self.prior.iter().sum();
        if (sum - 1.0).abs() > DOCUMENT_PRIOR_TOL {
            return Err(invalid("prior", format!("entries sum to {sum}, expected 1")));
        }
        if self.payoffs.len() != n {
            return Err(invalid("payoffs", format!("{} rows for {n} players", self.payoffs.len())));
        }
        let types = ProfileSpace::new(self.types.clone())?;
        let actions = ProfileSpace::new(self.actions.clone())?;
        let len = types.total() * actions.total();
        for (i, row) in self.payoffs.iter().enumerate() {
            if row.len() != len {
                return Err(invalid(
                    format!("payoffs[{}]", i + 1),
                    format!("{} entries, expected {len}", row.len()),
                ));
            }
            for (k, v) in row.iter().enumerate() {
                let t = types.unindex(k / actions.total() + 1)?;
                let a = actions.unindex(k % actions.total() + 1)?;
                let ok = (0..n).all(|j| self.admissible[j][t[j] - 1].contains(&a[j]));
                let at = format!("payoffs[{}][{}] (t={t:?}, a={a:?})", i + 1, k + 1);
                match (v, ok) {
                    (None, true) => return Err(invalid(at, "null at an admissible cell")),
                    (Some(x), false) => return Err(invalid(at, format!("{x} at an inadmissible cell"))),
                    (Some(x), true) if !x.is_finite() => return Err(invalid(at, "payoff must be finite")),
                    _ => {}
                }
            }
        }
        Ok(())
    }

    pub fn to_game(&self) -> Result<BayesianGame> {
        self.validate()?;
        let sum: f64 = self.prior.iter().sum();
        let prior = if (sum - 1.0).abs() > crate::bayesian::PRIOR_TOL {
            self.prior.iter().map(|p| p / sum).collect()
        } else {
            self.prior.clone()
        };
        BayesianGame::new(
            self.types.clone(),
            self.actions.clone(),
            self.admissible.clone(),
            self.payoffs
                .iter()
                .map(|row| row.iter().map(|&v| ExtReal::from(v)).collect())
                .collect(),
            prior,
        )
    }
}

/// Parses and validates a game file.
pub fn parse_game(text: &str) -> Result<BayesianGame> {
    GameDocument::from_json(text)?.to_game()
}

pub fn serialize_game(g: &BayesianGame) -> String {
    GameDocument::from_game(g).to_json()
}
