//! Matrix (semi-tensor-product) toolkit for finite static and dynamic
//! Bayesian games.
//!
//! Every vectorized object uses one ordering: profiles are mixed-radix with
//! player 1 most significant, and Bayesian payoff vectors are indexed by
//! `(t, a)` with the type profile `t` as the major coordinate.

pub mod bayes_potential;
pub mod bayesian;
pub mod conversions;
pub mod document;
pub mod dynamics;
pub mod error;
pub mod ext;
pub mod normal;
pub mod potential;
pub mod stp;

pub use bayes_potential::{BayesPotentialReport, PotentialNotion};
pub use bayesian::{BayesianGame, BeliefMatrix, TypeStrategy};
pub use conversions::{AtProfile, ConversionKind, ConvertedGame};
pub use document::GameDocument;
pub use dynamics::{
    Conversion, Dynamics, Schedule, StationaryResult, SurConfig, TieBreak, TransitionMatrix,
    UpdateRule,
};
pub use error::{Error, Result};
pub use ext::ExtReal;
pub use normal::NormalGame;
pub use potential::{PotentialResult, PotentialSystem};
pub use stp::{LogicalMatrix, LogicalVector, ProfileSpace, RealMatrix};
