//! Exact solvers and hardness-construction compilers for simple priced timed
//! games (SPTGs).

pub mod assignment;
pub mod error;
pub mod formula;
pub mod io;
pub mod game;
pub mod priced;
pub mod pwl;
pub mod rational;
pub mod reduce;
pub mod solve;
pub mod strategy;
pub mod values;

pub use assignment::Assignment;
pub use error::{Error, Result};
pub use game::{Edge, EdgeId, Game, Owner, State, StateId};
pub use priced::{solve_priced, PricedSolver, LexPair, PricedChoice, PricedSolution};
pub use pwl::{envelope, envelope_tagged, PwlError, PwlFunction, Segment, Side};
pub use rational::{q, ExtendedValue, Rational};
pub use solve::{
    decide, event_point_iteration, extract_optimal_strategies, infinite_states, solve_dag_streaming,
    solve_undirected, value_at, value_iteration, value_iteration_fixpoint,
};
pub use strategy::{play, play_outcome, Choice, Play, PlayEnd, Player, Strategy};
pub use values::ValueMap;
