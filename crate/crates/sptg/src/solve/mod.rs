//! Value computation: value iteration, event-point iteration and the
//! special-case solvers built on them.

mod encoding;
mod epi;
mod query;
mod strategies;
mod undirected;
mod vi;

pub use encoding::{
    encoding_check, encoding_violation, witnessed_at_midpoints, EncodingKind, EncodingParams, EncodingViolation,
};
pub use epi::{event_point_iteration, event_point_trace, EventPoints, Step, Trace};
pub use query::{decide, infinite_states, solve_dag_streaming, value_at};
pub use strategies::extract_optimal_strategies;
pub use undirected::{check_symmetric, solve_undirected};
pub use vi::{state_envelope, value_iteration, value_iteration_fixpoint, Candidate};
