use crate::pwl::PwlError;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Pwl(#[from] PwlError),
    #[error("invalid game: {}", .0.join("; "))]
    InvalidGame(Vec<String>),
    #[error("unknown state {0:?}")]
    UnknownState(String),
    #[error("duplicate state id {0:?}")]
    DuplicateState(String),
    #[error("state {0:?} is urgent; event-point iteration has no waiting-free terminal option")]
    UrgentUnsupported(String),
    #[error("event-point iteration made no progress at t = {0}")]
    NoProgress(Rational),
    #[error("game has a cycle through {0:?}")]
    Cyclic(String),
    #[error("value iteration did not reach a fixpoint within {0} rounds")]
    NoFixpoint(usize),
    #[error("edge {0:?} has no reverse edge of equal cost")]
    Asymmetric(String),
    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),
    #[error("inconsistent value map: {0}")]
    InconsistentValues(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed its encoding check: {0}")]
    Construction(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
