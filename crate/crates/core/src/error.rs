use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("expected {expected} smoothing choices, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("site {0} is not an A-smoothing in this state")]
    NotASite(usize),

    #[error("input too large: {what} requires {required}, cap is {cap}")]
    TooLarge {
        what: &'static str,
        required: u128,
        cap: u128,
    },

    #[error("odd exponent {exponent} of `{var}` in square substitution")]
    MalformedParity { var: String, exponent: i64 },

    #[error("variable `{0}` assigned zero but occurs with a negative exponent")]
    PoleAtZero(String),

    #[error("variable `{0}` has no assigned value")]
    Unassigned(String),

    #[error("negative power {0} of a polynomial")]
    NegativePower(i64),

    #[error("replacement for `{0}` is not a unit monomial and cannot be inverted")]
    NotInvertible(String),

    #[error("rotation system is not a genus-0 embedding: {0}")]
    NotPlanar(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
