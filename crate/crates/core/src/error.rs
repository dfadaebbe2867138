use thiserror::Error;

/// Errors raised by the library. Invariant violations that can only come from
/// a bug are asserted instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} points vs {right} points")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("point {point} out of range 1..={n}")]
    PointOutOfRange { point: usize, n: usize },

    #[error("{0} is not a cycle of alpha")]
    NotACycle(String),

    #[error("cycle of length {0} is too short, need at least 2")]
    CycleTooShort(usize),

    #[error("branch index {k} out of range 1..={m}")]
    BranchOutOfRange { k: usize, m: usize },

    #[error("{beta} is not a refinement of {alpha}")]
    NotARefinement { beta: String, alpha: String },

    #[error("points {0} and {1} lie in the same connected component")]
    SameComponent(usize, usize),

    #[error("operation requires genus 0, collection has genus {0}")]
    NonzeroGenus(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("hyperedge of length {0} exceeds 3")]
    HyperedgeTooLong(usize),

    #[error("assignment is not a flow: {0}")]
    NotAFlow(String),

    #[error("digraph is not Eulerian at vertex {vertex}: in-degree {indeg}, out-degree {outdeg}")]
    NotEulerian { vertex: i64, indeg: usize, outdeg: usize },

    #[error("invalid Eulerian map: {0}")]
    InvalidEulerianMap(String),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("instance too large: {what} = {size} exceeds cap {cap}")]
    TooLarge { what: &'static str, size: String, cap: String },

    #[error("evaluation {0} is not an integer")]
    NonIntegral(String),

    #[error("cannot raise zero to a negative power")]
    ZeroToNegativePower,

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
