//! Whitney polynomials of hypermaps and the polynomials derived from them.
//!
//! A hypermap on the points `1..=n` is a pair of permutations `(σ, α)`: the
//! cycles of `σ` are vertices, the cycles of `α` are hyperedges and the cycles of
//! `α⁻¹σ` are faces. Collections need not be connected.

pub mod charflow;
pub mod corpus;
pub mod error;
pub mod format;
pub mod medial;
pub mod nc;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod verify;
pub mod whitney;

pub use error::{Error, Result};
pub use perm::{canonical_form, orbit_count_of, CanonicalKey, Hypermap, Permutation, UnionFind};
pub use poly::{Bivariate, Univariate};
pub use whitney::{whitney, Method, WhitneyResult};
