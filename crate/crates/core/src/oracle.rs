//! Slow reference computations that share no code path with the main
//! algorithms: graph polynomials by subset expansion for maps, and direct
//! enumeration of spanning hyperforests.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::nc::refinements;
use crate::perm::{Hypermap, UnionFind};
use crate::poly::{Bivariate, Univariate};

/// An undirected multigraph on `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Subset expansion is exponential in the edge count; this bounds it.
pub const MAX_SUBSET_EDGES: usize = 22;

impl Graph {
    /// The graph of a map: vertices are cycles of `σ`, edges are the 2-cycles
    /// of `α`. Buds contribute nothing.
    pub fn of_map(h: &Hypermap) -> Result<Graph> {
        let longest = h.max_hyperedge_len();
        if longest > 2 {
            return Err(Error::HyperedgeTooLong(longest));
        }
        let sigma_cycles = h.sigma().cycles();
        let mut vertex = vec![0; h.n()];
        for (k, c) in sigma_cycles.iter().enumerate() {
            for &p in c {
                vertex[p - 1] = k;
            }
        }
        let edges = h
            .alpha()
            .cycles()
            .into_iter()
            .filter(|c| c.len() == 2)
            .map(|c| (vertex[c[0] - 1], vertex[c[1] - 1]))
            .collect();
        Ok(Graph { vertices: sigma_cycles.len(), edges })
    }

    fn components(&self, subset: u32) -> usize {
        let mut uf = UnionFind::new(self.vertices);
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if subset >> k & 1 == 1 {
                uf.union(a, b);
            }
        }
        uf.set_count()
    }

    fn subsets(&self) -> Result<impl Iterator<Item = (u32, i64, i64)> + '_> {
        let e = self.edges.len();
        if e > MAX_SUBSET_EDGES {
            return Err(Error::TooLarge { what: "edges for subset expansion", size: e.to_string(), cap: MAX_SUBSET_EDGES.to_string() });
        }
        Ok((0u32..1 << e).map(move |s| (s, s.count_ones() as i64, self.components(s) as i64)))
    }

    /// `Σ_{A ⊆ E} u^(k(A) - k(E)) v^(|A| - |V| + k(A))`.
    pub fn whitney_rank(&self) -> Result<Bivariate> {
        let all = self.components(u32::MAX) as i64;
        let v = self.vertices as i64;
        let mut p = Bivariate::zero();
        for (_, size, k) in self.subsets()? {
            p.add_term(k - all, size - v + k, BigInt::from(1));
        }
        Ok(p)
    }

    /// `P(G; t) = Σ_{A ⊆ E} (-1)^|A| t^k(A)`.
    pub fn chromatic(&self) -> Result<Univariate> {
        let mut p = Univariate::zero();
        for (_, size, k) in self.subsets()? {
            p.add_term(k, BigInt::from(if size % 2 == 0 { 1 } else { -1 }));
        }
        Ok(p)
    }

    /// `F(G; t) = Σ_{A ⊆ E} (-1)^(|E| - |A|) t^(|A| - |V| + k(A))`.
    pub fn flow(&self) -> Result<Univariate> {
        let e = self.edges.len() as i64;
        let v = self.vertices as i64;
        let mut p = Univariate::zero();
        for (_, size, k) in self.subsets()? {
            p.add_term(size - v + k, BigInt::from(if (e - size) % 2 == 0 { 1 } else { -1 }));
        }
        Ok(p)
    }
}

/// Counts of refinements `β ≤ α` by their spanning structure, found by
/// computing the genus and face count of each `(σ, β)` directly.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SpanningCounts {
    /// `(σ, β)` has the components of `(σ, α)`.
    pub spanning: u64,
    /// Spanning, genus zero, and one face per component.
    pub hyperforests: u64,
}

pub fn spanning_counts(h: &Hypermap) -> SpanningCounts {
    let mut out = SpanningCounts::default();
    for beta in refinements(h.alpha()) {
        let sub = Hypermap::new(h.sigma().clone(), beta).expect("same ground set");
        if sub.kappa() != h.kappa() {
            continue;
        }
        out.spanning += 1;
        if sub.genus() == 0 && sub.face_count() == sub.kappa() {
            out.hyperforests += 1;
        }
    }
    out
}
