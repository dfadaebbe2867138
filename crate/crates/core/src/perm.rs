//! Permutations on `1..=n` and collections of hypermaps.
//!
//! Composition follows the functional convention: `p.compose(&q)` maps `i` to
//! `p(q(i))`, so `q` acts first. With this convention the face permutation of
//! `(σ, α)` is `alpha.inverse().compose(&sigma)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on the points `1..=n`.
///
/// Stored zero-based; every public method speaks in one-based points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// Builds a permutation from its one-based image table.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut image = Vec::with_capacity(n);
        for &j in images {
            if j == 0 || j > n {
                return Err(Error::PointOutOfRange { point: j, n });
            }
            if std::mem::replace(&mut seen[j - 1], true) {
                return Err(Error::NotAPermutation(format!("point {j} is hit twice")));
            }
            image.push(j - 1);
        }
        Ok(Permutation { image })
    }

    /// Builds a permutation on `1..=n` from disjoint cycles. Points not listed
    /// are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (idx, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::NotAPermutation(format!("point {p} appears twice")));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                image[p - 1] = next - 1;
            }
        }
        Ok(Permutation { image })
    }

    /// The transposition `(i, j)`; `(i, i)` is the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for p in [i, j] {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, n });
            }
        }
        let mut t = Self::identity(n);
        t.image.swap(i - 1, j - 1);
        Ok(t)
    }

    pub(crate) fn from_zero_based(image: Vec<usize>) -> Self {
        debug_assert!({
            let mut seen = vec![false; image.len()];
            image.iter().all(|&j| j < seen.len() && !std::mem::replace(&mut seen[j], true))
        });
        Permutation { image }
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.image
    }

    /// Number of points.
    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Image of the one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    pub(crate) fn at(&self, i: usize) -> usize {
        self.image[i]
    }

    /// One-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|&j| j + 1).collect()
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&j| self.image[j]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { image: inv }
    }

    /// `(i, j) ∘ self`. With `i == j` this is `self`.
    pub fn left_transpose(&self, i: usize, j: usize) -> Permutation {
        let (a, b) = (i - 1, j - 1);
        let image = self
            .image
            .iter()
            .map(|&x| if x == a { b } else if x == b { a } else { x })
            .collect();
        Permutation { image }
    }

    /// `self ∘ (i, j)`. With `i == j` this is `self`.
    pub fn right_transpose(&self, i: usize, j: usize) -> Permutation {
        let mut image = self.image.clone();
        image.swap(i - 1, j - 1);
        Permutation { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.image[i - 1] == i - 1
    }

    /// Cycles in canonical order: each starts at its minimum, and cycles are
    /// sorted by minimum. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    /// The cycle through `i`, starting at `i`.
    pub fn cycle_of(&self, i: usize) -> Vec<usize> {
        let mut cycle = vec![i];
        let mut x = self.apply(i);
        while x != i {
            cycle.push(x);
            x = self.apply(x);
        }
        cycle
    }

    /// `z(π)`: the number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image[x];
            }
        }
        count
    }

    /// For each zero-based point, the index of its cycle (cycles numbered by
    /// increasing minimum).
    pub(crate) fn cycle_index(&self) -> Vec<usize> {
        let n = self.n();
        let mut idx = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if idx[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while idx[x] == usize::MAX {
                idx[x] = next;
                x = self.image[x];
            }
            next += 1;
        }
        idx
    }

    pub fn same_cycle(&self, i: usize, j: usize) -> bool {
        let mut x = self.apply(i);
        if i == j {
            return true;
        }
        while x != i {
            if x == j {
                return true;
            }
            x = self.apply(x);
        }
        false
    }

    /// Conjugate by a relabeling: returns `ρ ∘ self ∘ ρ⁻¹`, where `relabel[i-1]`
    /// is the new label of point `i`.
    pub fn relabel(&self, relabel: &Permutation) -> Permutation {
        let mut image = vec![0; self.n()];
        for i in 0..self.n() {
            image[relabel.image[i]] = relabel.image[self.image[i]];
        }
        Permutation { image }
    }

    /// Disjoint union: `other` acts on `n+1..=n+m`.
    pub fn disjoint_union(&self, other: &Permutation) -> Permutation {
        let n = self.n();
        let image = self.image.iter().copied().chain(other.image.iter().map(|&j| j + n)).collect();
        Permutation { image }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() == 0 {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.n(), self)
    }
}

/// Disjoint-set forest over `0..n`.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n], sets: n }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if two distinct sets were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

/// Number of orbits of the group generated by `a` and `b`, which must have the
/// same size.
pub fn orbit_count_of(a: &Permutation, b: &Permutation) -> usize {
    debug_assert_eq!(a.n(), b.n());
    let mut uf = UnionFind::new(a.n());
    for i in 0..a.n() {
        uf.union(i, a.image[i]);
        uf.union(i, b.image[i]);
    }
    uf.set_count()
}

/// A collection of hypermaps: a pair `(σ, α)` on a common ground set, not
/// necessarily transitive. Cycle counts, component count and genus are
/// computed once at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypermap {
    sigma: Permutation,
    alpha: Permutation,
    kappa: usize,
    z_sigma: usize,
    z_alpha: usize,
    z_faces: usize,
    genus: usize,
}

impl Hypermap {
    pub fn new(sigma: Permutation, alpha: Permutation) -> Result<Self> {
        if sigma.n() != alpha.n() {
            return Err(Error::SizeMismatch { left: sigma.n(), right: alpha.n() });
        }
        Ok(Self::new_unchecked(sigma, alpha))
    }

    pub(crate) fn new_unchecked(sigma: Permutation, alpha: Permutation) -> Self {
        let n = sigma.n();
        let kappa = orbit_count_of(&sigma, &alpha);
        let z_sigma = sigma.cycle_count();
        let z_alpha = alpha.cycle_count();
        let z_faces = alpha.inverse().compose_unchecked(&sigma).cycle_count();
        let twice = n + 2 * kappa;
        let sub = z_sigma + z_alpha + z_faces;
        assert!(
            twice >= sub && (twice - sub).is_multiple_of(2),
            "genus formula violated for sigma={sigma} alpha={alpha}"
        );
        let genus = (twice - sub) / 2;
        Hypermap { sigma, alpha, kappa, z_sigma, z_alpha, z_faces, genus }
    }

    /// Convenience constructor from cycle lists.
    pub fn from_cycles<A: AsRef<[usize]>, B: AsRef<[usize]>>(
        n: usize,
        sigma: &[A],
        alpha: &[B],
    ) -> Result<Self> {
        Self::new(Permutation::from_cycles(n, sigma)?, Permutation::from_cycles(n, alpha)?)
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    /// `κ(σ, α)`, the number of connected components.
    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn orbit_count(&self) -> usize {
        self.kappa
    }

    pub fn is_connected(&self) -> bool {
        self.kappa == 1
    }

    /// `z(σ)`: number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.z_sigma
    }

    /// `z(α)`: number of hyperedges, buds included.
    pub fn hyperedge_count(&self) -> usize {
        self.z_alpha
    }

    /// `z(α⁻¹σ)`: number of faces.
    pub fn face_count(&self) -> usize {
        self.z_faces
    }

    /// The face permutation `α⁻¹σ`.
    pub fn faces(&self) -> Permutation {
        self.alpha.inverse().compose_unchecked(&self.sigma)
    }

    /// Sum of the genera of the components.
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// True when every hyperedge has at most two points.
    pub fn is_map(&self) -> bool {
        self.alpha.cycles().iter().all(|c| c.len() <= 2)
    }

    pub fn max_hyperedge_len(&self) -> usize {
        self.alpha.cycles().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Component index of each one-based point, stored zero-based.
    pub fn component_index(&self) -> Vec<usize> {
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for i in 0..n {
            uf.union(i, self.sigma.image[i]);
            uf.union(i, self.alpha.image[i]);
        }
        let mut label = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for (i, slot) in out.iter_mut().enumerate() {
            let r = uf.find(i);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            *slot = label[r];
        }
        out
    }

    /// Same `σ`, different hyperedges.
    pub fn with_alpha(&self, alpha: Permutation) -> Result<Hypermap> {
        Hypermap::new(self.sigma.clone(), alpha)
    }

    /// Disjoint union of two collections; `other` is shifted to `n+1..`.
    pub fn disjoint_union(&self, other: &Hypermap) -> Hypermap {
        Hypermap::new_unchecked(
            self.sigma.disjoint_union(&other.sigma),
            self.alpha.disjoint_union(&other.alpha),
        )
    }

    /// Conjugates both permutations by `relabel`.
    pub fn relabel(&self, relabel: &Permutation) -> Result<Hypermap> {
        if relabel.n() != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: relabel.n() });
        }
        Ok(Hypermap::new_unchecked(self.sigma.relabel(relabel), self.alpha.relabel(relabel)))
    }

    pub fn canonical_form(&self) -> CanonicalKey {
        canonical_form(self)
    }
}

impl fmt::Display for Hypermap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma: {}\nalpha: {}", self.sigma, self.alpha)
    }
}

impl fmt::Debug for Hypermap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypermap(sigma={}, alpha={})", self.sigma, self.alpha)
    }
}

/// A relabeling-invariant key for a collection of hypermaps.
///
/// Each component is encoded by the lexicographically least breadth-first
/// traversal code over all starting points; component codes are sorted and
/// concatenated. Two collections receive the same key iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(Vec<u32>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

pub fn canonical_form(h: &Hypermap) -> CanonicalKey {
    let comp = h.component_index();
    let kappa = h.kappa();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); kappa];
    for (i, &c) in comp.iter().enumerate() {
        members[c].push(i);
    }
    let s = h.sigma.zero_based();
    let a = h.alpha.zero_based();
    let mut codes: Vec<Vec<u32>> = members
        .iter()
        .map(|pts| {
            let mut best: Option<Vec<u32>> = None;
            let mut label = vec![u32::MAX; s.len()];
            let mut order = Vec::with_capacity(pts.len());
            for &start in pts {
                for &p in pts {
                    label[p] = u32::MAX;
                }
                order.clear();
                label[start] = 0;
                order.push(start);
                let mut head = 0;
                let mut code = Vec::with_capacity(2 * pts.len() + 1);
                code.push(pts.len() as u32);
                while head < order.len() {
                    let p = order[head];
                    head += 1;
                    for q in [s[p], a[p]] {
                        if label[q] == u32::MAX {
                            label[q] = order.len() as u32;
                            order.push(q);
                        }
                        code.push(label[q]);
                    }
                }
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
            best.expect("components are nonempty")
        })
        .collect();
    codes.sort();
    CanonicalKey(codes.concat())
}
