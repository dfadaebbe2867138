//! Medial maps, noncrossing Eulerian states and Eulerian colorings.
//!
//! Signed points are stored as ordinary points of a permutation on `2n`
//! elements: `i⁻` is `2i - 1` and `i⁺` is `2i`. The medial map of `(σ, α)` has a
//! vertex `(i₁⁻ i₁⁺ i₂⁻ i₂⁺ …)` for every hyperedge `(i₁ i₂ …)` and an edge
//! `(i⁺, σ(i)⁻)` for every point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nc::refinements;
use crate::perm::{Hypermap, Permutation};
use crate::poly::Univariate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPoint {
    pub base: usize,
    pub positive: bool,
}

impl SignedPoint {
    pub fn minus(base: usize) -> Self {
        SignedPoint { base, positive: false }
    }

    pub fn plus(base: usize) -> Self {
        SignedPoint { base, positive: true }
    }

    pub fn encode(self) -> usize {
        2 * self.base - (!self.positive) as usize
    }

    pub fn decode(p: usize) -> Self {
        SignedPoint { base: p.div_ceil(2), positive: p.is_multiple_of(2) }
    }
}

impl fmt::Display for SignedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.base, if self.positive { '+' } else { '-' })
    }
}

/// An Eulerian map: vertex permutation `σ′` with sign-alternating cycles and an
/// involution `α′` pairing each positive point with a negative one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerianMap {
    sigma: Permutation,
    alpha: Permutation,
}

impl EulerianMap {
    pub fn new(sigma: Permutation, alpha: Permutation) -> Result<Self> {
        if sigma.n() != alpha.n() {
            return Err(Error::SizeMismatch { left: sigma.n(), right: alpha.n() });
        }
        if !sigma.n().is_multiple_of(2) {
            return Err(Error::InvalidEulerianMap(format!("{} signed points, expected an even number", sigma.n())));
        }
        for p in 1..=alpha.n() {
            let q = alpha.apply(p);
            if alpha.apply(q) != p || (p % 2) == (q % 2) {
                return Err(Error::InvalidEulerianMap(format!(
                    "edge at {} must pair a positive and a negative point",
                    SignedPoint::decode(p)
                )));
            }
            if (sigma.apply(p) % 2) == (p % 2) {
                return Err(Error::InvalidEulerianMap(format!(
                    "vertex signs do not alternate after {}",
                    SignedPoint::decode(p)
                )));
            }
        }
        Ok(EulerianMap { sigma, alpha })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    /// Number of signed points.
    pub fn size(&self) -> usize {
        self.sigma.n()
    }

    pub fn edge_count(&self) -> usize {
        self.size() / 2
    }

    pub fn as_hypermap(&self) -> Hypermap {
        Hypermap::new(self.sigma.clone(), self.alpha.clone()).expect("sizes agree")
    }

    pub fn genus(&self) -> usize {
        self.as_hypermap().genus()
    }

    /// Vertex cycles as signed sequences.
    pub fn vertices(&self) -> Vec<Vec<SignedPoint>> {
        self.sigma.cycles().into_iter().map(|c| c.into_iter().map(SignedPoint::decode).collect()).collect()
    }

    /// The hypermap this is the medial map of, when every vertex reads
    /// `(i₁⁻ i₁⁺ i₂⁻ i₂⁺ …)`.
    pub fn source(&self) -> Option<Hypermap> {
        let n = self.edge_count();
        let mut s = vec![0; n];
        let mut a = vec![0; n];
        for i in 1..=n {
            if self.sigma.apply(2 * i - 1) != 2 * i {
                return None;
            }
            a[i - 1] = SignedPoint::decode(self.sigma.apply(2 * i)).base;
            s[i - 1] = SignedPoint::decode(self.alpha.apply(2 * i)).base;
        }
        Hypermap::new(Permutation::from_images(&s).ok()?, Permutation::from_images(&a).ok()?).ok()
    }
}

impl fmt::Display for EulerianMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Permutation| {
            p.cycles()
                .into_iter()
                .map(|c| {
                    let inner: Vec<String> = c.into_iter().map(|x| SignedPoint::decode(x).to_string()).collect();
                    format!("({})", inner.join(" "))
                })
                .collect::<String>()
        };
        write!(f, "sigma': {}\nalpha': {}", show(&self.sigma), show(&self.alpha))
    }
}

/// The medial map `M(σ, α)`.
pub fn medial_map(h: &Hypermap) -> EulerianMap {
    let n = h.n();
    let mut s = vec![0; 2 * n];
    let mut a = vec![0; 2 * n];
    for i in 1..=n {
        let (minus, plus) = (SignedPoint::minus(i).encode(), SignedPoint::plus(i).encode());
        s[minus - 1] = plus;
        s[plus - 1] = SignedPoint::minus(h.alpha().apply(i)).encode();
        let head = SignedPoint::minus(h.sigma().apply(i)).encode();
        a[plus - 1] = head;
        a[head - 1] = plus;
    }
    EulerianMap {
        sigma: Permutation::from_images(&s).expect("medial vertices form a permutation"),
        alpha: Permutation::from_images(&a).expect("medial edges form a permutation"),
    }
}

/// A noncrossing Eulerian state: a perfect matching of the signed points that
/// pairs opposite signs within each vertex without crossings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoherentMatching {
    partner: Vec<usize>,
}

impl CoherentMatching {
    /// From pairs of signed points; validity is checked when used.
    pub fn from_pairs(size: usize, pairs: &[(SignedPoint, SignedPoint)]) -> Result<Self> {
        let mut partner = vec![0; size];
        for &(p, q) in pairs {
            for (x, y) in [(p, q), (q, p)] {
                let (ex, ey) = (x.encode(), y.encode());
                if x.base == 0 || ex > size || ey > size || y.base == 0 {
                    return Err(Error::InvalidMatching(format!("point {x} out of range")));
                }
                if partner[ex - 1] != 0 {
                    return Err(Error::InvalidMatching(format!("{x} matched twice")));
                }
                partner[ex - 1] = ey;
            }
        }
        if let Some(i) = partner.iter().position(|&p| p == 0) {
            return Err(Error::InvalidMatching(format!("{} is unmatched", SignedPoint::decode(i + 1))));
        }
        Ok(CoherentMatching { partner })
    }

    pub fn partner(&self, p: SignedPoint) -> SignedPoint {
        SignedPoint::decode(self.partner[p.encode() - 1])
    }

    /// Matched pairs as `(i⁺, j⁻)`, sorted by `i`.
    pub fn pairs(&self) -> Vec<(SignedPoint, SignedPoint)> {
        (1..=self.partner.len() / 2)
            .map(|i| {
                let p = SignedPoint::plus(i);
                (p, self.partner(p))
            })
            .collect()
    }

    /// Checks that this is a coherent matching of `m`.
    pub fn validate(&self, m: &EulerianMap) -> Result<()> {
        if self.partner.len() != m.size() {
            return Err(Error::SizeMismatch { left: self.partner.len(), right: m.size() });
        }
        for vertex in m.sigma().cycles() {
            let pos: BTreeMap<usize, usize> = vertex.iter().enumerate().map(|(k, &p)| (p, k)).collect();
            let mut arcs = Vec::new();
            for &p in &vertex {
                let q = self.partner[p - 1];
                let Some(&kq) = pos.get(&q) else {
                    return Err(Error::InvalidMatching(format!(
                        "{} and {} lie on different vertices",
                        SignedPoint::decode(p),
                        SignedPoint::decode(q)
                    )));
                };
                if self.partner[q - 1] != p || p % 2 == q % 2 {
                    return Err(Error::InvalidMatching(format!(
                        "{} and {} do not form an opposite-sign pair",
                        SignedPoint::decode(p),
                        SignedPoint::decode(q)
                    )));
                }
                if pos[&p] < kq {
                    arcs.push((pos[&p], kq));
                }
            }
            for &(a, b) in &arcs {
                if arcs.iter().any(|&(c, d)| a < c && c < b && b < d) {
                    return Err(Error::InvalidMatching("matched pairs cross".into()));
                }
            }
        }
        Ok(())
    }
}

/// Noncrossing perfect matchings of positions `0..len` of a sign-alternating
/// cycle that pair opposite signs, as lists of position pairs.
fn vertex_matchings(len: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            let inner = go(lo + 1, j);
            let outer = go(j + 1, hi);
            for a in &inner {
                for b in &outer {
                    let mut m = Vec::with_capacity(a.len() + b.len() + 1);
                    m.push((lo, j));
                    m.extend_from_slice(a);
                    m.extend_from_slice(b);
                    out.push(m);
                }
            }
        }
        out
    }
    go(0, len)
}

/// Every coherent matching of `m`; vertices in canonical cycle order, last
/// vertex varying fastest.
pub fn coherent_matchings(m: &EulerianMap) -> impl Iterator<Item = CoherentMatching> {
    let vertices = m.sigma().cycles();
    let options: Vec<Vec<Vec<(usize, usize)>>> = vertices.iter().map(|v| vertex_matchings(v.len())).collect();
    let size = m.size();
    let mut odometer = vec![0usize; vertices.len()];
    let mut done = options.iter().any(Vec::is_empty);
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut partner = vec![0; size];
        for (v, &choice) in odometer.iter().enumerate() {
            for &(a, b) in &options[v][choice] {
                let (p, q) = (vertices[v][a], vertices[v][b]);
                partner[p - 1] = q;
                partner[q - 1] = p;
            }
        }
        done = true;
        for v in (0..odometer.len()).rev() {
            odometer[v] += 1;
            if odometer[v] < options[v].len() {
                done = false;
                break;
            }
            odometer[v] = 0;
        }
        Some(CoherentMatching { partner })
    })
}

/// The refinement `β` with `β(i) = j` whenever `i⁺` is matched to `j⁻`.
pub fn induced_refinement(mu: &CoherentMatching) -> Permutation {
    let images: Vec<usize> = mu.pairs().into_iter().map(|(_, q)| q.base).collect();
    Permutation::from_images(&images).expect("a perfect opposite-sign matching induces a permutation")
}

/// The matching of `M(σ, α)` that induces `beta`.
pub fn matching_of_refinement(beta: &Permutation) -> CoherentMatching {
    let n = beta.n();
    let mut partner = vec![0; 2 * n];
    for i in 1..=n {
        let (p, q) = (SignedPoint::plus(i).encode(), SignedPoint::minus(beta.apply(i)).encode());
        partner[p - 1] = q;
        partner[q - 1] = p;
    }
    CoherentMatching { partner }
}

/// The circuits of a state. Each circuit starts at its least negative point
/// `i⁻`, steps to the matched `j⁺` and then along the edge to `σ(j)⁻`.
pub fn circuits_of_state(m: &EulerianMap, mu: &CoherentMatching) -> Result<Vec<Vec<SignedPoint>>> {
    mu.validate(m)?;
    let size = m.size();
    let mut seen = vec![false; size];
    let mut circuits = Vec::new();
    for start in (1..=size).step_by(2) {
        if seen[start - 1] {
            continue;
        }
        let mut circuit = Vec::new();
        let mut p = start;
        while !seen[p - 1] {
            let q = mu.partner[p - 1];
            seen[p - 1] = true;
            seen[q - 1] = true;
            circuit.push(SignedPoint::decode(p));
            circuit.push(SignedPoint::decode(q));
            p = m.alpha().apply(q);
        }
        circuits.push(circuit);
    }
    if let Some(h) = m.source() {
        let beta = induced_refinement(mu);
        let faces = beta.inverse().compose_unchecked(h.sigma()).cycle_count();
        assert_eq!(circuits.len(), faces, "circuit count differs from z(β⁻¹σ)");
    }
    Ok(circuits)
}

/// `j(M; x)`: circuits counted over all noncrossing Eulerian states.
pub fn circuit_partition_polynomial(m: &EulerianMap) -> Univariate {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for mu in coherent_matchings(m) {
        let k = circuits_of_state(m, &mu).expect("enumerated matchings are coherent").len();
        *counts.entry(k as i64).or_default() += 1;
    }
    let mut p = Univariate::zero();
    for (k, c) in counts {
        p.add_term(k, BigInt::from(c));
    }
    p
}

/// `Σ_{β ≤ α} x^z(β⁻¹σ)`, the same polynomial for `M(σ, α)` read off the
/// refinements.
pub fn circuit_partition_by_refinements(h: &Hypermap) -> Univariate {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for beta in refinements(h.alpha()) {
        let k = beta.inverse().compose_unchecked(h.sigma()).cycle_count();
        *counts.entry(k as i64).or_default() += 1;
    }
    let mut p = Univariate::zero();
    for (k, c) in counts {
        p.add_term(k, BigInt::from(c));
    }
    p
}

/// A directed multigraph with integer vertex labels. Loops and parallel edges
/// are allowed; vertices without edges are not represented.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerianDigraph {
    labels: Vec<i64>,
    edges: Vec<(usize, usize)>,
}

impl EulerianDigraph {
    /// From `(tail, head)` label pairs. Fails unless in-degree equals out-degree
    /// everywhere.
    pub fn from_edges(edges: &[(i64, i64)]) -> Result<Self> {
        let mut labels: Vec<i64> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index = |x: i64| labels.binary_search(&x).expect("label collected above");
        let edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (index(a), index(b))).collect();
        let d = EulerianDigraph { labels, edges };
        for v in 0..d.vertex_count() {
            let (indeg, outdeg) = d.degrees(v);
            if indeg != outdeg {
                return Err(Error::NotEulerian { vertex: d.labels[v], indeg, outdeg });
            }
        }
        Ok(d)
    }

    /// Edge-list text: one `tail head` pair per line; blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let err = |message: String| Error::Parse { location: format!("line {}", lineno + 1), message };
            if fields.len() != 2 {
                return Err(err(format!("expected `tail head`, found {} fields", fields.len())));
            }
            let parse = |s: &str| s.parse::<i64>().map_err(|_| err(format!("`{s}` is not an integer vertex")));
            edges.push((parse(fields[0])?, parse(fields[1])?));
        }
        Self::from_edges(&edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Edges as vertex indices.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn degrees(&self, v: usize) -> (usize, usize) {
        let indeg = self.edges.iter().filter(|e| e.1 == v).count();
        let outdeg = self.edges.iter().filter(|e| e.0 == v).count();
        (indeg, outdeg)
    }

    fn adjacency(&self) -> Vec<Vec<u32>> {
        let k = self.vertex_count();
        let mut adj = vec![vec![0u32; k]; k];
        for &(a, b) in &self.edges {
            adj[a][b] += 1;
        }
        adj
    }
}

impl fmt::Display for EulerianDigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.edges {
            writeln!(f, "{} {}", self.labels[a], self.labels[b])?;
        }
        Ok(())
    }
}

/// The directed medial graph of `(σ, α)`: one vertex per hyperedge and, for
/// every point `i`, an edge from the hyperedge of `i` to the hyperedge of
/// `σ(i)`. Vertices are labelled by the least point of their hyperedge.
pub fn directed_medial_graph(h: &Hypermap) -> EulerianDigraph {
    let mut least = vec![0i64; h.n()];
    for c in h.alpha().cycles() {
        for &p in &c {
            least[p - 1] = c[0] as i64;
        }
    }
    let edges: Vec<(i64, i64)> = (1..=h.n()).map(|i| (least[i - 1], least[h.sigma().apply(i) - 1])).collect();
    EulerianDigraph::from_edges(&edges).expect("a directed medial graph is Eulerian")
}

/// A collection whose directed medial graph is `d`. At each vertex the
/// incoming and outgoing edge ends are interleaved in edge order, the `k`-th
/// incoming end and the `k`-th outgoing end becoming `i⁻` and `i⁺` of one point
/// `i`. Points are numbered vertex by vertex; the hyperedge at a vertex lists
/// its points in that order.
pub fn from_eulerian_digraph(d: &EulerianDigraph) -> Hypermap {
    let n = d.edge_count();
    let mut tail_point = vec![0; n];
    let mut head_point = vec![0; n];
    let mut alpha_cycles = Vec::new();
    let mut next = 1;
    for v in 0..d.vertex_count() {
        let ins = d.edges.iter().enumerate().filter(|(_, e)| e.1 == v).map(|(k, _)| k);
        let outs = d.edges.iter().enumerate().filter(|(_, e)| e.0 == v).map(|(k, _)| k);
        let mut cycle = Vec::new();
        for (ein, eout) in ins.zip(outs) {
            head_point[ein] = next;
            tail_point[eout] = next;
            cycle.push(next);
            next += 1;
        }
        alpha_cycles.push(cycle);
    }
    let mut sigma = vec![0; n];
    for e in 0..n {
        sigma[tail_point[e] - 1] = head_point[e];
    }
    let sigma = Permutation::from_images(&sigma).expect("each point has one outgoing and one incoming edge");
    let alpha = Permutation::from_cycles(n, &alpha_cycles).expect("vertex runs partition the points");
    Hypermap::new_unchecked(sigma, alpha)
}

/// Largest vertex count the isomorphism search accepts.
pub const MAX_ISOMORPHISM_VERTICES: usize = 10;

/// Whether two digraphs are isomorphic as multigraphs, by search over vertex
/// bijections with degree pruning.
pub fn digraphs_isomorphic(a: &EulerianDigraph, b: &EulerianDigraph) -> Result<bool> {
    let k = a.vertex_count();
    if k != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if k > MAX_ISOMORPHISM_VERTICES {
        return Err(Error::TooLarge {
            what: "digraph vertices",
            size: k.to_string(),
            cap: MAX_ISOMORPHISM_VERTICES.to_string(),
        });
    }
    let (adj_a, adj_b) = (a.adjacency(), b.adjacency());
    let signature = |adj: &Vec<Vec<u32>>, v: usize| {
        let out: u32 = adj[v].iter().sum();
        (out, adj[v][v])
    };
    fn extend(
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        adj_a: &[Vec<u32>],
        adj_b: &[Vec<u32>],
        fits: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let k = adj_a.len();
        if v == k {
            return true;
        }
        for w in 0..k {
            if used[w] || !fits(v, w) {
                continue;
            }
            let consistent = (0..v).all(|u| adj_a[u][v] == adj_b[image[u]][w] && adj_a[v][u] == adj_b[w][image[u]])
                && adj_a[v][v] == adj_b[w][w];
            if !consistent {
                continue;
            }
            used[w] = true;
            image.push(w);
            if extend(v + 1, image, used, adj_a, adj_b, fits) {
                return true;
            }
            image.pop();
            used[w] = false;
        }
        false
    }
    let fits = |v: usize, w: usize| signature(&adj_a, v) == signature(&adj_b, w);
    Ok(extend(0, &mut Vec::new(), &mut vec![false; k], &adj_a, &adj_b, &fits))
}

/// Valence of a colored vertex: the number of noncrossing perfect matchings of
/// the cyclic sequence that pair opposite signs of equal color.
pub fn valence(cycle: &[SignedPoint], colors: &[usize]) -> u64 {
    assert_eq!(cycle.len(), colors.len(), "one color per point");
    let len = cycle.len();
    if len % 2 == 1 {
        return 0;
    }
    let ok = |a: usize, b: usize| cycle[a].positive != cycle[b].positive && colors[a] == colors[b];
    // count[a][b]: matchings of the run a..b, b exclusive.
    let mut count = vec![vec![0u64; len + 1]; len + 1];
    for a in 0..=len {
        count[a][a] = 1;
    }
    for width in (2..=len).step_by(2) {
        for a in 0..=len - width {
            let b = a + width;
            let mut total = 0u64;
            for j in (a + 1..b).step_by(2) {
                if ok(a, j) {
                    total += count[a + 1][j] * count[j + 1][b];
                }
            }
            count[a][b] = total;
        }
    }
    count[0][len]
}

/// Largest `m^n` the coloring enumerations accept.
pub const MAX_COLORINGS: u64 = 10_000_000;

fn coloring_guard(m: usize, n: usize) -> Result<()> {
    let total = (m as f64).powi(n as i32);
    if total > MAX_COLORINGS as f64 {
        return Err(Error::TooLarge { what: "colorings m^n", size: format!("{m}^{n}"), cap: MAX_COLORINGS.to_string() });
    }
    Ok(())
}

/// Visits every edge coloring `c: 1..=n → 0..m` of `M(σ, α)` whose color
/// classes are Eulerian: at every medial vertex each color occurs on as many
/// positive as negative points. Edge `i` joins `i⁺` to `σ(i)⁻`, so `i⁺` takes
/// color `c(i)` and `j⁻` takes `c(σ⁻¹(j))`.
fn for_each_eulerian_coloring(h: &Hypermap, m: usize, mut visit: impl FnMut(&[usize])) {
    let n = h.n();
    let vertex_of = h.alpha().cycle_index();
    let sigma_inv = h.sigma().inverse();
    let z = h.alpha().cycle_count();
    // Ends at each vertex still uncolored, and the vertices touched by edge i.
    let mut open = vec![0usize; z];
    for i in 1..=n {
        open[vertex_of[i - 1]] += 2;
    }
    let cycles = h.alpha().cycles();
    let balanced = |v: usize, c: &[usize]| {
        let mut diff = vec![0i64; m];
        for &p in &cycles[v] {
            diff[c[p - 1]] += 1;
            diff[c[sigma_inv.apply(p) - 1]] -= 1;
        }
        diff.iter().all(|&d| d == 0)
    };
    fn go(
        i: usize,
        n: usize,
        m: usize,
        c: &mut Vec<usize>,
        open: &mut Vec<usize>,
        ends: &dyn Fn(usize) -> (usize, usize),
        balanced: &dyn Fn(usize, &[usize]) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if i > n {
            visit(c);
            return;
        }
        let (va, vb) = ends(i);
        open[va] -= 1;
        open[vb] -= 1;
        for color in 0..m {
            c[i - 1] = color;
            let ok = [va, vb].iter().all(|&v| open[v] != 0 || balanced(v, c));
            if ok {
                go(i + 1, n, m, c, open, ends, balanced, visit);
            }
        }
        open[va] += 1;
        open[vb] += 1;
    }
    let ends = |i: usize| (vertex_of[i - 1], vertex_of[h.sigma().apply(i) - 1]);
    go(1, n, m, &mut vec![0; n], &mut open, &ends, &balanced, &mut visit);
}

/// Colors of the signed points of every medial vertex under edge coloring `c`.
fn vertex_colorings(h: &Hypermap, c: &[usize]) -> Vec<(Vec<SignedPoint>, Vec<usize>)> {
    let sigma_inv = h.sigma().inverse();
    h.alpha()
        .cycles()
        .into_iter()
        .map(|cycle| {
            let mut points = Vec::with_capacity(2 * cycle.len());
            let mut colors = Vec::with_capacity(2 * cycle.len());
            for p in cycle {
                points.push(SignedPoint::minus(p));
                colors.push(c[sigma_inv.apply(p) - 1]);
                points.push(SignedPoint::plus(p));
                colors.push(c[p - 1]);
            }
            (points, colors)
        })
        .collect()
}

/// `Σ_λ Π_v ν(v, λ)` over the Eulerian `m`-colorings `λ` of `M(σ, α)`. For
/// genus zero this equals `m^κ · R(m, m)`.
pub fn eulerian_coloring_sum(h: &Hypermap, m: usize) -> Result<BigInt> {
    if h.genus() != 0 {
        return Err(Error::NonzeroGenus(h.genus()));
    }
    coloring_guard(m, h.n())?;
    let mut total = BigInt::zero();
    for_each_eulerian_coloring(h, m, |c| {
        let mut product = BigInt::one();
        for (points, colors) in vertex_colorings(h, c) {
            product *= valence(&points, &colors);
        }
        total += product;
    });
    Ok(total)
}

/// The same sum taken over all `m^n` colorings, counting for each the whole
/// noncrossing Eulerian states of `M(σ, α)` in which every matched pair is
/// monochromatic. Slow; used to confirm that the per-vertex test suffices.
pub fn eulerian_coloring_sum_by_states(h: &Hypermap, m: usize) -> Result<BigInt> {
    coloring_guard(m, h.n())?;
    let medial = medial_map(h);
    let states: Vec<CoherentMatching> = coherent_matchings(&medial).collect();
    let sigma_inv = h.sigma().inverse();
    let n = h.n();
    let mut c = vec![0usize; n];
    let mut total = BigInt::zero();
    loop {
        let color = |p: SignedPoint| if p.positive { c[p.base - 1] } else { c[sigma_inv.apply(p.base) - 1] };
        let good = states
            .iter()
            .filter(|mu| mu.pairs().iter().all(|&(p, q)| color(p) == color(q)))
            .count();
        total += good;
        let mut i = 0;
        loop {
            if i == n {
                return Ok(total);
            }
            c[i] += 1;
            if c[i] < m {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// For a map, `Σ_λ 2^mono(λ)` over Eulerian `m`-colorings, where `mono` counts
/// the four-point medial vertices that are monochromatic.
pub fn map_eulerian_coloring_sum(h: &Hypermap, m: usize) -> Result<BigInt> {
    if h.max_hyperedge_len() > 2 {
        return Err(Error::HyperedgeTooLong(h.max_hyperedge_len()));
    }
    coloring_guard(m, h.n())?;
    let mut total = BigInt::zero();
    for_each_eulerian_coloring(h, m, |c| {
        let mono = vertex_colorings(h, c)
            .iter()
            .filter(|(points, colors)| points.len() == 4 && colors.iter().all(|&x| x == colors[0]))
            .count();
        total += BigInt::one() << mono;
    });
    Ok(total)
}
