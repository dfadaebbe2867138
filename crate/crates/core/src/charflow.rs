//! Characteristic and flow polynomials, colorings, and flows over prime fields.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nc::{interval, is_refinement, mobius, refinements};
use crate::perm::{orbit_count_of, Hypermap, Permutation};
use crate::poly::Univariate;

/// `χ(σ, α; t) = Σ_{β ≤ α} μ(id, β) · t^(κ(σ,β) - κ(σ,α))`.
pub fn characteristic_polynomial(h: &Hypermap) -> Univariate {
    let id = Permutation::identity(h.n());
    let kappa = h.kappa() as i64;
    let mut p = Univariate::zero();
    for beta in refinements(h.alpha()) {
        let mu = mobius(&id, &beta).expect("identity refines everything");
        p.add_term(orbit_count_of(h.sigma(), &beta) as i64 - kappa, mu);
    }
    p
}

fn require(beta: &Permutation, alpha: &Permutation) -> Result<()> {
    if is_refinement(beta, alpha) {
        Ok(())
    } else {
        Err(Error::NotARefinement { beta: beta.to_string(), alpha: alpha.to_string() })
    }
}

/// `X([α₁, α₂]; t) = Σ_{α₁ ≤ β ≤ α₂} μ(α₁, β) · t^κ(σ,β)`.
pub fn x_interval(h: &Hypermap, alpha1: &Permutation, alpha2: &Permutation) -> Result<Univariate> {
    require(alpha2, h.alpha())?;
    require(alpha1, alpha2)?;
    let mut p = Univariate::zero();
    for beta in interval(alpha1, alpha2)? {
        p.add_term(orbit_count_of(h.sigma(), &beta) as i64, mobius(alpha1, &beta)?);
    }
    Ok(p)
}

/// `C(σ, α; t) = Σ_{β ≤ α} μ(β, α) · t^(n + κ(σ,β) - z(β) - z(σ))`.
pub fn flow_polynomial(h: &Hypermap) -> Univariate {
    let base = h.n() as i64 - h.vertex_count() as i64;
    let mut p = Univariate::zero();
    for beta in refinements(h.alpha()) {
        let mu = mobius(&beta, h.alpha()).expect("enumerated refinement");
        let e = base + orbit_count_of(h.sigma(), &beta) as i64 - beta.cycle_count() as i64;
        p.add_term(e, mu);
    }
    p
}

/// Largest number of assignments the exhaustive counters visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

fn guard(what: &'static str, base: u64, exp: usize, cap: u64) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..exp {
        total = total.checked_mul(base).filter(|&t| t <= cap).ok_or_else(|| Error::TooLarge {
            what,
            size: format!("{base}^{exp}"),
            cap: cap.to_string(),
        })?;
    }
    Ok(total)
}

/// Counts vertex colorings `0..z → 0..m` satisfying pairwise constraints
/// `(a, b, equal)`, by backtracking over vertices in order.
fn count_constrained_colorings(z: usize, m: usize, constraints: &[(usize, usize, bool)]) -> u64 {
    if constraints.iter().any(|&(a, b, equal)| a == b && !equal) {
        return 0;
    }
    // Constraints checked once the later of their two vertices is colored.
    let mut due: Vec<Vec<(usize, bool)>> = vec![Vec::new(); z];
    for &(a, b, equal) in constraints {
        if a != b {
            due[a.max(b)].push((a.min(b), equal));
        }
    }
    fn go(v: usize, m: usize, c: &mut Vec<usize>, due: &[Vec<(usize, bool)>]) -> u64 {
        if v == c.len() {
            return 1;
        }
        let mut total = 0;
        for color in 0..m {
            if due[v].iter().all(|&(u, equal)| (c[u] == color) == equal) {
                c[v] = color;
                total += go(v + 1, m, c, due);
            }
        }
        total
    }
    go(0, m, &mut vec![0; z], &due)
}

/// Vertex pairs of points sharing a hyperedge, with whether the pair must
/// share a color.
fn hyperedge_pairs(h: &Hypermap, same: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize, bool)> {
    let vertex = h.sigma().cycle_index();
    let mut out = Vec::new();
    for e in h.alpha().cycles() {
        for (k, &p) in e.iter().enumerate() {
            for &q in &e[k + 1..] {
                out.push((vertex[p - 1], vertex[q - 1], same(p, q)));
            }
        }
    }
    out
}

/// `m`-colorings of the vertices in which no two points of one hyperedge sit
/// on vertices of the same color. A hyperedge meeting a vertex twice admits
/// no coloring. Exhaustive, refused when `m^z(σ)` exceeds `cap`.
pub fn proper_coloring_count(h: &Hypermap, m: usize, cap: u64) -> Result<BigInt> {
    let z = h.vertex_count();
    guard("colorings m^z(sigma)", m as u64, z, cap)?;
    Ok(BigInt::from(count_constrained_colorings(z, m, &hyperedge_pairs(h, |_, _| false))))
}

/// `(α₁, α)`-compatible `m`-colorings: points in one cycle of `α₁` sit on
/// vertices of one color, and points of one `α`-cycle lying in different
/// `α₁`-cycles sit on vertices of different colors.
pub fn compatible_coloring_count(h: &Hypermap, alpha1: &Permutation, m: usize, cap: u64) -> Result<BigInt> {
    require(alpha1, h.alpha())?;
    let z = h.vertex_count();
    guard("colorings m^z(sigma)", m as u64, z, cap)?;
    let block = alpha1.cycle_index();
    let pairs = hyperedge_pairs(h, |p, q| block[p - 1] == block[q - 1]);
    Ok(BigInt::from(count_constrained_colorings(z, m, &pairs)))
}

/// Arithmetic in `GF(q)` for prime `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub fn new(q: u64) -> Result<Self> {
        let prime = q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d));
        if prime {
            Ok(PrimeField { q })
        } else {
            Err(Error::NotPrime(q))
        }
    }

    pub fn order(self) -> u64 {
        self.q
    }

    /// Reduces a signed integer into `0..q`.
    pub fn element(self, x: i64) -> u64 {
        x.rem_euclid(self.q as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.q - a) % self.q
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.q), "zero has no inverse");
        let mut result = 1;
        let mut base = a % self.q;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }
}

/// A point labelling with values in `GF(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flow {
    pub field: PrimeField,
    pub values: Vec<u64>,
}

impl Flow {
    pub fn new(field: PrimeField, values: &[i64]) -> Self {
        Flow { field, values: values.iter().map(|&x| field.element(x)).collect() }
    }
}

/// Whether `f` sums to zero on every vertex and every hyperedge.
pub fn is_flow(h: &Hypermap, f: &Flow) -> bool {
    f.values.len() == h.n() && constraint_rows(h).iter().all(|row| sum_over(f, row) == 0)
}

fn sum_over(f: &Flow, points: &[usize]) -> u64 {
    points.iter().fold(0, |s, &p| f.field.add(s, f.values[p - 1]))
}

fn constraint_rows(h: &Hypermap) -> Vec<Vec<usize>> {
    let mut rows = h.sigma().cycles();
    rows.extend(h.alpha().cycles());
    rows
}

/// Whether `f` vanishes only at buds of `α`.
pub fn is_nowhere_zero(h: &Hypermap, f: &Flow) -> bool {
    (1..=h.n()).all(|i| f.values[i - 1] != 0 || h.alpha().is_fixed(i))
}

/// The space of flows over `GF(q)` as a nullspace basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowSpace {
    pub field: PrimeField,
    pub basis: Vec<Vec<u64>>,
}

impl FlowSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Every flow, once each.
    pub fn flows(&self, n: usize) -> impl Iterator<Item = Flow> + '_ {
        let q = self.field.order();
        let dim = self.dimension();
        let mut coords = vec![0u64; dim];
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let mut values = vec![0u64; n];
            for (c, b) in coords.iter().zip(&self.basis) {
                for (v, &x) in values.iter_mut().zip(b) {
                    *v = self.field.add(*v, self.field.mul(*c, x));
                }
            }
            done = true;
            for c in coords.iter_mut() {
                *c += 1;
                if *c < q {
                    done = false;
                    break;
                }
                *c = 0;
            }
            Some(Flow { field: self.field, values })
        })
    }
}

/// Solves the vertex and hyperedge sum conditions over `GF(q)` by Gaussian
/// elimination. The dimension is `n + κ - z(σ) - z(α)`, which is asserted.
pub fn flow_space(h: &Hypermap, q: u64) -> Result<FlowSpace> {
    let field = PrimeField::new(q)?;
    let n = h.n();
    let mut rows: Vec<Vec<u64>> = constraint_rows(h)
        .iter()
        .map(|pts| {
            let mut r = vec![0u64; n];
            for &p in pts {
                r[p - 1] = field.add(r[p - 1], 1);
            }
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = field.inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..n {
                    let delta = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], delta);
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<u64>> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(rows[r][fc]);
            }
            v
        })
        .collect();
    let expected = n + h.kappa() - h.vertex_count() - h.hyperedge_count();
    debug_assert_eq!(basis.len(), expected, "flow space dimension differs from n + κ - z(σ) - z(α)");
    Ok(FlowSpace { field, basis })
}

/// Nowhere-zero flows over `GF(q)`, by running through the flow space. Fails
/// when `q^dim` exceeds `cap`.
pub fn nowhere_zero_flow_count(h: &Hypermap, q: u64, cap: u64) -> Result<BigInt> {
    let space = flow_space(h, q)?;
    guard("flows q^dim", q, space.dimension(), cap)?;
    let count = space.flows(h.n()).filter(|f| is_nowhere_zero(h, f)).count();
    Ok(BigInt::from(count))
}

/// Number of flows over `GF(q)`, counted by enumeration. Fails when `q^dim`
/// exceeds `cap`.
pub fn flow_count(h: &Hypermap, q: u64, cap: u64) -> Result<BigInt> {
    let space = flow_space(h, q)?;
    guard("flows q^dim", q, space.dimension(), cap)?;
    Ok(BigInt::from(space.flows(h.n()).count()))
}

/// The refinement on which `f` becomes nowhere zero when every hyperedge has
/// at most three points: each zero point is cut out of its hyperedge as a bud.
pub fn unique_nz_refinement(h: &Hypermap, f: &Flow) -> Result<Permutation> {
    let order: Vec<usize> = (1..=h.n()).collect();
    unique_nz_refinement_in_order(h, f, &order)
}

/// As [`unique_nz_refinement`], removing zero points in the given order.
pub fn unique_nz_refinement_in_order(h: &Hypermap, f: &Flow, order: &[usize]) -> Result<Permutation> {
    let longest = h.max_hyperedge_len();
    if longest > 3 {
        return Err(Error::HyperedgeTooLong(longest));
    }
    if !is_flow(h, f) {
        return Err(Error::NotAFlow(format!("{:?}", f.values)));
    }
    let mut beta = h.alpha().clone();
    for &i in order {
        if i == 0 || i > h.n() {
            return Err(Error::PointOutOfRange { point: i, n: h.n() });
        }
        if f.values[i - 1] == 0 && !beta.is_fixed(i) {
            let prev = beta.inverse().apply(i);
            beta = beta.right_transpose(prev, i);
        }
    }
    let refined = Hypermap::new_unchecked(h.sigma().clone(), beta.clone());
    debug_assert!(is_refinement(&beta, h.alpha()));
    assert!(is_flow(&refined, f) && is_nowhere_zero(&refined, f));
    Ok(beta)
}

/// `m^κ(σ,α) · χ(σ, α; m)`, the value the coloring counts are compared with.
pub fn chromatic_value(h: &Hypermap, m: i64) -> BigInt {
    let chi = characteristic_polynomial(h);
    chi.shift(h.kappa() as i64).evaluate_int(m).expect("integer polynomial")
}

/// `Σ_{β ≤ α} X([β, α]; t)`, which equals `t^z(σ)`.
pub fn chromatic_identity_lhs(h: &Hypermap) -> Univariate {
    let mut acc = Univariate::zero();
    for beta in refinements(h.alpha()) {
        acc = acc + x_interval(h, &beta, h.alpha()).expect("enumerated refinement");
    }
    acc
}

/// `Σ_{β ≤ α} C(σ, β; t)`, which equals `t^(n + κ - z(α) - z(σ))`.
pub fn flow_identity_lhs(h: &Hypermap) -> Univariate {
    let mut acc = Univariate::zero();
    for beta in refinements(h.alpha()) {
        acc = acc + flow_polynomial(&Hypermap::new_unchecked(h.sigma().clone(), beta));
    }
    acc
}
