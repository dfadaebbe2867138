//! The Whitney polynomial of a collection of hypermaps,
//!
//! ```text
//! R(σ, α; u, v) = Σ_{β ≤ α} u^(κ(σ,β) - κ(σ,α)) · v^(κ(σ,β) + n - z(β) - z(σ))
//! ```
//!
//! computed three ways: by summing over refinements, and by two
//! deletion–contraction style recurrences that expand one hyperedge
//! `(c₁, …, c_m)` into `m` branches. The `φ` recurrence may disconnect the
//! collection; the `ψ` recurrence merges the split-off component back through a
//! vertex so the component count never changes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nc::refinements;
use crate::perm::{orbit_count_of, CanonicalKey, Hypermap, Permutation};
use crate::poly::{Bivariate, Univariate};

/// Contribution of one refinement to `R`: exponents of `u` and `v`.
pub fn refinement_exponents(h: &Hypermap, beta: &Permutation) -> (i64, i64) {
    let kb = orbit_count_of(h.sigma(), beta) as i64;
    let n = h.n() as i64;
    let eu = kb - h.kappa() as i64;
    let ev = kb + n - beta.cycle_count() as i64 - h.vertex_count() as i64;
    (eu, ev)
}

/// `R` by direct summation over every refinement of `α`.
pub fn whitney_bruteforce(h: &Hypermap) -> Bivariate {
    let mut acc: HashMap<(i64, i64), u64> = HashMap::new();
    for beta in refinements(h.alpha()) {
        *acc.entry(refinement_exponents(h, &beta)).or_default() += 1;
    }
    collect_counts(acc)
}

/// Brute force with the refinement stream reduced in parallel.
pub fn whitney_bruteforce_par(h: &Hypermap) -> Bivariate {
    let acc = refinements(h.alpha())
        .par_bridge()
        .fold(HashMap::new, |mut m: HashMap<(i64, i64), u64>, beta| {
            *m.entry(refinement_exponents(h, &beta)).or_default() += 1;
            m
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            a
        });
    collect_counts(acc)
}

fn collect_counts(acc: HashMap<(i64, i64), u64>) -> Bivariate {
    let mut p = Bivariate::zero();
    for ((eu, ev), c) in acc {
        p.add_term(eu, ev, BigInt::from(c));
    }
    p
}

/// A branch weight `w_k`, always one of `1, u, v, uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub u: bool,
    pub v: bool,
}

impl Weight {
    pub fn monomial(self) -> Bivariate {
        Bivariate::monomial(self.u as i64, self.v as i64, 1)
    }

    fn index(self) -> usize {
        (self.u as usize) | (self.v as usize) << 1
    }
}

/// The hyperedge a recurrence step expands, listed from its designated first
/// point `c₁` along `α`.
fn check_pivot(h: &Hypermap, cycle: &[usize], k: usize) -> Result<()> {
    let m = cycle.len();
    if m < 2 {
        return Err(Error::CycleTooShort(m));
    }
    if k == 0 || k > m {
        return Err(Error::BranchOutOfRange { k, m });
    }
    let n = h.n();
    if let Some(&p) = cycle.iter().find(|&&p| p == 0 || p > n) {
        return Err(Error::PointOutOfRange { point: p, n });
    }
    let closes = (0..m).all(|i| h.alpha().apply(cycle[i]) == cycle[(i + 1) % m]);
    if !closes {
        return Err(Error::NotACycle(format!("{cycle:?}")));
    }
    Ok(())
}

/// Replaces the hyperedge `cycle` by `(c₁)(c₂ … c_m)` for `k ∈ {1, 2}` and by
/// `(c₁)(c₂ … c_{k-1})(c_k … c_m)` otherwise.
fn split_alpha(alpha: &Permutation, cycle: &[usize], k: usize) -> Permutation {
    let m = cycle.len();
    let mut image = alpha.images();
    let set = |image: &mut Vec<usize>, from: usize, to: usize| image[from - 1] = to;
    set(&mut image, cycle[0], cycle[0]);
    let close_run = |image: &mut Vec<usize>, lo: usize, hi: usize| {
        // Run cycle[lo..=hi] closes back to cycle[lo].
        set(image, cycle[hi], cycle[lo]);
    };
    if k <= 2 {
        close_run(&mut image, 1, m - 1);
    } else {
        close_run(&mut image, 1, k - 2);
        close_run(&mut image, k - 1, m - 1);
    }
    Permutation::from_images(&image).expect("splitting a cycle yields a permutation")
}

/// `φ_k(H)` for the hyperedge `cycle = (c₁ … c_m)` of `α` and `k ∈ 1..=m`:
/// `σ` gains the transposition `(c₁ c_k)` on the left when `c₁` and `c_k` lie on
/// different vertices, and the hyperedge is split as in [`split_alpha`].
pub fn phi_k(h: &Hypermap, cycle: &[usize], k: usize) -> Result<Hypermap> {
    check_pivot(h, cycle, k)?;
    let (a, b) = (cycle[0], cycle[k - 1]);
    let sigma = if h.sigma().same_cycle(a, b) {
        h.sigma().clone()
    } else {
        h.sigma().left_transpose(a, b)
    };
    Ok(Hypermap::new_unchecked(sigma, split_alpha(h.alpha(), cycle, k)))
}

/// The same branch written as a single product of transpositions:
/// `((1,k)σ, (1,k)α(1,k-1))` when `z((1,k)σ) ≤ z(σ)`, otherwise
/// `(σ, (1,k)α(1,k-1))`, with `k - 1` read as `m` when `k = 1` and `(1,1)` the
/// identity.
pub fn phi_k_by_transpositions(h: &Hypermap, cycle: &[usize], k: usize) -> Result<Hypermap> {
    check_pivot(h, cycle, k)?;
    let m = cycle.len();
    let c = |i: usize| cycle[(i + m - 1) % m];
    let (one, ck, ckm1) = (c(1), c(k), c(k + m - 1));
    let alpha = h.alpha().left_transpose(one, ck).right_transpose(one, ckm1);
    let moved = h.sigma().left_transpose(one, ck);
    let sigma = if moved.cycle_count() <= h.vertex_count() { moved } else { h.sigma().clone() };
    Ok(Hypermap::new_unchecked(sigma, alpha))
}

fn branch_weight(h: &Hypermap, child_kappa: usize, cycle: &[usize], k: usize) -> Weight {
    let du = child_kappa as i64 - h.kappa() as i64;
    assert!(du == 0 || du == 1, "component count jumped by {du} in branch {k} of {h:?}");
    let v = k != 1 && h.sigma().same_cycle(cycle[0], cycle[k - 1]);
    Weight { u: du == 1, v }
}

/// `ψ_k(H)` by the four-case rule. `c₁, c₂, c_k, c_{k-1}, c_m` play the roles
/// of `1, 2, k, k-1, m`; indices wrap modulo `m` and `(x,x)` is the identity.
pub fn psi_k(h: &Hypermap, cycle: &[usize], k: usize) -> Result<Hypermap> {
    let phi = phi_k(h, cycle, k)?;
    let m = cycle.len();
    let c = |i: usize| cycle[(i + m - 1) % m];
    let (one, two, ck, ckm1, cm) = (c(1), c(2), c(k), c(k + m - 1), c(m));
    let sigma = h.sigma();
    let alpha = h.alpha();
    let merges = sigma.left_transpose(one, ck).cycle_count() <= sigma.cycle_count();
    let grows = phi.kappa() == h.kappa() + 1;
    let (s, a) = match (merges, grows) {
        (true, false) => (sigma.left_transpose(one, ck), alpha.left_transpose(one, ck).right_transpose(one, ckm1)),
        (true, true) => (
            sigma.left_transpose(one, ck).left_transpose(one, two),
            alpha.left_transpose(one, ck).left_transpose(one, two),
        ),
        (false, false) => (sigma.clone(), alpha.right_transpose(one, ckm1).right_transpose(one, cm)),
        (false, true) => (sigma.left_transpose(one, two), alpha.left_transpose(one, two).right_transpose(ckm1, cm)),
    };
    debug_assert_eq!(&a, phi.alpha(), "psi and phi disagree on hyperedges");
    let out = Hypermap::new_unchecked(s, a);
    debug_assert_eq!(out.kappa(), h.kappa(), "psi changed the component count");
    Ok(out)
}

/// The hyperedge a recurrence expands: the one of length at least two through
/// the smallest such point, starting at its minimum.
pub fn pivot_cycle(h: &Hypermap) -> Option<Vec<usize>> {
    h.alpha().cycles().into_iter().find(|c| c.len() >= 2)
}

/// Which algorithm produced a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    BruteForce,
    PhiRecurrence,
    PsiRecurrence,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::BruteForce => "brute",
            Method::PhiRecurrence => "phi",
            Method::PsiRecurrence => "psi",
        }
    }
}

/// Counters collected while evaluating.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Recursive calls made, memo hits included.
    pub nodes: u64,
    pub memo_hits: u64,
    pub memo_entries: u64,
    /// How often each weight `1, u, v, uv` occurred.
    pub weights: [u64; 4],
    /// Refinements enumerated by the brute-force method.
    pub refinements: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhitneyResult {
    pub polynomial: Bivariate,
    pub method: Method,
    pub stats: Stats,
}

/// Memoized recursive evaluator. The memo is keyed on the canonical form and
/// stops growing once `capacity` entries are stored.
pub struct WhitneyEngine {
    method: Method,
    memo: HashMap<CanonicalKey, Bivariate>,
    capacity: usize,
    stats: Stats,
}

impl WhitneyEngine {
    pub const DEFAULT_CAPACITY: usize = 1 << 20;

    pub fn new(method: Method) -> Self {
        Self::with_capacity(method, Self::DEFAULT_CAPACITY)
    }

    pub fn with_capacity(method: Method, capacity: usize) -> Self {
        assert!(method != Method::BruteForce, "the engine runs a recurrence");
        WhitneyEngine { method, memo: HashMap::new(), capacity, stats: Stats::default() }
    }

    pub fn stats(&self) -> &Stats {
        &self.stats
    }

    pub fn evaluate(&mut self, h: &Hypermap) -> Bivariate {
        self.stats.nodes += 1;
        let Some(cycle) = pivot_cycle(h) else {
            return Bivariate::one();
        };
        let key = h.canonical_form();
        if let Some(p) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return p.clone();
        }
        let mut acc = Bivariate::zero();
        for k in 1..=cycle.len() {
            let (child, weight) = self.branch(h, &cycle, k);
            self.stats.weights[weight.index()] += 1;
            let sub = self.evaluate(&child);
            acc = acc + sub.shift(weight.u as i64, weight.v as i64);
        }
        if self.memo.len() < self.capacity {
            self.memo.insert(key, acc.clone());
            self.stats.memo_entries = self.memo.len() as u64;
        }
        acc
    }

    fn branch(&self, h: &Hypermap, cycle: &[usize], k: usize) -> (Hypermap, Weight) {
        let phi = phi_k(h, cycle, k).expect("pivot is a valid hyperedge");
        let weight = branch_weight(h, phi.kappa(), cycle, k);
        match self.method {
            Method::PhiRecurrence => (phi, weight),
            Method::PsiRecurrence => (psi_k(h, cycle, k).expect("pivot is a valid hyperedge"), weight),
            Method::BruteForce => unreachable!(),
        }
    }
}

/// `R` by the `φ` recurrence.
pub fn whitney_phi(h: &Hypermap) -> Bivariate {
    WhitneyEngine::new(Method::PhiRecurrence).evaluate(h)
}

/// `R` by the connectivity-preserving `ψ` recurrence.
pub fn whitney_psi(h: &Hypermap) -> Bivariate {
    WhitneyEngine::new(Method::PsiRecurrence).evaluate(h)
}

/// `R` by the chosen method, with counters.
pub fn whitney(h: &Hypermap, method: Method) -> WhitneyResult {
    match method {
        Method::BruteForce => {
            let polynomial = whitney_bruteforce(h);
            let stats = Stats {
                refinements: polynomial.terms().map(|(_, c)| u64::try_from(c).unwrap_or(u64::MAX)).sum(),
                ..Stats::default()
            };
            WhitneyResult { polynomial, method, stats }
        }
        _ => {
            let mut engine = WhitneyEngine::new(method);
            let polynomial = engine.evaluate(h);
            WhitneyResult { polynomial, method, stats: engine.stats.clone() }
        }
    }
}

/// One term of the top-level expansion `R(H) = Σ_k w_k · R(child_k)`.
#[derive(Clone, Debug)]
pub struct Branch {
    pub k: usize,
    pub weight: Weight,
    pub child: Hypermap,
    pub polynomial: Bivariate,
}

/// The top-level branches of the chosen recurrence on the pivot hyperedge.
/// Empty when every hyperedge is a bud.
pub fn top_level_branches(h: &Hypermap, method: Method) -> Vec<Branch> {
    let Some(cycle) = pivot_cycle(h) else {
        return Vec::new();
    };
    let engine = WhitneyEngine::new(if method == Method::BruteForce { Method::PhiRecurrence } else { method });
    (1..=cycle.len())
        .map(|k| {
            let (child, weight) = engine.branch(h, &cycle, k);
            let polynomial = whitney_bruteforce(&child);
            Branch { k, weight, child, polynomial }
        })
        .collect()
}

/// Merges the vertices through `i` and `j`, which must lie in different
/// components: returns `((i j)σ, α)`. The Whitney polynomial is unchanged.
pub fn merge_components(h: &Hypermap, i: usize, j: usize) -> Result<Hypermap> {
    let n = h.n();
    for p in [i, j] {
        if p == 0 || p > n {
            return Err(Error::PointOutOfRange { point: p, n });
        }
    }
    let comp = h.component_index();
    if comp[i - 1] == comp[j - 1] {
        return Err(Error::SameComponent(i, j));
    }
    Ok(Hypermap::new_unchecked(h.sigma().left_transpose(i, j), h.alpha().clone()))
}

/// The dual `(α⁻¹σ, α⁻¹)`.
pub fn dual(h: &Hypermap) -> Hypermap {
    let ainv = h.alpha().inverse();
    Hypermap::new_unchecked(ainv.compose_unchecked(h.sigma()), ainv)
}

/// Values of `R` at its counting points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specializations {
    /// `R(0, 0)`: spanning hyperforests.
    pub hyperforests: BigInt,
    /// `R(0, 1)`: spanning collections.
    pub spanning_collections: BigInt,
    /// `R(v⁻¹, v)` as a Laurent polynomial in `v`.
    pub hyperbola: Univariate,
}

pub fn specializations_of(r: &Bivariate) -> Specializations {
    // Exponents of u are never negative, so u = 0 keeps only the u-free terms.
    let mut hyperforests = BigInt::zero();
    let mut spanning = BigInt::zero();
    for (&(eu, ev), c) in r.terms() {
        if eu == 0 {
            spanning += c;
            if ev == 0 {
                hyperforests += c;
            }
        }
    }
    let hyperbola = r
        .substitute(&Univariate::monomial(-1, 1), &Univariate::var())
        .expect("u is replaced by a unit monomial");
    Specializations { hyperforests, spanning_collections: spanning, hyperbola }
}

pub fn specializations(h: &Hypermap) -> Specializations {
    specializations_of(&whitney_phi(h))
}

/// For a genus-zero collection, `Σ_{β ≤ α} u^wet(β) · v^dry(β)` where
/// `wet(β) = κ(σ, β)` counts one outer coastline per component and
/// `dry(β) = z(β⁻¹σ) - κ(σ, β)` the remaining faces. Equals
/// `u^κ(σ,α) · R(σ, α; u, v)`.
pub fn wet_dry_polynomial(h: &Hypermap) -> Result<Bivariate> {
    if h.genus() != 0 {
        return Err(Error::NonzeroGenus(h.genus()));
    }
    let mut acc: HashMap<(i64, i64), u64> = HashMap::new();
    for beta in refinements(h.alpha()) {
        let wet = orbit_count_of(h.sigma(), &beta) as i64;
        let faces = beta.inverse().compose_unchecked(h.sigma()).cycle_count() as i64;
        *acc.entry((wet, faces - wet)).or_default() += 1;
    }
    let p = collect_counts(acc);
    debug_assert_eq!(p, whitney_bruteforce(h).shift(h.kappa() as i64, 0));
    Ok(p)
}

/// `T = R(x - 1, y - 1)` as a raw substitution, printed in `u, v`.
pub fn shifted_whitney(r: &Bivariate) -> Bivariate {
    r.shift_variables(&-BigInt::one(), &-BigInt::one()).expect("R has no negative exponents")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hm(n: usize, s: &[&[usize]], a: &[&[usize]]) -> Hypermap {
        Hypermap::from_cycles(n, s, a).unwrap()
    }

    fn fig1() -> Hypermap {
        hm(5, &[&[1, 4], &[2, 5], &[3]], &[&[1, 2, 3], &[4, 5]])
    }

    #[test]
    fn five_point_polynomial() {
        let h = fig1();
        let want = "u^2 + u*v + 4*u + v + 3";
        assert_eq!(whitney_bruteforce(&h).to_string(), want);
        assert_eq!(whitney_phi(&h).to_string(), want);
        assert_eq!(whitney_psi(&h).to_string(), want);
        assert_eq!(whitney_bruteforce_par(&h).to_string(), want);
    }

    #[test]
    fn five_point_branches() {
        let got: Vec<String> =
            top_level_branches(&fig1(), Method::PhiRecurrence).iter().map(|b| b.polynomial.to_string()).collect();
        assert_eq!(got, ["u^2 + 2*u + 1", "u*v + u + v + 1", "u + 1"]);
        let children: Vec<String> = top_level_branches(&fig1(), Method::PhiRecurrence)
            .iter()
            .map(|b| format!("{} / {}", b.child.sigma(), b.child.alpha()))
            .collect();
        assert_eq!(
            children,
            [
                "(1 4)(2 5)(3) / (1)(2 3)(4 5)",
                "(1 4 2 5)(3) / (1)(2 3)(4 5)",
                "(1 4 3)(2 5) / (1)(2)(3)(4 5)",
            ]
        );
    }

    #[test]
    fn small_hypermap_with_uv_branch() {
        let h = hm(3, &[&[1, 3], &[2]], &[&[1, 2, 3]]);
        assert_eq!(whitney_bruteforce(&h).to_string(), "u*v + u + v + 2");
        let branches = top_level_branches(&h, Method::PhiRecurrence);
        assert_eq!(branches[2].weight, Weight { u: true, v: true });
        assert_eq!(branches[2].polynomial, Bivariate::one());
        let psi = top_level_branches(&h, Method::PsiRecurrence);
        assert!(psi.iter().all(|b| b.child.is_connected()));
        assert_eq!(whitney_psi(&h), whitney_bruteforce(&h));
    }

    #[test]
    fn six_point_constant_terms() {
        let a = hm(6, &[&[1, 5], &[2, 6]], &[&[1, 2, 3, 4], &[5, 6]]);
        let b = hm(6, &[&[1, 5], &[2, 6]], &[&[1, 4, 2, 3], &[5, 6]]);
        // α itself contributes v, not 1.
        assert_eq!(whitney_bruteforce(&a).coefficient(0, 0), BigInt::from(4));
        assert_eq!(whitney_bruteforce(&b).coefficient(0, 0), BigInt::from(5));
    }

    #[test]
    fn narayana_three() {
        let h = hm(3, &[], &[&[1, 2, 3]]);
        assert_eq!(whitney_bruteforce(&h).to_string(), "u^2 + 3*u + 1");
        assert_eq!(whitney_bruteforce(&dual(&h)).to_string(), "v^2 + 3*v + 1");
    }

    #[test]
    fn all_buds_give_one() {
        let h = hm(4, &[&[1, 2, 3, 4]], &[]);
        assert_eq!(whitney_bruteforce(&h), Bivariate::one());
        assert_eq!(whitney_phi(&h), Bivariate::one());
    }

    #[test]
    fn phi_on_an_edge() {
        // Non-loop edge (1 2) between vertices (1 3) and (2 4).
        let h = hm(4, &[&[1, 3], &[2, 4]], &[&[1, 2]]);
        let del = phi_k(&h, &[1, 2], 1).unwrap();
        assert_eq!(del.sigma(), h.sigma());
        assert!(del.alpha().is_identity());
        let con = phi_k(&h, &[1, 2], 2).unwrap();
        assert_eq!(con.sigma().to_string(), "(1 3 2 4)");
        assert!(con.alpha().is_identity());
    }

    #[test]
    fn phi_rejects_bad_pivots() {
        let h = fig1();
        assert_eq!(phi_k(&h, &[1, 2, 3], 4).unwrap_err(), Error::BranchOutOfRange { k: 4, m: 3 });
        assert_eq!(phi_k(&h, &[1, 2, 3], 0).unwrap_err(), Error::BranchOutOfRange { k: 0, m: 3 });
        assert_eq!(phi_k(&h, &[1], 1).unwrap_err(), Error::CycleTooShort(1));
        assert!(matches!(phi_k(&h, &[1, 3, 2], 1), Err(Error::NotACycle(_))));
    }

    #[test]
    fn phi_modular_conventions() {
        // k = 1 reads k - 1 as m; (1, 1) is the identity.
        let h = hm(6, &[&[1, 5], &[2, 6], &[3, 4]], &[&[1, 2, 3, 4], &[5, 6]]);
        let cycle = [1, 2, 3, 4];
        for k in 1..=4 {
            assert_eq!(phi_k(&h, &cycle, k).unwrap(), phi_k_by_transpositions(&h, &cycle, k).unwrap(), "k={k}");
        }
        assert_eq!(phi_k(&h, &cycle, 1).unwrap().alpha().to_string(), "(1)(2 3 4)(5 6)");
        assert_eq!(phi_k(&h, &cycle, 2).unwrap().alpha().to_string(), "(1)(2 3 4)(5 6)");
        assert_eq!(phi_k(&h, &cycle, 3).unwrap().alpha().to_string(), "(1)(2)(3 4)(5 6)");
        assert_eq!(phi_k(&h, &cycle, 4).unwrap().alpha().to_string(), "(1)(2 3)(4)(5 6)");
        // A pivot that does not start at the cycle minimum.
        let rotated = [3, 4, 1, 2];
        for k in 1..=4 {
            assert_eq!(
                phi_k(&h, &rotated, k).unwrap(),
                phi_k_by_transpositions(&h, &rotated, k).unwrap(),
                "rotated k={k}"
            );
        }
    }

    #[test]
    fn merge_keeps_polynomial() {
        let h = fig1().disjoint_union(&hm(3, &[&[1, 3], &[2]], &[&[1, 2, 3]]));
        let merged = merge_components(&h, 1, 6).unwrap();
        assert_eq!(merged.kappa(), h.kappa() - 1);
        assert_eq!(merged.vertex_count(), h.vertex_count() - 1);
        assert_eq!(whitney_bruteforce(&merged), whitney_bruteforce(&h));
        assert_eq!(merge_components(&h, 1, 2).unwrap_err(), Error::SameComponent(1, 2));
    }

    #[test]
    fn specializations_of_five_point_example() {
        let s = specializations(&fig1());
        assert_eq!(s.hyperforests, BigInt::from(3));
        assert_eq!(s.spanning_collections, BigInt::from(4));
        assert_eq!(s.hyperbola.display("v").to_string(), "v + 4 + 4*v^-1 + v^-2");
        let id = hm(3, &[&[1, 2]], &[]);
        assert_eq!(specializations(&id).hyperforests, BigInt::one());
    }

    #[test]
    fn wet_dry_examples() {
        let h = fig1();
        assert_eq!(wet_dry_polynomial(&h).unwrap(), whitney_bruteforce(&h).shift(1, 0));
        let id = hm(4, &[], &[]);
        assert_eq!(wet_dry_polynomial(&id).unwrap().to_string(), "u^4");
        let torus = hm(4, &[&[1, 2, 3, 4]], &[&[1, 3], &[2, 4]]);
        assert_eq!(wet_dry_polynomial(&torus).unwrap_err(), Error::NonzeroGenus(1));
    }

    #[test]
    fn tutte_style_shift_has_negative_coefficient() {
        let h = hm(3, &[], &[&[1, 2, 3]]);
        assert_eq!(shifted_whitney(&whitney_bruteforce(&h)).to_string(), "u^2 + u - 1");
    }
}
