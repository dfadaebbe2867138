//! Identity checks over single instances and the self-test that runs them on
//! a seeded corpus.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::charflow::{
    characteristic_polynomial, chromatic_identity_lhs, compatible_coloring_count, flow_count, flow_identity_lhs,
    flow_polynomial, flow_space, is_flow, is_nowhere_zero, nowhere_zero_flow_count, proper_coloring_count,
    unique_nz_refinement, unique_nz_refinement_in_order, x_interval, Flow, PrimeField,
};
use crate::corpus::{corpus, random_eulerian_digraph, rng, CorpusSpec};
use crate::medial::{
    circuit_partition_by_refinements, circuit_partition_polynomial, circuits_of_state, coherent_matchings,
    digraphs_isomorphic, directed_medial_graph, eulerian_coloring_sum, eulerian_coloring_sum_by_states,
    from_eulerian_digraph, induced_refinement, map_eulerian_coloring_sum, matching_of_refinement, medial_map,
    EulerianDigraph,
};
use crate::nc::{catalan, is_refinement, mobius, mobius_unfactored, refinement_count, refinements};
use crate::oracle::{spanning_counts, Graph};
use crate::perm::{Hypermap, Permutation};
use crate::poly::{Bivariate, Univariate};
use crate::whitney::{
    dual, merge_components, phi_k, phi_k_by_transpositions, pivot_cycle, psi_k, specializations_of,
    whitney_bruteforce, whitney_bruteforce_par, whitney_phi, whitney_psi,
};

pub type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn ok_or<T, E: fmt::Display>(r: Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn pow(base: i64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// Polynomial `x^κ · R(x, x)`.
fn diagonal_times(r: &Bivariate, kappa: usize) -> Univariate {
    let x = Univariate::var();
    r.substitute(&x, &x).expect("R has no negative exponents").shift(kappa as i64)
}

/// Brute force, `φ` and `ψ` agree; optionally the parallel brute force too.
pub fn check_methods_agree(h: &Hypermap, parallel: bool) -> Check {
    let brute = whitney_bruteforce(h);
    let phi = whitney_phi(h);
    let psi = whitney_psi(h);
    ensure!(brute == phi, "{h:?}: brute {brute} vs phi {phi}");
    ensure!(brute == psi, "{h:?}: brute {brute} vs psi {psi}");
    if parallel {
        let par = whitney_bruteforce_par(h);
        ensure!(brute == par, "{h:?}: brute {brute} vs parallel {par}");
    }
    Ok(())
}

/// Walks the whole `φ` and `ψ` recursion trees without memoization. At every
/// node each branch must change `κ` by 0 or 1 (so the weight is one of
/// `1, u, v, uv`), the two descriptions of `φ_k` must agree, `ψ_k` must keep
/// `κ` and share the hyperedges of `φ_k`, and on connected input every `ψ`
/// node must stay connected.
pub fn check_recursion_tree(h: &Hypermap) -> Check {
    fn walk(h: &Hypermap, psi: bool, root_connected: bool) -> Check {
        let Some(cycle) = pivot_cycle(h) else {
            return Ok(());
        };
        for k in 1..=cycle.len() {
            let phi = ok_or(phi_k(h, &cycle, k))?;
            let alt = ok_or(phi_k_by_transpositions(h, &cycle, k))?;
            ensure!(phi == alt, "{h:?} k={k}: phi forms differ: {phi:?} vs {alt:?}");
            let du = phi.kappa() as i64 - h.kappa() as i64;
            ensure!(du == 0 || du == 1, "{h:?} k={k}: component count moved by {du}");
            if psi {
                let child = ok_or(psi_k(h, &cycle, k))?;
                ensure!(child.kappa() == h.kappa(), "{h:?} k={k}: psi changed κ to {}", child.kappa());
                ensure!(child.alpha() == phi.alpha(), "{h:?} k={k}: psi and phi hyperedges differ");
                ensure!(!root_connected || child.is_connected(), "{h:?} k={k}: psi disconnected");
                walk(&child, true, root_connected)?;
            } else {
                walk(&phi, false, root_connected)?;
            }
        }
        Ok(())
    }
    walk(h, false, h.is_connected())?;
    walk(h, true, h.is_connected())
}

/// `R(H₁ ⊔ H₂) = R(H₁) · R(H₂)`.
pub fn check_product(a: &Hypermap, b: &Hypermap) -> Check {
    let lhs = whitney_phi(&a.disjoint_union(b));
    let rhs = whitney_phi(a) * whitney_phi(b);
    ensure!(lhs == rhs, "{a:?} ⊔ {b:?}: {lhs} vs {rhs}");
    Ok(())
}

/// Joining two components at a vertex leaves `R` unchanged.
pub fn check_merge(h: &Hypermap) -> Check {
    if h.kappa() < 2 {
        return Ok(());
    }
    let comp = h.component_index();
    let i = 1;
    let j = (1..=h.n()).find(|&p| comp[p - 1] != comp[0]).expect("two components");
    let merged = ok_or(merge_components(h, i, j))?;
    ensure!(merged.kappa() + 1 == h.kappa(), "{h:?}: merge did not join components");
    let (a, b) = (whitney_bruteforce(h), whitney_bruteforce(&merged));
    ensure!(a == b, "{h:?}: merge changed R from {a} to {b}");
    Ok(())
}

/// For genus zero, `R(dual; u, v) = R(v, u)`.
pub fn check_planar_dual(h: &Hypermap) -> Check {
    let d = dual(h);
    ensure!(d.genus() == h.genus(), "{h:?}: dual genus {} vs {}", d.genus(), h.genus());
    if h.genus() != 0 {
        return Ok(());
    }
    let (r, rd) = (whitney_bruteforce(h), whitney_bruteforce(&d));
    ensure!(rd == r.swap_variables(), "{h:?}: R = {r}, R(dual) = {rd}");
    Ok(())
}

/// `R(0,0)` and `R(0,1)` against direct enumeration of spanning structures.
pub fn check_spanning(h: &Hypermap) -> Check {
    let s = specializations_of(&whitney_bruteforce(h));
    let direct = spanning_counts(h);
    ensure!(s.hyperforests == BigInt::from(direct.hyperforests), "{h:?}: R(0,0)={} direct {}", s.hyperforests, direct.hyperforests);
    ensure!(
        s.spanning_collections == BigInt::from(direct.spanning),
        "{h:?}: R(0,1)={} direct {}",
        s.spanning_collections,
        direct.spanning
    );
    let total = s.hyperbola.evaluate_int(1).map_err(|e| e.to_string())?;
    ensure!(total == BigInt::from(refinement_count(h.alpha())), "{h:?}: R(1,1) is not the refinement count");
    Ok(())
}

/// Medial structure, the matching–refinement bijection, circuit counts, and
/// for genus zero with at most `max_genmartin` points, `j(M; x) = x^κ R(x, x)`.
pub fn check_medial(h: &Hypermap, max_genmartin: usize) -> Check {
    let m = medial_map(h);
    ensure!(m.genus() == h.genus(), "{h:?}: medial genus {} vs {}", m.genus(), h.genus());
    ensure!(m.sigma().cycle_count() == h.hyperedge_count(), "{h:?}: z(σ′) ≠ z(α)");
    ensure!(m.alpha().cycle_count() == h.n(), "{h:?}: z(α′) ≠ n");
    ensure!(m.source().as_ref() == Some(h), "{h:?}: medial map does not recover its source");
    let mut seen = std::collections::HashSet::new();
    let mut count = 0u64;
    for mu in coherent_matchings(&m) {
        count += 1;
        let beta = induced_refinement(&mu);
        ensure!(is_refinement(&beta, h.alpha()), "{h:?}: matching induces non-refinement {beta}");
        ensure!(matching_of_refinement(&beta) == mu, "{h:?}: matching of {beta} does not round-trip");
        ensure!(seen.insert(beta.clone()), "{h:?}: two matchings induce {beta}");
        let circuits = ok_or(circuits_of_state(&m, &mu))?.len();
        let faces = beta.inverse().compose_unchecked(h.sigma()).cycle_count();
        ensure!(circuits == faces, "{h:?}: {circuits} circuits but z(β⁻¹σ) = {faces} for {beta}");
    }
    ensure!(BigInt::from(count) == BigInt::from(refinement_count(h.alpha())), "{h:?}: matching count differs from refinements");
    let j = circuit_partition_polynomial(&m);
    ensure!(j == circuit_partition_by_refinements(h), "{h:?}: circuit partition polynomial routes differ");
    if h.genus() == 0 && h.n() <= max_genmartin {
        let rhs = diagonal_times(&whitney_bruteforce(h), h.kappa());
        ensure!(j == rhs, "{h:?}: j = {j}, x^κ R(x,x) = {rhs}");
    }
    if h.max_hyperedge_len() <= 2 {
        ensure!(count == 1 << h.alpha().cycles().iter().filter(|c| c.len() == 2).count(), "{h:?}: map state count");
    }
    Ok(())
}

/// `Σ_λ Π ν(v, λ) = m^κ R(m, m)` for genus zero, the same sum over whole
/// states, and for maps the `Σ 2^mono` form.
pub fn check_coloring_sum(h: &Hypermap, m: usize) -> Check {
    if h.genus() != 0 {
        return Ok(());
    }
    let lhs = ok_or(eulerian_coloring_sum(h, m))?;
    let r = whitney_bruteforce(h);
    let rhs = pow(m as i64, h.kappa()) * ok_or(r.evaluate_int(m as i64, m as i64))?;
    ensure!(lhs == rhs, "{h:?} m={m}: coloring sum {lhs} vs m^κ R(m,m) = {rhs}");
    let by_states = ok_or(eulerian_coloring_sum_by_states(h, m))?;
    ensure!(lhs == by_states, "{h:?} m={m}: per-vertex {lhs} vs whole states {by_states}");
    if h.max_hyperedge_len() <= 2 {
        let map_sum = ok_or(map_eulerian_coloring_sum(h, m))?;
        ensure!(lhs == map_sum, "{h:?} m={m}: {lhs} vs Σ 2^mono = {map_sum}");
    }
    Ok(())
}

/// The two polynomial identities, their planar corollary, and for maps the
/// agreement with graph polynomials computed by subset expansion.
pub fn check_char_flow_identities(h: &Hypermap) -> Check {
    let chrom = chromatic_identity_lhs(h);
    ensure!(chrom == Univariate::monomial(h.vertex_count() as i64, 1), "{h:?}: Σ X([β,α]) = {chrom}");
    let flow = flow_identity_lhs(h);
    let e = h.n() as i64 + h.kappa() as i64 - h.hyperedge_count() as i64 - h.vertex_count() as i64;
    ensure!(flow == Univariate::monomial(e, 1), "{h:?}: Σ C(σ,β) = {flow}");
    let id = Permutation::identity(h.n());
    let chi = characteristic_polynomial(h);
    ensure!(
        ok_or(x_interval(h, &id, h.alpha()))? == chi.shift(h.kappa() as i64),
        "{h:?}: X([id,α]) ≠ t^κ χ"
    );
    if h.genus() == 0 {
        let planar = flow.shift(h.kappa() as i64);
        ensure!(planar == Univariate::monomial(h.face_count() as i64, 1), "{h:?}: planar flow identity gives {planar}");
    }
    if h.max_hyperedge_len() <= 2 {
        let g = ok_or(Graph::of_map(h))?;
        let r = whitney_bruteforce(h);
        ensure!(ok_or(g.whitney_rank())? == r, "{h:?}: R differs from the graph rank polynomial");
        ensure!(ok_or(g.chromatic())? == chi.shift(h.kappa() as i64), "{h:?}: t^κ χ differs from P(G;t)");
        ensure!(ok_or(g.flow())? == flow_polynomial(h), "{h:?}: C differs from F(G;t)");
        let t = Univariate::var();
        let sign = if (h.vertex_count() - h.kappa()).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
        let via_r = ok_or(r.substitute(&-&t, &Univariate::constant(-1)))?.scale(&sign);
        ensure!(via_r == chi, "{h:?}: χ = {chi} but ±R(-t,-1) = {via_r}");
    }
    Ok(())
}

/// When every hyperedge has at most three points, proper colorings count
/// `m^κ χ(m)` and compatible colorings count `X([α₁, α]; m)` for every
/// `α₁ ≤ α`.
pub fn check_colorings(h: &Hypermap, ms: &[usize], cap: u64) -> Check {
    if h.max_hyperedge_len() > 3 {
        return Ok(());
    }
    let chi = characteristic_polynomial(h).shift(h.kappa() as i64);
    for &m in ms {
        let count = ok_or(proper_coloring_count(h, m, cap))?;
        let value = ok_or(chi.evaluate_int(m as i64))?;
        ensure!(count == value, "{h:?} m={m}: {count} proper colorings, m^κ χ(m) = {value}");
    }
    for alpha1 in refinements(h.alpha()) {
        let x = ok_or(x_interval(h, &alpha1, h.alpha()))?;
        for &m in ms.iter().filter(|&&m| m <= 3) {
            let count = ok_or(compatible_coloring_count(h, &alpha1, m, cap))?;
            let value = ok_or(x.evaluate_int(m as i64))?;
            ensure!(count == value, "{h:?} α₁={alpha1} m={m}: {count} compatible colorings, X = {value}");
        }
    }
    Ok(())
}

/// When every hyperedge has at most three points, nowhere-zero flows over
/// `GF(q)` number `C(q)`; for `q ≤ unique_q_max`, every flow is nowhere zero on
/// exactly one refinement, found by cutting its zero points out as buds.
pub fn check_nowhere_zero(h: &Hypermap, qs: &[u64], unique_q_max: u64, cap: u64) -> Check {
    if h.max_hyperedge_len() > 3 {
        return Ok(());
    }
    let c = flow_polynomial(h);
    let refs: Vec<Permutation> = refinements(h.alpha()).collect();
    for &q in qs {
        let count = ok_or(nowhere_zero_flow_count(h, q, cap))?;
        let value = ok_or(c.evaluate_int(q as i64))?;
        ensure!(count == value, "{h:?} q={q}: {count} nowhere-zero flows, C(q) = {value}");
        if q > unique_q_max {
            continue;
        }
        let space = ok_or(flow_space(h, q))?;
        let reversed: Vec<usize> = (1..=h.n()).rev().collect();
        for f in space.flows(h.n()) {
            let beta = ok_or(unique_nz_refinement(h, &f))?;
            let again = ok_or(unique_nz_refinement_in_order(h, &f, &reversed))?;
            ensure!(beta == again, "{h:?}: bud removal depends on order");
            let witnesses: Vec<&Permutation> = refs
                .iter()
                .filter(|g| {
                    let sub = Hypermap::new(h.sigma().clone(), (*g).clone()).expect("same size");
                    is_flow(&sub, &f) && is_nowhere_zero(&sub, &f)
                })
                .collect();
            ensure!(
                witnesses.len() == 1 && *witnesses[0] == beta,
                "{h:?} f={:?}: nowhere zero on {} refinements",
                f.values,
                witnesses.len()
            );
        }
    }
    Ok(())
}

/// Flow-space dimension is `n + κ - z(σ) - z(α)` and there are `q^dim` flows;
/// when `q^n ≤ brute_cap` the flows are also counted over all assignments.
pub fn check_flow_space(h: &Hypermap, q: u64, brute_cap: u64) -> Check {
    let space = ok_or(flow_space(h, q))?;
    let expected = h.n() + h.kappa() - h.vertex_count() - h.hyperedge_count();
    ensure!(space.dimension() == expected, "{h:?} q={q}: dimension {} vs {expected}", space.dimension());
    let qdim = pow(q as i64, expected);
    ensure!(ok_or(flow_count(h, q, u64::MAX))? == qdim, "{h:?} q={q}: flow count is not q^dim");
    let field = ok_or(PrimeField::new(q))?;
    if (q as f64).powi(h.n() as i32) <= brute_cap as f64 {
        let n = h.n();
        let mut values = vec![0i64; n];
        let mut count = 0u64;
        loop {
            count += is_flow(h, &Flow::new(field, &values)) as u64;
            let mut i = 0;
            while i < n {
                values[i] += 1;
                if values[i] < q as i64 {
                    break;
                }
                values[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        ensure!(BigInt::from(count) == qdim, "{h:?} q={q}: {count} flows by exhaustion, q^dim = {qdim}");
    }
    Ok(())
}

/// On `NC(m)` (refinements of an `m`-cycle): `Σ_{x ≤ y ≤ z} μ(x, y) = δ(x, z)`,
/// and `μ(0̂, 1̂) = (-1)^(m-1) Catalan(m-1)`.
pub fn check_mobius_lattice(m: usize) -> Check {
    let gamma = Permutation::from_cycles(m, &[(1..=m).collect::<Vec<_>>()]).expect("m-cycle");
    let elems: Vec<Permutation> = refinements(&gamma).collect();
    let k = elems.len();
    let leq: Vec<Vec<bool>> = elems.iter().map(|x| elems.iter().map(|y| is_refinement(x, y)).collect()).collect();
    for x in 0..k {
        let mu: Vec<Option<BigInt>> =
            (0..k).map(|y| if leq[x][y] { mobius(&elems[x], &elems[y]).ok() } else { None }).collect();
        for z in (0..k).filter(|&z| leq[x][z]) {
            let total: BigInt = (0..k).filter(|&y| leq[y][z]).filter_map(|y| mu[y].clone()).sum();
            let want = if x == z { BigInt::one() } else { BigInt::zero() };
            ensure!(total == want, "NC({m}): Σ μ over [{}, {}] = {total}", elems[x], elems[z]);
        }
    }
    let id = Permutation::identity(m);
    let top = ok_or(mobius(&id, &gamma))?;
    let sign = if m % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let want = sign * BigInt::from(catalan(m.saturating_sub(1)));
    ensure!(top == want, "NC({m}): μ(0̂,1̂) = {top}, expected {want}");
    Ok(())
}

/// Cycle-wise Möbius values agree with the recursion run on the whole
/// interval, for up to `limit` pairs `β ≤ α`.
pub fn check_mobius_multiplicative(alpha: &Permutation, limit: usize) -> Check {
    for beta in refinements(alpha).take(limit) {
        let a = ok_or(mobius(&beta, alpha))?;
        let b = ok_or(mobius_unfactored(&beta, alpha))?;
        ensure!(a == b, "μ({beta}, {alpha}): factored {a} vs whole {b}");
    }
    Ok(())
}

/// The directed medial graph of the constructed collection is isomorphic to `d`.
pub fn check_digraph_round_trip(d: &EulerianDigraph) -> Check {
    let h = from_eulerian_digraph(d);
    let back = directed_medial_graph(&h);
    ensure!(ok_or(digraphs_isomorphic(&back, d))?, "digraph\n{d}rebuilt as\n{back}");
    Ok(())
}

/// Permutation-level sanity: genus is well defined, relabelling preserves the
/// canonical key and `R`, and `(αβ)⁻¹ = β⁻¹α⁻¹`.
pub fn check_permutation_basics(h: &Hypermap) -> Check {
    let n = h.n();
    let twice = n as i64 + 2 * h.kappa() as i64
        - h.vertex_count() as i64
        - h.hyperedge_count() as i64
        - h.face_count() as i64;
    ensure!(twice == 2 * h.genus() as i64, "{h:?}: genus formula");
    let shift = Permutation::from_images(&(1..=n).map(|i| if i == n { 1 } else { i + 1 }).collect::<Vec<_>>())
        .unwrap_or_else(|_| Permutation::identity(n));
    let moved = ok_or(h.relabel(&shift))?;
    ensure!(moved.canonical_form() == h.canonical_form(), "{h:?}: relabelling changed the canonical key");
    ensure!(whitney_bruteforce(&moved) == whitney_bruteforce(h), "{h:?}: relabelling changed R");
    let ab = ok_or(h.alpha().compose(h.sigma()))?;
    ensure!(ab.inverse() == h.sigma().inverse().compose_unchecked(&h.alpha().inverse()), "{h:?}: inverse law");
    Ok(())
}

/// Bounds and seed for [`selftest`].
#[derive(Clone, Copy, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    pub n_max: usize,
    pub instances: usize,
    pub parallel: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig { seed: 0, n_max: 7, instances: 120, parallel: false }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            if o.passed() {
                writeln!(f, "PASS {} ({} instances)", o.name, o.instances)?;
            } else {
                writeln!(f, "FAIL {} ({} of {} instances)", o.name, o.failures.len(), o.instances)?;
                for msg in o.failures.iter().take(3) {
                    writeln!(f, "  {msg}")?;
                }
            }
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed()).count();
        write!(f, "{} checks, {} failed", self.outcomes.len(), failed)
    }
}

fn run_over<T>(name: &str, items: &[T], check: impl Fn(&T) -> Check) -> CheckOutcome {
    let failures: Vec<String> = items.iter().filter_map(|x| check(x).err()).collect();
    CheckOutcome { name: name.to_string(), instances: items.len(), failures }
}

fn single(name: &str, check: Check) -> CheckOutcome {
    CheckOutcome { name: name.to_string(), instances: 1, failures: check.err().into_iter().collect() }
}

/// Fixed examples with known values.
pub fn golden_checks() -> Vec<CheckOutcome> {
    let hm = |n: usize, s: &[&[usize]], a: &[&[usize]]| Hypermap::from_cycles(n, s, a).expect("valid example");
    let fig1 = hm(5, &[&[1, 4], &[2, 5], &[3]], &[&[1, 2, 3], &[4, 5]]);
    let mut out = Vec::new();
    out.push(single("golden: R of the five-point example", {
        let want = "u^2 + u*v + 4*u + v + 3";
        let got = [whitney_bruteforce(&fig1), whitney_phi(&fig1), whitney_psi(&fig1)];
        if got.iter().all(|p| p.to_string() == want) {
            Ok(())
        } else {
            Err(format!("{got:?}"))
        }
    }));
    out.push(single("golden: genus of the five-point example", {
        if fig1.genus() == 0 {
            Ok(())
        } else {
            Err(format!("genus {}", fig1.genus()))
        }
    }));
    out.push(single("golden: Narayana polynomials", (|| {
        for n in 2..=7usize {
            let h = hm(n, &[], &[&(1..=n).collect::<Vec<_>>()]);
            let r = whitney_bruteforce(&h);
            for k in 0..n {
                let narayana = catalan_binomial(n, k + 1);
                ensure!(r.coefficient(k as i64, 0) == narayana, "n={n}: coefficient of u^{k} is {}", r.coefficient(k as i64, 0));
            }
            ensure!(r.degree_v() == Some(0), "n={n}: v appears");
            ensure!(whitney_bruteforce(&dual(&h)) == r.swap_variables(), "n={n}: dual");
        }
        Ok(())
    })()));
    out.push(single("golden: circuit partition of the five-point example", {
        let j = circuit_partition_polynomial(&medial_map(&fig1));
        if j.to_string() == "2*x^3 + 5*x^2 + 3*x" {
            Ok(())
        } else {
            Err(j.to_string())
        }
    }));
    out.push(single("golden: Eulerian 2-colorings of the five-point example", {
        match eulerian_coloring_sum(&fig1, 2) {
            Ok(v) if v == BigInt::from(42) => Ok(()),
            other => Err(format!("{other:?}")),
        }
    }));
    out.push(single("golden: flow space of the eight-point example", {
        let h = hm(8, &[&[1, 5], &[2, 6], &[3, 7], &[4, 8]], &[&[1, 2, 3, 4], &[5, 6], &[7, 8]]);
        match flow_space(&h, 3) {
            Ok(s) if s.dimension() == 2 => Ok(()),
            other => Err(format!("{other:?}")),
        }
    }));
    out
}

/// `binom(n, k) binom(n, k-1) / n`.
fn catalan_binomial(n: usize, k: usize) -> BigInt {
    let binom = |a: usize, b: usize| -> BigInt {
        (0..b).fold(BigInt::one(), |acc, i| acc * BigInt::from(a - i) / BigInt::from(i + 1))
    };
    binom(n, k) * binom(n, k - 1) / BigInt::from(n)
}

/// Runs the golden examples and every identity over a seeded corpus.
pub fn selftest(config: SelftestConfig) -> Report {
    let spec = CorpusSpec { count: config.instances, n_max: config.n_max, max_alpha_len: 5, max_refinements: 100_000 };
    let hs = corpus(config.seed, spec);
    let small: Vec<Hypermap> = hs.iter().filter(|h| h.n() <= 6).cloned().collect();
    let pairs: Vec<(Hypermap, Hypermap)> = hs.chunks(2).filter(|c| c.len() == 2).map(|c| (c[0].clone(), c[1].clone())).collect();
    let mut digraph_rng = rng(config.seed ^ 0x5eed);
    let digraphs: Vec<EulerianDigraph> = (0..50).map(|_| random_eulerian_digraph(&mut digraph_rng, 6, 12)).collect();
    let cap = crate::charflow::DEFAULT_ENUMERATION_CAP;
    let mut outcomes = golden_checks();
    outcomes.push(run_over("permutation basics", &hs, check_permutation_basics));
    outcomes.push(run_over("brute force = phi = psi", &hs, |h| check_methods_agree(h, config.parallel)));
    outcomes.push(run_over("recursion weights and psi connectivity", &hs, check_recursion_tree));
    outcomes.push(run_over("product multiplicativity", &pairs, |(a, b)| check_product(a, b)));
    outcomes.push(run_over("merge invariance", &hs, check_merge));
    outcomes.push(run_over("planar duality", &hs, check_planar_dual));
    outcomes.push(run_over("spanning counts", &hs, check_spanning));
    outcomes.push(run_over("medial suite", &hs, |h| check_medial(h, 14)));
    outcomes.push(run_over("Eulerian coloring sums", &small, |h| {
        (1..=3).try_for_each(|m| check_coloring_sum(h, m))
    }));
    outcomes.push(run_over("characteristic and flow identities", &hs, check_char_flow_identities));
    outcomes.push(run_over("colorings for short hyperedges", &hs, |h| check_colorings(h, &[1, 2, 3, 5], cap)));
    outcomes.push(run_over("nowhere-zero flows for short hyperedges", &hs, |h| check_nowhere_zero(h, &[2, 3, 5], 3, cap)));
    outcomes.push(run_over("flow space dimension", &hs, |h| {
        [2, 3, 5].iter().try_for_each(|&q| check_flow_space(h, q, 100_000))
    }));
    let lattice_sizes: Vec<usize> = (1..=6).collect();
    outcomes.push(run_over("Möbius recursion on NC(m)", &lattice_sizes, |&m| check_mobius_lattice(m)));
    outcomes.push(run_over("Möbius multiplicativity", &hs, |h| check_mobius_multiplicative(h.alpha(), 50)));
    outcomes.push(run_over("digraph round trip", &digraphs, check_digraph_round_trip));
    Report { seed: config.seed, outcomes }
}
