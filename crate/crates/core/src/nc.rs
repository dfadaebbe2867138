//! Refinements of a permutation and the Möbius function of refinement
//! intervals.
//!
//! A refinement `β ≤ α` splits every cycle of `α` into a noncrossing partition
//! of its cyclic order, each block traversed in the order inherited from the
//! cycle. The refinements of `α` form the product of noncrossing partition
//! lattices, one factor per cycle.
//!
//! The Möbius function is computed from its recursive definition. The bottom
//! to top value of `NC(m)` comes out as `(-1)^(m-1) · Catalan(m-1)`, i.e. the
//! closed form `(-1)^(n-1) C_n` holds when `C_n` is read as the Catalan number
//! with index shifted down by one.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The `m`-th Catalan number, `binom(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..m {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// Noncrossing partitions of `0..m` as restricted growth strings (block ids
/// numbered by first occurrence), in lexicographic order.
pub fn noncrossing_partitions(m: usize) -> Vec<Vec<u8>> {
    assert!(m < 256, "cycle too long");
    let positions: Vec<usize> = (0..m).collect();
    let mut out: Vec<Vec<u8>> = blocks_of(&positions)
        .into_iter()
        .map(|blocks| {
            let mut rgs = vec![0u8; m];
            let mut sorted = blocks;
            sorted.sort_by_key(|b| b[0]);
            for (id, block) in sorted.iter().enumerate() {
                for &p in block {
                    rgs[p] = id as u8;
                }
            }
            rgs
        })
        .collect();
    out.sort();
    out
}

/// All noncrossing partitions of a linearly ordered run of positions, by the
/// block containing the first element: the gaps between consecutive members of
/// that block are partitioned independently.
fn blocks_of(elements: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if elements.is_empty() {
        return vec![Vec::new()];
    }
    let rest = &elements[1..];
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << rest.len()) {
        let mut block = vec![elements[0]];
        let mut gaps: Vec<&[usize]> = Vec::new();
        let mut gap_start = 0;
        for (i, &e) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(e);
                gaps.push(&rest[gap_start..i]);
                gap_start = i + 1;
            }
        }
        gaps.push(&rest[gap_start..]);
        let mut partial: Vec<Vec<Vec<usize>>> = vec![vec![block]];
        for gap in gaps {
            let options = blocks_of(gap);
            let mut next = Vec::with_capacity(partial.len() * options.len());
            for p in &partial {
                for o in &options {
                    let mut q = p.clone();
                    q.extend(o.iter().cloned());
                    next.push(q);
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    out
}

type Blocks = std::sync::Arc<Vec<Vec<u8>>>;

fn nc_table(m: usize) -> Blocks {
    static TABLE: OnceLock<RwLock<HashMap<usize, Blocks>>> = OnceLock::new();
    let table = TABLE.get_or_init(Default::default);
    if let Some(v) = table.read().expect("nc table lock").get(&m) {
        return v.clone();
    }
    let v = std::sync::Arc::new(noncrossing_partitions(m));
    table.write().expect("nc table lock").entry(m).or_insert(v).clone()
}

/// Number of refinements of `alpha`: the product of `Catalan(len)` over its
/// cycles.
pub fn refinement_count(alpha: &Permutation) -> BigUint {
    alpha.cycles().iter().map(|c| catalan(c.len())).product()
}

/// Iterator over all refinements of a permutation, each exactly once.
///
/// Cycles are taken in canonical order (sorted by minimum, each starting at
/// its minimum); the choice for the last cycle varies fastest.
pub struct Refinements {
    n: usize,
    cycles: Vec<Vec<usize>>,
    tables: Vec<std::sync::Arc<Vec<Vec<u8>>>>,
    odometer: Vec<usize>,
    done: bool,
}

impl Iterator for Refinements {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut image: Vec<usize> = (0..self.n).collect();
        for ((cycle, table), &choice) in self.cycles.iter().zip(&self.tables).zip(&self.odometer) {
            apply_block_pattern(cycle, &table[choice], &mut image);
        }
        let out = Permutation::from_zero_based(image);
        // Advance.
        let mut k = self.odometer.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.odometer[k] += 1;
            if self.odometer[k] < self.tables[k].len() {
                break;
            }
            self.odometer[k] = 0;
        }
        Some(out)
    }
}

/// Writes into `image` (zero-based) the cycles of the partition `rgs` of
/// `cycle`, each block visited in cycle order.
fn apply_block_pattern(cycle: &[usize], rgs: &[u8], image: &mut [usize]) {
    let m = cycle.len();
    let blocks = rgs.iter().copied().max().map_or(0, |b| b as usize + 1);
    let mut first = vec![usize::MAX; blocks];
    let mut last = vec![usize::MAX; blocks];
    for pos in 0..m {
        let b = rgs[pos] as usize;
        let p = cycle[pos] - 1;
        if first[b] == usize::MAX {
            first[b] = p;
        } else {
            image[last[b]] = p;
        }
        last[b] = p;
    }
    for b in 0..blocks {
        image[last[b]] = first[b];
    }
}

/// Every `β ≤ α`, exactly once.
pub fn refinements(alpha: &Permutation) -> Refinements {
    let cycles: Vec<Vec<usize>> = alpha.cycles().into_iter().filter(|c| c.len() > 1).collect();
    let tables: Vec<_> = cycles.iter().map(|c| nc_table(c.len())).collect();
    Refinements {
        n: alpha.n(),
        odometer: vec![0; cycles.len()],
        cycles,
        tables,
        done: false,
    }
}

/// Decides `β ≤ α`: `β` must map every cycle `C` of `α` onto itself, and the
/// restriction must have genus zero against `C`, i.e.
/// `z_C(β) + z_C(β⁻¹α) = |C| + 1`.
pub fn is_refinement(beta: &Permutation, alpha: &Permutation) -> bool {
    if beta.n() != alpha.n() {
        return false;
    }
    let cyc = alpha.cycle_index();
    let n = alpha.n();
    if (0..n).any(|i| cyc[beta.at(i)] != cyc[i]) {
        return false;
    }
    let beta_inv = beta.inverse();
    let across = beta_inv.compose_unchecked(alpha);
    let count_by_cycle = |p: &Permutation| {
        let mut counts = HashMap::new();
        for c in p.cycles() {
            *counts.entry(cyc[c[0] - 1]).or_insert(0usize) += 1;
        }
        counts
    };
    let zb = count_by_cycle(beta);
    let zx = count_by_cycle(&across);
    let mut sizes: HashMap<usize, usize> = HashMap::new();
    for &c in &cyc {
        *sizes.entry(c).or_default() += 1;
    }
    sizes.iter().all(|(c, &size)| zb[c] + zx[c] == size + 1)
}

fn require_refinement(beta: &Permutation, alpha: &Permutation) -> Result<()> {
    if is_refinement(beta, alpha) {
        Ok(())
    } else {
        Err(Error::NotARefinement { beta: beta.to_string(), alpha: alpha.to_string() })
    }
}

/// All `γ` with `β ≤ γ ≤ α`, in the enumeration order of [`refinements`].
pub fn interval(beta: &Permutation, alpha: &Permutation) -> Result<Vec<Permutation>> {
    require_refinement(beta, alpha)?;
    Ok(refinements(alpha).filter(|g| is_refinement(beta, g)).collect())
}

/// Rotation-invariant shape of the partition a refinement induces on one
/// cycle: the lexicographically least restricted growth string over all
/// rotations. Intervals `[π, 1]` in `NC(m)` with equal shapes are isomorphic.
fn cycle_shape(cycle: &[usize], beta: &Permutation) -> Vec<u8> {
    let m = cycle.len();
    let pos_of: HashMap<usize, usize> = cycle.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    // Block representative for each position: the least position in its block.
    let mut rep = vec![usize::MAX; m];
    for start in 0..m {
        if rep[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        let mut p = beta.apply(cycle[start]);
        while p != cycle[start] {
            members.push(pos_of[&p]);
            p = beta.apply(p);
        }
        let least = *members.iter().min().expect("nonempty");
        for q in members {
            rep[q] = least;
        }
    }
    (0..m)
        .map(|r| {
            let mut ids: HashMap<usize, u8> = HashMap::new();
            (0..m)
                .map(|i| {
                    let next = ids.len() as u8;
                    *ids.entry(rep[(r + i) % m]).or_insert(next)
                })
                .collect::<Vec<u8>>()
        })
        .min()
        .unwrap_or_default()
}

fn rgs_refines(fine: &[u8], coarse: &[u8]) -> bool {
    let mut map: HashMap<u8, u8> = HashMap::new();
    fine.iter().zip(coarse).all(|(&f, &c)| *map.entry(f).or_insert(c) == c)
}

/// `μ(π, 1̂)` in `NC(m)` for the partition with restricted growth string `rgs`.
fn mobius_to_top(rgs: &[u8]) -> BigInt {
    static MEMO: OnceLock<RwLock<HashMap<Vec<u8>, BigInt>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.read().expect("mobius memo lock").get(rgs) {
        return v.clone();
    }
    let m = rgs.len();
    let table = nc_table(m);
    let mut above: Vec<&Vec<u8>> = table.iter().filter(|g| rgs_refines(rgs, g)).collect();
    // Finer partitions first: more blocks means lower in the lattice.
    let blocks = |g: &Vec<u8>| g.iter().copied().max().map_or(0, |b| b as usize + 1);
    above.sort_by_key(|g| std::cmp::Reverse(blocks(g)));
    let mut mu: Vec<BigInt> = Vec::with_capacity(above.len());
    for (i, g) in above.iter().enumerate() {
        let value = if i == 0 {
            debug_assert_eq!(g.as_slice(), rgs);
            BigInt::one()
        } else {
            let mut s = BigInt::zero();
            for j in 0..i {
                if blocks(above[j]) > blocks(g) && rgs_refines(above[j], g) {
                    s += &mu[j];
                }
            }
            -s
        };
        mu.push(value);
    }
    let top = mu.last().cloned().expect("interval is nonempty");
    memo.write().expect("mobius memo lock").insert(rgs.to_vec(), top.clone());
    top
}

/// `μ(β, α)` in the refinement order: the product over cycles of `α` of the
/// Möbius value of the induced interval in `NC(|cycle|)`, each obtained by the
/// recursion `μ(x, x) = 1`, `Σ_{x ≤ y ≤ z} μ(x, y) = 0` for `x < z`.
pub fn mobius(beta: &Permutation, alpha: &Permutation) -> Result<BigInt> {
    require_refinement(beta, alpha)?;
    Ok(alpha
        .cycles()
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| mobius_to_top(&cycle_shape(c, beta)))
        .product())
}

/// `μ(β, α)` by the defining recursion run over the whole interval, without
/// splitting into cycles. Quadratic in the interval size.
pub fn mobius_unfactored(beta: &Permutation, alpha: &Permutation) -> Result<BigInt> {
    let mut elems = interval(beta, alpha)?;
    elems.sort_by_key(|g| std::cmp::Reverse(g.cycle_count()));
    let mut mu: Vec<BigInt> = Vec::with_capacity(elems.len());
    for (i, g) in elems.iter().enumerate() {
        if i == 0 {
            mu.push(BigInt::one());
            continue;
        }
        let mut s = BigInt::zero();
        for j in 0..i {
            if elems[j].cycle_count() > g.cycle_count() && is_refinement(&elems[j], g) {
                s += &mu[j];
            }
        }
        mu.push(-s);
    }
    let top = elems.iter().position(|g| g == alpha).expect("alpha is in its interval");
    Ok(mu[top].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn catalan_numbers() {
        let got: Vec<u64> = (0..10).map(|m| catalan(m).try_into().unwrap()).collect();
        assert_eq!(got, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn three_cycle_has_five_refinements() {
        let alpha = p(3, &[&[1, 2, 3]]);
        let got: Vec<String> = refinements(&alpha).map(|b| b.to_string()).collect();
        let mut want = vec!["(1)(2)(3)", "(1 2)(3)", "(1 3)(2)", "(1)(2 3)", "(1 2 3)"];
        let mut sorted = got.clone();
        sorted.sort();
        want.sort();
        assert_eq!(sorted, want);
    }

    #[test]
    fn four_cycle_excludes_crossing_pair() {
        let alpha = p(4, &[&[1, 2, 3, 4]]);
        let all: Vec<Permutation> = refinements(&alpha).collect();
        assert_eq!(all.len(), 14);
        let crossing = p(4, &[&[1, 3], &[2, 4]]);
        assert!(!all.contains(&crossing));
        assert!(!is_refinement(&crossing, &alpha));
        assert!(is_refinement(&p(4, &[&[1, 4], &[2, 3]]), &alpha));
    }

    #[test]
    fn identity_has_one_refinement() {
        let id = Permutation::identity(5);
        let all: Vec<_> = refinements(&id).collect();
        assert_eq!(all, vec![id]);
        assert_eq!(refinements(&Permutation::identity(0)).count(), 1);
    }

    #[test]
    fn orientation_matters() {
        let alpha = p(3, &[&[1, 2, 3]]);
        assert!(is_refinement(&alpha, &alpha));
        assert!(!is_refinement(&p(3, &[&[1, 3, 2]]), &alpha));
        // Support must stay inside the cycles of alpha.
        let alpha = p(4, &[&[1, 2], &[3, 4]]);
        assert!(!is_refinement(&p(4, &[&[1, 3]]), &alpha));
    }

    #[test]
    fn six_point_refinement() {
        let alpha = p(6, &[&[1, 2, 3, 4], &[5, 6]]);
        assert!(is_refinement(&p(6, &[&[1, 4], &[2, 3], &[5, 6]]), &alpha));
    }

    #[test]
    fn mobius_small_cases() {
        let alpha = p(4, &[&[1, 2, 3, 4]]);
        assert_eq!(mobius(&alpha, &alpha).unwrap(), BigInt::one());
        assert_eq!(mobius(&Permutation::identity(2), &p(2, &[&[1, 2]])).unwrap(), BigInt::from(-1));
        assert!(matches!(
            mobius(&p(4, &[&[1, 3], &[2, 4]]), &alpha),
            Err(Error::NotARefinement { .. })
        ));
    }

    #[test]
    fn interval_examples() {
        let alpha = p(3, &[&[1, 2, 3]]);
        assert_eq!(interval(&alpha, &alpha).unwrap(), vec![alpha.clone()]);
        assert_eq!(interval(&Permutation::identity(3), &alpha).unwrap().len(), 5);
        let beta = p(3, &[&[1, 2]]);
        assert_eq!(interval(&beta, &alpha).unwrap().len(), 2);
    }

    #[test]
    fn shapes_are_rotation_invariant() {
        let alpha = p(4, &[&[1, 2, 3, 4]]);
        let a = cycle_shape(&[1, 2, 3, 4], &p(4, &[&[1, 2]]));
        let b = cycle_shape(&[1, 2, 3, 4], &p(4, &[&[3, 4]]));
        assert_eq!(a, b);
        let _ = alpha;
    }
}
