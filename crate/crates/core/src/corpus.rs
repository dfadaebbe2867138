//! Seeded random instances for testing and the self-test.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::medial::EulerianDigraph;
use crate::nc::{refinement_count, refinements};
use crate::perm::{Hypermap, Permutation};
use crate::whitney::dual;

pub type CorpusRng = ChaCha8Rng;

pub fn rng(seed: u64) -> CorpusRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly shuffled permutation of `1..=n` cut into cycles of random
/// lengths in `1..=max_len`.
pub fn random_permutation(rng: &mut CorpusRng, n: usize, max_len: usize) -> Permutation {
    let mut points: Vec<usize> = (1..=n).collect();
    points.shuffle(rng);
    let mut cycles = Vec::new();
    let mut rest = &points[..];
    while !rest.is_empty() {
        let len = rng.gen_range(1..=max_len.max(1).min(rest.len()));
        cycles.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    Permutation::from_cycles(n, &cycles).expect("cycles partition the points")
}

/// A random collection: any vertex permutation, hyperedges no longer than
/// `max_alpha_len`.
pub fn random_collection(rng: &mut CorpusRng, n: usize, max_alpha_len: usize) -> Hypermap {
    let sigma = random_permutation(rng, n, n);
    let alpha = random_permutation(rng, n, max_alpha_len);
    Hypermap::new(sigma, alpha).expect("same size")
}

fn random_relabel(rng: &mut CorpusRng, h: &Hypermap) -> Hypermap {
    let mut images: Vec<usize> = (1..=h.n()).collect();
    images.shuffle(rng);
    h.relabel(&Permutation::from_images(&images).expect("shuffle")).expect("same size")
}

/// A random connected genus-zero hypermap. With `σ` an `n`-cycle, any
/// refinement `α ≤ σ` has genus zero; the pair is then randomly dualized,
/// swapped and relabelled.
pub fn random_planar(rng: &mut CorpusRng, n: usize) -> Hypermap {
    let gamma = Permutation::from_cycles(n, &[(1..=n).collect::<Vec<_>>()]).expect("n-cycle");
    let count = refinement_count(&gamma);
    let pick = if count <= 5000u32.into() {
        let all: Vec<Permutation> = refinements(&gamma).collect();
        all[rng.gen_range(0..all.len())].clone()
    } else {
        random_refinement(rng, &gamma)
    };
    let mut h = Hypermap::new(gamma, pick).expect("same size");
    if rng.gen_bool(0.5) {
        h = dual(&h);
    }
    if rng.gen_bool(0.5) {
        h = Hypermap::new(h.alpha().clone(), h.sigma().clone()).expect("same size");
    }
    debug_assert_eq!(h.genus(), 0);
    random_relabel(rng, &h)
}

/// A refinement of `alpha` built by repeatedly cutting a random cycle between
/// two random positions, which keeps it noncrossing.
pub fn random_refinement(rng: &mut CorpusRng, alpha: &Permutation) -> Permutation {
    let mut beta = alpha.clone();
    let cuts = rng.gen_range(0..=alpha.n());
    for _ in 0..cuts {
        let i = rng.gen_range(1..=alpha.n());
        let j = rng.gen_range(1..=alpha.n());
        if i != j && beta.same_cycle(i, j) {
            // Right-multiplying by a transposition within a cycle splits it.
            beta = beta.right_transpose(i, j);
        }
    }
    beta
}

/// A genus-zero collection of up to `parts` planar components, at most `n`
/// points in total.
pub fn random_planar_collection(rng: &mut CorpusRng, n: usize, parts: usize) -> Hypermap {
    let parts = rng.gen_range(1..=parts.max(1).min(n));
    let mut sizes = vec![1; parts];
    for _ in parts..n {
        let k = rng.gen_range(0..parts);
        sizes[k] += 1;
    }
    let mut h: Option<Hypermap> = None;
    for s in sizes {
        let part = random_planar(rng, s);
        h = Some(match h {
            None => part,
            Some(acc) => acc.disjoint_union(&part),
        });
    }
    random_relabel(rng, &h.expect("at least one part"))
}

/// A random collection of genus zero found by rejection, if one turns up
/// within `tries` draws.
pub fn random_genus_zero_by_rejection(rng: &mut CorpusRng, n: usize, max_alpha_len: usize, tries: usize) -> Option<Hypermap> {
    (0..tries).map(|_| random_collection(rng, n, max_alpha_len)).find(|h| h.genus() == 0)
}

/// A random map: hyperedges have at most two points.
pub fn random_map(rng: &mut CorpusRng, n: usize) -> Hypermap {
    random_collection(rng, n, 2)
}

/// Parameters of a mixed corpus.
#[derive(Clone, Copy, Debug)]
pub struct CorpusSpec {
    pub count: usize,
    pub n_max: usize,
    pub max_alpha_len: usize,
    pub max_refinements: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { count: 500, n_max: 8, max_alpha_len: 5, max_refinements: 100_000 }
    }
}

/// A mixed corpus: random collections, planar collections, planar hypermaps
/// with one cycle split further, maps, and genus-zero rejects, in rotation.
pub fn corpus(seed: u64, spec: CorpusSpec) -> Vec<Hypermap> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(spec.count);
    let cap = spec.max_refinements;
    while out.len() < spec.count {
        let n = rng.gen_range(1..=spec.n_max.max(1));
        let h = match out.len() % 5 {
            0 | 1 => random_collection(&mut rng, n, spec.max_alpha_len),
            2 => random_planar_collection(&mut rng, n, 3),
            3 => random_map(&mut rng, n),
            _ => random_genus_zero_by_rejection(&mut rng, n, spec.max_alpha_len, 50)
                .unwrap_or_else(|| random_planar(&mut rng, n)),
        };
        let fits = h.max_hyperedge_len() <= spec.max_alpha_len && refinement_count(h.alpha()) <= cap.into();
        if fits {
            out.push(h);
        }
    }
    out
}

/// A random Eulerian digraph built as a union of random closed walks, on at
/// most `max_vertices` vertices with at most `max_edges` edges. Vertex labels
/// are drawn from `-50..50`.
pub fn random_eulerian_digraph(rng: &mut CorpusRng, max_vertices: usize, max_edges: usize) -> EulerianDigraph {
    let k = rng.gen_range(1..=max_vertices.max(1));
    let mut labels: Vec<i64> = (-50..50).collect();
    labels.shuffle(rng);
    labels.truncate(k);
    let target = rng.gen_range(1..=max_edges.max(1));
    let mut edges: Vec<(i64, i64)> = Vec::new();
    while edges.len() < target {
        let room = target - edges.len();
        let len = rng.gen_range(1..=room.min(k + 1));
        let walk: Vec<i64> = (0..len).map(|_| labels[rng.gen_range(0..k)]).collect();
        for i in 0..len {
            edges.push((walk[i], walk[(i + 1) % len]));
        }
    }
    EulerianDigraph::from_edges(&edges).expect("a union of closed walks is Eulerian")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_generators_have_genus_zero() {
        let mut r = rng(7);
        for n in 1..=9 {
            assert_eq!(random_planar(&mut r, n).genus(), 0);
            assert_eq!(random_planar_collection(&mut r, n, 3).genus(), 0);
        }
    }

    #[test]
    fn random_refinement_is_a_refinement() {
        let mut r = rng(3);
        for _ in 0..50 {
            let alpha = random_permutation(&mut r, 9, 6);
            let beta = random_refinement(&mut r, &alpha);
            assert!(crate::nc::is_refinement(&beta, &alpha), "{beta} vs {alpha}");
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let spec = CorpusSpec { count: 40, ..CorpusSpec::default() };
        assert_eq!(corpus(1, spec), corpus(1, spec));
        assert!(corpus(1, spec).iter().all(|h| h.n() <= 8 && h.max_hyperedge_len() <= 5));
    }

    #[test]
    fn digraphs_respect_bounds() {
        let mut r = rng(11);
        for _ in 0..50 {
            let d = random_eulerian_digraph(&mut r, 6, 12);
            assert!(d.vertex_count() <= 6 && d.edge_count() <= 12);
        }
    }
}
