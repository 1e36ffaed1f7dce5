//! Seeded instance generators.
//!
//! Every generator is a pure function of its model parameters and seed. The
//! random models draw from a ChaCha8 stream so output is identical across
//! platforms and releases of the crate.

use std::collections::HashSet;

use rand::distributions::{Distribution, WeightedIndex};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{BuildOptions, Hypergraph};

/// Above this many candidate subsets of one size, duplicates are handled by
/// rejection sampling instead of enumerating the remaining pool.
const ENUMERATION_LIMIT: u128 = 4096;
const COMPLETE_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// `edges` distinct uniformly random `k`-subsets of `n` vertices.
    UniformRandom { n: usize, k: usize, edges: usize },
    /// `edges` distinct random subsets; each edge size is drawn from
    /// `size_weights` (pairs of size and non-negative weight).
    NonuniformRandom {
        n: usize,
        size_weights: Vec<(usize, f64)>,
        edges: usize,
    },
    /// All `k`-subsets of `n` vertices in lexicographic order.
    CompleteUniform { n: usize, k: usize },
    /// Consecutive `k`-edges sharing `overlap` vertices, covering `1..=n` exactly.
    Hyperpath { n: usize, k: usize, overlap: usize },
}

pub fn generate(model: &Model, seed: u64) -> Result<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match model {
        &Model::UniformRandom { n, k, edges } => random_edges(n, &[(k, 1.0)], edges, &mut rng),
        Model::NonuniformRandom {
            n,
            size_weights,
            edges,
        } => random_edges(*n, size_weights, *edges, &mut rng),
        &Model::CompleteUniform { n, k } => complete(n, k),
        &Model::Hyperpath { n, k, overlap } => hyperpath(n, k, overlap),
    }
}

/// Derives the seed of instance `index` in an ensemble from the run seed.
///
/// `splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15)`, wrapping.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn check_size(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InfeasibleModel(format!(
            "edge size {k} needs 2 <= k <= n = {n}"
        )));
    }
    Ok(())
}

fn random_edges(
    n: usize,
    size_weights: &[(usize, f64)],
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let mut sizes = Vec::new();
    for &(k, w) in size_weights {
        if !(w.is_finite() && w >= 0.0) {
            return Err(Error::InfeasibleModel(format!("weight {w} for size {k}")));
        }
        if w > 0.0 {
            check_size(n, k)?;
            if sizes.iter().any(|&(s, _)| s == k) {
                return Err(Error::InfeasibleModel(format!("size {k} listed twice")));
            }
            sizes.push((k, w));
        }
    }
    let capacity: u128 = sizes.iter().map(|&(k, _)| binomial(n, k)).sum();
    if (count as u128) > capacity {
        return Err(Error::InfeasibleModel(format!(
            "{count} edges requested but only {capacity} distinct edges exist"
        )));
    }

    let mut used = vec![0u128; sizes.len()];
    let mut chosen: HashSet<Vec<usize>> = HashSet::with_capacity(count);
    let mut edges = Vec::with_capacity(count);
    while edges.len() < count {
        let weights: Vec<f64> = sizes
            .iter()
            .zip(&used)
            .map(|(&(k, w), &u)| if u < binomial(n, k) { w } else { 0.0 })
            .collect();
        let slot = WeightedIndex::new(&weights)
            .map_err(|e| Error::InfeasibleModel(e.to_string()))?
            .sample(rng);
        let k = sizes[slot].0;
        let edge = if binomial(n, k) <= ENUMERATION_LIMIT {
            let pool: Vec<Vec<usize>> = combinations(n, k)
                .into_iter()
                .filter(|e| !chosen.contains(e))
                .collect();
            pool[rng.gen_range(0..pool.len())].clone()
        } else {
            loop {
                let mut e = index::sample(rng, n, k).into_vec();
                e.sort_unstable();
                if !chosen.contains(&e) {
                    break e;
                }
            }
        };
        used[slot] += 1;
        chosen.insert(edge.clone());
        edges.push(edge);
    }
    Hypergraph::from_zero_based(n, edges, BuildOptions::default())
}

fn complete(n: usize, k: usize) -> Result<Hypergraph> {
    check_size(n, k)?;
    let total = binomial(n, k);
    if total > COMPLETE_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "complete uniform generator",
            detail: format!("C({n},{k}) = {total} edges"),
        });
    }
    Hypergraph::from_zero_based(n, combinations(n, k), BuildOptions::default())
}

fn hyperpath(n: usize, k: usize, overlap: usize) -> Result<Hypergraph> {
    check_size(n, k)?;
    if overlap >= k {
        return Err(Error::InfeasibleModel(format!(
            "overlap {overlap} must be below k = {k}"
        )));
    }
    let stride = k - overlap;
    if !(n - k).is_multiple_of(stride) {
        return Err(Error::InfeasibleModel(format!(
            "edges of size {k} with overlap {overlap} cannot end exactly at vertex {n}"
        )));
    }
    let edges = (0..=(n - k) / stride)
        .map(|i| (i * stride..i * stride + k).collect())
        .collect();
    Hypergraph::from_zero_based(n, edges, BuildOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_four_three() {
        let h = generate(&Model::CompleteUniform { n: 4, k: 3 }, 0).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(combinations(4, 3).len() as u128, binomial(4, 3));
    }

    #[test]
    fn hyperpath_five_three() {
        let h = generate(
            &Model::Hyperpath {
                n: 5,
                k: 3,
                overlap: 1,
            },
            0,
        )
        .unwrap();
        assert_eq!(
            h,
            Hypergraph::build(5, [vec![1, 2, 3], vec![3, 4, 5]]).unwrap()
        );
        assert!(generate(
            &Model::Hyperpath {
                n: 6,
                k: 3,
                overlap: 1
            },
            0
        )
        .is_err());
    }

    #[test]
    fn uniform_random_deterministic() {
        let model = Model::UniformRandom {
            n: 6,
            k: 3,
            edges: 4,
        };
        let a = generate(&model, 7).unwrap();
        assert_eq!(a, generate(&model, 7).unwrap());
        assert_eq!(a.edge_count(), 4);
        assert_eq!(a.uniformity(), Some(3));
    }

    #[test]
    fn infeasible_counts() {
        let model = Model::UniformRandom {
            n: 3,
            k: 3,
            edges: 2,
        };
        assert!(matches!(
            generate(&model, 1),
            Err(Error::InfeasibleModel(_))
        ));
        let model = Model::UniformRandom {
            n: 3,
            k: 4,
            edges: 1,
        };
        assert!(matches!(
            generate(&model, 1),
            Err(Error::InfeasibleModel(_))
        ));
    }

    #[test]
    fn exhausting_the_pool() {
        let model = Model::UniformRandom {
            n: 6,
            k: 3,
            edges: 20,
        };
        let h = generate(&model, 3).unwrap();
        assert_eq!(
            h,
            generate(&Model::CompleteUniform { n: 6, k: 3 }, 0).unwrap()
        );
    }

    #[test]
    fn nonuniform_sizes_respected() {
        let model = Model::NonuniformRandom {
            n: 12,
            size_weights: vec![(2, 1.0), (3, 1.0), (5, 0.0)],
            edges: 30,
        };
        let h = generate(&model, 11).unwrap();
        assert_eq!(h.edge_count(), 30);
        assert!(h.edges().iter().all(|e| e.len() == 2 || e.len() == 3));
    }

    #[test]
    fn seeds_split() {
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
        assert_eq!(derive_seed(5, 9), derive_seed(5, 9));
    }
}
