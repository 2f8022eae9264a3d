//! Minimum wirelength over all embeddings: exhaustive enumeration for tiny
//! instances and a seeded 2-swap hill climber for larger ones.
//!
//! Both work from the host's hop-distance table, so the value of an
//! embedding is its shortest-path wirelength.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::embedding::{Embedding, Router};
use crate::error::{Error, Result};
use crate::graph::Guest;
use crate::host::HostTree;

pub const DEFAULT_EVALUATION_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub best_value: u64,
    pub witness: Embedding,
    /// Embeddings (or swap moves, for local search) evaluated.
    pub explored: u64,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustiveOptions {
    pub budget: u128,
    /// Restrict the image of guest vertex 1 to these labels. Only sound when
    /// they represent every orbit of the host's automorphism group.
    pub first_image_orbits: Option<Vec<usize>>,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            budget: DEFAULT_EVALUATION_BUDGET,
            first_image_orbits: None,
        }
    }
}

/// Label-indexed distances plus the guest's edge list.
struct Objective {
    stride: usize,
    dist: Vec<u32>,
    edges: Vec<(usize, usize)>,
    /// Guest adjacency, index 0 unused.
    neighbors: Vec<Vec<usize>>,
}

impl Objective {
    fn new(guest: &Guest, host: &HostTree) -> Result<Self> {
        if guest.vertex_count() != host.vertex_count() {
            return Err(Error::invalid(format!(
                "guest has {} vertices, host has {}",
                guest.vertex_count(),
                host.vertex_count()
            )));
        }
        let router = Router::new(host)?;
        let g = guest.graph();
        Ok(Objective {
            stride: host.vertex_count() + 1,
            dist: router.label_distance_table(),
            edges: g.edges().to_vec(),
            neighbors: std::iter::once(Vec::new())
                .chain(g.vertices().map(|v| g.neighbors(v).to_vec()))
                .collect(),
        })
    }

    fn d(&self, a: usize, b: usize) -> u64 {
        u64::from(self.dist[a * self.stride + b])
    }

    /// `images[m - 1]` is the label of guest vertex `m`.
    fn value(&self, images: &[usize]) -> u64 {
        self.edges
            .iter()
            .map(|&(u, v)| self.d(images[u - 1], images[v - 1]))
            .sum()
    }

    /// Change in value from exchanging the images of guest vertices `a` and `b`.
    fn swap_delta(&self, images: &[usize], a: usize, b: usize) -> i64 {
        let (la, lb) = (images[a - 1], images[b - 1]);
        let mut delta = 0i64;
        for &w in &self.neighbors[a] {
            if w != b {
                let lw = images[w - 1];
                delta += self.d(lb, lw) as i64 - self.d(la, lw) as i64;
            }
        }
        for &w in &self.neighbors[b] {
            if w != a {
                let lw = images[w - 1];
                delta += self.d(la, lw) as i64 - self.d(lb, lw) as i64;
            }
        }
        delta
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).try_fold(1u128, |acc, x| acc.checked_mul(x)).unwrap_or(u128::MAX)
}

/// Lexicographic successor; false when `xs` is the last permutation.
fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

pub fn exhaustive_min_wirelength(guest: &Guest, host: &HostTree, budget: u128) -> Result<SearchResult> {
    exhaustive_min_wirelength_with(
        guest,
        host,
        &ExhaustiveOptions {
            budget,
            ..ExhaustiveOptions::default()
        },
    )
}

/// Exact minimum over every bijection. The witness is the lexicographically
/// smallest minimizing image sequence.
pub fn exhaustive_min_wirelength_with(
    guest: &Guest,
    host: &HostTree,
    options: &ExhaustiveOptions,
) -> Result<SearchResult> {
    let objective = Objective::new(guest, host)?;
    let n = guest.vertex_count();
    let firsts: Vec<usize> = match &options.first_image_orbits {
        Some(reps) => {
            let mut reps = reps.clone();
            reps.sort_unstable();
            reps.dedup();
            if reps.is_empty() || reps.iter().any(|&l| l == 0 || l > n) {
                return Err(Error::invalid("first-image labels must be non-empty and in range"));
            }
            reps
        }
        None => (1..=n).collect(),
    };
    let needed = factorial(n - 1).saturating_mul(firsts.len() as u128);
    if needed > options.budget {
        return Err(Error::ResourceLimit {
            what: "bijection enumeration",
            needed,
            budget: options.budget,
        });
    }

    // one independent lexicographic sweep per image of vertex 1
    let per_prefix: Vec<(u64, Vec<usize>, u64)> = firsts
        .par_iter()
        .map(|&first| {
            let mut images = Vec::with_capacity(n);
            images.push(first);
            images.extend((1..=n).filter(|&l| l != first));
            let mut best = (objective.value(&images), images.clone());
            let mut explored = 1u64;
            while next_permutation(&mut images[1..]) {
                explored += 1;
                let v = objective.value(&images);
                if v < best.0 {
                    best = (v, images.clone());
                }
            }
            (best.0, best.1, explored)
        })
        .collect();

    let explored = per_prefix.iter().map(|r| r.2).sum();
    let (best_value, images, _) = per_prefix
        .into_iter()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .expect("at least one prefix");
    Ok(SearchResult {
        best_value,
        witness: Embedding::from_images(images)?,
        explored,
        exhaustive: true,
    })
}

/// 2-swap hill climbing with random restarts.
///
/// The generator is ChaCha8 seeded with `seed` via `seed_from_u64`. Each
/// climb starts from a Fisher-Yates shuffle of the labels and scans pairs
/// `(a, b)`, `a < b`, in order, taking every improving swap; a full scan
/// with no improvement ends the climb and triggers a restart. `iterations`
/// bounds the number of swap evaluations. With zero iterations the result
/// is the first shuffled embedding.
pub fn local_search_min(
    guest: &Guest,
    host: &HostTree,
    seed: u64,
    iterations: u64,
) -> Result<SearchResult> {
    let objective = Objective::new(guest, host)?;
    let n = guest.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shuffled = |rng: &mut ChaCha8Rng| {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        images
    };

    let mut images = shuffled(&mut rng);
    let mut value = objective.value(&images);
    let mut best = (value, images.clone());
    let mut used = 0u64;
    'climbs: while used < iterations {
        let mut improved = false;
        for a in 1..=n {
            for b in (a + 1)..=n {
                if used == iterations {
                    break 'climbs;
                }
                used += 1;
                let delta = objective.swap_delta(&images, a, b);
                if delta < 0 {
                    images.swap(a - 1, b - 1);
                    value = (value as i64 + delta) as u64;
                    improved = true;
                    if value < best.0 {
                        best = (value, images.clone());
                    }
                }
            }
        }
        if !improved {
            images = shuffled(&mut rng);
            value = objective.value(&images);
            if value < best.0 {
                best = (value, images.clone());
            }
        }
    }
    debug_assert_eq!(objective.value(&best.1), best.0);
    Ok(SearchResult {
        best_value: best.0,
        witness: Embedding::from_images(best.1)?,
        explored: used,
        exhaustive: false,
    })
}
