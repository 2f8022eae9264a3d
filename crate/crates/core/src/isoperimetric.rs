//! Maximum subgraph problem: the largest number of edges induced by any
//! `k`-vertex subset, for complete multipartite graphs with equal parts.

use crate::error::{Error, Result};
use crate::graph::{Graph, Guest};

pub const DEFAULT_SUBSET_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MspResult {
    pub k: usize,
    pub max_edges: usize,
    pub witness: Option<Vec<usize>>,
}

/// `E_G(k)` for `K_{r,...,r}` with `parts` parts.
pub fn max_subgraph_edges_closed_form(parts: usize, r: usize, k: usize) -> Result<usize> {
    if parts < 2 || r < 1 {
        return Err(Error::invalid(format!(
            "need at least two parts of positive size, got {parts} parts of size {r}"
        )));
    }
    if k > parts * r {
        return Err(Error::invalid(format!(
            "subset size {k} exceeds vertex count {}",
            parts * r
        )));
    }
    let full_layers = |q: usize| q * q * parts * (parts - 1) / 2;
    if k < parts {
        return Ok(k * (k.saturating_sub(1)) / 2);
    }
    let (q, j) = (k / parts, k % parts);
    if j == 0 {
        let value = full_layers(q);
        debug_assert!(q != 1 || value == k * (k - 1) / 2);
        return Ok(value);
    }
    // k = (q' - 1) parts + j with q' = q + 1
    Ok(full_layers(q) + j * q * (parts - 1) + j * (j - 1) / 2)
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn max_subgraph_edges_bruteforce(graph: &Graph, k: usize) -> Result<MspResult> {
    max_subgraph_edges_bruteforce_with_budget(graph, k, DEFAULT_SUBSET_BUDGET)
}

/// Exhaustive maximum over all `k`-subsets. The witness is the
/// lexicographically smallest maximizer.
pub fn max_subgraph_edges_bruteforce_with_budget(
    graph: &Graph,
    k: usize,
    budget: u128,
) -> Result<MspResult> {
    let n = graph.vertex_count();
    if k > n {
        return Err(Error::invalid(format!("subset size {k} exceeds vertex count {n}")));
    }
    let needed = binomial(n, k);
    if needed > budget {
        return Err(Error::ResourceLimit {
            what: "subset enumeration",
            needed,
            budget,
        });
    }
    let mut adjacent = vec![false; (n + 1) * (n + 1)];
    for &(u, v) in graph.edges() {
        adjacent[u * (n + 1) + v] = true;
        adjacent[v * (n + 1) + u] = true;
    }

    struct Search<'a> {
        n: usize,
        k: usize,
        adjacent: &'a [bool],
        chosen: Vec<usize>,
        best: Option<(usize, Vec<usize>)>,
    }

    impl Search<'_> {
        fn run(&mut self, next: usize, edges: usize) {
            if self.chosen.len() == self.k {
                if self.best.as_ref().is_none_or(|(b, _)| edges > *b) {
                    self.best = Some((edges, self.chosen.clone()));
                }
                return;
            }
            let remaining = self.k - self.chosen.len();
            for v in next..=(self.n + 1 - remaining) {
                let gained = self
                    .chosen
                    .iter()
                    .filter(|&&u| self.adjacent[u * (self.n + 1) + v])
                    .count();
                self.chosen.push(v);
                self.run(v + 1, edges + gained);
                self.chosen.pop();
            }
        }
    }

    let mut search = Search {
        n,
        k,
        adjacent: &adjacent,
        chosen: Vec::with_capacity(k),
        best: None,
    };
    search.run(1, 0);
    let (max_edges, witness) = search.best.expect("at least one subset exists");
    Ok(MspResult {
        k,
        max_edges,
        witness: Some(witness),
    })
}

/// Whether `subset` induces `E_G(|subset|)` edges in the guest.
pub fn is_optimal_set(guest: &Guest, subset: &[usize]) -> Result<bool> {
    let mut seen = vec![false; guest.vertex_count() + 1];
    for &v in subset {
        if !guest.graph().contains_vertex(v) {
            return Err(Error::invalid(format!(
                "vertex {v} outside 1..={}",
                guest.vertex_count()
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::invalid(format!("vertex {v} repeated in subset")));
        }
    }
    let induced = guest.graph().induced_edge_count(subset)?;
    let best =
        max_subgraph_edges_closed_form(guest.partite_count(), guest.partite_size(), subset.len())?;
    Ok(induced == best)
}
