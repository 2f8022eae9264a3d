//! Simple undirected graphs and the complete multipartite guest.
//!
//! Vertex ids are 1-based throughout the crate. Graphs are immutable once
//! built; every query takes `&self`.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Largest `n` accepted for `2^n`-vertex constructions.
pub const MAX_N: u32 = 20;

/// An undirected simple graph on vertices `1..=vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    /// Sorted, each pair stored as `(lo, hi)` with `lo < hi`.
    edges: Vec<(usize, usize)>,
    /// `adjacency[v]` is sorted; index 0 is unused.
    adjacency: Vec<Vec<usize>>,
    edge_ids: HashMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::invalid("graph needs at least one vertex"));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) outside vertex range 1..={vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate edge {:?}", w[0])));
        }
        let mut adjacency = vec![Vec::new(); vertex_count + 1];
        let mut edge_ids = HashMap::with_capacity(list.len());
        for (id, &(u, v)) in list.iter().enumerate() {
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_ids.insert((u, v), id);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: list,
            adjacency,
            edge_ids,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order; the position of an edge is its edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        v >= 1 && v <= self.vertex_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_ids.get(&(u.min(v), u.max(v))).copied()
    }

    /// Number of edges with both endpoints in `subset`.
    pub fn induced_edge_count(&self, subset: &[usize]) -> Result<usize> {
        let mut member = vec![false; self.vertex_count + 1];
        for &v in subset {
            if !self.contains_vertex(v) {
                return Err(Error::invalid(format!(
                    "vertex {v} outside 1..={}",
                    self.vertex_count
                )));
            }
            member[v] = true;
        }
        let count = self
            .edges
            .iter()
            .filter(|&&(u, v)| member[u] && member[v])
            .count();
        Ok(count)
    }

    /// Connected components after deleting the edges with the given ids.
    /// Returns a component index per vertex (index 0 unused) and the count.
    pub fn components_without(&self, removed: &[usize]) -> (Vec<usize>, usize) {
        let mut skip = vec![false; self.edges.len()];
        for &e in removed {
            skip[e] = true;
        }
        let mut comp = vec![usize::MAX; self.vertex_count + 1];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 1..=self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    let e = self.edge_ids[&(u.min(w), u.max(w))];
                    if !skip[e] && comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }
}

/// Complete multipartite graph with parts on consecutive id blocks.
pub fn build_complete_multipartite(part_sizes: &[usize]) -> Result<Graph> {
    if part_sizes.len() < 2 {
        return Err(Error::invalid("need at least two parts"));
    }
    if part_sizes.contains(&0) {
        return Err(Error::invalid("part sizes must be positive"));
    }
    let total: usize = part_sizes.iter().sum();
    let mut part = Vec::with_capacity(total + 1);
    part.push(usize::MAX);
    for (i, &size) in part_sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, size));
    }
    let edges = (1..=total)
        .flat_map(|u| ((u + 1)..=total).map(move |v| (u, v)))
        .filter(|&(u, v)| part[u] != part[v]);
    Graph::new(total, edges)
}

/// The complete `2^p`-partite graph `K_{r,...,r}` with `r = 2^(n-p)` and
/// the cyclic labeling: vertex `m` lies in partite `((m - 1) mod 2^p) + 1`.
///
/// Under this labeling any run of consecutive labels meets every partite
/// either `floor(w / 2^p)` or `ceil(w / 2^p)` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Guest {
    graph: Graph,
    n: u32,
    p: u32,
}

impl Guest {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn partite_count(&self) -> usize {
        1 << self.p
    }

    pub fn partite_size(&self) -> usize {
        1 << (self.n - self.p)
    }

    /// Common vertex degree `2^(n-p) (2^p - 1)`.
    pub fn degree(&self) -> usize {
        self.partite_size() * (self.partite_count() - 1)
    }

    /// Partite index in `1..=2^p`.
    pub fn partite_of(&self, m: usize) -> usize {
        (m - 1) % self.partite_count() + 1
    }

    /// Members of each partite, partite `i` at index `i - 1`.
    pub fn partites(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::with_capacity(self.partite_size()); self.partite_count()];
        for m in self.graph.vertices() {
            parts[self.partite_of(m) - 1].push(m);
        }
        parts
    }

    /// Per-partite counts of a vertex subset.
    pub fn partite_histogram(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let mut counts = vec![0; self.partite_count()];
        for &v in subset {
            if !self.graph.contains_vertex(v) {
                return Err(Error::invalid(format!(
                    "vertex {v} outside 1..={}",
                    self.vertex_count()
                )));
            }
            counts[self.partite_of(v) - 1] += 1;
        }
        Ok(counts)
    }
}

pub(crate) fn check_guest_params(n: u32, p: u32) -> Result<()> {
    if n < 2 || p < 2 || p > n {
        return Err(Error::invalid(format!(
            "need 2 <= p <= n, got n = {n}, p = {p}"
        )));
    }
    if n > MAX_N {
        return Err(Error::invalid(format!("n = {n} exceeds cap {MAX_N}")));
    }
    Ok(())
}

pub fn build_guest(n: u32, p: u32) -> Result<Guest> {
    check_guest_params(n, p)?;
    let total = 1usize << n;
    let parts = 1usize << p;
    let edges = (1..=total)
        .flat_map(|u| ((u + 1)..=total).map(move |v| (u, v)))
        .filter(|&(u, v)| (v - u) % parts != 0);
    let graph = Graph::new(total, edges)?;
    Ok(Guest { graph, n, p })
}

pub fn induced_edge_count(graph: &Graph, subset: &[usize]) -> Result<usize> {
    graph.induced_edge_count(subset)
}
