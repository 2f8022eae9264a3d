//! Embeddings of a guest into a labeled host, shortest-path routing and
//! congestion accounting.
//!
//! Every guest edge is routed along a shortest host path; among shortest
//! paths the one whose sequence of visited labels is lexicographically
//! smallest is taken. Wirelength can then be read three ways: as a sum of
//! path lengths, as a sum of per-edge congestion, or from a family of edge
//! cuts that covers every host edge the same number of times.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Guest;
use crate::host::{cut_family, EdgeCut, HostTree};
use crate::isoperimetric::is_optimal_set;

/// Bijection from guest vertex ids to host position labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    /// Index 0 unused.
    guest_to_label: Vec<usize>,
}

impl Embedding {
    /// `images[m - 1]` is the label of guest vertex `m`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &l in &images {
            if l == 0 || l > n {
                return Err(Error::invalid(format!("label {l} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(Error::invalid(format!("label {l} used twice")));
            }
        }
        let mut guest_to_label = Vec::with_capacity(n + 1);
        guest_to_label.push(0);
        guest_to_label.extend(images);
        Ok(Embedding { guest_to_label })
    }

    pub fn len(&self) -> usize {
        self.guest_to_label.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label_of(&self, m: usize) -> usize {
        self.guest_to_label[m]
    }

    pub fn images(&self) -> &[usize] {
        &self.guest_to_label[1..]
    }

    /// Inverse map, indexed by label (index 0 unused).
    pub fn guest_of_label(&self) -> Vec<usize> {
        let mut inv = vec![0; self.guest_to_label.len()];
        for (m, &l) in self.guest_to_label.iter().enumerate().skip(1) {
            inv[l] = m;
        }
        inv
    }

    /// The same embedding with the images of guest vertices `a` and `b`
    /// exchanged.
    pub fn swapped(&self, a: usize, b: usize) -> Result<Embedding> {
        for x in [a, b] {
            if x == 0 || x > self.len() {
                return Err(Error::invalid(format!("guest vertex {x} outside 1..={}", self.len())));
            }
        }
        let mut next = self.clone();
        next.guest_to_label.swap(a, b);
        Ok(next)
    }
}

fn check_sizes(guest: &Guest, host: &HostTree) -> Result<()> {
    if guest.vertex_count() != host.vertex_count() {
        return Err(Error::invalid(format!(
            "guest has {} vertices, host has {}",
            guest.vertex_count(),
            host.vertex_count()
        )));
    }
    Ok(())
}

/// Guest vertex `m` goes to host label `m`.
pub fn identity_embedding(guest: &Guest, host: &HostTree) -> Result<Embedding> {
    check_sizes(guest, host)?;
    Embedding::from_images((1..=guest.vertex_count()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Route {
    /// Visited labels, both ends included.
    pub labels: Vec<usize>,
    /// Host edge ids in traversal order.
    pub edges: Vec<usize>,
}

impl Route {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// All-pairs hop distances of a labeled host plus deterministic routing.
#[derive(Debug, Clone)]
pub struct Router<'h> {
    host: &'h HostTree,
    size: usize,
    /// Row-major by vertex id, `(size + 1)^2` entries.
    dist: Vec<u32>,
}

impl<'h> Router<'h> {
    pub fn new(host: &'h HostTree) -> Result<Self> {
        host.require_labels()?;
        let g = host.graph();
        let size = g.vertex_count();
        let stride = size + 1;
        let mut dist = vec![u32::MAX; stride * stride];
        let mut queue = std::collections::VecDeque::with_capacity(size);
        for s in g.vertices() {
            let row = &mut dist[s * stride..(s + 1) * stride];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if row[w] == u32::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(Router { host, size, dist })
    }

    pub fn host(&self) -> &'h HostTree {
        self.host
    }

    fn vertex(&self, label: usize) -> Result<usize> {
        self.host
            .vertex_of(label)
            .ok_or_else(|| Error::invalid(format!("no host vertex has label {label}")))
    }

    fn dist_ids(&self, u: usize, v: usize) -> u32 {
        self.dist[u * (self.size + 1) + v]
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<u32> {
        Ok(self.dist_ids(self.vertex(u)?, self.vertex(v)?))
    }

    /// Label-indexed distance table, row-major with stride `size + 1`.
    pub fn label_distance_table(&self) -> Vec<u32> {
        let stride = self.size + 1;
        let mut table = vec![0; stride * stride];
        for a in 1..=self.size {
            let va = self.host.vertex_of(a).unwrap();
            for b in 1..=self.size {
                let vb = self.host.vertex_of(b).unwrap();
                table[a * stride + b] = self.dist_ids(va, vb);
            }
        }
        table
    }

    /// Shortest path from label `u` to label `v`, choosing at each step the
    /// smallest-labeled neighbor that is one hop closer to `v`.
    pub fn route(&self, u: usize, v: usize) -> Result<Route> {
        if u == v {
            return Err(Error::invalid(format!("route endpoints coincide at label {u}")));
        }
        let (src, dst) = (self.vertex(u)?, self.vertex(v)?);
        let g = self.host.graph();
        let mut labels = vec![u];
        let mut edges = Vec::new();
        let mut cur = src;
        while cur != dst {
            let want = self.dist_ids(cur, dst) - 1;
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .filter(|&w| self.dist_ids(w, dst) == want)
                .min_by_key(|&w| self.host.label_of(w).unwrap())
                .expect("a neighbor on a shortest path");
            edges.push(g.edge_id(cur, next).unwrap());
            labels.push(self.host.label_of(next).unwrap());
            cur = next;
        }
        Ok(Route { labels, edges })
    }
}

pub fn route(host: &HostTree, u: usize, v: usize) -> Result<Route> {
    Router::new(host)?.route(u, v)
}

/// Lemma-style boundary count `sum deg(v) - 2 |E(subset)|`.
pub fn congestion_lemma_value(guest: &Guest, subset: &[usize]) -> Result<u64> {
    let induced = guest.graph().induced_edge_count(subset)?;
    let degrees: usize = subset.iter().map(|&v| guest.graph().degree(v)).sum();
    Ok((degrees - 2 * induced) as u64)
}

/// The three sufficient conditions for a cut's congestion to be minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CutConditions {
    /// Guest edges inside one side never use a cut edge.
    pub internal_paths_avoid_cut: bool,
    /// Guest edges across the cut use exactly one cut edge.
    pub crossing_paths_cross_once: bool,
    /// Both preimages are optimal sets.
    pub sides_optimal: bool,
}

impl CutConditions {
    pub fn all_hold(&self) -> bool {
        self.internal_paths_avoid_cut && self.crossing_paths_cross_once && self.sides_optimal
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCongestion {
    pub family: String,
    pub j: u32,
    pub i: usize,
    pub ec: u64,
    #[serde(skip)]
    pub conditions: CutConditions,
    #[serde(skip)]
    pub lemma_value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WirelengthReport {
    pub direct: u64,
    pub via_partition: u64,
    pub closed_form: Option<u64>,
    pub exhaustive_min: Option<u64>,
    pub cut_conditions_ok: bool,
    pub per_cut: Vec<CutCongestion>,
}

impl WirelengthReport {
    /// Every available value agrees and every cut passes its conditions.
    pub fn is_consistent(&self) -> bool {
        self.direct == self.via_partition
            && self.closed_form.is_none_or(|v| v == self.direct)
            && self.exhaustive_min.is_none_or(|v| v == self.direct)
            && self.cut_conditions_ok
    }
}

/// A guest embedded in a host with every guest edge routed.
#[derive(Debug, Clone)]
pub struct RoutedEmbedding<'a> {
    guest: &'a Guest,
    host: &'a HostTree,
    embedding: Embedding,
    /// One per guest edge, in guest edge order.
    routes: Vec<Route>,
    congestion: Vec<u64>,
}

impl<'a> RoutedEmbedding<'a> {
    pub fn new(guest: &'a Guest, host: &'a HostTree, embedding: &Embedding) -> Result<Self> {
        check_sizes(guest, host)?;
        if embedding.len() != guest.vertex_count() {
            return Err(Error::invalid(format!(
                "embedding covers {} vertices, guest has {}",
                embedding.len(),
                guest.vertex_count()
            )));
        }
        let router = Router::new(host)?;
        let routes = guest
            .graph()
            .edges()
            .iter()
            .map(|&(a, b)| router.route(embedding.label_of(a), embedding.label_of(b)))
            .collect::<Result<Vec<_>>>()?;
        let mut congestion = vec![0u64; host.graph().edge_count()];
        for r in &routes {
            for &e in &r.edges {
                congestion[e] += 1;
            }
        }
        Ok(RoutedEmbedding {
            guest,
            host,
            embedding: embedding.clone(),
            routes,
            congestion,
        })
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn wirelength(&self) -> u64 {
        self.routes.iter().map(|r| r.len() as u64).sum()
    }

    /// Congestion per host edge id.
    pub fn congestion(&self) -> &[u64] {
        &self.congestion
    }

    /// Congestion of the host edge joining labels `u` and `v`.
    pub fn edge_congestion(&self, u: usize, v: usize) -> Result<u64> {
        let vertex = |l: usize| {
            self.host
                .vertex_of(l)
                .ok_or_else(|| Error::invalid(format!("no host vertex has label {l}")))
        };
        let e = self
            .host
            .graph()
            .edge_id(vertex(u)?, vertex(v)?)
            .ok_or_else(|| Error::invalid(format!("labels {u} and {v} are not adjacent")))?;
        Ok(self.congestion[e])
    }

    fn check_cut(&self, cut: &EdgeCut) -> Result<()> {
        let m = self.host.graph().edge_count();
        if let Some(&e) = cut.cut_edges.iter().find(|&&e| e >= m) {
            return Err(Error::invalid(format!("edge id {e} is not a host edge")));
        }
        Ok(())
    }

    pub fn cut_congestion(&self, cut: &EdgeCut) -> Result<u64> {
        self.check_cut(cut)?;
        Ok(cut.cut_edges.iter().map(|&e| self.congestion[e]).sum())
    }

    /// Guest vertices mapped into the cut's labeled component, and the rest.
    pub fn preimages(&self, cut: &EdgeCut) -> (Vec<usize>, Vec<usize>) {
        self.guest
            .graph()
            .vertices()
            .partition(|&m| cut.contains_label(self.embedding.label_of(m)))
    }

    pub fn verify_cut_conditions(&self, cut: &EdgeCut) -> Result<CutConditions> {
        self.check_cut(cut)?;
        let mut in_cut = vec![false; self.host.graph().edge_count()];
        for &e in &cut.cut_edges {
            in_cut[e] = true;
        }
        let mut internal_ok = true;
        let mut crossing_ok = true;
        for (&(a, b), route) in self.guest.graph().edges().iter().zip(&self.routes) {
            let hits = route.edges.iter().filter(|&&e| in_cut[e]).count();
            let side_a = cut.contains_label(self.embedding.label_of(a));
            let side_b = cut.contains_label(self.embedding.label_of(b));
            if side_a == side_b {
                internal_ok &= hits == 0;
            } else {
                crossing_ok &= hits == 1;
            }
        }
        let (inside, outside) = self.preimages(cut);
        let sides_optimal =
            is_optimal_set(self.guest, &inside)? && is_optimal_set(self.guest, &outside)?;
        Ok(CutConditions {
            internal_paths_avoid_cut: internal_ok,
            crossing_paths_cross_once: crossing_ok,
            sides_optimal,
        })
    }

    /// `(1 / k) * sum of share * EC(cut)` over the host's cut family, where
    /// `k` is the uniform number of times each host edge is covered.
    pub fn wirelength_via_partition(&self) -> Result<u64> {
        let cuts = cut_family(self.host)?;
        self.partition_total(&cuts)
    }

    fn partition_total(&self, cuts: &[EdgeCut]) -> Result<u64> {
        let mut cover = vec![0u64; self.host.graph().edge_count()];
        let mut total = 0u64;
        for cut in cuts {
            let share = u64::from(cut.multiplicity_share);
            for &e in &cut.cut_edges {
                cover[e] += share;
            }
            total += share * self.cut_congestion(cut)?;
        }
        let k = cover.first().copied().unwrap_or(1);
        if k == 0 || cover.iter().any(|&c| c != k) {
            return Err(Error::State(
                "cut family does not cover host edges uniformly".into(),
            ));
        }
        if !total.is_multiple_of(k) {
            return Err(Error::Internal(format!(
                "cut congestion total {total} not divisible by multiplicity {k}"
            )));
        }
        Ok(total / k)
    }

    /// Direct and cut-based wirelength plus per-cut diagnostics.
    pub fn report(&self) -> Result<WirelengthReport> {
        let cuts = cut_family(self.host)?;
        let via_partition = self.partition_total(&cuts)?;
        let mut per_cut = Vec::with_capacity(cuts.len());
        for cut in &cuts {
            let (inside, _) = self.preimages(cut);
            per_cut.push(CutCongestion {
                family: cut.family.name().to_string(),
                j: cut.family.j(),
                i: cut.family.i(),
                ec: self.cut_congestion(cut)?,
                conditions: self.verify_cut_conditions(cut)?,
                lemma_value: congestion_lemma_value(self.guest, &inside)?,
            });
        }
        Ok(WirelengthReport {
            direct: self.wirelength(),
            via_partition,
            closed_form: None,
            exhaustive_min: None,
            cut_conditions_ok: per_cut.iter().all(|c| c.conditions.all_hold()),
            per_cut,
        })
    }
}

pub fn wirelength_direct(guest: &Guest, host: &HostTree, emb: &Embedding) -> Result<u64> {
    Ok(RoutedEmbedding::new(guest, host, emb)?.wirelength())
}

/// Congestion of the host edge between labels `u` and `v`.
pub fn edge_congestion(
    guest: &Guest,
    host: &HostTree,
    emb: &Embedding,
    host_edge: (usize, usize),
) -> Result<u64> {
    RoutedEmbedding::new(guest, host, emb)?.edge_congestion(host_edge.0, host_edge.1)
}

pub fn cut_congestion(guest: &Guest, host: &HostTree, emb: &Embedding, cut: &EdgeCut) -> Result<u64> {
    RoutedEmbedding::new(guest, host, emb)?.cut_congestion(cut)
}

pub fn verify_cut_conditions(
    guest: &Guest,
    host: &HostTree,
    emb: &Embedding,
    cut: &EdgeCut,
) -> Result<CutConditions> {
    RoutedEmbedding::new(guest, host, emb)?.verify_cut_conditions(cut)
}

pub fn wirelength_via_partition(guest: &Guest, host: &HostTree, emb: &Embedding) -> Result<u64> {
    RoutedEmbedding::new(guest, host, emb)?.wirelength_via_partition()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_guest;
    use crate::host::{labeled_host, CutFamily, HostKind, LayoutVariant};
    use proptest::prelude::*;

    fn host(n1: u32, k: usize, kind: HostKind) -> HostTree {
        labeled_host(n1, k, kind, LayoutVariant::default()).unwrap()
    }

    fn find_cut(host: &HostTree, family: CutFamily) -> EdgeCut {
        cut_family(host).unwrap().into_iter().find(|c| c.family == family).unwrap()
    }

    /// Sum of host distances over guest edges, from BFS distances alone.
    fn distance_sum(guest: &Guest, host: &HostTree, emb: &Embedding) -> u64 {
        let router = Router::new(host).unwrap();
        guest
            .graph()
            .edges()
            .iter()
            .map(|&(a, b)| router.distance(emb.label_of(a), emb.label_of(b)).unwrap() as u64)
            .sum()
    }

    #[test]
    fn identity_examples() {
        let g = build_guest(3, 2).unwrap();
        let t = host(3, 1, HostKind::Binary);
        let e = identity_embedding(&g, &t).unwrap();
        assert_eq!(e.images(), &[1, 2, 3, 4, 5, 6, 7, 8]);
        assert!(identity_embedding(&g, &host(2, 1, HostKind::Binary)).is_err());
        let g2 = build_guest(2, 2).unwrap();
        assert_eq!(
            identity_embedding(&g2, &host(2, 1, HostKind::Sibling)).unwrap().images(),
            &[1, 2, 3, 4]
        );
    }

    #[test]
    fn embedding_validation() {
        assert!(Embedding::from_images(vec![1, 1]).is_err());
        assert!(Embedding::from_images(vec![1, 3]).is_err());
        let e = Embedding::from_images(vec![2, 1, 3]).unwrap();
        assert_eq!(e.guest_of_label(), vec![0, 2, 1, 3]);
        assert_eq!(e.swapped(1, 3).unwrap().images(), &[3, 1, 2]);
        assert!(e.swapped(0, 1).is_err());
    }

    #[test]
    fn route_examples() {
        let t = host(2, 1, HostKind::Binary);
        let r = route(&t, 1, 3).unwrap();
        assert_eq!(r.labels, vec![1, 2, 3]);

        let st = host(3, 1, HostKind::Sibling);
        let r = route(&st, 1, 4).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.labels, vec![1, 3, 6, 4]);
        let (u, v) = st.graph().edges()[r.edges[1]];
        assert!(st.is_sibling_edge(u, v));

        let st2 = host(2, 1, HostKind::Sibling);
        assert_eq!(route(&st2, 1, 2).unwrap().len(), 1);

        assert!(route(&t, 1, 1).is_err());
        assert!(route(&t, 1, 9).is_err());
        let unlabeled = crate::host::build_host(2, 1, HostKind::Binary).unwrap();
        assert!(route(&unlabeled, 1, 2).is_err());
    }

    #[test]
    fn direct_wirelength_examples() {
        let g = build_guest(2, 2).unwrap();
        let t = host(2, 1, HostKind::Binary);
        assert_eq!(wirelength_direct(&g, &t, &identity_embedding(&g, &t).unwrap()).unwrap(), 9);

        let g = build_guest(3, 2).unwrap();
        let t = host(3, 1, HostKind::Binary);
        assert_eq!(wirelength_direct(&g, &t, &identity_embedding(&g, &t).unwrap()).unwrap(), 54);
        let st = host(3, 1, HostKind::Sibling);
        assert_eq!(wirelength_direct(&g, &st, &identity_embedding(&g, &st).unwrap()).unwrap(), 45);
    }

    #[test]
    fn edge_congestion_examples() {
        let g = build_guest(2, 2).unwrap();
        let t = host(2, 1, HostKind::Binary);
        let e = identity_embedding(&g, &t).unwrap();
        // pendant (label 4) hangs off the root (label 2)
        assert_eq!(edge_congestion(&g, &t, &e, (2, 4)).unwrap(), 3);
        assert!(edge_congestion(&g, &t, &e, (1, 3)).is_err());

        let g = build_guest(3, 2).unwrap();
        let t = host(3, 1, HostKind::Binary);
        let e = identity_embedding(&g, &t).unwrap();
        assert_eq!(edge_congestion(&g, &t, &e, (4, 8)).unwrap(), 6);
        let routed = RoutedEmbedding::new(&g, &t, &e).unwrap();
        assert_eq!(routed.congestion().iter().sum::<u64>(), routed.wirelength());
    }

    #[test]
    fn cut_congestion_examples() {
        let g = build_guest(3, 2).unwrap();
        let t = host(3, 1, HostKind::Binary);
        let e = identity_embedding(&g, &t).unwrap();
        let cut = find_cut(&t, CutFamily::S { j: 2, i: 1 });
        assert_eq!(cut.component, (1, 3));
        assert_eq!(cut_congestion(&g, &t, &e, &cut).unwrap(), 12);

        let st = host(3, 1, HostKind::Sibling);
        let e = identity_embedding(&g, &st).unwrap();
        let cut = find_cut(&st, CutFamily::SS { j: 2, i: 1 });
        assert_eq!(cut.component, (1, 6));
        assert_eq!(cut_congestion(&g, &st, &e, &cut).unwrap(), 10);

        let t22 = host(2, 2, HostKind::Binary);
        let e = identity_embedding(&g, &t22).unwrap();
        let cut = find_cut(&t22, CutFamily::Root { i: 1 });
        assert_eq!(cut_congestion(&g, &t22, &e, &cut).unwrap(), 12);
    }

    #[test]
    fn lemma_value_examples() {
        let g = build_guest(3, 2).unwrap();
        assert_eq!(congestion_lemma_value(&g, &[1, 2, 3]).unwrap(), 12);
        assert_eq!(congestion_lemma_value(&g, &(1..=8).collect::<Vec<_>>()).unwrap(), 0);
        assert_eq!(congestion_lemma_value(&g, &[1]).unwrap(), 6);
        assert!(congestion_lemma_value(&g, &[0]).is_err());
    }

    #[test]
    fn cut_conditions_hold_for_canonical_and_fail_when_scrambled() {
        let g = build_guest(3, 2).unwrap();
        let t = host(3, 1, HostKind::Binary);
        let id = identity_embedding(&g, &t).unwrap();
        for cut in cut_family(&t).unwrap() {
            assert!(verify_cut_conditions(&g, &t, &id, &cut).unwrap().all_hold());
        }
        // 1 and 5 share a partite, so swapping them is an automorphism
        let same_partite = id.swapped(1, 5).unwrap();
        for cut in cut_family(&t).unwrap() {
            assert!(verify_cut_conditions(&g, &t, &same_partite, &cut).unwrap().all_hold());
        }
        let scrambled = id.swapped(1, 6).unwrap();
        let routed = RoutedEmbedding::new(&g, &t, &scrambled).unwrap();
        let failures: Vec<CutConditions> = cut_family(&t)
            .unwrap()
            .iter()
            .map(|c| routed.verify_cut_conditions(c).unwrap())
            .filter(|c| !c.sides_optimal)
            .collect();
        assert!(!failures.is_empty());
        // trees route along unique paths, so only optimality can break
        assert!(failures.iter().all(|c| c.internal_paths_avoid_cut && c.crossing_paths_cross_once));

        let t22 = host(2, 2, HostKind::Binary);
        let id = identity_embedding(&g, &t22).unwrap();
        let root = find_cut(&t22, CutFamily::Root { i: 1 });
        assert!(verify_cut_conditions(&g, &t22, &id, &root).unwrap().all_hold());
    }

    #[test]
    fn partition_examples() {
        let g = build_guest(3, 2).unwrap();
        for (n1, k, kind, expected) in [
            (3, 1, HostKind::Binary, 54),
            (3, 1, HostKind::Sibling, 45),
            (2, 2, HostKind::Binary, 60),
            (2, 2, HostKind::Sibling, 58),
        ] {
            let h = host(n1, k, kind);
            let e = identity_embedding(&g, &h).unwrap();
            assert_eq!(wirelength_via_partition(&g, &h, &e).unwrap(), expected);
        }
    }

    #[test]
    fn routing_is_symmetric_and_shortest() {
        for kind in [HostKind::Binary, HostKind::Sibling] {
            let h = host(4, 2, kind);
            let router = Router::new(&h).unwrap();
            for u in 1..=32 {
                for v in (u + 1)..=32 {
                    let fwd = router.route(u, v).unwrap();
                    let back = router.route(v, u).unwrap();
                    assert_eq!(fwd.len() as u32, router.distance(u, v).unwrap());
                    let mut a = fwd.edges.clone();
                    let mut b = back.edges.clone();
                    a.sort_unstable();
                    b.sort_unstable();
                    assert_eq!(a, b);
                }
            }
        }
    }

    fn shuffled(n: usize, keys: &[u32]) -> Embedding {
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&l| (keys[(l - 1) % keys.len()], l));
        Embedding::from_images(order).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn congestion_sums_to_wirelength(n in 2u32..=5, p_off in 0u32..4, n1_off in 0u32..5,
                                         sibling in any::<bool>(), keys in proptest::collection::vec(any::<u32>(), 32)) {
            let p = 2 + p_off % (n - 1);
            let n1 = 1 + n1_off % n;
            let kind = if sibling { HostKind::Sibling } else { HostKind::Binary };
            let g = build_guest(n, p).unwrap();
            let h = host(n1, 1 << (n - n1), kind);
            let emb = shuffled(g.vertex_count(), &keys);
            let routed = RoutedEmbedding::new(&g, &h, &emb).unwrap();
            prop_assert_eq!(routed.congestion().iter().sum::<u64>(), routed.wirelength());
            prop_assert_eq!(routed.wirelength(), distance_sum(&g, &h, &emb));
            // shortest routing in these hosts never re-crosses a cut
            prop_assert_eq!(routed.wirelength_via_partition().unwrap(), routed.wirelength());
            for cut in cut_family(&h).unwrap() {
                let c = routed.verify_cut_conditions(&cut).unwrap();
                prop_assert!(c.internal_paths_avoid_cut && c.crossing_paths_cross_once);
                let (inside, outside) = routed.preimages(&cut);
                let ec = routed.cut_congestion(&cut).unwrap();
                prop_assert_eq!(ec, congestion_lemma_value(&g, &inside).unwrap());
                prop_assert_eq!(ec, congestion_lemma_value(&g, &outside).unwrap());
            }
        }

        #[test]
        fn tree_wirelength_invariant_under_partite_relabeling(n in 2u32..=5, p_off in 0u32..4,
                                                              keys in proptest::collection::vec(any::<u32>(), 64)) {
            let p = 2 + p_off % (n - 1);
            let g = build_guest(n, p).unwrap();
            let h = host(n, 1, HostKind::Binary);
            let id = identity_embedding(&g, &h).unwrap();
            // permute each partite among its own labels
            let mut images = vec![0; g.vertex_count()];
            for part in g.partites() {
                let mut targets = part.clone();
                targets.sort_by_key(|&l| (keys[(l - 1) % keys.len()], l));
                for (&m, &l) in part.iter().zip(&targets) {
                    images[m - 1] = l;
                }
            }
            let relabeled = Embedding::from_images(images).unwrap();
            prop_assert_eq!(
                wirelength_direct(&g, &h, &relabeled).unwrap(),
                wirelength_direct(&g, &h, &id).unwrap()
            );
        }
    }
}
