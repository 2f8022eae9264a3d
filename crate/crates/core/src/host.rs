//! k-rooted complete binary trees and k-rooted sibling trees.
//!
//! A host is `k` copies of a 1-rooted tree: a complete binary tree of
//! height `n1` plus a pendant root at level 0 attached to its top vertex.
//! The pendant roots are joined into a path, the root chain. Sibling hosts
//! additionally join the two children of every internal vertex.
//!
//! Vertex ids are laid out block by block: in block `b` (0-based) the
//! pendant root is `b * 2^n1 + 1` and the tree vertex with heap index `h`
//! (root 1, children `2h` and `2h + 1`) is `b * 2^n1 + h + 1`.
//! Position labels are assigned separately by [`inorder_labeling`] or
//! [`sibling_layout_labeling`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_N};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HostKind {
    Binary,
    Sibling,
}

impl fmt::Display for HostKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HostKind::Binary => "binary",
            HostKind::Sibling => "sibling",
        })
    }
}

/// Recursive orders for labeling a sibling tree. Each places the left
/// subtree, the right subtree and the parent so that every subtree and
/// every sibling pair of subtrees is a contiguous run of labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum LayoutVariant {
    /// Left subtree, right subtree, parent.
    #[default]
    LeftRightParent,
    RightLeftParent,
    ParentLeftRight,
    ParentRightLeft,
}

impl LayoutVariant {
    pub const ALL: [LayoutVariant; 4] = [
        LayoutVariant::LeftRightParent,
        LayoutVariant::RightLeftParent,
        LayoutVariant::ParentLeftRight,
        LayoutVariant::ParentRightLeft,
    ];

    pub fn from_index(index: u8) -> Result<Self> {
        Self::ALL
            .get(index as usize)
            .copied()
            .ok_or_else(|| Error::invalid(format!("layout variant {index} not in 0..=3")))
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    fn parent_first(self) -> bool {
        matches!(
            self,
            LayoutVariant::ParentLeftRight | LayoutVariant::ParentRightLeft
        )
    }

    fn right_first(self) -> bool {
        matches!(
            self,
            LayoutVariant::RightLeftParent | LayoutVariant::ParentRightLeft
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LabelScheme {
    Inorder,
    Sibling(LayoutVariant),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Labeling {
    scheme: LabelScheme,
    /// Indexed by vertex id.
    label_of: Vec<usize>,
    /// Indexed by label.
    vertex_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HostTree {
    graph: Graph,
    n1: u32,
    k: usize,
    kind: HostKind,
    labels: Option<Labeling>,
}

pub fn build_host(n1: u32, k: usize, kind: HostKind) -> Result<HostTree> {
    if n1 < 1 || k < 1 {
        return Err(Error::invalid(format!(
            "need n1 >= 1 and k >= 1, got n1 = {n1}, k = {k}"
        )));
    }
    if n1 > MAX_N || k > (1usize << MAX_N) >> n1 {
        return Err(Error::invalid(format!(
            "host with n1 = {n1}, k = {k} exceeds 2^{MAX_N} vertices"
        )));
    }
    let block = 1usize << n1;
    let internal = block / 2;
    let id = |b: usize, h: usize| b * block + h + 1;
    let mut edges = Vec::new();
    for b in 0..k {
        edges.push((id(b, 0), id(b, 1)));
        for h in 1..internal {
            edges.push((id(b, h), id(b, 2 * h)));
            edges.push((id(b, h), id(b, 2 * h + 1)));
            if kind == HostKind::Sibling {
                edges.push((id(b, 2 * h), id(b, 2 * h + 1)));
            }
        }
        if b + 1 < k {
            edges.push((id(b, 0), id(b + 1, 0)));
        }
    }
    let graph = Graph::new(k * block, edges)?;
    Ok(HostTree {
        graph,
        n1,
        k,
        kind,
        labels: None,
    })
}

/// Host with the canonical labeling for its kind: inorder for binary
/// hosts, the given layout variant for sibling hosts.
pub fn labeled_host(n1: u32, k: usize, kind: HostKind, variant: LayoutVariant) -> Result<HostTree> {
    let host = build_host(n1, k, kind)?;
    match kind {
        HostKind::Binary => inorder_labeling(host),
        HostKind::Sibling => sibling_layout_labeling(host, variant),
    }
}

impl HostTree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kind(&self) -> HostKind {
        self.kind
    }

    pub fn is_sibling(&self) -> bool {
        self.kind == HostKind::Sibling
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn block_size(&self) -> usize {
        1 << self.n1
    }

    /// `(block, heap index)`; heap index 0 is the pendant root.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        ((v - 1) / self.block_size(), (v - 1) % self.block_size())
    }

    fn vertex(&self, block: usize, heap: usize) -> usize {
        block * self.block_size() + heap + 1
    }

    /// 0 for pendant roots, `1..=n1` for tree vertices.
    pub fn level_of(&self, v: usize) -> u32 {
        let (_, h) = self.locate(v);
        if h == 0 {
            0
        } else {
            usize::BITS - h.leading_zeros()
        }
    }

    pub fn parent_of(&self, v: usize) -> Option<usize> {
        let (b, h) = self.locate(v);
        match h {
            0 => None,
            1 => Some(self.vertex(b, 0)),
            _ => Some(self.vertex(b, h / 2)),
        }
    }

    pub fn children_of(&self, v: usize) -> Option<(usize, usize)> {
        let (b, h) = self.locate(v);
        (h >= 1 && h < self.block_size() / 2)
            .then(|| (self.vertex(b, 2 * h), self.vertex(b, 2 * h + 1)))
    }

    pub fn sibling_edges(&self) -> Vec<(usize, usize)> {
        if !self.is_sibling() {
            return Vec::new();
        }
        (0..self.k)
            .flat_map(|b| {
                (1..self.block_size() / 2)
                    .map(move |h| (self.vertex(b, 2 * h), self.vertex(b, 2 * h + 1)))
            })
            .collect()
    }

    pub fn is_sibling_edge(&self, u: usize, v: usize) -> bool {
        self.is_sibling()
            && u != v
            && self.parent_of(u).is_some()
            && self.parent_of(u) == self.parent_of(v)
            && self.level_of(u) >= 2
    }

    /// Pendant roots in chain order.
    pub fn root_chain(&self) -> Vec<usize> {
        (0..self.k).map(|b| self.vertex(b, 0)).collect()
    }

    pub fn is_root_chain_edge(&self, u: usize, v: usize) -> bool {
        self.level_of(u) == 0 && self.level_of(v) == 0
    }

    /// Vertices of the subtree hanging below `v`, `v` included.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let (b, h) = self.locate(v);
        let mut out = Vec::new();
        let mut stack = vec![h.max(1)];
        if h == 0 {
            out.push(v);
        }
        while let Some(x) = stack.pop() {
            out.push(self.vertex(b, x));
            if x < self.block_size() / 2 {
                stack.push(2 * x + 1);
                stack.push(2 * x);
            }
        }
        out
    }

    pub fn is_labeled(&self) -> bool {
        self.labels.is_some()
    }

    pub fn label_scheme(&self) -> Option<LabelScheme> {
        self.labels.as_ref().map(|l| l.scheme)
    }

    pub fn label_of(&self, v: usize) -> Option<usize> {
        self.labels.as_ref().map(|l| l.label_of[v])
    }

    pub fn vertex_of(&self, label: usize) -> Option<usize> {
        self.labels
            .as_ref()
            .and_then(|l| l.vertex_of.get(label).copied())
            .filter(|&v| v != 0)
    }

    pub(crate) fn require_labels(&self) -> Result<(&[usize], &[usize])> {
        self.labels
            .as_ref()
            .map(|l| (l.label_of.as_slice(), l.vertex_of.as_slice()))
            .ok_or_else(|| Error::State("host has no position labels".into()))
    }

    fn with_labels(mut self, scheme: LabelScheme, order: Vec<usize>) -> HostTree {
        let n = self.vertex_count();
        debug_assert_eq!(order.len(), n);
        let mut label_of = vec![0; n + 1];
        let mut vertex_of = vec![0; n + 1];
        for (i, &v) in order.iter().enumerate() {
            label_of[v] = i + 1;
            vertex_of[i + 1] = v;
        }
        self.labels = Some(Labeling {
            scheme,
            label_of,
            vertex_of,
        });
        self
    }
}

/// Inorder labels within each block, offset by `(block - 1) 2^n1`, with the
/// pendant root taking the last label of its block.
pub fn inorder_labeling(host: HostTree) -> Result<HostTree> {
    if host.is_sibling() {
        return Err(Error::invalid(
            "inorder labeling applies to binary hosts; use sibling_layout_labeling",
        ));
    }
    fn walk(h: usize, internal: usize, out: &mut Vec<usize>) {
        if h < internal {
            walk(2 * h, internal, out);
            out.push(h);
            walk(2 * h + 1, internal, out);
        } else {
            out.push(h);
        }
    }
    let mut order = Vec::with_capacity(host.vertex_count());
    let mut heap_order = Vec::with_capacity(host.block_size());
    walk(1, host.block_size() / 2, &mut heap_order);
    heap_order.push(0);
    for b in 0..host.k {
        order.extend(heap_order.iter().map(|&h| host.vertex(b, h)));
    }
    Ok(host.with_labels(LabelScheme::Inorder, order))
}

/// Recursive sibling-tree layout; pendant roots take their block's last label.
pub fn sibling_layout_labeling(host: HostTree, variant: LayoutVariant) -> Result<HostTree> {
    if !host.is_sibling() {
        return Err(Error::invalid(
            "sibling layout applies to sibling hosts; use inorder_labeling",
        ));
    }
    fn walk(h: usize, internal: usize, variant: LayoutVariant, out: &mut Vec<usize>) {
        if h >= internal {
            out.push(h);
            return;
        }
        let (first, second) = if variant.right_first() {
            (2 * h + 1, 2 * h)
        } else {
            (2 * h, 2 * h + 1)
        };
        if variant.parent_first() {
            out.push(h);
        }
        walk(first, internal, variant, out);
        walk(second, internal, variant, out);
        if !variant.parent_first() {
            out.push(h);
        }
    }
    let mut heap_order = Vec::with_capacity(host.block_size());
    walk(1, host.block_size() / 2, variant, &mut heap_order);
    heap_order.push(0);
    let order = (0..host.k)
        .flat_map(|b| heap_order.iter().map(move |&h| (b, h)))
        .map(|(b, h)| host.vertex(b, h))
        .collect();
    Ok(host.with_labels(LabelScheme::Sibling(variant), order))
}

/// Which member of the cut family a cut is.
///
/// `S { j, i }` separates the subtree of height `j` that is `i`-th from the
/// left across all blocks. `SS { j, i }` separates both child subtrees (each
/// of height `j`) of the `i`-th vertex of subtree height `j + 1`. In sibling
/// hosts the repeated pendant cut of block `i` is `SS { j: n1, i }`.
/// `Root { i }` is the chain edge between blocks `i` and `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CutFamily {
    S { j: u32, i: usize },
    SS { j: u32, i: usize },
    Root { i: usize },
}

impl CutFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CutFamily::S { .. } => "S",
            CutFamily::SS { .. } => "SS",
            CutFamily::Root { .. } => "ROOT",
        }
    }

    /// Height index; 0 for root-chain cuts.
    pub fn j(&self) -> u32 {
        match *self {
            CutFamily::S { j, .. } | CutFamily::SS { j, .. } => j,
            CutFamily::Root { .. } => 0,
        }
    }

    pub fn i(&self) -> usize {
        match *self {
            CutFamily::S { i, .. } | CutFamily::SS { i, .. } | CutFamily::Root { i } => i,
        }
    }
}

impl fmt::Display for CutFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutFamily::Root { i } => write!(f, "ROOT({i})"),
            other => write!(f, "{}({},{})", other.name(), other.j(), other.i()),
        }
    }
}

/// A set of host edges whose removal leaves two components.
///
/// `component` is the label interval of the side that does not contain the
/// last pendant root (label `k 2^n1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub family: CutFamily,
    /// Host edge ids.
    pub cut_edges: Vec<usize>,
    pub component: (usize, usize),
    pub multiplicity_share: u32,
}

impl EdgeCut {
    pub fn component_len(&self) -> usize {
        self.component.1 + 1 - self.component.0
    }

    pub fn contains_label(&self, label: usize) -> bool {
        (self.component.0..=self.component.1).contains(&label)
    }
}

/// How many times each host edge is covered by the cut family.
pub fn cut_multiplicity(host: &HostTree) -> u32 {
    match host.kind {
        HostKind::Binary => 1,
        HostKind::Sibling => 2,
    }
}

pub fn cut_family(host: &HostTree) -> Result<Vec<EdgeCut>> {
    let (label_of, _) = host.require_labels()?;
    let g = host.graph();
    let edge = |u: usize, v: usize| g.edge_id(u, v).expect("host edge");
    let interval = |vertices: &[usize]| -> (usize, usize) {
        let lo = vertices.iter().map(|&v| label_of[v]).min().unwrap();
        let hi = vertices.iter().map(|&v| label_of[v]).max().unwrap();
        debug_assert_eq!(hi + 1 - lo, vertices.len(), "component is not an interval");
        (lo, hi)
    };
    let n1 = host.n1;
    let block = host.block_size();
    let sibling = host.is_sibling();
    let mut cuts = Vec::new();

    // S cuts: one per tree vertex, separating its subtree.
    for v in g.vertices() {
        let level = host.level_of(v);
        if level == 0 {
            continue;
        }
        let (b, h) = host.locate(v);
        let j = n1 - level + 1;
        let i = b * (block >> j) + (h - (1 << (level - 1))) + 1;
        let parent = host.parent_of(v).unwrap();
        let mut cut_edges = vec![edge(v, parent)];
        if sibling && h >= 2 {
            cut_edges.push(edge(v, h_sibling(host, v)));
        }
        cuts.push(EdgeCut {
            family: CutFamily::S { j, i },
            cut_edges,
            component: interval(&host.subtree(v)),
            multiplicity_share: 1,
        });
    }

    if sibling {
        // SS cuts: both child edges of an internal vertex.
        for v in g.vertices() {
            let Some((left, right)) = host.children_of(v) else {
                continue;
            };
            let level = host.level_of(v);
            let (b, h) = host.locate(v);
            let j = n1 - level;
            let i = b * (block >> (j + 1)) + (h - (1 << (level - 1))) + 1;
            let mut side = host.subtree(left);
            side.extend(host.subtree(right));
            cuts.push(EdgeCut {
                family: CutFamily::SS { j, i },
                cut_edges: vec![edge(v, left), edge(v, right)],
                component: interval(&side),
                multiplicity_share: 1,
            });
        }
        // Pendant edges are covered once more.
        for b in 0..host.k {
            let top = host.vertex(b, 1);
            cuts.push(EdgeCut {
                family: CutFamily::SS { j: n1, i: b + 1 },
                cut_edges: vec![edge(top, host.vertex(b, 0))],
                component: interval(&host.subtree(top)),
                multiplicity_share: 1,
            });
        }
    }

    let roots = host.root_chain();
    for (i, pair) in roots.windows(2).enumerate() {
        cuts.push(EdgeCut {
            family: CutFamily::Root { i: i + 1 },
            cut_edges: vec![edge(pair[0], pair[1])],
            component: (1, (i + 1) * block),
            multiplicity_share: cut_multiplicity(host),
        });
    }
    Ok(cuts)
}

fn h_sibling(host: &HostTree, v: usize) -> usize {
    let (b, h) = host.locate(v);
    host.vertex(b, h ^ 1)
}
