use std::fmt::Write;

use crate::graph::Guest;
use crate::host::HostTree;

/// DOT rendering of a host, nodes named by label. Sibling edges are dashed,
/// root-chain edges bold, and each level shares a rank.
pub fn host_to_dot(host: &HostTree) -> String {
    let label = |v: usize| host.label_of(v).unwrap_or(v);
    let mut s = String::new();
    let name = format!("{}_{}_{}", host.kind(), host.n1(), host.k());
    let _ = writeln!(s, "graph {name} {{");
    let _ = writeln!(s, "  node [shape=circle];");
    let mut labels: Vec<usize> = host.graph().vertices().map(label).collect();
    labels.sort_unstable();
    for l in &labels {
        let _ = writeln!(s, "  {l};");
    }
    for level in 0..=host.n1() {
        let mut row: Vec<usize> = host
            .graph()
            .vertices()
            .filter(|&v| host.level_of(v) == level)
            .map(label)
            .collect();
        row.sort_unstable();
        let row: Vec<String> = row.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(s, "  {{ rank=same; {}; }}", row.join("; "));
    }
    let mut edges: Vec<(usize, usize, &str)> = host
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| {
            let style = if host.is_sibling_edge(u, v) {
                " [style=dashed]"
            } else if host.is_root_chain_edge(u, v) {
                " [style=bold]"
            } else {
                ""
            };
            let (a, b) = (label(u), label(v));
            (a.min(b), a.max(b), style)
        })
        .collect();
    edges.sort_unstable();
    for (a, b, style) in edges {
        let _ = writeln!(s, "  {a} -- {b}{style};");
    }
    s.push_str("}\n");
    s
}

/// DOT rendering of a guest with one cluster per partite set.
pub fn guest_to_dot(guest: &Guest) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph guest_{}_{} {{", guest.n(), guest.p());
    let _ = writeln!(s, "  node [shape=circle];");
    for (i, part) in guest.partites().iter().enumerate() {
        let _ = writeln!(s, "  subgraph cluster_{} {{", i + 1);
        let _ = writeln!(s, "    label=\"V{}\";", i + 1);
        for v in part {
            let _ = writeln!(s, "    {v};");
        }
        let _ = writeln!(s, "  }}");
    }
    for &(u, v) in guest.graph().edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}
