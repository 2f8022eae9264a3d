//! List the edge cuts used to account wirelength on a 2-rooted sibling tree.

use treewire::host::{cut_family, cut_multiplicity, labeled_host, HostKind, LayoutVariant};

fn main() -> treewire::error::Result<()> {
    let host = labeled_host(2, 2, HostKind::Sibling, LayoutVariant::default())?;
    println!(
        "{} vertices, {} edges, every edge covered {} times",
        host.vertex_count(),
        host.graph().edge_count(),
        cut_multiplicity(&host)
    );
    for cut in cut_family(&host)? {
        let (lo, hi) = cut.component;
        println!("{:<10} labels {lo}..={hi}  cut edges {}", cut.family.to_string(), cut.cut_edges.len());
    }
    Ok(())
}
