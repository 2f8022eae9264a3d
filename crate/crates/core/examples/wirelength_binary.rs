//! Wirelength of the canonical embedding into rooted binary trees, three ways.

use treewire::embedding::{identity_embedding, RoutedEmbedding};
use treewire::formulas::wl_formula_tk;
use treewire::graph::build_guest;
use treewire::host::{labeled_host, HostKind, LayoutVariant};

fn main() -> treewire::error::Result<()> {
    let (n, p) = (5, 2);
    let guest = build_guest(n, p)?;
    for n1 in (1..=n).rev() {
        let host = labeled_host(n1, 1 << (n - n1), HostKind::Binary, LayoutVariant::default())?;
        let emb = identity_embedding(&guest, &host)?;
        let routed = RoutedEmbedding::new(&guest, &host, &emb)?;
        println!(
            "n1 = {n1}, k = {:>2}: direct {}, via cuts {}, formula {}",
            host.k(),
            routed.wirelength(),
            routed.wirelength_via_partition()?,
            wl_formula_tk(n, n1, p)?
        );
    }
    Ok(())
}
