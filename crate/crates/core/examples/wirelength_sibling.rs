//! Sibling trees under every layout variant, with per-cut congestion.

use treewire::embedding::{identity_embedding, RoutedEmbedding};
use treewire::formulas::wl_formula_stk;
use treewire::graph::build_guest;
use treewire::host::{labeled_host, HostKind, LayoutVariant};

fn main() -> treewire::error::Result<()> {
    let guest = build_guest(3, 2)?;
    for variant in LayoutVariant::ALL {
        let host = labeled_host(3, 1, HostKind::Sibling, variant)?;
        let emb = identity_embedding(&guest, &host)?;
        let wl = RoutedEmbedding::new(&guest, &host, &emb)?.wirelength();
        println!("{variant:?}: {wl}");
    }

    let host = labeled_host(2, 2, HostKind::Sibling, LayoutVariant::default())?;
    let emb = identity_embedding(&guest, &host)?;
    let report = RoutedEmbedding::new(&guest, &host, &emb)?.report()?;
    for c in &report.per_cut {
        println!("{:<4} j={} i={}  ec {}", c.family, c.j, c.i, c.ec);
    }
    println!("total {} (formula {})", report.via_partition, wl_formula_stk(3, 2, 2)?);
    Ok(())
}
