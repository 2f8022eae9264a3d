//! Search all 8! bijections to confirm the canonical embedding is optimal.

use treewire::formulas::wl_formula;
use treewire::graph::build_guest;
use treewire::host::{labeled_host, HostKind, LayoutVariant};
use treewire::search::{exhaustive_min_wirelength, DEFAULT_EVALUATION_BUDGET};

fn main() -> treewire::error::Result<()> {
    let guest = build_guest(3, 2)?;
    for kind in [HostKind::Binary, HostKind::Sibling] {
        for n1 in [3, 2, 1] {
            let host = labeled_host(n1, 1 << (3 - n1), kind, LayoutVariant::default())?;
            let best = exhaustive_min_wirelength(&guest, &host, DEFAULT_EVALUATION_BUDGET)?;
            println!(
                "{:<7} n1 = {n1}: minimum {:>3} over {} bijections, formula {:>3}, witness {:?}",
                kind.to_string(),
                best.best_value,
                best.explored,
                wl_formula(3, n1, 2, kind == HostKind::Sibling)?,
                best.witness.images()
            );
        }
    }
    Ok(())
}
