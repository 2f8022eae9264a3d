//! 2-swap local search from random starts, compared with the formula at a
//! size where exhaustive search is out of reach.

use treewire::formulas::wl_formula;
use treewire::graph::build_guest;
use treewire::host::{labeled_host, HostKind, LayoutVariant};
use treewire::search::local_search_min;

fn main() -> treewire::error::Result<()> {
    let (n, p) = (4, 2);
    let guest = build_guest(n, p)?;
    let host = labeled_host(n, 1, HostKind::Sibling, LayoutVariant::default())?;
    let formula = wl_formula(n, n, p, true)?;
    for seed in 0..4 {
        let found = local_search_min(&guest, &host, seed, 50_000)?;
        println!("seed {seed}: {} (formula {formula})", found.best_value);
        assert!(found.best_value >= formula);
    }
    Ok(())
}
