//! Render a guest and a 2-rooted sibling host as Graphviz DOT.

use treewire::cli::{guest_to_dot, host_to_dot};
use treewire::graph::build_guest;
use treewire::host::{labeled_host, HostKind, LayoutVariant};

fn main() -> treewire::error::Result<()> {
    print!("{}", guest_to_dot(&build_guest(3, 2)?));
    print!("{}", host_to_dot(&labeled_host(2, 2, HostKind::Sibling, LayoutVariant::default())?));
    Ok(())
}
