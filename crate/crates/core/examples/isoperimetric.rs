//! Maximum induced edges of k-vertex subsets: closed form against brute force.

use treewire::graph::build_complete_multipartite;
use treewire::isoperimetric::{max_subgraph_edges_bruteforce, max_subgraph_edges_closed_form};

fn main() -> treewire::error::Result<()> {
    let (parts, r) = (4, 3);
    let graph = build_complete_multipartite(&[r; 4])?;
    println!(" k  closed  brute  witness");
    for k in 0..=parts * r {
        let closed = max_subgraph_edges_closed_form(parts, r, k)?;
        let brute = max_subgraph_edges_bruteforce(&graph, k)?;
        println!("{k:>2}  {closed:>6}  {:>5}  {:?}", brute.max_edges, brute.witness.unwrap_or_default());
        assert_eq!(closed, brute.max_edges);
    }
    Ok(())
}
