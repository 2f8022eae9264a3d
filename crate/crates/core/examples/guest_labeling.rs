//! Build a balanced complete 4-partite guest and show that every window of
//! consecutive labels is spread evenly across the parts.

use treewire::graph::build_guest;

fn main() -> treewire::error::Result<()> {
    let guest = build_guest(4, 2)?;
    println!(
        "{} vertices, {} edges, degree {}",
        guest.vertex_count(),
        guest.graph().edge_count(),
        guest.degree()
    );
    for (i, part) in guest.partites().iter().enumerate() {
        println!("V{} = {:?}", i + 1, part);
    }
    for len in [3, 6, 11] {
        let window: Vec<usize> = (5..5 + len).collect();
        println!("labels 5..{}: histogram {:?}", 4 + len, guest.partite_histogram(&window)?);
    }
    Ok(())
}
