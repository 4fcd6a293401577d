//! Reading a graph, testing edge connectivity and looking at its cycle space.

use flowsmith::graph::format::{parse_fdg, write_fdg};
use flowsmith::graph::{
    bridges, cycle_space_dimension, edge_connectivity_at_least, enumerate_cycles, find_nontrivial_3_cut, named, EdgeSet,
};

const PRISM: &str = "c triangular prism\np fdg 6 9\ne 1 2\ne 2 3\ne 3 1\ne 4 5\ne 5 6\ne 6 4\ne 1 4\ne 2 5\ne 3 6\n";

fn main() -> flowsmith::Result<()> {
    let g = parse_fdg(PRISM)?;
    println!("prism: {} vertices, {} edges, cubic: {}", g.vertex_count(), g.edge_count(), g.is_cubic());
    println!("3-edge-connected: {}", edge_connectivity_at_least(&g, 3));
    println!("4-edge-connected: {}", edge_connectivity_at_least(&g, 4));
    println!("bridges: {:?}", bridges(&g, |_| true, |_| true));

    // the three rungs separate the two triangles
    if let Some(cut) = find_nontrivial_3_cut(&g)? {
        let side: Vec<usize> = cut.side_a.iter().map(|v| v + 1).collect();
        println!("nontrivial 3-cut with side {side:?}");
    }
    let all = EdgeSet::all(&g);
    println!("cycle space dimension: {}", cycle_space_dimension(&g, &all));
    let (count, exhaustive) = enumerate_cycles(&g, 1000, |_| {});
    println!("cycles: {count} (exhaustive: {exhaustive})");

    let petersen = named::petersen();
    println!("petersen has a nontrivial 3-cut: {}", find_nontrivial_3_cut(&petersen)?.is_some());
    assert_eq!(parse_fdg(&write_fdg(&g))?, g);
    Ok(())
}
