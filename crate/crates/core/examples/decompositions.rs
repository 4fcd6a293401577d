//! Splitting a cubic graph into a spanning tree and a 2-base.

use flowsmith::decomposition::{decomposition_containing_cycle, decomposition_guarantee, enumerate_decompositions};
use flowsmith::graph::named;
use flowsmith::peripheral::{longest_peripheral_cycle, peripheral_cycle_through};

fn main() -> flowsmith::Result<()> {
    let g = named::petersen();
    let at: Vec<usize> = g.incident(0).iter().map(|&(e, _)| e).collect();
    let c = peripheral_cycle_through(&g, 0, at[0], at[1])?;
    let d = decomposition_containing_cycle(&g, &c)?;
    d.verify(&g)?;
    println!("T: {}\nB: {}", d.tree, d.base);

    let (longest, _) = longest_peripheral_cycle(&g, 100_000)?;
    let bound = decomposition_guarantee(g.vertex_count(), longest.len());
    let all = enumerate_decompositions(&g, 0, 16, 1)?;
    println!("{} distinct decompositions with vertex 1 a leaf (counting bound {bound})", all.len());
    Ok(())
}
