//! Peripheral cycles and paths: removing them keeps the graph connected.

use flowsmith::generate::generate_random_cubic;
use flowsmith::peripheral::{is_peripheral, longest_peripheral_cycle, peripheral_cycle_through, peripheral_path};

fn main() -> flowsmith::Result<()> {
    let g = generate_random_cubic(16, 7)?;
    for v in [0, 5] {
        let at: Vec<usize> = g.incident(v).iter().map(|&(e, _)| e).collect();
        let c = peripheral_cycle_through(&g, v, at[0], at[1])?;
        let edges: Vec<usize> = c.edges().map(|e| e + 1).collect();
        println!("through vertex {} by edges {} and {}: {edges:?}", v + 1, at[0] + 1, at[1] + 1);
        assert!(is_peripheral(&g, &c.edge_set()));
    }

    // a path in the part of G - X reached by one edge leaving X
    let x = [0];
    let f = g.incident(0)[0].0;
    let p = peripheral_path(&g, &x, f, None)?;
    let vertices: Vec<usize> = p.path.vertices.iter().map(|v| v + 1).collect();
    println!("peripheral path off vertex 1 via edge {}: {vertices:?}", f + 1);

    let (best, exhaustive) = longest_peripheral_cycle(&g, 100_000)?;
    println!("longest peripheral cycle: {} edges (exhaustive: {exhaustive})", best.len());
    Ok(())
}
