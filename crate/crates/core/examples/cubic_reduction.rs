//! Expanding a 3-edge-connected graph into a cubic one and projecting flows back.

use flowsmith::cubic::{project_family, reduce_to_cubic};
use flowsmith::flow::enumerate_flows;
use flowsmith::graph::named;
use flowsmith::group::GroupSpec;

fn main() -> flowsmith::Result<()> {
    let k5 = named::k5();
    let map = reduce_to_cubic(&k5)?;
    println!(
        "K5 ({} vertices, {} edges) expands to a cubic graph on {} vertices; forest edges: {}",
        k5.vertex_count(),
        k5.edge_count(),
        map.cubic.vertex_count(),
        map.forest
    );
    for (e, o) in map.edge_correspondence.iter().enumerate() {
        match o {
            Some(o) => println!("  cubic edge {} -> original edge {}", e + 1, o + 1),
            None => println!("  cubic edge {} is a forest edge", e + 1),
        }
    }

    // nowhere-zero Z2xZ2 flows of the cubic graph stay nowhere-zero and distinct
    let spec = GroupSpec::new(vec![2, 2])?;
    let mut flows = Vec::new();
    enumerate_flows(&map.cubic, &spec, 1 << 20, |phi| {
        if phi.is_nowhere_zero() {
            flows.push(phi.clone());
        }
    })?;
    let projected = project_family(&map, &flows)?;
    let nowhere_zero = projected.iter().filter(|phi| phi.is_nowhere_zero()).count();
    println!("{} nowhere-zero Z2xZ2 flows project to {} nowhere-zero flows of K5", flows.len(), nowhere_zero);
    Ok(())
}
