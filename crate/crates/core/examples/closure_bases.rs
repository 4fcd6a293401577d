//! k-closures, their certificates, and flows that dodge forbidden values.

use flowsmith::closure::{avoidance_flow, is_k_base, k_closure, two_disjoint_spanning_trees};
use flowsmith::decomposition::decomposition_containing_cycle;
use flowsmith::graph::{named, EdgeSet};
use flowsmith::group::GroupSpec;
use flowsmith::peripheral::peripheral_cycle_through;

fn main() -> flowsmith::Result<()> {
    let g = named::petersen();
    let outer = EdgeSet::from([0, 1, 2, 3, 4]);
    for k in 1..=2 {
        let (closure, cert) = k_closure(&g, &outer, k)?;
        println!("{k}-closure of the outer 5-cycle: {} edges in {} steps", closure.len(), cert.steps.len());
    }
    // the outer cycle alone spans nothing new; a decomposition's base does
    let at: Vec<usize> = g.incident(0).iter().map(|&(e, _)| e).collect();
    let base = decomposition_containing_cycle(&g, &peripheral_cycle_through(&g, 0, at[0], at[1])?)?.base;
    println!("2-base: {base}, is a 2-base: {}", is_k_base(&g, &base, 2)?);
    let (_, cert) = k_closure(&g, &base, 2)?;
    for (i, step) in cert.steps.iter().enumerate() {
        let cycle: Vec<usize> = step.cycle.edges().map(|e| e + 1).collect();
        println!("  step {}: cycle {cycle:?} adds {}", i + 1, step.new_edges);
    }

    // a Z3 flow avoids one forbidden value on every edge outside the base
    let spec = GroupSpec::cyclic(3);
    let forbidden: Vec<_> = g.edge_ids().map(|e| Some(spec.decode(e as u64 % 3))).collect();
    let phi = avoidance_flow(&g, &cert, &spec, &forbidden)?;
    let clashes = g.edge_ids().filter(|&e| !base.contains(e) && Some(&phi.values[e]) == forbidden[e].as_ref());
    println!("avoidance flow clashes outside the base: {}", clashes.count());

    let k6 = named::k6();
    if let Some((a, b)) = two_disjoint_spanning_trees(&k6) {
        println!("K6 packs two spanning trees: {a} and {b}");
    }
    Ok(())
}
