//! Order-6 groups: avoiding any forbidden assignment, small and large graphs.

use flowsmith::constructions::{avoid_z6, avoid_z6_peripheral, Z6Options};
use flowsmith::flow::ForbiddenAssignment;
use flowsmith::generate::generate_random_cubic;
use flowsmith::graph::named;
use flowsmith::group::GroupSpec;
use flowsmith::peripheral::peripheral_cycle_through;

fn main() -> flowsmith::Result<()> {
    let z6: GroupSpec = "Z6".parse()?;
    let k4 = named::k4();
    let f = ForbiddenAssignment::new(z6.clone(), (0..6).map(|e| z6.decode(e)).collect())?;
    let family = avoid_z6(&k4, &f, &Z6Options::default())?;
    family.verify(&k4)?;
    println!("K4: {} flow(s) avoiding 0..5 ({:?})", family.len(), family.provenance);

    // many flows from one long peripheral cycle
    let p = named::petersen();
    let at: Vec<usize> = p.incident(0).iter().map(|&(e, _)| e).collect();
    let c = peripheral_cycle_through(&p, 0, at[0], at[1])?;
    let family = avoid_z6_peripheral(&p, &c, &ForbiddenAssignment::zero(&z6, 15), 0)?;
    println!("Petersen, cycle of length {}: {} nowhere-zero flows", c.len(), family.len());

    let spec: GroupSpec = "Z2xZ3".parse()?;
    let g = generate_random_cubic(24, 5)?;
    let f = ForbiddenAssignment::new(spec.clone(), g.edge_ids().map(|e| spec.decode(e as u64 * 7 % 6)).collect())?;
    let family = avoid_z6(&g, &f, &Z6Options { target: 8, ..Z6Options::default() })?;
    family.verify(&g)?;
    println!("random cubic, 24 vertices: {} avoiding flows ({:?})", family.len(), family.provenance);
    Ok(())
}
