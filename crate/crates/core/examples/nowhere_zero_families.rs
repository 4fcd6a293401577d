//! Exponentially many nowhere-zero Z2xZ3 and Z2xZ2 flows.

use flowsmith::constructions::{many_nz_z2z2, many_nz_z2z3};
use flowsmith::flow::{count_nowhere_zero, OracleConfig};
use flowsmith::generate::generate_random_3_edge_connected;
use flowsmith::graph::named;

fn main() -> flowsmith::Result<()> {
    for (name, g) in
        [("K4", named::k4()), ("Petersen", named::petersen()), ("random", generate_random_3_edge_connected(8, 14, 3)?)]
    {
        let family = many_nz_z2z3(&g, 0)?;
        family.verify(&g)?;
        let exact = count_nowhere_zero(&g, &family.spec, OracleConfig::default())?;
        println!("{name}: {} Z2xZ3 flows (guarantee {}, exact count {exact})", family.len(), family.guarantee);
    }
    for (name, g) in [("K5", named::k5()), ("K6", named::k6()), ("octahedron", named::octahedron())] {
        let family = many_nz_z2z2(&g, 0)?;
        family.verify(&g)?;
        println!("{name}: {} Z2xZ2 flows (guarantee {})", family.len(), family.guarantee);
    }
    Ok(())
}
