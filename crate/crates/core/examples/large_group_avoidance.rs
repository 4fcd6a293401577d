//! Flows avoiding an arbitrary assignment over groups of order at least 6.

use flowsmith::constructions::avoid_large_group;
use flowsmith::flow::ForbiddenAssignment;
use flowsmith::graph::named;
use flowsmith::group::GroupSpec;
use rand::{Rng, SeedableRng};

fn main() -> flowsmith::Result<()> {
    let g = named::petersen();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    for group in ["Z7", "Z8", "Z9", "Z2xZ2xZ2", "Z12"] {
        let spec: GroupSpec = group.parse()?;
        let values = g.edge_ids().map(|_| spec.decode(rng.gen_range(0..spec.order()))).collect();
        let f = ForbiddenAssignment::new(spec, values)?;
        let family = avoid_large_group(&g, &f, 0)?;
        family.verify(&g)?;
        println!("{group}: {} avoiding flows (guarantee {})", family.len(), family.guarantee);
    }
    Ok(())
}
