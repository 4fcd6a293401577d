//! Group arithmetic and brute-force flow counts.

use flowsmith::flow::{count_avoiding, count_nowhere_zero, ForbiddenAssignment, OracleConfig};
use flowsmith::graph::named;
use flowsmith::group::GroupSpec;

fn main() -> flowsmith::Result<()> {
    let z6: GroupSpec = "Z6".parse()?;
    let z2z3: GroupSpec = "Z2xZ3".parse()?;
    println!("{z6} and {z2z3} are different specs: {}", z6 != z2z3);
    let x = z2z3.parse_element("1,2")?;
    println!("(1,2) + (1,2) = ({})", z2z3.add(&x, &x)?);

    let config = OracleConfig::default();
    for (name, g) in [("K4", named::k4()), ("prism", named::prism()), ("Petersen", named::petersen())] {
        let counts: Vec<String> = ["Z4", "Z2xZ2", "Z5", "Z6", "Z2xZ3"]
            .iter()
            .map(|s| {
                let spec: GroupSpec = s.parse().unwrap();
                format!("{s}: {}", count_nowhere_zero(&g, &spec, config).unwrap())
            })
            .collect();
        println!("{name} nowhere-zero flows, {}", counts.join(", "));
    }

    // avoiding an arbitrary assignment: K4 is Z6-connected
    let k4 = named::k4();
    let f = ForbiddenAssignment::new(z6.clone(), (0..6).map(|e| z6.decode(e % 6)).collect())?;
    println!("K4 flows avoiding 0,1,2,3,4,5 in Z6: {}", count_avoiding(&k4, &f, config)?);
    Ok(())
}
