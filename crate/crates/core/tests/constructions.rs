mod common;

use common::{avoids, check_flows, cubic_corpus, is_nowhere_zero};
use flowsmith::constructions::{
    avoid_large_group, avoid_z6, avoid_z6_peripheral, many_nz_z2z2, many_nz_z2z3, support_flow_family, Provenance,
    Z6Options,
};
use flowsmith::flow::{count_avoiding, count_nowhere_zero, ForbiddenAssignment, GroupFlow, OracleConfig};
use flowsmith::generate::generate_random_cubic;
use flowsmith::graph::{named, Cycle, Multigraph};
use flowsmith::group::GroupSpec;
use flowsmith::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec(s: &str) -> GroupSpec {
    s.parse().unwrap()
}

fn random_f(spec: &GroupSpec, m: usize, rng: &mut ChaCha8Rng) -> ForbiddenAssignment {
    let values = (0..m).map(|_| spec.decode(rng.gen_range(0..spec.order()))).collect();
    ForbiddenAssignment::new(spec.clone(), values).unwrap()
}

fn cyclic_flow(spec: &GroupSpec, values: &[u32]) -> GroupFlow {
    GroupFlow::new(spec.clone(), values.iter().map(|&v| spec.element(&[v]).unwrap()).collect()).unwrap()
}

fn oracle() -> OracleConfig {
    OracleConfig::default()
}

#[test]
fn support_expansion_on_theta() {
    let theta = named::theta();
    let z2 = spec("Z2");
    let z3 = spec("Z3");
    // all three edges run 1 -> 2, so (1, 1, 1) conserves over Z3
    let psi = cyclic_flow(&z3, &[1, 1, 1]);
    let family = support_flow_family(&theta, &GroupFlow::zero(&z2, 3), &psi, 0).unwrap();
    assert_eq!(family.guarantee, 2);
    assert_eq!(family.spec, spec("Z2xZ3"));
    check_flows(&theta, &family.flows, is_nowhere_zero).unwrap();
    assert!(family.len() >= 2);
    // the Z2 cycle space of theta has four elements
    let all = support_flow_family(&theta, &GroupFlow::zero(&z2, 3), &psi, 100).unwrap();
    assert_eq!(all.len(), 4);
    check_flows(&theta, &all.flows, is_nowhere_zero).unwrap();

    // supports must cover, inputs must conserve, the first flow must be Z2
    let partial = cyclic_flow(&z3, &[1, 2, 0]);
    assert!(matches!(
        support_flow_family(&theta, &GroupFlow::zero(&z2, 3), &partial, 0),
        Err(Error::PreconditionViolated(_))
    ));
    assert!(support_flow_family(&theta, &GroupFlow::zero(&z2, 3), &cyclic_flow(&z3, &[1, 1, 2]), 0).is_err());
    assert!(support_flow_family(&theta, &psi, &psi, 0).is_err());
}

#[test]
fn support_expansion_with_full_first_flow() {
    // phi covers the Hamilton cycle 1-2-3-4, psi the two chords
    let k4 = named::k4();
    let z2 = spec("Z2");
    let z3 = spec("Z3");
    // Z2 flow on the 4-cycle 12, 23, 34, 14 (ids 0, 3, 5, 2)
    let phi = cyclic_flow(&z2, &[1, 0, 1, 1, 0, 1]);
    // a Z3 flow nonzero on the chords 13, 24 (ids 1, 4): circulate 1 -> 3 -> 2 -> 4 -> 1
    // 13 forward (+1), 23 backward (-1), 24 forward (+1), 14 backward (-1)
    let psi = cyclic_flow(&z3, &[0, 1, 2, 2, 1, 0]);
    let family = support_flow_family(&k4, &phi, &psi, 0).unwrap();
    // t = 4: 2^(6 - 4 - 4/3) rounds up to 2
    assert_eq!(family.guarantee, 2);
    check_flows(&k4, &family.flows, is_nowhere_zero).unwrap();
    assert!(family.len() >= 2);
}

#[test]
fn nowhere_zero_two_three_on_corpus() {
    let z2z3 = spec("Z2xZ3");
    for (name, g) in cubic_corpus(25) {
        let family = many_nz_z2z3(&g, 0).unwrap();
        let excess = g.edge_count() - g.vertex_count();
        assert_eq!(family.guarantee, (2f64.powf(excess as f64 / 3.0)).ceil() as u64, "{name}");
        family.verify(&g).unwrap();
        check_flows(&g, &family.flows, is_nowhere_zero).unwrap_or_else(|e| panic!("{name}: {e}"));
        if 6f64.powi(excess as i32 + 1) <= 1e8 {
            let count = count_nowhere_zero(&g, &z2z3, oracle()).unwrap();
            assert!(count >= family.len() as u64, "{name}");
        }
    }
    assert_eq!(count_nowhere_zero(&named::theta(), &z2z3, oracle()).unwrap(), 20);
}

#[test]
fn nowhere_zero_two_three_special_shapes() {
    // single vertex with three loops: every nonzero value works, 5^3 in all
    let bouquet = named::bouquet(3);
    let family = many_nz_z2z3(&bouquet, 0).unwrap();
    assert_eq!(family.guarantee, 2);
    assert_eq!(family.provenance, Provenance::SingleVertex);
    assert_eq!(many_nz_z2z3(&bouquet, 1000).unwrap().len(), 125);

    // a 5-cycle: only constant flows around it
    let cycle = Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    let family = many_nz_z2z3(&cycle, 100).unwrap();
    assert_eq!(family.len(), 5);
    check_flows(&cycle, &family.flows, is_nowhere_zero).unwrap();

    // two K4s joined by two edges: 2-edge-connected, not 3-edge-connected
    let g = Multigraph::from_edges(
        8,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
            (0, 4),
            (1, 5),
        ],
    );
    let family = many_nz_z2z3(&g, 0).unwrap();
    family.verify(&g).unwrap();
    check_flows(&g, &family.flows, is_nowhere_zero).unwrap();
    let count = count_nowhere_zero(&g, &spec("Z2xZ3"), oracle()).unwrap();
    let everything = many_nz_z2z3(&g, 1 << 20).unwrap();
    assert!(everything.len() as u64 <= count);
    check_flows(&g, &everything.flows, is_nowhere_zero).unwrap();

    let path = Multigraph::from_edges(2, &[(0, 1)]);
    assert!(matches!(many_nz_z2z3(&path, 0), Err(Error::PreconditionViolated(_))));
}

#[test]
fn nowhere_zero_two_two() {
    let z2z2 = spec("Z2xZ2");
    for (name, g) in [("K5", named::k5()), ("K6", named::k6()), ("octahedron", named::octahedron())] {
        let family = many_nz_z2z2(&g, 0).unwrap();
        assert_eq!(family.guarantee, 4, "{name}");
        assert_eq!(family.spec, z2z2);
        family.verify(&g).unwrap();
        check_flows(&g, &family.flows, is_nowhere_zero).unwrap();
        let count = count_nowhere_zero(&g, &z2z2, oracle()).unwrap();
        assert!(count >= family.len() as u64);
        let more = many_nz_z2z2(&g, 50).unwrap();
        assert!(more.len() >= 50);
        check_flows(&g, &more.flows, is_nowhere_zero).unwrap();
    }
    assert!(matches!(many_nz_z2z2(&named::theta(), 0), Err(Error::PreconditionViolated(_))));
    assert!(matches!(many_nz_z2z2(&named::k4(), 0), Err(Error::PreconditionViolated(_))));
}

#[test]
fn large_group_examples() {
    let k4 = named::k4();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (group, bound) in [("Z8", 2), ("Z7", 1), ("Z9", 2), ("Z2xZ2xZ2", 2), ("Z6", 1), ("Z10", 5)] {
        let s = spec(group);
        for _ in 0..10 {
            let f = random_f(&s, 6, &mut rng);
            let family = avoid_large_group(&k4, &f, 0).unwrap();
            assert_eq!(family.guarantee, bound, "{group}");
            family.verify(&k4).unwrap();
            check_flows(&k4, &family.flows, |phi| avoids(phi, &f)).unwrap();
            let count = count_avoiding(&k4, &f, oracle()).unwrap();
            assert!(count >= family.len() as u64);
        }
    }
    let z6 = spec("Z6");
    let family = avoid_large_group(&k4, &ForbiddenAssignment::zero(&z6, 6), 0).unwrap();
    check_flows(&k4, &family.flows, is_nowhere_zero).unwrap();
    assert!(matches!(
        avoid_large_group(&k4, &ForbiddenAssignment::zero(&spec("Z5"), 6), 0),
        Err(Error::GroupTooSmall { order: 5 })
    ));
}

#[test]
fn large_group_on_non_cubic_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in [named::k5(), named::octahedron(), named::bouquet(2)] {
        let s = spec("Z8");
        let f = random_f(&s, g.edge_count(), &mut rng);
        let family = avoid_large_group(&g, &f, 40).unwrap();
        family.verify(&g).unwrap();
        check_flows(&g, &family.flows, |phi| avoids(phi, &f)).unwrap();
        assert!(family.len() >= 40);
    }
}

#[test]
fn z6_on_a_peripheral_cycle() {
    let k4 = named::k4();
    let tri = Cycle::from_edges(&k4, 0, &[0, 3, 1]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for group in ["Z2xZ3", "Z6", "Z3xZ2"] {
        let s = spec(group);
        for _ in 0..20 {
            let f = random_f(&s, 6, &mut rng);
            let family = avoid_z6_peripheral(&k4, &tri, &f, 0).unwrap();
            assert_eq!(family.guarantee, 4);
            family.verify(&k4).unwrap();
            check_flows(&k4, &family.flows, |phi| avoids(phi, &f)).unwrap();
        }
    }
    let p = named::petersen();
    let outer = Cycle::from_edges(&p, 0, &[0, 1, 2, 3, 4]).unwrap();
    let z2z3 = spec("Z2xZ3");
    let family = avoid_z6_peripheral(&p, &outer, &ForbiddenAssignment::zero(&z2z3, 15), 0).unwrap();
    assert_eq!(family.guarantee, 11);
    check_flows(&p, &family.flows, is_nowhere_zero).unwrap();
    assert!(family.len() >= 11);

    let square = Cycle::from_edges(&k4, 0, &[0, 4, 5, 1]).unwrap();
    assert!(avoid_z6_peripheral(&k4, &square, &ForbiddenAssignment::zero(&z2z3, 6), 0).is_err());
    assert!(avoid_z6_peripheral(&k4, &tri, &ForbiddenAssignment::zero(&spec("Z8"), 6), 0).is_err());
}

#[test]
fn z6_small_excess_gives_one_flow() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for g in [named::k4(), named::k5(), named::petersen(), named::theta()] {
        for group in ["Z6", "Z2xZ3"] {
            let s = spec(group);
            let f = random_f(&s, g.edge_count(), &mut rng);
            let family = avoid_z6(&g, &f, &Z6Options::default()).unwrap();
            assert_eq!(family.provenance, Provenance::SingleDecomposition);
            assert_eq!(family.len(), 1);
            family.verify(&g).unwrap();
            check_flows(&g, &family.flows, |phi| avoids(phi, &f)).unwrap();
        }
    }
}

#[test]
fn z6_large_excess() {
    let z2z3 = spec("Z2xZ3");
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for seed in 0..3 {
        let g = generate_random_cubic(24, seed).unwrap();
        for _ in 0..3 {
            let f = random_f(&z2z3, g.edge_count(), &mut rng);
            let family = avoid_z6(&g, &f, &Z6Options::default()).unwrap();
            assert_eq!(family.guarantee, 2);
            assert_eq!(family.provenance, Provenance::PeripheralCycleAvoidance);
            check_flows(&g, &family.flows, |phi| avoids(phi, &f)).unwrap();
            let forced = Z6Options { force_decompositions: true, target: 8, ..Z6Options::default() };
            let family = avoid_z6(&g, &f, &forced).unwrap();
            assert_eq!(family.provenance, Provenance::DecompositionAvoidance);
            assert!(family.len() >= 8);
            check_flows(&g, &family.flows, |phi| avoids(phi, &f)).unwrap();
        }
    }
    // the counting argument asks for far more decompositions than a tiny budget
    let g = generate_random_cubic(24, 0).unwrap();
    let strict =
        Z6Options { strict: true, force_decompositions: true, decomposition_budget: 10, ..Z6Options::default() };
    let f = ForbiddenAssignment::zero(&z2z3, g.edge_count());
    assert!(matches!(avoid_z6(&g, &f, &strict), Err(Error::BudgetExceeded(_))));
}

#[test]
fn z6_layouts_agree() {
    // the same forbidden values written in Z6 and in Z2xZ3 give the same flows
    let g = named::petersen();
    let z6 = spec("Z6");
    let z2z3 = spec("Z2xZ3");
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..10 {
        let f6 = random_f(&z6, 15, &mut rng);
        let to_pair = |x: u32| z2z3.element(&[x % 2, x % 3]).unwrap();
        let f23 = ForbiddenAssignment::new(z2z3.clone(), f6.values.iter().map(|v| to_pair(v.residues()[0])).collect())
            .unwrap();
        let a = avoid_z6(&g, &f6, &Z6Options::default()).unwrap();
        let b = avoid_z6(&g, &f23, &Z6Options::default()).unwrap();
        let mapped: Vec<GroupFlow> =
            a.flows.iter().map(|phi| phi.map_values(&z2z3, |v| to_pair(v.residues()[0]))).collect();
        assert_eq!(mapped, b.flows);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn large_group_families_avoid(n in (2usize..8).prop_map(|k| 2 * k), seed in 0u64..500, group in 0usize..4, fseed in any::<u64>()) {
        let g = generate_random_cubic(n, seed).unwrap();
        let s = spec(["Z7", "Z8", "Z9", "Z2xZ2xZ2"][group]);
        let f = random_f(&s, g.edge_count(), &mut ChaCha8Rng::seed_from_u64(fseed));
        let family = avoid_large_group(&g, &f, 0).unwrap();
        prop_assert!(family.len() as u64 >= family.guarantee);
        prop_assert!(check_flows(&g, &family.flows, |phi| avoids(phi, &f)).is_ok());
    }

    #[test]
    fn z6_families_avoid(n in (2usize..8).prop_map(|k| 2 * k), seed in 0u64..500, fseed in any::<u64>()) {
        let g = generate_random_cubic(n, seed).unwrap();
        let s = spec("Z6");
        let f = random_f(&s, g.edge_count(), &mut ChaCha8Rng::seed_from_u64(fseed));
        let family = avoid_z6(&g, &f, &Z6Options::default()).unwrap();
        prop_assert!(check_flows(&g, &family.flows, |phi| avoids(phi, &f)).is_ok());
        let at: Vec<usize> = g.incident(0).iter().map(|&(e, _)| e).collect();
        let c = flowsmith::peripheral::peripheral_cycle_through(&g, 0, at[0], at[1]).unwrap();
        let family = avoid_z6_peripheral(&g, &c, &f, 0).unwrap();
        prop_assert!(family.len() as u64 >= family.guarantee);
        prop_assert!(check_flows(&g, &family.flows, |phi| avoids(phi, &f)).is_ok());
    }
}
