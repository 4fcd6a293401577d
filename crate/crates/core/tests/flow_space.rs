mod common;

use std::collections::HashSet;

use common::{components, conserves, random_multigraph};
use flowsmith::flow::io::{parse_flows, parse_forbidden, write_flows, write_forbidden};
use flowsmith::flow::{
    count_avoiding, count_nowhere_zero, enumerate_flows, lift_through_contraction, ForbiddenAssignment, GroupFlow,
    OracleConfig,
};
use flowsmith::graph::{contract_edges, named, spanning_forest, EdgeSet, Multigraph};
use flowsmith::group::{GroupElement, GroupSpec};
use flowsmith::Error;
use proptest::prelude::*;

fn spec_strategy() -> impl Strategy<Value = GroupSpec> {
    prop::collection::vec(2u32..8, 1..4).prop_map(|m| GroupSpec::new(m).unwrap())
}

fn all_flows(g: &Multigraph, spec: &GroupSpec) -> Vec<GroupFlow> {
    let mut out = Vec::new();
    enumerate_flows(g, spec, 1 << 20, |phi| out.push(phi.clone())).unwrap();
    out
}

fn serial() -> OracleConfig {
    OracleConfig { parallel: false, ..OracleConfig::default() }
}

proptest! {
    #[test]
    fn group_axioms(spec in spec_strategy(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let k = spec.order();
        let (a, b, c) = (spec.decode(a % k), spec.decode(b % k), spec.decode(c % k));
        let add = |x: &GroupElement, y: &GroupElement| spec.add(x, y).unwrap();
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(add(&a, &spec.zero()), a.clone());
        prop_assert!(spec.is_zero(&add(&a, &spec.negate(&a).unwrap())).unwrap());
        prop_assert_eq!(spec.scale(&a, 3), add(&a, &add(&a, &a)));
        prop_assert_eq!(spec.scale(&a, -1), spec.negate(&a).unwrap());
        prop_assert_eq!(spec.decode(spec.encode(&a)), a);
    }

    #[test]
    fn order_two_elements(spec in spec_strategy()) {
        let elements = spec.enumerate_elements(u64::MAX).unwrap();
        let twos: Vec<_> = elements
            .iter()
            .filter(|x| !spec.is_zero(x).unwrap() && spec.is_zero(&spec.add(x, x).unwrap()).unwrap())
            .collect();
        match spec.element_of_order_two() {
            None => prop_assert!(twos.is_empty() && spec.order() % 2 == 1),
            Some(x) => prop_assert_eq!(&x, twos[0]),
        }
    }

    #[test]
    fn flows_form_a_group(n in 1usize..5, m in 0usize..7, seed in any::<u64>(), pick in any::<(usize, usize)>()) {
        let g = random_multigraph(n, m, seed);
        let spec = GroupSpec::new(vec![2, 3]).unwrap();
        let flows = all_flows(&g, &spec);
        let a = &flows[pick.0 % flows.len()];
        let b = &flows[pick.1 % flows.len()];
        prop_assert!(conserves(&g, &a.add(b).unwrap()));
        prop_assert!(conserves(&g, &a.negate()));
        prop_assert!(a.add(&a.negate()).unwrap().support().is_empty());
    }
}

#[test]
fn flow_count_is_a_power_of_the_order() {
    for seed in 0..20u64 {
        let n = 1 + seed as usize % 8;
        let m = n + seed as usize % 4;
        let g = random_multigraph(n, m, seed);
        let dim = m + components(&g, |_| true) - n;
        for spec in [GroupSpec::cyclic(2), GroupSpec::cyclic(3), GroupSpec::new(vec![2, 2]).unwrap()] {
            let flows = all_flows(&g, &spec);
            assert_eq!(flows.len() as u64, spec.order().pow(dim as u32), "seed {seed} {spec}");
            assert!(flows.iter().all(|phi| conserves(&g, phi)));
            assert_eq!(flows.iter().collect::<HashSet<_>>().len(), flows.len());
        }
    }
}

#[test]
fn counts_depend_only_on_the_order() {
    let pairs = [("Z4", "Z2xZ2"), ("Z6", "Z2xZ3"), ("Z6", "Z3xZ2")];
    let mut graphs = vec![named::k4(), named::theta(), named::bouquet(2), named::prism()];
    graphs.extend((0..10).map(|seed| random_multigraph(5, 8, seed)));
    for g in &graphs {
        for (a, b) in pairs {
            let (a, b) = (a.parse::<GroupSpec>().unwrap(), b.parse::<GroupSpec>().unwrap());
            assert_eq!(count_nowhere_zero(g, &a, serial()).unwrap(), count_nowhere_zero(g, &b, serial()).unwrap());
            // avoiding a flow is nowhere-zero after translation
            let flows = all_flows(g, &a);
            let f = ForbiddenAssignment::new(a.clone(), flows[flows.len() / 2].values.clone()).unwrap();
            assert_eq!(count_avoiding(g, &f, serial()).unwrap(), count_nowhere_zero(g, &a, serial()).unwrap());
        }
    }
}

#[test]
fn oracle_matches_known_counts() {
    // nowhere-zero Z_k flows on K4 number (k-1)(k-2)(k-3)
    for k in 2..8u64 {
        let expected = (k - 1) * (k - 2) * k.saturating_sub(3);
        assert_eq!(count_nowhere_zero(&named::k4(), &GroupSpec::cyclic(k as u32), serial()).unwrap(), expected);
    }
    // the Petersen graph has no nowhere-zero 4-flow
    assert_eq!(count_nowhere_zero(&named::petersen(), &GroupSpec::cyclic(4), OracleConfig::default()).unwrap(), 0);
    let tiny = OracleConfig { cap: 10, parallel: false };
    assert!(matches!(
        count_nowhere_zero(&named::petersen(), &GroupSpec::cyclic(2), tiny),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn lifting_is_injective() {
    let spec = GroupSpec::cyclic(3);
    for seed in 0..15u64 {
        let g = random_multigraph(6, 9, seed);
        let forest: EdgeSet = spanning_forest(&g, &vec![true; g.edge_count()]).into_iter().step_by(2).collect();
        let small = contract_edges(&g, &forest);
        let mut seen = HashSet::new();
        for phi in all_flows(&small.graph, &spec) {
            let lifted = lift_through_contraction(&g, &forest, &phi).unwrap();
            assert!(conserves(&g, &lifted));
            for e in g.edge_ids() {
                if let Some(s) = small.edge_map[e] {
                    assert_eq!(lifted.values[e], phi.values[s]);
                }
            }
            assert!(seen.insert(lifted));
        }
    }
}

#[test]
fn text_formats_round_trip() {
    for spec in ["Z6", "Z2xZ3", "Z3xZ2xZ2"] {
        let spec: GroupSpec = spec.parse().unwrap();
        for seed in 0..5 {
            let g = random_multigraph(4, 7, seed);
            let m = g.edge_count();
            let flows = all_flows(&g, &spec);
            let family: Vec<GroupFlow> = flows.into_iter().step_by(7).take(5).collect();
            assert_eq!(parse_flows(&write_flows(&family), &spec, m).unwrap(), family);
            let f = ForbiddenAssignment::new(spec.clone(), (0..m).map(|e| spec.decode(e as u64 * 5 + seed)).collect())
                .unwrap();
            assert_eq!(parse_forbidden(&write_forbidden(&f), &spec, m).unwrap(), f);
        }
    }
    let z3 = GroupSpec::cyclic(3);
    assert!(matches!(parse_forbidden("1 0\n1 1\n", &z3, 1), Err(Error::Parse { .. })));
    assert!(parse_forbidden("1 5\n", &z3, 1).is_err());
}
