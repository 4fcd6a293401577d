mod common;

use std::collections::HashSet;

use common::{components, conserves};
use flowsmith::closure::is_forest;
use flowsmith::cubic::{project_family, reduce_to_cubic, reduce_to_cubic_observed, ReductionMap};
use flowsmith::flow::{enumerate_flows, GroupFlow};
use flowsmith::generate::generate_random_3_edge_connected;
use flowsmith::graph::{edge_connectivity_at_least, named, Multigraph};
use flowsmith::group::GroupSpec;
use flowsmith::Error;

fn inputs() -> Vec<(String, Multigraph)> {
    let mut out = vec![
        ("K4".to_string(), named::k4()),
        ("K5".to_string(), named::k5()),
        ("K6".to_string(), named::k6()),
        ("octahedron".to_string(), named::octahedron()),
        ("theta".to_string(), named::theta()),
        // a loop on a degree-5 vertex
        ("looped".to_string(), Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1), (0, 0)])),
    ];
    for seed in 0..10 {
        let n = 5 + seed as usize % 3;
        out.push((format!("random-{seed}"), generate_random_3_edge_connected(n, 2 * n + 1, seed).unwrap()));
    }
    out
}

/// Every stated invariant of a reduction, recomputed independently.
fn check_map(name: &str, g: &Multigraph, map: &ReductionMap) {
    let cubic = &map.cubic;
    assert!(cubic.is_cubic(), "{name}");
    assert!(edge_connectivity_at_least(cubic, 3), "{name}");
    assert_eq!(cubic.vertex_count(), 2 * (g.edge_count() - g.vertex_count()), "{name}");
    assert!(is_forest(cubic, &map.forest), "{name}");
    // each class of the forest is one original vertex
    assert_eq!(components(cubic, |e| map.forest.contains(e)), g.vertex_count(), "{name}");
    for e in map.forest.iter() {
        let (t, h) = cubic.endpoints(e);
        assert_eq!(map.vertex_correspondence[t], map.vertex_correspondence[h], "{name}");
        assert!(map.edge_correspondence[e].is_none());
    }
    let mut hit = vec![0; g.edge_count()];
    for e in cubic.edge_ids().filter(|&e| !map.forest.contains(e)) {
        let o = map.edge_correspondence[e].expect("non-forest edge has an original");
        hit[o] += 1;
        let (t, h) = cubic.endpoints(e);
        let mapped = (map.vertex_correspondence[t], map.vertex_correspondence[h]);
        assert_eq!(mapped, g.endpoints(o), "{name}: edge {e} keeps its orientation");
    }
    assert!(hit.iter().all(|&c| c == 1), "{name}");
}

#[test]
fn reductions_keep_every_invariant() {
    for (name, g) in inputs() {
        let mut steps = 0;
        let map = reduce_to_cubic_observed(&g, |h| {
            assert!(edge_connectivity_at_least(h, 3), "{name} after step {steps}");
            steps += 1;
        })
        .unwrap();
        check_map(&name, &g, &map);
        assert_eq!(map.forest.len(), map.cubic.vertex_count() - g.vertex_count(), "{name}");
        let again = reduce_to_cubic(&g).unwrap();
        assert_eq!((&again.cubic, &again.forest), (&map.cubic, &map.forest), "{name}: deterministic");
    }
}

#[test]
fn reduction_examples() {
    let k4 = reduce_to_cubic(&named::k4()).unwrap();
    assert_eq!(k4.cubic, named::k4());
    assert!(k4.forest.is_empty());
    let k5 = reduce_to_cubic(&named::k5()).unwrap();
    assert_eq!((k5.cubic.vertex_count(), k5.cubic.edge_count(), k5.forest.len()), (10, 15, 5));
    assert_eq!(reduce_to_cubic(&named::theta()).unwrap().cubic, named::theta());
    assert!(matches!(reduce_to_cubic(&named::bouquet(2)), Err(Error::PreconditionViolated(_))));
    let two_cut = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
    assert!(matches!(reduce_to_cubic(&two_cut), Err(Error::PreconditionViolated(_))));
}

#[test]
fn projection_is_injective_restriction() {
    let spec = GroupSpec::cyclic(3);
    for (name, g) in inputs().into_iter().filter(|(_, g)| g.edge_count() - g.vertex_count() <= 6) {
        let map = reduce_to_cubic(&g).unwrap();
        let mut flows = Vec::new();
        enumerate_flows(&map.cubic, &spec, 1 << 20, |phi| flows.push(phi.clone())).unwrap();
        let projected = project_family(&map, &flows).unwrap();
        assert_eq!(projected.len(), flows.len(), "{name}");
        assert_eq!(projected.iter().collect::<HashSet<_>>().len(), flows.len(), "{name}");
        for (phi, psi) in flows.iter().zip(&projected) {
            assert!(conserves(&g, psi), "{name}");
            for e in map.cubic.edge_ids() {
                if let Some(o) = map.edge_correspondence[e] {
                    assert_eq!(psi.values[o], phi.values[e]);
                }
            }
        }
        // a nowhere-zero flow stays nowhere-zero
        if let Some(nz) = flows.iter().find(|phi| phi.is_nowhere_zero()) {
            assert!(project_family(&map, std::slice::from_ref(nz)).unwrap()[0].is_nowhere_zero());
        }
        // an assignment of the wrong length is refused
        let short = GroupFlow::zero(&spec, map.cubic.edge_count() + 1);
        assert!(project_family(&map, &[short]).is_err());
    }
}
