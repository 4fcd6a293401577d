mod common;

use std::collections::HashSet;

use common::{closure_by_cycles, cubic_corpus, is_spanning_tree};
use flowsmith::decomposition::{
    decomposition_containing_cycle, decomposition_guarantee, decomposition_with_trace, enumerate_decompositions,
    three_bases_minus_vertex, Decomposition, GrowthStep,
};
use flowsmith::graph::{named, Cycle, EdgeSet, Multigraph};
use flowsmith::peripheral::{longest_peripheral_cycle, peripheral_cycle_through};
use flowsmith::Error;

/// Partition, spanning tree and 2-base, all recomputed from scratch.
fn check(g: &Multigraph, d: &Decomposition) -> Result<(), String> {
    if !d.tree.intersection(&d.base).is_empty() || d.tree.len() + d.base.len() != g.edge_count() {
        return Err("not a partition".into());
    }
    if !is_spanning_tree(g, &d.tree) {
        return Err("tree side does not span".into());
    }
    if closure_by_cycles(g, &d.base, 2).len() != g.edge_count() {
        return Err("base side is not a 2-base".into());
    }
    Ok(())
}

#[test]
fn spec_examples() {
    let theta = named::theta();
    let c = Cycle::from_edges(&theta, 0, &[0, 1]).unwrap();
    let d = decomposition_containing_cycle(&theta, &c).unwrap();
    assert_eq!(d.base, EdgeSet::from([0, 1]));
    assert_eq!(d.tree, EdgeSet::from([2]));

    let k4 = named::k4();
    // edges 12,13,14,23,24,34 are ids 0..6; triangle 1-2-3 is {0,3,1}
    let tri = Cycle::from_edges(&k4, 0, &[0, 3, 1]).unwrap();
    let d = decomposition_containing_cycle(&k4, &tri).unwrap();
    check(&k4, &d).unwrap();
    assert!(EdgeSet::from([0, 1, 3]).is_subset(&d.base));

    let square = Cycle::from_edges(&k4, 0, &[0, 4, 5, 1]).unwrap();
    assert!(matches!(decomposition_containing_cycle(&k4, &square), Err(Error::PreconditionViolated(_))));
    assert!(matches!(three_bases_minus_vertex(&named::k5(), 0), Err(Error::PreconditionViolated(_))));
    assert!(enumerate_decompositions(&named::petersen(), 0, 0, 0).unwrap().is_empty());
}

#[test]
fn grown_from_every_tutte_cycle() {
    for (name, g) in cubic_corpus(25) {
        let n = g.vertex_count();
        for v in [0, n / 2] {
            let at: Vec<usize> = g.incident(v).iter().map(|&(e, _)| e).collect();
            let c = peripheral_cycle_through(&g, v, at[0], at[2]).unwrap();
            let (d, trace) = decomposition_with_trace(&g, &c).unwrap();
            check(&g, &d).unwrap_or_else(|e| panic!("{name}: {e}"));
            d.verify(&g).unwrap();
            assert!(c.edge_set().is_subset(&d.base));
            assert_eq!(trace.replay(&g), d, "{name}");
            // every step is a path; no vertex is absorbed without edges
            assert!(trace.steps.iter().all(|s| matches!(s, GrowthStep::AddPath { .. })));
            assert_eq!(d.base.len(), n / 2 + 1, "{name}");
        }
    }
}

#[test]
fn three_bases_after_deleting_a_vertex() {
    let k4 = named::k4();
    let out = three_bases_minus_vertex(&k4, 3).unwrap();
    let triangle_bases: HashSet<EdgeSet> = out.decompositions.iter().map(|(_, d)| d.base.clone()).collect();
    assert_eq!(triangle_bases.len(), 3);
    for (_, d) in &out.decompositions {
        assert_eq!(d.base.len(), 1);
    }
    for (name, g) in cubic_corpus(20).into_iter().filter(|(_, g)| g.vertex_count() >= 4) {
        for r in [0, g.vertex_count() - 1] {
            let out = three_bases_minus_vertex(&g, r).unwrap();
            let distinct: HashSet<EdgeSet> = out.decompositions.iter().map(|(_, d)| d.base.clone()).collect();
            assert_eq!(distinct.len(), 3, "{name}");
            for (f, d) in &out.decompositions {
                assert!(out.edge_map[*f].is_none());
                let rest = &out.graph;
                assert!(closure_by_cycles(rest, &d.base, 2).len() == rest.edge_count(), "{name}");
                assert!(common::is_peripheral_set(rest, &d.base), "{name}");
            }
        }
    }
}

#[test]
fn enumeration_meets_the_count() {
    for (name, g) in [("K4", named::k4()), ("Petersen", named::petersen()), ("prism", named::prism())] {
        let (c, exhaustive) = longest_peripheral_cycle(&g, 1_000_000).unwrap();
        assert!(exhaustive);
        let bound = decomposition_guarantee(g.vertex_count(), c.len());
        let all = enumerate_decompositions(&g, 0, 64, 7).unwrap();
        assert!(all.len() as u64 >= bound.min(64), "{name}: {} < {bound}", all.len());
        let distinct: HashSet<&Decomposition> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for d in &all {
            check(&g, d).unwrap_or_else(|e| panic!("{name}: {e}"));
            // the root is a leaf of every tree
            assert_eq!(g.incident(0).iter().filter(|&&(e, _)| d.tree.contains(e)).count(), 1, "{name}");
        }
    }
}

#[test]
fn enumeration_on_random_graphs() {
    for (name, g) in cubic_corpus(25) {
        let all = enumerate_decompositions(&g, 0, 12, 3).unwrap();
        assert!(!all.is_empty());
        let distinct: HashSet<&Decomposition> = all.iter().collect();
        assert_eq!(distinct.len(), all.len(), "{name}");
        for d in &all {
            check(&g, d).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        // seeded runs repeat exactly
        assert_eq!(all, enumerate_decompositions(&g, 0, 12, 3).unwrap());
    }
}
