//! Nowhere-zero families from a Z2 flow and a Zk flow whose supports
//! cover every edge.

use super::{
    avoid_on, cycle_excess, first_decomposition, guarantee_met, needed, single_vertex_flows, xor_into, Certificates,
    FlowFamily, Provenance,
};
use crate::bounds::ceil_pow2_ratio;
use crate::closure::two_disjoint_spanning_trees;
use crate::cubic::{project_family, reduce_to_cubic};
use crate::error::{precondition, Error, Result};
use crate::flow::{elementary_flow, lift_through_contraction, validate_flow, GroupFlow};
use crate::graph::{
    bridges, contract_edges, decompose_even_set, edge_connectivity_at_least, shortest_path, spanning_forest, EdgeSet,
    Multigraph,
};
use crate::group::GroupSpec;

/// Nowhere-zero Z2 x Zk flows `(phi + eta, psi')`, where `psi'` is `psi`
/// shifted along the cycles of `supp(phi)` to lose as little support as
/// possible and `eta` ranges over Z2 flows inside `supp(psi')`. Stops at
/// `max(target, guarantee)` flows, guarantee `⌈2^(m - n - t/k)⌉` with
/// `t = |supp(phi)|`.
pub fn support_flow_family(g: &Multigraph, phi: &GroupFlow, psi: &GroupFlow, target: usize) -> Result<FlowFamily> {
    if phi.spec != GroupSpec::cyclic(2) {
        return precondition("first flow must be over Z2");
    }
    let &[k] = psi.spec.moduli() else {
        return precondition("second flow must be over a cyclic group");
    };
    if !validate_flow(g, phi) || !validate_flow(g, psi) {
        return precondition("inputs must be flows of the graph");
    }
    let m = g.edge_count();
    let phi_support = phi.support();
    if phi_support.union(&psi.support()).len() != m {
        return precondition("supports of the two flows must cover every edge");
    }
    let t = phi_support.len() as i64;
    let k64 = i64::from(k);
    let exponent_num = cycle_excess(g) * k64 - t;
    let guarantee = if exponent_num <= 0 { 1 } else { ceil_pow2_ratio(exponent_num as u64, k as u64) };

    let mut shifted = psi.clone();
    let unit = psi.spec.element(&[1])?;
    for cycle in decompose_even_set(g, &phi_support)? {
        let rho = elementary_flow(g, &cycle, &unit, &psi.spec);
        let zeros_after = |c: u32| {
            cycle
                .edges()
                .filter(|&e| {
                    let v = psi.spec.add_unchecked(&shifted.values[e], &psi.spec.scale(&rho.values[e], i64::from(c)));
                    v.residues()[0] == 0
                })
                .count()
        };
        let best = (0..k).min_by_key(|&c| zeros_after(c)).unwrap_or(0);
        debug_assert!(zeros_after(best) <= cycle.len() / k as usize);
        for e in cycle.edges() {
            let step = psi.spec.scale(&rho.values[e], i64::from(best));
            psi.spec.add_assign(&mut shifted.values[e], &step);
        }
    }

    // Z2 cycle space of (V, supp(psi')) from a spanning forest
    let keep = shifted.support();
    let forest_edges = spanning_forest(g, &keep.mask(m));
    let forest: EdgeSet = forest_edges.iter().copied().collect();
    let forest_mask = forest.mask(m);
    let mut basis: Vec<Vec<bool>> = Vec::new();
    for e in keep.difference(&forest).iter() {
        let mut mask = vec![false; m];
        mask[e] = true;
        let (a, b) = g.endpoints(e);
        if a != b {
            let p = shortest_path(g, a, b, |x| forest_mask[x], |_| true)
                .ok_or_else(|| Error::Internal("spanning forest misses a chord's ends".into()))?;
            for x in p.edges {
                mask[x] = true;
            }
        }
        basis.push(mask);
    }
    let available = if basis.len() >= 63 { usize::MAX } else { 1usize << basis.len() };
    let count = available.min(needed(target, guarantee));
    let spec = GroupSpec::new(vec![2, k])?;
    let mut flows = Vec::with_capacity(count);
    for index in 0..count {
        let mut eta = vec![false; m];
        for (i, mask) in basis.iter().enumerate() {
            if index >> i & 1 == 1 {
                xor_into(&mut eta, mask);
            }
        }
        let values = (0..m)
            .map(|e| {
                let a = (phi.values[e].residues()[0] + u32::from(eta[e])) % 2;
                spec.element(&[a, shifted.values[e].residues()[0]])
            })
            .collect::<Result<Vec<_>>>()?;
        let flow = GroupFlow { spec: spec.clone(), values };
        debug_assert!(flow.is_nowhere_zero());
        flows.push(flow);
    }
    guarantee_met(flows.len(), guarantee)?;
    Ok(FlowFamily { spec, flows, guarantee, provenance: Provenance::SupportExpansion, forbidden: None })
}

fn z2z3() -> GroupSpec {
    GroupSpec::new(vec![2, 3]).expect("valid moduli")
}

/// `⌈2^((m - n)/3)⌉` distinct nowhere-zero Z2xZ3 flows of a 2-edge-connected
/// graph, or `target` of them if more are wanted and available.
pub fn many_nz_z2z3(g: &Multigraph, target: usize) -> Result<FlowFamily> {
    if g.vertex_count() == 0 {
        return precondition("graph has no vertices");
    }
    if !edge_connectivity_at_least(g, 2) || !crate::graph::is_connected(g) {
        return precondition("graph is not 2-edge-connected");
    }
    let excess = cycle_excess(g);
    let guarantee = if excess <= 0 { 1 } else { ceil_pow2_ratio(excess as u64, 3) };
    let (flows, provenance) = nz_two_three(g, needed(target, guarantee))?;
    guarantee_met(flows.len(), guarantee)?;
    Ok(FlowFamily { spec: z2z3(), flows, guarantee, provenance, forbidden: None })
}

/// An edge lying in a 2-edge cut, if any.
fn edge_in_two_cut(g: &Multigraph) -> Option<usize> {
    if edge_connectivity_at_least(g, 3) {
        return None;
    }
    g.edge_ids().filter(|&e| !g.is_loop(e)).find(|&e| !bridges(g, |x| x != e, |_| true).is_empty())
}

fn nz_two_three(g: &Multigraph, limit: usize) -> Result<(Vec<GroupFlow>, Provenance)> {
    let spec = z2z3();
    if g.vertex_count() == 1 {
        let zeros = vec![spec.zero(); g.edge_count()];
        return Ok((single_vertex_flows(g, &spec, &zeros, limit), Provenance::SingleVertex));
    }
    if let Some(e) = edge_in_two_cut(g) {
        // nowhere-zero flows of G/e extend uniquely, and stay nowhere-zero
        let forest = EdgeSet::from([e]);
        let small = contract_edges(g, &forest).graph;
        let (flows, provenance) = nz_two_three(&small, limit)?;
        let lifted = flows.iter().map(|phi| lift_through_contraction(g, &forest, phi)).collect::<Result<Vec<_>>>()?;
        if !lifted.iter().all(GroupFlow::is_nowhere_zero) {
            return Err(Error::Internal("lift through a 2-edge cut created a zero".into()));
        }
        return Ok((lifted, provenance));
    }
    let map = reduce_to_cubic(g)?;
    let cubic = &map.cubic;
    let d = first_decomposition(cubic)?;
    let certs = Certificates::new(cubic, &d)?;
    let z2 = GroupSpec::cyclic(2);
    let z3 = GroupSpec::cyclic(3);
    // supp(phi) covers the base, supp(psi) covers the tree
    let phi = avoid_on(cubic, &certs.tree, &z2, &d.base, |_| z2.zero())?;
    let psi = avoid_on(cubic, &certs.base, &z3, &d.tree, |_| z3.zero())?;
    if phi.support().len() > cubic.vertex_count() {
        return Err(Error::Internal("Z2 flow support exceeds the vertex count of a cubic graph".into()));
    }
    let family = support_flow_family(cubic, &phi, &psi, limit)?;
    Ok((project_family(&map, &family.flows)?, Provenance::NowhereZeroTwoThree))
}

/// `⌈2^(n/3)⌉` distinct nowhere-zero Z2xZ2 flows of a 4-edge-connected
/// graph, or `target` of them if more are wanted and available.
pub fn many_nz_z2z2(g: &Multigraph, target: usize) -> Result<FlowFamily> {
    let n = g.vertex_count();
    if n == 0 {
        return precondition("graph has no vertices");
    }
    if !edge_connectivity_at_least(g, 4) {
        return precondition("graph is not 4-edge-connected");
    }
    let guarantee = ceil_pow2_ratio(n as u64, 3);
    let (t1, t2) =
        two_disjoint_spanning_trees(g).ok_or_else(|| Error::Internal("no two disjoint spanning trees".into()))?;
    let first = cotree_parity(g, &t1)?;
    let second = cotree_parity(g, &t2)?;
    // relabel the nonzero values so the most frequent one becomes (0, 1)
    let mut freq = [0usize; 4];
    for e in g.edge_ids() {
        freq[usize::from(first[e]) << 1 | usize::from(second[e])] += 1;
    }
    let top = (1..4).max_by_key(|&c| (freq[c], std::cmp::Reverse(c))).expect("three nonzero codes");
    let rest: Vec<usize> = (1..4).filter(|&c| c != top).collect();
    let relabel = |c: usize| match c {
        0 => 0,
        c if c == top => 1,
        c if c == rest[0] => 2,
        _ => 3,
    };
    let z2 = GroupSpec::cyclic(2);
    let mut a_values = Vec::with_capacity(g.edge_count());
    let mut b_values = Vec::with_capacity(g.edge_count());
    for e in g.edge_ids() {
        let code = relabel(usize::from(first[e]) << 1 | usize::from(second[e]));
        if code == 0 {
            return Err(Error::Internal("tree parities left an edge uncovered".into()));
        }
        a_values.push(z2.element(&[(code >> 1) as u32])?);
        b_values.push(z2.element(&[(code & 1) as u32])?);
    }
    let phi = GroupFlow { spec: z2.clone(), values: a_values };
    let psi = GroupFlow { spec: z2, values: b_values };
    let family = support_flow_family(g, &phi, &psi, needed(target, guarantee))?;
    guarantee_met(family.flows.len(), guarantee)?;
    Ok(FlowFamily { guarantee, provenance: Provenance::NowhereZeroTwoTwo, ..family })
}

/// Sum over Z2 of the fundamental cycles of every non-tree edge; equals 1 on
/// each non-tree edge.
fn cotree_parity(g: &Multigraph, tree: &EdgeSet) -> Result<Vec<bool>> {
    let m = g.edge_count();
    let mut acc = vec![false; m];
    for e in g.edge_ids().filter(|&e| !tree.contains(e)) {
        let c = crate::graph::fundamental_cycle(g, tree, e)?;
        xor_into(&mut acc, &c.edge_set().mask(m));
    }
    Ok(acc)
}
