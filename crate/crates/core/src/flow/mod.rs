//! Group-valued edge assignments and flows.

pub mod io;
pub mod oracle;

use std::collections::VecDeque;

use crate::error::{precondition, Error, Result};
use crate::graph::{contract_edges, Cycle, EdgeSet, Multigraph};
use crate::group::{GroupElement, GroupSpec};

pub use oracle::{count_avoiding, count_nowhere_zero, enumerate_flows, OracleConfig};

/// An edge assignment that is expected to satisfy conservation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFlow {
    pub spec: GroupSpec,
    pub values: Vec<GroupElement>,
}

/// A total map `E -> Γ` of values a flow must avoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ForbiddenAssignment {
    pub spec: GroupSpec,
    pub values: Vec<GroupElement>,
}

impl ForbiddenAssignment {
    pub fn zero(spec: &GroupSpec, m: usize) -> Self {
        ForbiddenAssignment { spec: spec.clone(), values: vec![spec.zero(); m] }
    }

    pub fn new(spec: GroupSpec, values: Vec<GroupElement>) -> Result<Self> {
        for v in &values {
            spec.check(v)?;
        }
        Ok(ForbiddenAssignment { spec, values })
    }

    /// Forbidden values as a partial map.
    pub fn as_partial(&self) -> Vec<Option<GroupElement>> {
        self.values.iter().cloned().map(Some).collect()
    }
}

impl GroupFlow {
    pub fn zero(spec: &GroupSpec, m: usize) -> Self {
        GroupFlow { spec: spec.clone(), values: vec![spec.zero(); m] }
    }

    pub fn new(spec: GroupSpec, values: Vec<GroupElement>) -> Result<Self> {
        for v in &values {
            spec.check(v)?;
        }
        Ok(GroupFlow { spec, values })
    }

    pub fn edge_count(&self) -> usize {
        self.values.len()
    }

    pub fn add(&self, other: &GroupFlow) -> Result<GroupFlow> {
        if self.spec != other.spec || self.values.len() != other.values.len() {
            return Err(Error::SpecMismatch("flows over different groups or edge sets".into()));
        }
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub(crate) fn add_assign(&mut self, other: &GroupFlow) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            self.spec.add_assign(a, b);
        }
    }

    pub fn negate(&self) -> GroupFlow {
        let values = self.values.iter().map(|v| self.spec.negate_unchecked(v)).collect();
        GroupFlow { spec: self.spec.clone(), values }
    }

    pub fn support(&self) -> EdgeSet {
        self.values.iter().enumerate().filter(|(_, v)| v.residues().iter().any(|&r| r != 0)).map(|(e, _)| e).collect()
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.support().len() == self.values.len()
    }

    /// First edge where the flow equals `f`, if any.
    pub fn first_agreement(&self, f: &ForbiddenAssignment) -> Option<usize> {
        (0..self.values.len()).find(|&e| f.values.get(e) == Some(&self.values[e]))
    }

    pub fn avoids(&self, f: &ForbiddenAssignment) -> bool {
        f.spec == self.spec && f.values.len() == self.values.len() && self.first_agreement(f).is_none()
    }

    /// Projects every value through `map` into `target`.
    pub fn map_values(&self, target: &GroupSpec, map: impl Fn(&GroupElement) -> GroupElement) -> GroupFlow {
        GroupFlow { spec: target.clone(), values: self.values.iter().map(map).collect() }
    }
}

/// First vertex where conservation fails, or `None` for a valid flow.
/// Assignments of the wrong length or with out-of-range residues report
/// vertex 0.
pub fn conservation_violation(g: &Multigraph, phi: &GroupFlow) -> Option<usize> {
    if phi.values.len() != g.edge_count() || !phi.values.iter().all(|v| phi.spec.contains(v)) {
        return Some(0);
    }
    let mut excess = vec![phi.spec.zero(); g.vertex_count()];
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        if t != h {
            phi.spec.add_assign(&mut excess[t], &phi.values[e]);
            phi.spec.sub_assign(&mut excess[h], &phi.values[e]);
        }
    }
    excess.iter().position(|x| x.residues().iter().any(|&r| r != 0))
}

/// Conservation at every vertex: outflow equals inflow.
pub fn validate_flow(g: &Multigraph, phi: &GroupFlow) -> bool {
    conservation_violation(g, phi).is_none()
}

/// `x` on edges traversed forward along `c`, `-x` on edges traversed
/// backward, zero elsewhere.
pub fn elementary_flow(g: &Multigraph, c: &Cycle, x: &GroupElement, spec: &GroupSpec) -> GroupFlow {
    let mut flow = GroupFlow::zero(spec, g.edge_count());
    let minus = spec.negate_unchecked(x);
    for (e, forward) in c.directions(g) {
        flow.values[e] = if forward { x.clone() } else { minus.clone() };
    }
    flow
}

/// The unique flow on `big` that agrees with `small` (a flow of
/// `big / forest`) on every edge outside `forest`.
pub fn lift_through_contraction(big: &Multigraph, forest: &EdgeSet, small: &GroupFlow) -> Result<GroupFlow> {
    let contraction = contract_edges(big, forest);
    if contraction.graph.vertex_count() + forest.len() != big.vertex_count() {
        return precondition("contracted edge set is not a forest");
    }
    if !validate_flow(&contraction.graph, small) {
        return precondition("input is not a flow of the contracted graph");
    }
    let spec = &small.spec;
    let mut lifted = GroupFlow::zero(spec, big.edge_count());
    for e in big.edge_ids() {
        if let Some(s) = contraction.edge_map[e] {
            lifted.values[e] = small.values[s].clone();
        }
    }
    // excess[v] = out - in over solved edges
    let mut excess = vec![spec.zero(); big.vertex_count()];
    let mut open = vec![0usize; big.vertex_count()];
    for (e, &(t, h)) in big.edges().iter().enumerate() {
        if forest.contains(e) {
            open[t] += 1;
            open[h] += 1;
        } else if t != h {
            spec.add_assign(&mut excess[t], &lifted.values[e]);
            spec.sub_assign(&mut excess[h], &lifted.values[e]);
        }
    }
    let mut solved = vec![false; big.edge_count()];
    let mut queue: VecDeque<usize> = big.vertices().filter(|&v| open[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        if open[v] != 1 {
            continue;
        }
        let Some(&(e, w)) = big.incident(v).iter().find(|&&(e, _)| forest.contains(e) && !solved[e]) else {
            continue;
        };
        solved[e] = true;
        // choose value so that v balances
        let value = if big.tail(e) == v { spec.negate_unchecked(&excess[v]) } else { excess[v].clone() };
        if big.tail(e) == v {
            spec.add_assign(&mut excess[v], &value);
            spec.sub_assign(&mut excess[w], &value);
        } else {
            spec.sub_assign(&mut excess[v], &value);
            spec.add_assign(&mut excess[w], &value);
        }
        lifted.values[e] = value;
        open[v] -= 1;
        open[w] -= 1;
        if open[w] == 1 {
            queue.push_back(w);
        }
    }
    debug_assert!(validate_flow(big, &lifted));
    Ok(lifted)
}
