//! Families of many distinct flows: nowhere-zero families from covering
//! supports and avoidance families built from tree/2-base decompositions.

mod avoidance;
mod six;
mod support;

use std::collections::HashSet;

pub use avoidance::avoid_large_group;
pub use six::{avoid_z6, avoid_z6_peripheral, Z6Options};
pub use support::{many_nz_z2z2, many_nz_z2z3, support_flow_family};

use crate::closure::{avoidance_flow, k_closure, ClosureCertificate};
use crate::decomposition::{decomposition_containing_cycle_unchecked, Decomposition};
use crate::error::{precondition, Error, Result};
use crate::flow::{conservation_violation, ForbiddenAssignment, GroupFlow};
use crate::graph::{fundamental_cycle, EdgeSet, Multigraph};
use crate::group::{GroupElement, GroupSpec};
use crate::peripheral::peripheral_cycle_through_unchecked;

/// Which construction produced a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// A Z2 flow and a Zk flow with covering supports, expanded by Z2 flows.
    SupportExpansion,
    /// Nowhere-zero Z2xZ3 flows through the cubic reduction.
    NowhereZeroTwoThree,
    /// Nowhere-zero Z2xZ2 flows from two disjoint spanning trees.
    NowhereZeroTwoTwo,
    /// Avoidance in a group of order at least 6 by choices along closure steps.
    LargeGroupAvoidance,
    /// Z6 avoidance from one long peripheral cycle.
    PeripheralCycleAvoidance,
    /// Z6 avoidance from many tree/2-base decompositions.
    DecompositionAvoidance,
    /// Z6 avoidance from a single decomposition.
    SingleDecomposition,
    /// A single vertex: every assignment is a flow.
    SingleVertex,
}

/// Pairwise-distinct flows sharing a predicate: nowhere-zero, or avoiding
/// `forbidden` when it is set.
#[derive(Clone, Debug)]
pub struct FlowFamily {
    pub spec: GroupSpec,
    pub flows: Vec<GroupFlow>,
    /// the ceiling of the real-valued lower bound the construction promises
    pub guarantee: u64,
    pub provenance: Provenance,
    pub forbidden: Option<ForbiddenAssignment>,
}

impl FlowFamily {
    pub fn len(&self) -> usize {
        self.flows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flows.is_empty()
    }

    /// Re-checks every member, distinctness and the guarantee.
    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        check_members(g, &self.flows, &self.spec, self.forbidden.as_ref())?;
        if (self.flows.len() as u64) < self.guarantee {
            return Err(Error::GuaranteeViolated { needed: self.guarantee, got: self.flows.len() as u64 });
        }
        Ok(())
    }
}

/// Conservation, predicate and distinctness for a list of flows. Without
/// `forbidden` the predicate is nowhere-zero.
pub fn check_members(
    g: &Multigraph,
    flows: &[GroupFlow],
    spec: &GroupSpec,
    forbidden: Option<&ForbiddenAssignment>,
) -> Result<()> {
    let bad = |index: usize, reason: String| Err(Error::InvalidFamilyMember { index, reason });
    let mut seen = HashSet::new();
    for (i, phi) in flows.iter().enumerate() {
        if &phi.spec != spec {
            return bad(i, format!("group {} differs from {}", phi.spec, spec));
        }
        if phi.values.len() != g.edge_count() {
            return bad(i, format!("{} values for {} edges", phi.values.len(), g.edge_count()));
        }
        if let Some(v) = conservation_violation(g, phi) {
            return bad(i, format!("conservation fails at vertex {}", v + 1));
        }
        let clash = match forbidden {
            Some(f) => phi.first_agreement(f),
            None => phi.values.iter().position(|v| v.residues().iter().all(|&r| r == 0)),
        };
        if let Some(e) = clash {
            let what = if forbidden.is_some() { "equals the forbidden value" } else { "is zero" };
            return bad(i, format!("edge {} {what}", e + 1));
        }
        if !seen.insert(phi) {
            return bad(i, "repeats an earlier flow".into());
        }
    }
    Ok(())
}

/// Flow count to stop at: the target, but never below the guarantee.
fn needed(target: usize, guarantee: u64) -> usize {
    target.max(usize::try_from(guarantee).unwrap_or(usize::MAX))
}

fn guarantee_met(flows: usize, guarantee: u64) -> Result<()> {
    if (flows as u64) < guarantee {
        return Err(Error::GuaranteeViolated { needed: guarantee, got: flows as u64 });
    }
    Ok(())
}

/// Assignments on a single vertex (all loops, so every assignment is a
/// flow) avoiding `forbidden`, in lexicographic order.
fn single_vertex_flows(g: &Multigraph, spec: &GroupSpec, forbidden: &[GroupElement], limit: usize) -> Vec<GroupFlow> {
    let order = spec.order();
    let m = g.edge_count();
    let allowed: Vec<Vec<GroupElement>> =
        (0..m).map(|e| (0..order).map(|c| spec.decode(c)).filter(|x| x != &forbidden[e]).collect()).collect();
    if allowed.iter().any(|a| a.is_empty()) {
        return Vec::new();
    }
    let mut digits = vec![0usize; m];
    let mut out = Vec::new();
    while out.len() < limit {
        out.push(GroupFlow { spec: spec.clone(), values: (0..m).map(|e| allowed[e][digits[e]].clone()).collect() });
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < allowed[i].len() {
                break;
            }
            digits[i] = 0;
        }
    }
    out
}

/// A decomposition of a cubic 3-edge-connected graph grown from a
/// peripheral cycle through the first two edges at vertex 0.
fn first_decomposition(g: &Multigraph) -> Result<Decomposition> {
    let at = g.incident(0);
    let c = peripheral_cycle_through_unchecked(g, 0, at[0].0, at[1].0)?;
    decomposition_containing_cycle_unchecked(g, &c)
}

/// Closure certificates for both sides of a decomposition: the tree as a
/// 1-base and the base as a 2-base.
struct Certificates {
    tree: ClosureCertificate,
    base: ClosureCertificate,
}

impl Certificates {
    fn new(g: &Multigraph, d: &Decomposition) -> Result<Self> {
        let (_, tree) = k_closure(g, &d.tree, 1)?;
        let (_, base) = k_closure(g, &d.base, 2)?;
        if !tree.covers(g) || !base.covers(g) {
            return Err(Error::Internal("decomposition side does not close to every edge".into()));
        }
        Ok(Certificates { tree, base })
    }
}

/// A flow over `spec` avoiding `values` on the edges of `on`, from a
/// certificate whose base is disjoint from `on`.
fn avoid_on(
    g: &Multigraph,
    cert: &ClosureCertificate,
    spec: &GroupSpec,
    on: &EdgeSet,
    values: impl Fn(usize) -> GroupElement,
) -> Result<GroupFlow> {
    let forbidden: Vec<Option<GroupElement>> = g.edge_ids().map(|e| on.contains(e).then(|| values(e))).collect();
    avoidance_flow(g, cert, spec, &forbidden)
}

/// Z2 edge masks of the fundamental cycles of `edges` with respect to a
/// spanning tree.
fn fundamental_masks(g: &Multigraph, tree: &EdgeSet, edges: &[usize]) -> Result<Vec<Vec<bool>>> {
    edges.iter().map(|&e| Ok(fundamental_cycle(g, tree, e)?.edge_set().mask(g.edge_count()))).collect()
}

fn xor_into(acc: &mut [bool], mask: &[bool]) {
    for (a, &b) in acc.iter_mut().zip(mask) {
        *a ^= b;
    }
}

fn require_forbidden_len(f: &ForbiddenAssignment, g: &Multigraph) -> Result<()> {
    if f.values.len() != g.edge_count() {
        return precondition(format!(
            "forbidden assignment has {} values for {} edges",
            f.values.len(),
            g.edge_count()
        ));
    }
    Ok(())
}

/// `|E| - |V|`, negative for forests.
fn cycle_excess(g: &Multigraph) -> i64 {
    g.edge_count() as i64 - g.vertex_count() as i64
}
