//! Avoidance families over groups of order at least 6.

use std::collections::HashSet;

use super::{
    cycle_excess, first_decomposition, fundamental_masks, guarantee_met, needed, require_forbidden_len,
    single_vertex_flows, xor_into, FlowFamily, Provenance,
};
use crate::bounds::ceil_half_power;
use crate::closure::k_closure;
use crate::cubic::{project_family, reduce_to_cubic};
use crate::error::{Error, Result};
use crate::flow::{elementary_flow, ForbiddenAssignment, GroupFlow};
use crate::graph::{decompose_even_set, EdgeSet, Multigraph};
use crate::group::{GroupElement, GroupSpec};

/// `⌈½((k-6)/2)^ℓ⌉` for odd `k`, `⌈½((k-4)/2)^ℓ⌉` for even `k`.
pub(crate) fn large_group_guarantee(order: u64, excess: i64) -> u64 {
    let base = if order % 2 == 1 { order - 6 } else { order - 4 };
    ceil_half_power(base, 2, excess.max(0) as u64).max(1)
}

/// Flows differing from `f` on every edge of a 3-edge-connected graph, over
/// a group of order `k >= 6`. Stops at `max(target, guarantee)` flows.
///
/// On the cubic reduction, closure steps of a 2-base are walked last to
/// first; each step adds a multiple of its cycle's elementary flow keeping
/// every non-base edge away from `f`, `f + x` and `f - x`. Base edges that
/// still meet `f` are then corrected by `±x` along cycles of their
/// fundamental-cycle sum.
pub fn avoid_large_group(g: &Multigraph, f: &ForbiddenAssignment, target: usize) -> Result<FlowFamily> {
    let spec = &f.spec;
    let order = spec.order();
    if order < 6 {
        return Err(Error::GroupTooSmall { order });
    }
    require_forbidden_len(f, g)?;
    let guarantee = large_group_guarantee(order, cycle_excess(g));
    let limit = needed(target, guarantee);
    let family = |flows: Vec<GroupFlow>, provenance| -> Result<FlowFamily> {
        guarantee_met(flows.len(), guarantee)?;
        Ok(FlowFamily { spec: spec.clone(), flows, guarantee, provenance, forbidden: Some(f.clone()) })
    };
    if g.vertex_count() == 1 {
        return family(single_vertex_flows(g, spec, &f.values, limit), Provenance::SingleVertex);
    }
    let map = reduce_to_cubic(g)?;
    let cubic = &map.cubic;
    let forbidden = map.extend_to_cubic(&f.values, spec.zero());
    let x = spec.element_of_order_two().unwrap_or_else(|| spec.decode(1));
    let d = first_decomposition(cubic)?;
    let (_, cert) = k_closure(cubic, &d.base, 2)?;
    let base: Vec<usize> = d.base.iter().collect();
    let search = Search {
        g: cubic,
        spec,
        x: &x,
        forbidden: &forbidden,
        steps: cert
            .steps
            .iter()
            .rev()
            .map(|s| {
                let dirs: Vec<(usize, bool)> = s.cycle.directions(cubic).collect();
                let new = dirs.iter().copied().filter(|&(e, _)| s.new_edges.contains(e)).collect();
                (dirs, new)
            })
            .collect(),
        elements: (0..order).map(|c| spec.decode(c)).collect(),
        base_mask: d.base.mask(cubic.edge_count()),
        fundamental: fundamental_masks(cubic, &d.tree, &base)?,
        base,
        limit,
    };
    let mut state = Enumeration { seen: HashSet::new(), out: Vec::new() };
    let mut phi = GroupFlow::zero(spec, cubic.edge_count());
    search.explore(0, &mut phi, &mut state)?;
    family(project_family(&map, &state.out)?, Provenance::LargeGroupAvoidance)
}

type Step = (Vec<(usize, bool)>, Vec<(usize, bool)>);

struct Search<'a> {
    g: &'a Multigraph,
    spec: &'a GroupSpec,
    x: &'a GroupElement,
    forbidden: &'a [GroupElement],
    /// closure steps last to first: all directed edges, new directed edges
    steps: Vec<Step>,
    elements: Vec<GroupElement>,
    base: Vec<usize>,
    base_mask: Vec<bool>,
    /// fundamental-cycle masks of the base edges, in `base` order
    fundamental: Vec<Vec<bool>>,
    limit: usize,
}

struct Enumeration {
    seen: HashSet<GroupFlow>,
    out: Vec<GroupFlow>,
}

impl Search<'_> {
    /// `value` is outside `{f, f + x, f - x}`.
    fn starred(&self, e: usize, value: &GroupElement) -> bool {
        let f = &self.forbidden[e];
        let up = self.spec.add_unchecked(f, self.x);
        let down = self.spec.add_unchecked(f, &self.spec.negate_unchecked(self.x));
        value != f && value != &up && value != &down
    }

    fn shift(&self, phi: &mut GroupFlow, dirs: &[(usize, bool)], c: &GroupElement) {
        let minus = self.spec.negate_unchecked(c);
        for &(e, fwd) in dirs {
            self.spec.add_assign(&mut phi.values[e], if fwd { c } else { &minus });
        }
    }

    fn explore(&self, depth: usize, phi: &mut GroupFlow, state: &mut Enumeration) -> Result<()> {
        if state.out.len() >= self.limit {
            return Ok(());
        }
        if depth == self.steps.len() {
            return self.emit(phi, state);
        }
        let (dirs, new) = &self.steps[depth];
        for c in &self.elements {
            let minus = self.spec.negate_unchecked(c);
            let admissible = new.iter().all(|&(e, fwd)| {
                let v = self.spec.add_unchecked(&phi.values[e], if fwd { c } else { &minus });
                self.starred(e, &v)
            });
            if !admissible {
                continue;
            }
            self.shift(phi, dirs, c);
            let result = self.explore(depth + 1, phi, state);
            self.shift(phi, dirs, &minus);
            result?;
            if state.out.len() >= self.limit {
                break;
            }
        }
        Ok(())
    }

    /// Corrects the base edges that meet `f` and records the result.
    fn emit(&self, phi: &GroupFlow, state: &mut Enumeration) -> Result<()> {
        let g = self.g;
        if let Some(e) = g.edge_ids().find(|&e| !self.base_mask[e] && !self.starred(e, &phi.values[e])) {
            return Err(Error::Internal(format!("edge {} outside the base breaks the spacing condition", e + 1)));
        }
        let mut hat = vec![false; g.edge_count()];
        for (i, &e) in self.base.iter().enumerate() {
            if phi.values[e] == self.forbidden[e] {
                xor_into(&mut hat, &self.fundamental[i]);
            }
        }
        let mut corrected = phi.clone();
        for cycle in decompose_even_set(g, &EdgeSet::from_mask(&hat))? {
            corrected.add_assign(&elementary_flow(g, &cycle, self.x, self.spec));
        }
        if let Some(e) = g.edge_ids().find(|&e| corrected.values[e] == self.forbidden[e]) {
            return Err(Error::Internal(format!("correction left edge {} on its forbidden value", e + 1)));
        }
        if state.seen.insert(corrected.clone()) {
            state.out.push(corrected);
        }
        Ok(())
    }
}
