//! Reduction of a 3-edge-connected graph to a 3-edge-connected cubic graph
//! by vertex expansion, and transport of flows back to the original.

use std::collections::HashSet;

use crate::error::{precondition, Error, Result};
use crate::flow::{validate_flow, GroupFlow};
use crate::graph::{bridges, edge_connectivity_at_least, EdgeSet, Multigraph};

/// The cubic graph together with the forest whose contraction gives back the
/// original. Original edge `e` keeps id `e` in the cubic graph; forest edges
/// and new vertices are appended.
#[derive(Clone, Debug)]
pub struct ReductionMap {
    pub original: Multigraph,
    pub cubic: Multigraph,
    pub forest: EdgeSet,
    /// cubic edge -> original edge, `None` on forest edges
    pub edge_correspondence: Vec<Option<usize>>,
    /// cubic vertex -> original vertex it contracts onto
    pub vertex_correspondence: Vec<usize>,
}

impl ReductionMap {
    /// Extends an assignment on original edges to the cubic graph, using
    /// `fill` on forest edges.
    pub fn extend_to_cubic<T: Clone>(&self, values: &[T], fill: T) -> Vec<T> {
        self.edge_correspondence.iter().map(|o| o.map_or_else(|| fill.clone(), |e| values[e].clone())).collect()
    }
}

/// One end of an edge: `(edge, is_head)`.
type HalfEdge = (usize, bool);

struct Expander {
    n: usize,
    edges: Vec<(usize, usize)>,
    origin: Vec<usize>,
}

impl Expander {
    fn graph(&self) -> Multigraph {
        Multigraph::from_edges(self.n, &self.edges)
    }

    fn half_edges(&self, v: usize) -> Vec<HalfEdge> {
        let mut out = Vec::new();
        for (e, &(t, h)) in self.edges.iter().enumerate() {
            if t == v {
                out.push((e, false));
            }
            if h == v {
                out.push((e, true));
            }
        }
        out
    }

    fn other_end(&self, (e, is_head): HalfEdge) -> usize {
        let (t, h) = self.edges[e];
        if is_head {
            t
        } else {
            h
        }
    }

    /// Moves the two half-edges onto a new vertex joined to `v` by a new edge.
    fn expand(&mut self, v: usize, a: HalfEdge, b: HalfEdge) -> Multigraph {
        let fresh = self.n;
        self.n += 1;
        self.origin.push(self.origin[v]);
        for (e, is_head) in [a, b] {
            if is_head {
                self.edges[e].1 = fresh;
            } else {
                self.edges[e].0 = fresh;
            }
        }
        self.edges.push((v, fresh));
        self.graph()
    }

    fn undo(&mut self, v: usize, a: HalfEdge, b: HalfEdge) {
        self.edges.pop();
        for (e, is_head) in [a, b] {
            if is_head {
                self.edges[e].1 = v;
            } else {
                self.edges[e].0 = v;
            }
        }
        self.n -= 1;
        self.origin.pop();
    }

    /// The pair suggested by the case analysis of the expansion argument.
    fn preferred_pair(&self, g: &Multigraph, v: usize, halves: &[HalfEdge]) -> Option<(HalfEdge, HalfEdge)> {
        let proper: Vec<HalfEdge> = halves.iter().copied().filter(|&(e, _)| !g.is_loop(e)).collect();
        let alive = |u: usize| u != v;
        let labels = crate::graph::ComponentLabels::compute(g, |_| true, alive);
        let side = |h: HalfEdge| labels.label[self.other_end(h)].unwrap();
        if labels.count > 1 {
            // (a) G - v disconnected: ends in different components
            let a = *proper.first()?;
            let b = proper.iter().copied().find(|&h| side(h) != side(a))?;
            return Some((a, b));
        }
        let b_edges = bridges(g, |_| true, alive);
        if b_edges.is_empty() {
            // (b) G - v 2-edge-connected: any pair
            return Some((halves[0], *halves.iter().skip(1).find(|&&h| h.0 != halves[0].0)?));
        }
        // (c) smallest side cut off by a single bridge of G - v
        let mut best: Option<Vec<bool>> = None;
        for &br in &b_edges {
            let labels = crate::graph::ComponentLabels::compute(g, |e| e != br, alive);
            for l in 0..labels.count {
                let part: Vec<bool> = labels.label.iter().map(|&x| x == Some(l)).collect();
                let size = part.iter().filter(|&&b| b).count();
                let first = part.iter().position(|&b| b).unwrap();
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        let cur_size = cur.iter().filter(|&&b| b).count();
                        let cur_first = cur.iter().position(|&b| b).unwrap();
                        (size, first) < (cur_size, cur_first)
                    }
                };
                if better {
                    best = Some(part);
                }
            }
        }
        let x = best?;
        let a = proper.iter().copied().find(|&h| x[self.other_end(h)])?;
        let b = proper.iter().copied().find(|&h| !x[self.other_end(h)])?;
        Some((a, b))
    }
}

fn check_input(g: &Multigraph) -> Result<()> {
    if g.vertex_count() < 2 {
        return precondition("reduction needs at least two vertices");
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < 3) {
        return precondition(format!("vertex {} has degree below 3", v + 1));
    }
    if !edge_connectivity_at_least(g, 3) {
        return precondition("graph is not 3-edge-connected");
    }
    Ok(())
}

/// Expands vertices of degree above 3 until the graph is cubic, keeping it
/// 3-edge-connected after every step.
pub fn reduce_to_cubic(g: &Multigraph) -> Result<ReductionMap> {
    reduce_to_cubic_observed(g, |_| {})
}

/// As [`reduce_to_cubic`], calling `observe` on the graph after every
/// expansion step.
pub fn reduce_to_cubic_observed(g: &Multigraph, mut observe: impl FnMut(&Multigraph)) -> Result<ReductionMap> {
    check_input(g)?;
    let m = g.edge_count();
    let mut ex = Expander { n: g.vertex_count(), edges: g.edges().to_vec(), origin: g.vertices().collect() };
    let mut current = g.clone();
    while let Some(v) = current.vertices().find(|&v| current.degree(v) > 3) {
        let halves = ex.half_edges(v);
        let mut candidates = Vec::new();
        if let Some(p) = ex.preferred_pair(&current, v, &halves) {
            candidates.push(p);
        }
        for (i, &a) in halves.iter().enumerate() {
            for &b in &halves[i + 1..] {
                if a.0 != b.0 {
                    candidates.push((a, b));
                }
            }
        }
        let mut next = None;
        for (a, b) in candidates {
            let expanded = ex.expand(v, a, b);
            if edge_connectivity_at_least(&expanded, 3) {
                next = Some(expanded);
                break;
            }
            ex.undo(v, a, b);
        }
        current =
            next.ok_or_else(|| Error::Internal(format!("no connectivity-preserving expansion at vertex {}", v + 1)))?;
        observe(&current);
    }
    let forest: EdgeSet = (m..current.edge_count()).collect();
    let edge_correspondence = (0..current.edge_count()).map(|e| (e < m).then_some(e)).collect();
    Ok(ReductionMap {
        original: g.clone(),
        cubic: current,
        forest,
        edge_correspondence,
        vertex_correspondence: ex.origin,
    })
}

/// Restricts cubic flows to the original edges. Distinct inputs must give
/// distinct outputs, since a flow vanishing off a forest is zero.
pub fn project_family(map: &ReductionMap, flows: &[GroupFlow]) -> Result<Vec<GroupFlow>> {
    let mut out = Vec::with_capacity(flows.len());
    let mut seen_in = HashSet::new();
    let mut seen_out = HashSet::new();
    for phi in flows {
        if !validate_flow(&map.cubic, phi) {
            return precondition("input is not a flow of the cubic graph");
        }
        let values = map
            .edge_correspondence
            .iter()
            .zip(&phi.values)
            .filter(|(o, _)| o.is_some())
            .map(|(_, v)| v.clone())
            .collect();
        let projected = GroupFlow { spec: phi.spec.clone(), values };
        if seen_in.insert(phi) && !seen_out.insert(projected.clone()) {
            return Err(Error::Internal("distinct cubic flows projected to the same flow".into()));
        }
        out.push(projected);
    }
    Ok(out)
}
