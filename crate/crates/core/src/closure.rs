//! k-closures with certificates, the avoidance flow built from a
//! certificate, and packing two edge-disjoint spanning trees.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Error, Result};
use crate::flow::GroupFlow;
use crate::graph::UnionFind;
use crate::graph::{contract_edges, shortest_path, Contraction, Cycle, EdgeSet, Multigraph};
use crate::group::{GroupElement, GroupSpec};

/// One closure step: `cycle` has exactly `new_edges` outside everything
/// added so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureStep {
    pub cycle: Cycle,
    pub new_edges: EdgeSet,
}

/// Ordered witness that `base` grows to a larger set by cycles that each add
/// at most `k` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureCertificate {
    pub base: EdgeSet,
    pub steps: Vec<ClosureStep>,
    pub k: usize,
}

impl ClosureCertificate {
    /// `base` plus every added edge.
    pub fn closure(&self) -> EdgeSet {
        let mut out = self.base.clone();
        for s in &self.steps {
            for e in s.new_edges.iter() {
                out.insert(e);
            }
        }
        out
    }

    pub fn covers(&self, g: &Multigraph) -> bool {
        self.closure().len() == g.edge_count()
    }

    /// Re-checks every step against `g`.
    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        let mut have = self.base.clone();
        if have.iter().any(|e| e >= g.edge_count()) {
            return precondition("certificate base has an unknown edge");
        }
        for (i, step) in self.steps.iter().enumerate() {
            step.cycle.check(g)?;
            let outside = step.cycle.edge_set().difference(&have);
            if outside != step.new_edges {
                return precondition(format!("step {} adds a different edge set than its cycle", i + 1));
            }
            if outside.is_empty() || outside.len() > self.k {
                return precondition(format!("step {} adds {} edges with k = {}", i + 1, outside.len(), self.k));
            }
            have = have.union(&outside);
        }
        Ok(())
    }
}

/// Order in which candidate edges are scanned for violating cycles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchOrder {
    #[default]
    LowestId,
    Shuffled(u64),
}

/// Lifts a cycle of `g / r` (given by its `g` edges in traversal order,
/// starting at the tail of the first) to a cycle of `g` by routing through
/// `r` inside each contracted class.
fn lift_cycle(g: &Multigraph, r: &[bool], class: &[usize], small_edges: &[usize], start: usize) -> Cycle {
    let mut steps = Vec::new();
    let in_class = |c: usize| move |v: usize| class[v] == c;
    // exit vertex from each class, entry vertex into the next
    let mut exits = Vec::with_capacity(small_edges.len());
    let mut entries = Vec::with_capacity(small_edges.len());
    let mut at = start;
    for &e in small_edges {
        let (t, h) = g.endpoints(e);
        let (out, inn) = if t == h || small_edges.len() == 1 || class[t] == class[at] { (t, h) } else { (h, t) };
        exits.push(out);
        entries.push(inn);
        at = inn;
    }
    let len = small_edges.len();
    for i in 0..len {
        steps.push((exits[i], small_edges[i]));
        let from = entries[i];
        let to = exits[(i + 1) % len];
        let p = shortest_path(g, from, to, |x| r[x], in_class(class[from]))
            .expect("contracted class is connected through its own edges");
        steps.extend(p.vertices.iter().zip(&p.edges).map(|(&v, &x)| (v, x)));
    }
    Cycle::from_steps_unchecked(steps)
}

/// A shortest cycle of `g / r` through the non-`r` edge `e`, if it has at
/// most `k` edges. Returned as `g` edges in traversal order; `back` maps
/// contracted edges to their originals.
fn short_cycle_through(contracted: &Contraction, back: &[usize], e: usize, k: usize) -> Option<Vec<usize>> {
    let small = &contracted.graph;
    let se = contracted.edge_map[e]?;
    if small.is_loop(se) {
        return Some(vec![e]);
    }
    if k < 2 {
        return None;
    }
    let (t, h) = small.endpoints(se);
    let path = shortest_path(small, h, t, |x| x != se, |_| true)?;
    if path.len() + 1 > k {
        return None;
    }
    let mut out = vec![e];
    out.extend(path.edges.iter().map(|&x| back[x]));
    Some(out)
}

/// `<s>_k` with a certificate, scanning candidate edges in id order.
pub fn k_closure(g: &Multigraph, s: &EdgeSet, k: usize) -> Result<(EdgeSet, ClosureCertificate)> {
    k_closure_with_order(g, s, k, SearchOrder::LowestId)
}

/// `<s>_k` with a certificate. Each step picks the first candidate edge (in
/// `order`) lying on a cycle with between 1 and `k` edges outside the
/// current set; such a cycle exists iff `g / R` has a cycle of length at
/// most `k` through that edge, so the result is exact for every `k`.
pub fn k_closure_with_order(
    g: &Multigraph,
    s: &EdgeSet,
    k: usize,
    order: SearchOrder,
) -> Result<(EdgeSet, ClosureCertificate)> {
    if k == 0 {
        return Err(Error::UnsupportedK(k));
    }
    if s.iter().any(|e| e >= g.edge_count()) {
        return precondition("edge set refers to an unknown edge");
    }
    let mut rng = match order {
        SearchOrder::LowestId => None,
        SearchOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut r = s.clone();
    let mut steps = Vec::new();
    loop {
        let contracted = contract_edges(g, &r);
        let mut candidates: Vec<usize> = g.edge_ids().filter(|&e| !r.contains(e)).collect();
        if let Some(rng) = rng.as_mut() {
            candidates.shuffle(rng);
        }
        let mut back = vec![0; contracted.graph.edge_count()];
        for (ge, s) in contracted.edge_map.iter().enumerate() {
            if let Some(s) = *s {
                back[s] = ge;
            }
        }
        let found = candidates.iter().find_map(|&e| short_cycle_through(&contracted, &back, e, k));
        let Some(small_edges) = found else { break };
        let mask = r.mask(g.edge_count());
        let start = g.tail(small_edges[0]);
        let cycle = lift_cycle(g, &mask, &contracted.vertex_map, &small_edges, start);
        let new_edges: EdgeSet = small_edges.iter().copied().collect();
        r = r.union(&new_edges);
        steps.push(ClosureStep { cycle, new_edges });
    }
    let cert = ClosureCertificate { base: s.clone(), steps, k };
    debug_assert!(cert.verify(g).is_ok());
    Ok((r, cert))
}

pub fn is_k_base(g: &Multigraph, s: &EdgeSet, k: usize) -> Result<bool> {
    Ok(k_closure(g, s, k)?.0.len() == g.edge_count())
}

/// A flow differing from `forbidden` on every edge outside `cert.base`
/// where a value is given. Steps are processed last to first, each adding
/// the smallest multiple of its cycle's elementary flow that dodges the
/// forbidden values on the step's new edges.
pub fn avoidance_flow(
    g: &Multigraph,
    cert: &ClosureCertificate,
    spec: &GroupSpec,
    forbidden: &[Option<GroupElement>],
) -> Result<GroupFlow> {
    if spec.order() <= cert.k as u64 {
        return precondition(format!("group of order {} is too small for k = {}", spec.order(), cert.k));
    }
    if forbidden.len() != g.edge_count() {
        return precondition("forbidden values must be indexed by edge");
    }
    if !cert.covers(g) {
        return precondition("certificate does not reach every edge");
    }
    cert.verify(g)?;
    let mut phi = GroupFlow::zero(spec, g.edge_count());
    for step in cert.steps.iter().rev() {
        let dirs: Vec<(usize, bool)> = step.cycle.directions(g).collect();
        let new: Vec<(usize, bool)> = dirs.iter().copied().filter(|&(e, _)| step.new_edges.contains(e)).collect();
        let x = (0..spec.order())
            .map(|c| spec.decode(c))
            .find(|x| {
                let minus = spec.negate_unchecked(x);
                new.iter().all(|&(e, fwd)| {
                    let v = spec.add_unchecked(&phi.values[e], if fwd { x } else { &minus });
                    forbidden[e].as_ref() != Some(&v)
                })
            })
            .ok_or_else(|| Error::Internal("no admissible multiple for a closure step".into()))?;
        let minus = spec.negate_unchecked(&x);
        for &(e, fwd) in &dirs {
            spec.add_assign(&mut phi.values[e], if fwd { &x } else { &minus });
        }
    }
    Ok(phi)
}

/// Two edge-disjoint spanning trees, found by matroid-partition
/// augmentation along shortest exchange paths.
pub fn two_disjoint_spanning_trees(g: &Multigraph) -> Option<(EdgeSet, EdgeSet)> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 0 {
        return None;
    }
    // owner[e]: 0 unassigned, 1 or 2 for the forest holding e
    let mut owner = vec![0u8; m];
    for e0 in g.edge_ids() {
        if g.is_loop(e0) {
            continue;
        }
        if count_owned(&owner, 1) + count_owned(&owner, 2) == 2 * (n - 1) {
            break;
        }
        // BFS over edges; parent[x] = (edge that replaces x, forest)
        let mut parent: Vec<Option<(usize, u8)>> = vec![None; m];
        let mut visited = vec![false; m];
        visited[e0] = true;
        let mut queue = VecDeque::from([e0]);
        let mut done: Option<(usize, u8)> = None;
        'search: while let Some(x) = queue.pop_front() {
            for forest in [1u8, 2] {
                if owner[x] == forest {
                    continue;
                }
                let (t, h) = g.endpoints(x);
                match forest_path(g, &owner, forest, t, h) {
                    None => {
                        done = Some((x, forest));
                        break 'search;
                    }
                    Some(path) => {
                        for y in path {
                            if !visited[y] {
                                visited[y] = true;
                                parent[y] = Some((x, forest));
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }
        let Some((mut x, mut forest)) = done else { continue };
        loop {
            let previous = owner[x];
            owner[x] = forest;
            match parent[x] {
                None => break,
                Some((p, _)) => {
                    // x vacated `previous`; p takes its place there
                    x = p;
                    forest = previous;
                }
            }
        }
    }
    let t1: EdgeSet = g.edge_ids().filter(|&e| owner[e] == 1).collect();
    let t2: EdgeSet = g.edge_ids().filter(|&e| owner[e] == 2).collect();
    (t1.len() == n - 1 && t2.len() == n - 1).then_some((t1, t2))
}

fn count_owned(owner: &[u8], forest: u8) -> usize {
    owner.iter().filter(|&&o| o == forest).count()
}

/// Edges of the path between `a` and `b` in the given forest, or `None` if
/// they lie in different trees.
fn forest_path(g: &Multigraph, owner: &[u8], forest: u8, a: usize, b: usize) -> Option<Vec<usize>> {
    shortest_path(g, a, b, |e| owner[e] == forest, |_| true).map(|p| p.edges)
}

/// Whether `s` contains no cycle.
pub fn is_forest(g: &Multigraph, s: &EdgeSet) -> bool {
    let mut uf = UnionFind::new(g.vertex_count());
    s.iter().all(|e| {
        let (t, h) = g.endpoints(e);
        uf.union(t, h)
    })
}
