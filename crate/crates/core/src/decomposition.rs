//! Decompositions of cubic graphs into a spanning tree and a peripheral
//! 2-base, grown one peripheral path at a time.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::ceil_pow2_ratio;
use crate::closure::is_k_base;
use crate::error::{precondition, Error, Result};
use crate::graph::{find_nontrivial_3_cut, spanning_tree, Cycle, EdgeSet, Multigraph, Path, UnionFind};
use crate::peripheral::{
    is_peripheral, peripheral_cycle_through_unchecked, peripheral_path_unchecked, require_cubic_3ec,
    two_peripheral_paths_unchecked,
};

/// A partition of the edges into a spanning tree and a 2-base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub tree: EdgeSet,
    pub base: EdgeSet,
}

impl Decomposition {
    /// Checks the partition, the spanning tree and the 2-base property.
    pub fn verify(&self, g: &Multigraph) -> Result<()> {
        if !self.tree.intersection(&self.base).is_empty() || self.tree.len() + self.base.len() != g.edge_count() {
            return precondition("tree and base must partition the edges");
        }
        if self.tree.iter().chain(self.base.iter()).any(|e| e >= g.edge_count()) {
            return precondition("decomposition refers to an unknown edge");
        }
        if !is_spanning_tree(g, &self.tree) {
            return precondition("tree side is not a spanning tree");
        }
        if !is_k_base(g, &self.base, 2)? {
            return precondition("base side is not a 2-base");
        }
        Ok(())
    }
}

pub(crate) fn is_spanning_tree(g: &Multigraph, t: &EdgeSet) -> bool {
    if t.len() + 1 != g.vertex_count() {
        return false;
    }
    let mut uf = UnionFind::new(g.vertex_count());
    t.iter().all(|e| {
        let (a, b) = g.endpoints(e);
        uf.union(a, b)
    })
}

/// One step of the growth process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthStep {
    /// A vertex with two edges into the grown set joins without new edges.
    Absorb(usize),
    /// A peripheral path joins; `choice` is 0 for forced steps, else 1 or 2.
    AddPath { choice: u8, path: Path },
}

/// The initial cycle and the steps that grew it into a 2-base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTrace {
    pub initial: Cycle,
    pub steps: Vec<GrowthStep>,
}

impl GrowthTrace {
    /// Rebuilds the decomposition the trace describes.
    pub fn replay(&self, g: &Multigraph) -> Decomposition {
        let mut base = self.initial.edge_set();
        for step in &self.steps {
            if let GrowthStep::AddPath { path, .. } = step {
                base = base.union(&path.edge_set());
            }
        }
        let tree = base.complement(g);
        Decomposition { tree, base }
    }
}

/// Growth state: grown vertex set and base.
#[derive(Clone)]
struct Growth {
    in_x: Vec<bool>,
    base: EdgeSet,
    steps: Vec<GrowthStep>,
}

impl Growth {
    fn start(g: &Multigraph, c: &Cycle) -> Self {
        let mut in_x = vec![false; g.vertex_count()];
        for v in c.vertices() {
            in_x[v] = true;
        }
        Growth { in_x, base: c.edge_set(), steps: Vec::new() }
    }

    fn done(&self) -> bool {
        self.in_x.iter().all(|&b| b)
    }

    fn add_path(&mut self, path: &Path, choice: u8) {
        for &v in &path.vertices {
            self.in_x[v] = true;
        }
        for &e in &path.edges {
            self.base.insert(e);
        }
        self.steps.push(GrowthStep::AddPath { choice, path: path.clone() });
    }

    /// `T = E(X) - B` together with the cut `E(X, V - X)` must be a spanning
    /// tree of the graph with `V - X` identified to one vertex.
    fn tree_invariant_holds(&self, g: &Multigraph) -> bool {
        if self.done() {
            return true;
        }
        let outside = g.vertex_count();
        let mut uf = UnionFind::new(g.vertex_count() + 1);
        let mut count = 0;
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            let (xt, xh) = (self.in_x[t], self.in_x[h]);
            let included = (xt && xh && !self.base.contains(e)) || (xt != xh);
            if included {
                let a = if xt { t } else { outside };
                let b = if xh { h } else { outside };
                if !uf.union(a, b) {
                    return false;
                }
                count += 1;
            }
        }
        count == self.in_x.iter().filter(|&&b| b).count()
    }

    fn finish(&self, g: &Multigraph) -> Result<Decomposition> {
        let complement = self.base.complement(g);
        if is_spanning_tree(g, &complement) {
            return Ok(Decomposition { tree: complement, base: self.base.clone() });
        }
        // keep a spanning tree inside the complement; extra edges join the base
        let tree = spanning_tree(g, &complement)?;
        Ok(Decomposition { base: tree.complement(g), tree })
    }
}

/// Grows `c` into a decomposition with `E(c)` inside the base, keeping
/// `f` as the excluded edge while it crosses the grown set.
fn grow_from(g: &Multigraph, c: &Cycle, mut f: Option<usize>) -> Result<(Decomposition, GrowthTrace)> {
    let mut growth = Growth::start(g, c);
    while !growth.done() {
        let crossing = |e: usize| {
            let (t, h) = g.endpoints(e);
            growth.in_x[t] != growth.in_x[h]
        };
        let edge = match f {
            Some(e) if crossing(e) => e,
            _ => {
                let e = g.edge_ids().find(|&e| crossing(e)).ok_or(Error::Disconnected)?;
                f = Some(e);
                e
            }
        };
        let pp = peripheral_path_unchecked(g, &growth.in_x, edge)?;
        growth.add_path(&pp.path, 0);
    }
    let trace = GrowthTrace { initial: c.clone(), steps: growth.steps.clone() };
    Ok((growth.finish(g)?, trace))
}

/// A decomposition whose base contains `E(c)`, for a peripheral cycle `c`.
pub fn decomposition_containing_cycle(g: &Multigraph, c: &Cycle) -> Result<Decomposition> {
    Ok(decomposition_with_trace(g, c)?.0)
}

/// As [`decomposition_containing_cycle`], also returning the growth steps.
pub fn decomposition_with_trace(g: &Multigraph, c: &Cycle) -> Result<(Decomposition, GrowthTrace)> {
    require_cubic_3ec(g)?;
    c.check(g)?;
    if !is_peripheral(g, &c.edge_set()) {
        return precondition("cycle is not peripheral");
    }
    grow_from(g, c, None)
}

pub(crate) fn decomposition_containing_cycle_unchecked(g: &Multigraph, c: &Cycle) -> Result<Decomposition> {
    Ok(grow_from(g, c, None)?.0)
}

/// Three decompositions of `g - r`, one for each edge at `r` left out of
/// the initial cycle.
#[derive(Clone, Debug)]
pub struct VertexDeletedBases {
    pub graph: Multigraph,
    /// old vertex -> vertex of `graph`
    pub vertex_map: Vec<Option<usize>>,
    /// old edge -> edge of `graph`
    pub edge_map: Vec<Option<usize>>,
    /// `(excluded edge at r, decomposition of graph)`
    pub decompositions: Vec<(usize, Decomposition)>,
}

/// Three pairwise-distinct peripheral 2-bases of `g - r`. For each edge `f`
/// at `r`, a peripheral cycle through the other two is grown with `f`
/// excluded; the edges at `r` are then dropped. The neighbour of `r` across
/// `f` is the one with no base edge, so the three bases differ.
pub fn three_bases_minus_vertex(g: &Multigraph, r: usize) -> Result<VertexDeletedBases> {
    require_cubic_3ec(g)?;
    if r >= g.vertex_count() {
        return precondition(format!("vertex {} does not exist", r + 1));
    }
    if g.vertex_count() < 4 {
        return precondition("need at least four vertices");
    }
    let (graph, vertex_map, edge_map) = g.delete_vertex(r);
    let at_r: Vec<usize> = g.incident(r).iter().map(|&(e, _)| e).collect();
    let mut decompositions = Vec::new();
    for (i, &f) in at_r.iter().enumerate() {
        let others: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| at_r[j]).collect();
        let c = peripheral_cycle_through_unchecked(g, r, others[0], others[1])?;
        let (d, _) = grow_from(g, &c, Some(f))?;
        let base: EdgeSet = d.base.iter().filter_map(|e| edge_map[e]).collect();
        let tree = base.complement(&graph);
        decompositions.push((f, Decomposition { tree, base }));
    }
    let distinct: HashSet<&EdgeSet> = decompositions.iter().map(|(_, d)| &d.base).collect();
    if distinct.len() != 3 {
        return Err(Error::Internal("bases at a deleted vertex coincide".into()));
    }
    Ok(VertexDeletedBases { graph, vertex_map, edge_map, decompositions })
}

/// `⌈2^(n / 2q)⌉`, the count promised for a cubic graph on `n` vertices
/// whose peripheral cycles have length at most `q`.
pub fn decomposition_guarantee(n: usize, q: usize) -> u64 {
    ceil_pow2_ratio(n as u64, 2 * q.max(1) as u64)
}

/// Pairwise-distinct decompositions of `g`, at least `min(target,
/// guarantee)` of them. `root` is a leaf of every returned tree. Nontrivial
/// 3-edge cuts are split off and solved recursively; cyclically
/// 4-edge-connected graphs branch on the two paths of every fork. `seed`
/// permutes the order in which branches are explored.
pub fn enumerate_decompositions(g: &Multigraph, root: usize, target: usize, seed: u64) -> Result<Vec<Decomposition>> {
    require_cubic_3ec(g)?;
    if root >= g.vertex_count() {
        return precondition(format!("vertex {} does not exist", root + 1));
    }
    if target == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    enumerate_rec(g, root, target, &mut rng)
}

fn enumerate_rec(g: &Multigraph, root: usize, target: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Decomposition>> {
    if g.vertex_count() >= 6 {
        if let Some(cut) = find_nontrivial_3_cut(g)? {
            return enumerate_split(g, root, &cut.side_a_mask(g.vertex_count()), target, rng);
        }
    }
    enumerate_branching(g, root, target, rng)
}

/// `g` with every vertex outside `keep` identified to one new last vertex,
/// and the map from new edges to old ones.
fn identify_outside(g: &Multigraph, keep: &[bool]) -> (Multigraph, Vec<Option<usize>>, Vec<usize>) {
    let mut vmap = vec![None; g.vertex_count()];
    let mut next = 0;
    for v in g.vertices().filter(|&v| keep[v]) {
        vmap[v] = Some(next);
        next += 1;
    }
    let merged = next;
    let mut edges = Vec::new();
    let mut back = Vec::new();
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        if !keep[t] && !keep[h] {
            continue;
        }
        edges.push((vmap[t].unwrap_or(merged), vmap[h].unwrap_or(merged)));
        back.push(e);
    }
    (Multigraph::from_edges(merged + 1, &edges), vmap, back)
}

fn enumerate_split(
    g: &Multigraph,
    root: usize,
    side_a: &[bool],
    target: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Decomposition>> {
    // the root side keeps the root; the far side is rooted at its merged vertex
    let root_side: Vec<bool> = side_a.iter().map(|&a| a == side_a[root]).collect();
    let far_side: Vec<bool> = root_side.iter().map(|&b| !b).collect();
    let (near, near_map, near_back) = identify_outside(g, &root_side);
    let (far, _, far_back) = identify_outside(g, &far_side);
    let near_root = near_map[root].expect("root is kept");
    let far_root = far.vertex_count() - 1;
    let near_list = enumerate_rec(&near, near_root, target, rng)?;
    let far_list = enumerate_rec(&far, far_root, target, rng)?;
    let far_cut: Vec<usize> = far.incident(far_root).iter().map(|&(e, _)| e).collect();
    let mut seen = HashSet::new();
    let mut far_parts = Vec::new();
    for d in far_list {
        let strip =
            |s: &EdgeSet| -> EdgeSet { s.iter().filter(|e| !far_cut.contains(e)).map(|e| far_back[e]).collect() };
        let part = (strip(&d.tree), strip(&d.base));
        if seen.insert(part.clone()) {
            far_parts.push(part);
        }
    }
    let mut out = Vec::new();
    'outer: for d in &near_list {
        let tree_a: EdgeSet = d.tree.iter().map(|e| near_back[e]).collect();
        let base_a: EdgeSet = d.base.iter().map(|e| near_back[e]).collect();
        for (tree_b, base_b) in &far_parts {
            out.push(Decomposition { tree: tree_a.union(tree_b), base: base_a.union(base_b) });
            if out.len() >= target {
                break 'outer;
            }
        }
    }
    debug_assert!(out.iter().all(|d| is_spanning_tree(g, &d.tree)));
    Ok(out)
}

struct Brancher<'a> {
    g: &'a Multigraph,
    f: usize,
    target: usize,
    seen: HashSet<EdgeSet>,
    out: Vec<Decomposition>,
}

impl Brancher<'_> {
    fn explore(&mut self, mut growth: Growth, rng: &mut ChaCha8Rng) -> Result<()> {
        let g = self.g;
        loop {
            if self.out.len() >= self.target {
                return Ok(());
            }
            if growth.done() {
                let d = growth.finish(g)?;
                if self.seen.insert(d.base.clone()) {
                    self.out.push(d);
                }
                return Ok(());
            }
            let absorb = g.vertices().find(|&y| {
                !growth.in_x[y] && g.incident(y).iter().filter(|&&(e, w)| e != self.f && growth.in_x[w]).count() >= 2
            });
            let Some(y) = absorb else { break };
            growth.in_x[y] = true;
            growth.steps.push(GrowthStep::Absorb(y));
            debug_assert!(growth.tree_invariant_holds(g));
        }
        let fork = two_peripheral_paths_unchecked(g, &growth.in_x, self.f)?;
        let mut order = [(1u8, fork.first.path), (2u8, fork.second.path)];
        if rng.gen::<bool>() {
            order.swap(0, 1);
        }
        for (choice, path) in order {
            let mut next = growth.clone();
            next.add_path(&path, choice);
            debug_assert!(next.tree_invariant_holds(g));
            self.explore(next, rng)?;
            if self.out.len() >= self.target {
                break;
            }
        }
        Ok(())
    }
}

fn enumerate_branching(g: &Multigraph, root: usize, target: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Decomposition>> {
    let at_r: Vec<usize> = g.incident(root).iter().map(|&(e, _)| e).collect();
    let mut pairs = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];
    for i in (1..3).rev() {
        let j = rng.gen_range(0..=i);
        pairs.swap(i, j);
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (a, b, c) in pairs {
        if out.len() >= target {
            break;
        }
        let cycle = peripheral_cycle_through_unchecked(g, root, at_r[a], at_r[b])?;
        let mut brancher =
            Brancher { g, f: at_r[c], target: target - out.len(), seen: HashSet::new(), out: Vec::new() };
        brancher.explore(Growth::start(g, &cycle), rng)?;
        for d in brancher.out {
            if seen.insert(d.base.clone()) {
                out.push(d);
            }
        }
    }
    Ok(out)
}
