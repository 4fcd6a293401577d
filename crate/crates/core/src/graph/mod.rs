//! Oriented multigraphs with stable edge ids, plus the connectivity and
//! cycle-space machinery the rest of the crate is built on.
//!
//! Vertices and edges are dense `usize` indices starting at 0. All text
//! formats (`.fdg`, `.fav`, flow files, CLI output) shift them to 1-based ids.

mod connectivity;
mod contract;
mod cycles;
pub mod format;
pub mod named;

pub use connectivity::{
    bridges, connected_components, edge_connectivity_at_least, find_nontrivial_3_cut, is_connected,
    is_connected_without, two_edge_connected_components, ComponentLabels,
};
pub use contract::{contract_edges, Contraction};
pub(crate) use cycles::UnionFind;
pub use cycles::{
    cycle_space_dimension, decompose_even_set, enumerate_cycles, fundamental_cycle, shortest_path, spanning_forest,
    spanning_tree,
};

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{precondition, Result};

/// An oriented multigraph. Loops and parallel edges are allowed.
///
/// Edge `e` is stored as `(tail, head)`; the orientation only matters for
/// flow bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (edge, other end); a loop appears twice in its vertex's list
    adj: Vec<Vec<(usize, usize)>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (i, &(t, h)) in edges.iter().enumerate() {
            if t >= n || h >= n {
                return precondition(format!("edge {} references vertex outside 1..{}", i + 1, n));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(t, h)) in edges.iter().enumerate() {
            adj[t].push((e, h));
            adj[h].push((e, t));
        }
        Ok(Multigraph { n, edges, adj })
    }

    /// Builds a graph from edges known to be in range. Panics otherwise.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        Self::new(n, edges.to_vec()).expect("edge endpoints in range")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edge_ids(&self) -> std::ops::Range<usize> {
        0..self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn head(&self, e: usize) -> usize {
        self.edges[e].1
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].0 == self.edges[e].1
    }

    /// The end of `e` opposite to `v`. For a loop this is `v` itself.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (t, h) = self.edges[e];
        if t == v {
            h
        } else {
            debug_assert_eq!(h, v, "vertex {v} is not an end of edge {e}");
            t
        }
    }

    /// Incidences at `v` as `(edge, other end)`, in edge-id order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Degree of `v`; loops count twice.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_cubic(&self) -> bool {
        self.vertices().all(|v| self.degree(v) == 3)
    }

    /// Edges joining `v` to a vertex of `set` (excluding loops at `v`).
    pub fn edges_to(&self, v: usize, set: &[bool]) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.adj[v].iter().filter(|&&(e, w)| w != v && set[w] && !self.is_loop(e)).map(|&(e, _)| e).collect();
        out.dedup();
        out
    }

    /// Edges with one end in `side` and the other end outside it.
    pub fn cut_edges(&self, side: &[bool]) -> Vec<usize> {
        self.edge_ids()
            .filter(|&e| {
                let (t, h) = self.edges[e];
                side[t] != side[h]
            })
            .collect()
    }

    /// Edges with both ends in `set`.
    pub fn induced_edges(&self, set: &[bool]) -> Vec<usize> {
        self.edge_ids()
            .filter(|&e| {
                let (t, h) = self.edges[e];
                set[t] && set[h]
            })
            .collect()
    }

    /// The graph `g - r`, with maps from old to new vertex and edge ids.
    pub fn delete_vertex(&self, r: usize) -> (Multigraph, Vec<Option<usize>>, Vec<Option<usize>>) {
        let keep: Vec<bool> = self.vertices().map(|v| v != r).collect();
        self.induced_subgraph(&keep)
    }

    /// The subgraph induced on `keep`, with maps from old to new vertex and edge ids.
    pub fn induced_subgraph(&self, keep: &[bool]) -> (Multigraph, Vec<Option<usize>>, Vec<Option<usize>>) {
        let mut vmap = vec![None; self.n];
        let mut next = 0;
        for v in self.vertices() {
            if keep[v] {
                vmap[v] = Some(next);
                next += 1;
            }
        }
        let mut emap = vec![None; self.edges.len()];
        let mut edges = Vec::new();
        for (e, &(t, h)) in self.edges.iter().enumerate() {
            if let (Some(t2), Some(h2)) = (vmap[t], vmap[h]) {
                emap[e] = Some(edges.len());
                edges.push((t2, h2));
            }
        }
        (Multigraph::from_edges(next, &edges), vmap, emap)
    }

    /// `|E| - |V| + #components`, the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        let comps = connected_components(self, &EdgeSet::new(), &BTreeSet::new()).len();
        self.edge_count() + comps - self.n
    }
}

/// A set of edge ids with set semantics, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(BTreeSet<usize>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    pub fn all(g: &Multigraph) -> Self {
        g.edge_ids().collect()
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        mask.iter().enumerate().filter(|(_, &b)| b).map(|(e, _)| e).collect()
    }

    pub fn mask(&self, m: usize) -> Vec<bool> {
        let mut mask = vec![false; m];
        for &e in &self.0 {
            mask[e] = true;
        }
        mask
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.contains(&e)
    }

    pub fn insert(&mut self, e: usize) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: usize) -> bool {
        self.0.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    /// Complement within the edge ids of `g`.
    pub fn complement(&self, g: &Multigraph) -> EdgeSet {
        g.edge_ids().filter(|e| !self.contains(*e)).collect()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for EdgeSet {
    fn from(ids: [usize; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl fmt::Display for EdgeSet {
    /// 1-based, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| (e + 1).to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// A bipartition of the vertex set into two nonempty sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl VertexPartition {
    pub fn side_a_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.side_a {
            mask[v] = true;
        }
        mask
    }
}

/// A cycle as a cyclic sequence of `(vertex, edge)` steps: edge `i` leaves
/// vertex `i` towards vertex `i + 1` (wrapping around).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    steps: Vec<(usize, usize)>,
}

impl Cycle {
    /// Follows `edges` starting at `start`, checking that they close up into a cycle.
    pub fn from_edges(g: &Multigraph, start: usize, edges: &[usize]) -> Result<Self> {
        if edges.is_empty() {
            return precondition("a cycle needs at least one edge");
        }
        let mut steps = Vec::with_capacity(edges.len());
        let mut v = start;
        for &e in edges {
            let (t, h) = g.endpoints(e);
            if t != v && h != v {
                return precondition(format!("edge {} does not continue the walk at {}", e + 1, v + 1));
            }
            steps.push((v, e));
            v = g.other_end(e, v);
        }
        if v != start {
            return precondition("edge sequence does not close up");
        }
        let c = Cycle { steps };
        c.check(g)?;
        Ok(c)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<(usize, usize)>) -> Self {
        Cycle { steps }
    }

    /// Checks the cycle invariants against `g`.
    pub fn check(&self, g: &Multigraph) -> Result<()> {
        let k = self.steps.len();
        if k == 0 {
            return precondition("empty cycle");
        }
        let mut seen_e = BTreeSet::new();
        let mut seen_v = BTreeSet::new();
        for i in 0..k {
            let (v, e) = self.steps[i];
            let next = self.steps[(i + 1) % k].0;
            if e >= g.edge_count() || v >= g.vertex_count() {
                return precondition("cycle references unknown vertex or edge");
            }
            let (t, h) = g.endpoints(e);
            if !((t == v && h == next) || (h == v && t == next)) {
                return precondition(format!("edge {} does not join {} and {}", e + 1, v + 1, next + 1));
            }
            if !seen_e.insert(e) {
                return precondition(format!("edge {} repeated in cycle", e + 1));
            }
            if !seen_v.insert(v) {
                return precondition(format!("vertex {} repeated in cycle", v + 1));
            }
        }
        Ok(())
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().map(|&(_, e)| e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().map(|&(v, _)| v)
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// `+1` if the step traverses its edge from tail to head, `-1` otherwise.
    /// Loops count as forward.
    pub fn directions<'a>(&'a self, g: &'a Multigraph) -> impl Iterator<Item = (usize, bool)> + 'a {
        self.steps.iter().map(move |&(v, e)| (e, g.tail(e) == v))
    }
}

/// A path `v0 e1 v1 ... ep vp`; `p = 0` gives the trivial path at `v0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { vertices: vec![v], edges: Vec::new() }
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths have at least one vertex")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Same as `is_trivial`: a path always has a vertex.
    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Path { vertices, edges }
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    /// Checks the path invariants against `g`.
    pub fn check(&self, g: &Multigraph) -> Result<()> {
        if self.vertices.len() != self.edges.len() + 1 {
            return precondition("path needs one more vertex than edges");
        }
        let vs: BTreeSet<_> = self.vertices.iter().collect();
        let es: BTreeSet<_> = self.edges.iter().collect();
        if vs.len() != self.vertices.len() || es.len() != self.edges.len() {
            return precondition("path repeats a vertex or an edge");
        }
        for (i, &e) in self.edges.iter().enumerate() {
            let (t, h) = g.endpoints(e);
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            if !((t == a && h == b) || (t == b && h == a)) {
                return precondition(format!("edge {} does not join {} and {}", e + 1, a + 1, b + 1));
            }
        }
        Ok(())
    }
}
