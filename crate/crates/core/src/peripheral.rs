//! Peripheral paths and cycles in cubic graphs.
//!
//! An edge set is peripheral when deleting it leaves the graph connected.
//! The searches here all share one local-search engine: a path is improved
//! by exchange moves until the graph minus its edges is connected, and
//! every move must strictly increase a lexicographic objective (size of the
//! anchor's component, then the other component sizes in decreasing order,
//! then shortness). A move that fails to improve is reported as
//! [`Error::Internal`], since it would contradict the existence argument
//! the search follows.

use std::cmp::Reverse;
use std::collections::{BTreeMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{precondition, Error, Result};
use crate::graph::{
    bridges, edge_connectivity_at_least, enumerate_cycles, shortest_path, two_edge_connected_components,
    ComponentLabels, Cycle, EdgeSet, Multigraph, Path,
};

/// A path inside a component `H` of `G - X` together with one edge from
/// each end into `X`. A trivial path has both attachment edges at its
/// single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeripheralPath {
    pub path: Path,
    pub attach: (usize, usize),
}

/// Two peripheral paths sharing the end `apex` and leaving it by different
/// edges. Both paths start at `apex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForkedPaths {
    pub apex: usize,
    pub first: PeripheralPath,
    pub second: PeripheralPath,
}

/// Whether `g - s` is connected.
pub fn is_peripheral(g: &Multigraph, s: &EdgeSet) -> bool {
    g.vertex_count() <= 1 || ComponentLabels::compute(g, |e| !s.contains(e), |_| true).count == 1
}

pub(crate) fn require_cubic_3ec(g: &Multigraph) -> Result<()> {
    if !g.is_cubic() {
        return precondition("graph must be cubic");
    }
    if !edge_connectivity_at_least(g, 3) {
        return precondition("graph must be 3-edge-connected");
    }
    Ok(())
}

pub(crate) fn vertex_mask(g: &Multigraph, vertices: &[usize]) -> Result<Vec<bool>> {
    let mut mask = vec![false; g.vertex_count()];
    for &v in vertices {
        if v >= g.vertex_count() {
            return precondition(format!("vertex {} does not exist", v + 1));
        }
        mask[v] = true;
    }
    Ok(mask)
}

/// BFS from `from` to the nearest vertex accepted by `target`, never
/// entering a vertex rejected by `vertex_ok`.
fn bfs_to_any(
    g: &Multigraph,
    from: usize,
    target: impl Fn(usize) -> bool,
    edge_ok: impl Fn(usize) -> bool,
    vertex_ok: impl Fn(usize) -> bool,
) -> Option<Path> {
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &(e, w) in g.incident(v) {
            if seen[w] || !edge_ok(e) || !vertex_ok(w) {
                continue;
            }
            seen[w] = true;
            pred[w] = Some((v, e));
            if target(w) {
                let mut vertices = vec![w];
                let mut edges = Vec::new();
                let mut at = w;
                while let Some((p, e)) = pred[at] {
                    vertices.push(p);
                    edges.push(e);
                    at = p;
                }
                vertices.reverse();
                edges.reverse();
                return Some(Path { vertices, edges });
            }
            queue.push_back(w);
        }
    }
    None
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Score {
    anchor: usize,
    others: Vec<usize>,
    shortness: Reverse<usize>,
}

/// The local-search problem: a path starting at a fixed vertex, ending at a
/// terminal, scored by the components of `universe - removed - E(path)`.
struct Search<'a> {
    g: &'a Multigraph,
    universe: Vec<bool>,
    removed: Vec<bool>,
    path_vertex: Vec<bool>,
    path_edge: Vec<bool>,
    terminal: Vec<bool>,
    anchor: usize,
}

impl Search<'_> {
    fn on_path(&self, path: &Path) -> Vec<bool> {
        let mut mask = vec![false; self.g.edge_count()];
        for &e in &path.edges {
            mask[e] = true;
        }
        mask
    }

    fn components(&self, path: &Path) -> ComponentLabels {
        let on = self.on_path(path);
        ComponentLabels::compute(self.g, |e| !on[e] && !self.removed[e], |v| self.universe[v])
    }

    fn score(&self, path: &Path, labels: &ComponentLabels) -> Score {
        let sizes = labels.sizes();
        let anchor = labels.label[self.anchor].expect("anchor lies in the universe");
        let mut others: Vec<usize> = sizes.iter().enumerate().filter(|&(l, _)| l != anchor).map(|(_, &s)| s).collect();
        others.sort_unstable_by(|a, b| b.cmp(a));
        Score { anchor: sizes[anchor], others, shortness: Reverse(path.len()) }
    }

    /// Improves `path` until it is peripheral in the universe.
    fn run(&self, mut path: Path) -> Result<Path> {
        let mut labels = self.components(&path);
        let mut score = self.score(&path, &labels);
        loop {
            debug_assert!(path.check(self.g).is_ok());
            let next = match self.improve(&path, &labels)? {
                None => return Ok(path),
                Some(p) => p,
            };
            let next_labels = self.components(&next);
            let next_score = self.score(&next, &next_labels);
            if next_score <= score {
                return Err(Error::Internal("peripheral search move did not improve the objective".into()));
            }
            path = next;
            labels = next_labels;
            score = next_score;
        }
    }

    fn improve(&self, path: &Path, labels: &ComponentLabels) -> Result<Option<Path>> {
        let last = path.vertices.len() - 1;
        // an interior terminal: stop there
        if let Some(i) = (1..last).find(|&i| self.terminal[path.vertices[i]]) {
            return Ok(Some(Path { vertices: path.vertices[..=i].to_vec(), edges: path.edges[..i].to_vec() }));
        }
        if labels.count <= 1 {
            return Ok(None);
        }
        let anchor = labels.label[self.anchor];
        let sizes = labels.sizes();
        let smallest = (0..labels.count)
            .filter(|&l| Some(l) != anchor)
            .min_by_key(|&l| (sizes[l], l))
            .expect("at least two components");
        let in_small = |v: usize| labels.label[v] == Some(smallest);
        let hits: Vec<usize> = (0..=last).filter(|&i| in_small(path.vertices[i])).collect();
        let (Some(&i), Some(&j)) = (hits.first(), hits.last()) else {
            return Err(Error::Internal("a component off the path does not meet it".into()));
        };
        let on = self.on_path(path);
        let inside = |v: usize| in_small(v) && self.path_vertex[v];
        let edge_ok = |e: usize| !on[e] && !self.removed[e] && self.path_edge[e];
        if (i..=j).any(|k| !in_small(path.vertices[k])) {
            // reroute the covering subpath through the small component
            let detour = shortest_path(self.g, path.vertices[i], path.vertices[j], edge_ok, inside)
                .ok_or_else(|| Error::Internal("no detour inside a component".into()))?;
            let mut vertices = path.vertices[..i].to_vec();
            vertices.extend(&detour.vertices);
            vertices.extend(&path.vertices[j + 1..]);
            let mut edges = path.edges[..i].to_vec();
            edges.extend(&detour.edges);
            edges.extend(&path.edges[j..]);
            return Ok(Some(Path { vertices, edges }));
        }
        if i == 0 || j == last {
            return Err(Error::Internal("component attached to a path end by one edge".into()));
        }
        let w = (0..self.g.vertex_count())
            .find(|&v| inside(v) && self.terminal[v])
            .ok_or_else(|| Error::Internal("component without terminals hangs off the path".into()))?;
        let tail = shortest_path(self.g, path.vertices[i], w, edge_ok, inside)
            .ok_or_else(|| Error::Internal("terminal unreachable inside its component".into()))?;
        let mut vertices = path.vertices[..i].to_vec();
        vertices.extend(&tail.vertices);
        let mut edges = path.edges[..i].to_vec();
        edges.extend(&tail.edges);
        Ok(Some(Path { vertices, edges }))
    }
}

/// Shared setup of the path lemmas: `H` is the component of `G - X`
/// reached by `f`, `z` the end of `f` in `H`.
struct Region {
    in_x: Vec<bool>,
    in_h: Vec<bool>,
    f: usize,
    z: usize,
}

impl Region {
    fn new(g: &Multigraph, in_x: Vec<bool>, f: usize) -> Result<Self> {
        if f >= g.edge_count() {
            return precondition(format!("edge {} does not exist", f + 1));
        }
        if !in_x.contains(&true) || !in_x.contains(&false) {
            return precondition("vertex set must be nonempty and proper");
        }
        let (t, h) = g.endpoints(f);
        let z = match (in_x[t], in_x[h]) {
            (true, false) => h,
            (false, true) => t,
            _ => return precondition(format!("edge {} must have exactly one end in the vertex set", f + 1)),
        };
        let labels = ComponentLabels::compute(g, |_| true, |v| !in_x[v]);
        let in_h = labels.label.iter().map(|&l| l.is_some() && l == labels.label[z]).collect();
        Ok(Region { in_x, in_h, f, z })
    }

    fn size(&self) -> usize {
        self.in_h.iter().filter(|&&b| b).count()
    }

    /// Edges from `v` into `X` other than `f`.
    fn attachments(&self, g: &Multigraph, v: usize) -> Vec<usize> {
        g.incident(v).iter().filter(|&&(e, w)| e != self.f && self.in_x[w]).map(|&(e, _)| e).collect()
    }

    fn is_bridgeless(&self, g: &Multigraph) -> bool {
        bridges(g, |_| true, |v| self.in_h[v]).is_empty()
    }

    /// The 2-edge-connected leaf pieces of `H` away from `z`, as
    /// `(vertices, bridge)`, ordered by smallest vertex.
    fn leaves(&self, g: &Multigraph) -> Vec<(Vec<usize>, usize)> {
        let in_h = &self.in_h;
        let cut = bridges(g, |_| true, |v| in_h[v]);
        let pieces = two_edge_connected_components(g, |_| true, |v| in_h[v]);
        let mut out = Vec::new();
        for (l, group) in pieces.groups().into_iter().enumerate() {
            if pieces.label[self.z] == Some(l) {
                continue;
            }
            let touching: Vec<usize> = cut
                .iter()
                .copied()
                .filter(|&b| {
                    let (s, t) = g.endpoints(b);
                    (pieces.label[s] == Some(l)) != (pieces.label[t] == Some(l))
                })
                .collect();
            if touching.len() == 1 {
                out.push((group, touching[0]));
            }
        }
        out
    }

    /// Restricts to the leaf `piece` hanging off `bridge`, moving the rest of
    /// `H` into `X`.
    fn descend(&self, g: &Multigraph, piece: &[usize], bridge: usize) -> Region {
        let mut in_leaf = vec![false; g.vertex_count()];
        for &v in piece {
            in_leaf[v] = true;
        }
        let in_x = (0..g.vertex_count()).map(|v| self.in_x[v] || (self.in_h[v] && !in_leaf[v])).collect();
        let (s, t) = g.endpoints(bridge);
        let z = if in_leaf[s] { s } else { t };
        Region { in_x, in_h: in_leaf, f: bridge, z }
    }

    fn peripheral_in_h(&self, g: &Multigraph, edges: &EdgeSet) -> bool {
        ComponentLabels::compute(g, |e| !edges.contains(e), |v| self.in_h[v]).count == 1
    }
}

/// Path lemma core for a 2-edge-connected nontrivial `H`: a peripheral path
/// from `start` to another vertex attached to `X`.
fn bridgeless_path(g: &Multigraph, region: &Region, start: Option<usize>) -> Result<PeripheralPath> {
    let n = g.vertex_count();
    let terminal: Vec<bool> =
        (0..n).map(|v| region.in_h[v] && v != region.z && !region.attachments(g, v).is_empty()).collect();
    let y0 = match start {
        Some(y) if y < n && terminal[y] => y,
        Some(y) => return precondition(format!("vertex {} is not attached to the vertex set", y + 1)),
        None => terminal.iter().position(|&b| b).ok_or_else(|| Error::Internal("no attached vertex".into()))?,
    };
    let path_vertex: Vec<bool> = (0..n).map(|v| region.in_h[v] && v != region.z).collect();
    let initial = bfs_to_any(g, y0, |v| terminal[v] && v != y0, |_| true, |v| path_vertex[v])
        .ok_or_else(|| Error::Internal("no second attached vertex".into()))?;
    let search = Search {
        g,
        universe: region.in_h.clone(),
        removed: vec![false; g.edge_count()],
        path_vertex,
        path_edge: vec![true; g.edge_count()],
        terminal,
        anchor: region.z,
    };
    let path = search.run(initial)?;
    let e0 = region.attachments(g, path.start())[0];
    let e1 = region.attachments(g, path.end())[0];
    Ok(PeripheralPath { path, attach: (e0, e1) })
}

fn path_lemma(g: &Multigraph, region: &Region, start: Option<usize>) -> Result<PeripheralPath> {
    if region.size() == 1 {
        if start.is_some_and(|y| y != region.z) {
            return precondition("prescribed start lies outside the component");
        }
        let ends = region.attachments(g, region.z);
        let [e0, e1] = ends[..] else {
            return Err(Error::Internal("isolated vertex without two attachments".into()));
        };
        return Ok(PeripheralPath { path: Path::trivial(region.z), attach: (e0, e1) });
    }
    if region.is_bridgeless(g) {
        return bridgeless_path(g, region, start);
    }
    if start.is_some() {
        return precondition("a prescribed start needs a 2-edge-connected component");
    }
    let leaves = region.leaves(g);
    if let Some((piece, _)) = leaves.iter().find(|(p, _)| p.len() == 1) {
        let y = piece[0];
        let ends = region.attachments(g, y);
        if let [e0, e1] = ends[..] {
            return Ok(PeripheralPath { path: Path::trivial(y), attach: (e0, e1) });
        }
    }
    let (piece, bridge) = leaves.first().ok_or_else(|| Error::Internal("bridge tree without a leaf".into()))?;
    let inner = region.descend(g, piece, *bridge);
    bridgeless_path(g, &inner, None)
}

/// A path in the component `H` of `G - X` reached by `f`, peripheral in
/// `H`, whose ends have distinct edges into `X` other than `f` and whose
/// interior has no neighbour in `X`. With `start`, the path begins there
/// (requires `H` 2-edge-connected and `start` attached to `X` by an edge
/// other than `f`).
pub fn peripheral_path(g: &Multigraph, x: &[usize], f: usize, start: Option<usize>) -> Result<PeripheralPath> {
    require_cubic_3ec(g)?;
    let region = Region::new(g, vertex_mask(g, x)?, f)?;
    path_lemma(g, &region, start)
}

pub(crate) fn peripheral_path_unchecked(g: &Multigraph, in_x: &[bool], f: usize) -> Result<PeripheralPath> {
    let region = Region::new(g, in_x.to_vec(), f)?;
    path_lemma(g, &region, None)
}

/// A peripheral cycle through the two edges `e0`, `e1` at `v`.
pub fn peripheral_cycle_through(g: &Multigraph, v: usize, e0: usize, e1: usize) -> Result<Cycle> {
    require_cubic_3ec(g)?;
    peripheral_cycle_through_unchecked(g, v, e0, e1)
}

pub(crate) fn peripheral_cycle_through_unchecked(g: &Multigraph, v: usize, e0: usize, e1: usize) -> Result<Cycle> {
    if v >= g.vertex_count() || e0 >= g.edge_count() || e1 >= g.edge_count() {
        return precondition("unknown vertex or edge");
    }
    if e0 == e1 {
        return precondition("the two edges must be distinct");
    }
    let at_v: Vec<usize> = g.incident(v).iter().map(|&(e, _)| e).collect();
    if !at_v.contains(&e0) || !at_v.contains(&e1) {
        return precondition(format!("both edges must be incident with vertex {}", v + 1));
    }
    let f = at_v.iter().copied().find(|&e| e != e0 && e != e1).expect("cubic vertex has a third edge");
    let mut in_x = vec![false; g.vertex_count()];
    in_x[v] = true;
    let pp = peripheral_path_unchecked(g, &in_x, f)?;
    let mut path = pp.path;
    if pp.attach.0 != e0 {
        path = path.reversed();
    }
    let mut edges = vec![e0];
    edges.extend(&path.edges);
    edges.push(e1);
    Cycle::from_edges(g, v, &edges)
}

/// Checks a prospective "good" path of the fork lemma.
fn is_good(g: &Multigraph, region: &Region, terminal: &[bool], path: &Path) -> bool {
    let last = path.vertices.len() - 1;
    last > 0
        && path.vertices.iter().all(|&v| region.in_h[v] && v != region.z)
        && terminal[path.start()]
        && terminal[path.end()]
        && (1..last).all(|i| !terminal[path.vertices[i]])
        && region.peripheral_in_h(g, &path.edge_set())
}

/// Good paths keyed by their start, each stored starting there.
type Pool = BTreeMap<usize, Vec<Path>>;

fn add_both_ways(pool: &mut Pool, path: Path) {
    let rev = path.reversed();
    for p in [path, rev] {
        let list = pool.entry(p.start()).or_default();
        if !list.contains(&p) {
            list.push(p);
        }
    }
}

/// A start with two good paths leaving by different edges, preferring
/// pairs whose other ends differ.
fn pick_fork(pool: &Pool) -> Option<(usize, Path, Path)> {
    for distinct_ends in [true, false] {
        for (&y, paths) in pool {
            for (a, p) in paths.iter().enumerate() {
                for q in &paths[a + 1..] {
                    if p.edges[0] != q.edges[0] && (!distinct_ends || p.end() != q.end()) {
                        return Some((y, p.clone(), q.clone()));
                    }
                }
            }
        }
    }
    None
}

const EXHAUSTIVE_LIMIT: usize = 30;
const EXHAUSTIVE_BUDGET: usize = 200_000;

fn exhaustive_good_paths(g: &Multigraph, region: &Region, terminal: &[bool]) -> Pool {
    struct Dfs<'a> {
        g: &'a Multigraph,
        region: &'a Region,
        terminal: &'a [bool],
        on: Vec<bool>,
        path: Path,
        pool: Pool,
        budget: usize,
    }
    impl Dfs<'_> {
        fn go(&mut self, v: usize) {
            for &(e, w) in self.g.incident(v) {
                if self.budget == 0 {
                    return;
                }
                self.budget -= 1;
                if self.on[w] || !self.region.in_h[w] || w == self.region.z {
                    continue;
                }
                self.path.vertices.push(w);
                self.path.edges.push(e);
                if self.terminal[w] {
                    if is_good(self.g, self.region, self.terminal, &self.path) {
                        add_both_ways(&mut self.pool, self.path.clone());
                    }
                } else {
                    self.on[w] = true;
                    self.go(w);
                    self.on[w] = false;
                }
                self.path.vertices.pop();
                self.path.edges.pop();
            }
        }
    }
    let mut dfs = Dfs {
        g,
        region,
        terminal,
        on: vec![false; g.vertex_count()],
        path: Path::trivial(0),
        pool: Pool::new(),
        budget: EXHAUSTIVE_BUDGET,
    };
    for y in (0..g.vertex_count()).filter(|&v| terminal[v]) {
        dfs.on[y] = true;
        dfs.path = Path::trivial(y);
        dfs.go(y);
        dfs.on[y] = false;
    }
    dfs.pool
}

/// The second half of the fork argument: with the known good path at `y`
/// leaving by `s_y`, run the search from `y` in `H - E(Q')` for a path
/// `Q'` from `z` to `y` ending in `s_y`.
fn fork_by_claim(
    g: &Multigraph,
    region: &Region,
    terminal: &[bool],
    pool: &Pool,
) -> Result<Option<(usize, Path, Path)>> {
    let n = g.vertex_count();
    for (&y, paths) in pool {
        let known = &paths[0];
        let s_y = known.edges[0];
        let Some(&(o_y, w)) = g.incident(y).iter().find(|&&(e, w)| e != s_y && region.in_h[w]) else {
            continue;
        };
        if w == region.z {
            continue;
        }
        let u = g.other_end(s_y, y);
        let attempts = [true, false];
        for q_first in attempts {
            let (q_prime, initial) = if q_first {
                let Some(q) = to_apex(g, region, u, y, s_y, |_| true) else { continue };
                let q_edges = q.edge_set();
                let Some(tail) = tail_from(g, region, terminal, y, o_y, w, |e| !q_edges.contains(e)) else {
                    continue;
                };
                (q, tail)
            } else {
                let Some(tail) = tail_from(g, region, terminal, y, o_y, w, |_| true) else { continue };
                let on_tail: Vec<bool> = (0..n).map(|v| tail.vertices.contains(&v) && v != y).collect();
                let Some(q) = to_apex(g, region, u, y, s_y, |v| !on_tail[v]) else { continue };
                (q, tail)
            };
            let q_edges = q_prime.edge_set();
            let search = Search {
                g,
                universe: region.in_h.clone(),
                removed: vec![false; g.edge_count()],
                path_vertex: (0..n).map(|v| region.in_h[v] && v != region.z).collect(),
                path_edge: (0..g.edge_count()).map(|e| !q_edges.contains(e)).collect(),
                terminal: terminal.to_vec(),
                anchor: region.z,
            };
            let found = search.run(initial)?;
            if is_good(g, region, terminal, &found) && found.edges[0] != s_y {
                return Ok(Some((y, known.clone(), found)));
            }
        }
    }
    Ok(None)
}

/// A path from `z` to `y` whose last edge is `s_y` (entering from `u`).
fn to_apex(
    g: &Multigraph,
    region: &Region,
    u: usize,
    y: usize,
    s_y: usize,
    vertex_ok: impl Fn(usize) -> bool,
) -> Option<Path> {
    let mut q =
        shortest_path(g, region.z, u, |_| true, |v| region.in_h[v] && v != y && (v == region.z || vertex_ok(v)))?;
    q.vertices.push(y);
    q.edges.push(s_y);
    Some(q)
}

/// `y o_y w ...` ending at another terminal, avoiding `z` and `y`.
fn tail_from(
    g: &Multigraph,
    region: &Region,
    terminal: &[bool],
    y: usize,
    o_y: usize,
    w: usize,
    edge_ok: impl Fn(usize) -> bool,
) -> Option<Path> {
    let rest = if terminal[w] {
        Path::trivial(w)
    } else {
        bfs_to_any(g, w, |v| terminal[v] && v != y, edge_ok, |v| region.in_h[v] && v != region.z && v != y)?
    };
    let mut vertices = vec![y];
    vertices.extend(&rest.vertices);
    let mut edges = vec![o_y];
    edges.extend(&rest.edges);
    Some(Path { vertices, edges })
}

fn fork_lemma(g: &Multigraph, in_x: &[bool], f: usize) -> Result<ForkedPaths> {
    if in_x.iter().filter(|&&b| b).count() < 2 {
        return precondition("vertex set needs at least two vertices");
    }
    let outer = Region::new(g, in_x.to_vec(), f)?;
    for v in (0..g.vertex_count()).filter(|&v| outer.in_h[v]) {
        if outer.attachments(g, v).len() > 1 {
            return precondition(format!("vertex {} has two edges into the vertex set besides f", v + 1));
        }
    }
    let region = if outer.is_bridgeless(g) {
        outer
    } else {
        let leaves = outer.leaves(g);
        let (piece, bridge) = leaves.first().ok_or_else(|| Error::Internal("bridge tree without a leaf".into()))?;
        outer.descend(g, piece, *bridge)
    };
    if region.size() < 2 {
        return Err(Error::NotFound("component too small for two paths".into()));
    }
    let n = g.vertex_count();
    let terminal: Vec<bool> =
        (0..n).map(|v| region.in_h[v] && v != region.z && g.incident(v).iter().any(|&(_, w)| region.in_x[w])).collect();
    let mut pool = Pool::new();
    for y in (0..n).filter(|&v| terminal[v]) {
        let pp = bridgeless_path(g, &region, Some(y))?;
        add_both_ways(&mut pool, pp.path);
    }
    let mut fork = pick_fork(&pool);
    if fork.is_none() && region.size() <= EXHAUSTIVE_LIMIT {
        fork = pick_fork(&exhaustive_good_paths(g, &region, &terminal));
    }
    if fork.is_none() {
        fork = fork_by_claim(g, &region, &terminal, &pool)?;
    }
    let (apex, p1, p2) = fork.ok_or_else(|| Error::NotFound("no vertex with two good paths".into()))?;
    let attach = |p: Path| {
        let e0 = region.attachments(g, p.start())[0];
        let e1 = region.attachments(g, p.end())[0];
        PeripheralPath { path: p, attach: (e0, e1) }
    };
    Ok(ForkedPaths { apex, first: attach(p1), second: attach(p2) })
}

/// Two peripheral paths in the component `H` of `G - X` reached by `f`,
/// sharing one end and leaving it by different edges. Requires `g`
/// cyclically 4-edge-connected, `|X| >= 2` and every vertex of `H` joined
/// to `X` by at most one edge other than `f`.
pub fn two_peripheral_paths(g: &Multigraph, x: &[usize], f: usize) -> Result<ForkedPaths> {
    require_cubic_3ec(g)?;
    if crate::graph::find_nontrivial_3_cut(g)?.is_some() {
        return precondition("graph must be cyclically 4-edge-connected");
    }
    fork_lemma(g, &vertex_mask(g, x)?, f)
}

pub(crate) fn two_peripheral_paths_unchecked(g: &Multigraph, in_x: &[bool], f: usize) -> Result<ForkedPaths> {
    fork_lemma(g, in_x, f)
}

/// Closes the peripheral path `p` of the component `H` of `G - X` into a
/// peripheral cycle of `g` meeting `H` exactly in `p`. Requires `G[X]`
/// connected and `p` nontrivial.
pub fn close_path_to_peripheral_cycle(g: &Multigraph, x: &[usize], p: &PeripheralPath) -> Result<Cycle> {
    require_cubic_3ec(g)?;
    let in_x = vertex_mask(g, x)?;
    if x.is_empty() || ComponentLabels::compute(g, |_| true, |v| in_x[v]).count != 1 {
        return precondition("vertex set must induce a connected subgraph");
    }
    p.path.check(g)?;
    if p.path.is_trivial() {
        return precondition("path must be nontrivial");
    }
    let start = p.path.start();
    if in_x[start] {
        return precondition("path must lie outside the vertex set");
    }
    let labels = ComponentLabels::compute(g, |_| true, |v| !in_x[v]);
    let in_h: Vec<bool> = labels.label.iter().map(|&l| l.is_some() && l == labels.label[start]).collect();
    if !p.path.vertices.iter().all(|&v| in_h[v]) {
        return precondition("path must lie in one component outside the vertex set");
    }
    let (e0, e1) = p.attach;
    let joins = |e: usize, v: usize| {
        e < g.edge_count() && !g.is_loop(e) && (g.tail(e) == v || g.head(e) == v) && in_x[g.other_end(e, v)]
    };
    if e0 == e1 || !joins(e0, start) || !joins(e1, p.path.end()) {
        return precondition("attachment edges must join the path ends to the vertex set");
    }
    let last = p.path.vertices.len() - 1;
    if (1..last).any(|i| g.incident(p.path.vertices[i]).iter().any(|&(_, w)| in_x[w])) {
        return precondition("interior path vertices must not neighbour the vertex set");
    }
    let on_p = p.path.edge_set();
    if ComponentLabels::compute(g, |e| !on_p.contains(e), |v| in_h[v]).count != 1 {
        return precondition("path must be peripheral in its component");
    }
    let x1 = g.other_end(e0, start);
    let x2 = g.other_end(e1, p.path.end());
    let outside_h: Vec<bool> = in_h.iter().map(|&b| !b).collect();
    let initial = shortest_path(g, x1, x2, |_| true, |v| outside_h[v])
        .ok_or_else(|| Error::Internal("vertex set is not connected".into()))?;
    let q = if initial.is_trivial() {
        initial
    } else {
        let mut terminal = vec![false; g.vertex_count()];
        terminal[x2] = true;
        // scored with the path and its attachments already deleted, so that
        // the final state is exactly `G - E(C)` connected
        let mut removed = vec![false; g.edge_count()];
        for e in p.path.edges.iter().chain([&e0, &e1]) {
            removed[*e] = true;
        }
        let search = Search {
            g,
            universe: vec![true; g.vertex_count()],
            removed,
            path_vertex: outside_h,
            path_edge: vec![true; g.edge_count()],
            terminal,
            anchor: start,
        };
        search.run(initial)?
    };
    let mut edges = vec![e0];
    edges.extend(&p.path.edges);
    edges.push(e1);
    edges.extend(q.edges.iter().rev());
    let cycle = Cycle::from_edges(g, x1, &edges)?;
    if !is_peripheral(g, &cycle.edge_set()) {
        return Err(Error::Internal("closed cycle is not peripheral".into()));
    }
    Ok(cycle)
}

/// The longest peripheral cycle found, and whether every cycle of `g` was
/// examined. Beyond `budget` cycles the search falls back to Tutte cycles
/// at every vertex plus closures of paths around random connected sets.
pub fn longest_peripheral_cycle(g: &Multigraph, budget: usize) -> Result<(Cycle, bool)> {
    require_cubic_3ec(g)?;
    let mut best: Option<Cycle> = None;
    let mut consider = |c: &Cycle| {
        if best.as_ref().is_none_or(|b| c.len() > b.len()) && is_peripheral(g, &c.edge_set()) {
            best = Some(c.clone());
        }
    };
    let (_, exhaustive) = enumerate_cycles(g, budget, &mut consider);
    if exhaustive {
        return best.map(|c| (c, true)).ok_or_else(|| Error::Internal("no peripheral cycle".into()));
    }
    for v in g.vertices() {
        let at: Vec<usize> = g.incident(v).iter().map(|&(e, _)| e).collect();
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            consider(&peripheral_cycle_through_unchecked(g, v, at[a], at[b])?);
        }
    }
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..4 * n {
        let root = rng.gen_range(0..n);
        let size = rng.gen_range(1..n);
        let mut in_x = vec![false; n];
        let mut order = vec![root];
        in_x[root] = true;
        let mut k = 0;
        while order.len() < size && k < order.len() {
            for &(_, w) in g.incident(order[k]) {
                if !in_x[w] && order.len() < size {
                    in_x[w] = true;
                    order.push(w);
                }
            }
            k += 1;
        }
        let cut: Vec<usize> = g.cut_edges(&in_x);
        let Some(&f) = cut.get(rng.gen_range(0..cut.len().max(1))) else { continue };
        let pp = peripheral_path_unchecked(g, &in_x, f)?;
        if !pp.path.is_trivial() {
            consider(&close_path_to_peripheral_cycle(g, &order, &pp)?);
        }
    }
    best.map(|c| (c, false)).ok_or_else(|| Error::Internal("no peripheral cycle".into()))
}
