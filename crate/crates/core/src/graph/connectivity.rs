use std::collections::{BTreeSet, VecDeque};

use super::{EdgeSet, Multigraph, VertexPartition};
use crate::error::{precondition, Result};

/// Component label per vertex (`None` for removed vertices).
#[derive(Clone, Debug)]
pub struct ComponentLabels {
    pub label: Vec<Option<usize>>,
    pub count: usize,
}

impl ComponentLabels {
    /// Labels components in order of their smallest vertex.
    pub fn compute(g: &Multigraph, edge_alive: impl Fn(usize) -> bool, vertex_alive: impl Fn(usize) -> bool) -> Self {
        let mut label = vec![None; g.vertex_count()];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in g.vertices() {
            if label[s].is_some() || !vertex_alive(s) {
                continue;
            }
            label[s] = Some(count);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &(e, w) in g.incident(v) {
                    if label[w].is_none() && vertex_alive(w) && edge_alive(e) {
                        label[w] = Some(count);
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        ComponentLabels { label, count }
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for l in self.label.iter().flatten() {
            sizes[*l] += 1;
        }
        sizes
    }

    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.count];
        for (v, l) in self.label.iter().enumerate() {
            if let Some(l) = l {
                groups[*l].push(v);
            }
        }
        groups
    }
}

/// Components of `g` after deleting `deleted` edges and `removed` vertices,
/// ignoring orientation. Each component is sorted; components are ordered by
/// their smallest vertex.
pub fn connected_components(g: &Multigraph, deleted: &EdgeSet, removed: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let dead = deleted.mask(g.edge_count());
    ComponentLabels::compute(g, |e| !dead[e], |v| !removed.contains(&v)).groups()
}

pub fn is_connected(g: &Multigraph) -> bool {
    g.vertex_count() <= 1 || ComponentLabels::compute(g, |_| true, |_| true).count == 1
}

/// Whether `g` stays connected after deleting the edges marked in `removed`.
pub fn is_connected_without(g: &Multigraph, removed: &[bool]) -> bool {
    g.vertex_count() <= 1 || ComponentLabels::compute(g, |e| !removed[e], |_| true).count == 1
}

/// Number of edge-disjoint `s`-`t` paths, stopping once `limit` is reached.
fn edge_disjoint_paths(g: &Multigraph, s: usize, t: usize, limit: usize) -> usize {
    // flow[e] in {-1, 0, 1}; positive means tail -> head
    let mut flow = vec![0i8; g.edge_count()];
    let mut found = 0;
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    while found < limit {
        pred.iter_mut().for_each(|p| *p = None);
        let mut visited = vec![false; g.vertex_count()];
        visited[s] = true;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            for &(e, w) in g.incident(v) {
                if visited[w] || g.is_loop(e) {
                    continue;
                }
                let residual = if g.tail(e) == v { 1 - flow[e] } else { 1 + flow[e] };
                if residual > 0 {
                    visited[w] = true;
                    pred[w] = Some((v, e));
                    if w == t {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if !visited[t] {
            break;
        }
        let mut w = t;
        while let Some((v, e)) = pred[w] {
            if g.tail(e) == v {
                flow[e] += 1;
            } else {
                flow[e] -= 1;
            }
            w = v;
        }
        found += 1;
    }
    found
}

/// Whether every cut separating two nonempty vertex sides has at least `k`
/// edges. Disconnected graphs with two or more vertices report false.
pub fn edge_connectivity_at_least(g: &Multigraph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= 1 || k == 0 {
        return true;
    }
    for v in g.vertices() {
        let proper = g.incident(v).iter().filter(|&&(e, _)| !g.is_loop(e)).count();
        if proper < k {
            return false;
        }
    }
    (1..n).all(|t| edge_disjoint_paths(g, 0, t, k) >= k)
}

/// Bridges of the subgraph of live edges and vertices, in increasing id order.
pub fn bridges(g: &Multigraph, edge_alive: impl Fn(usize) -> bool, vertex_alive: impl Fn(usize) -> bool) -> Vec<usize> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out = Vec::new();
    for root in g.vertices() {
        if disc[root] != usize::MAX || !vertex_alive(root) {
            continue;
        }
        // (vertex, edge used to enter, next incidence index)
        let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, parent_edge, idx) = stack[top];
            if idx < g.incident(v).len() {
                let (e, w) = g.incident(v)[idx];
                stack[top].2 += 1;
                if Some(e) == parent_edge || !edge_alive(e) || !vertex_alive(w) || w == v {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(e);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Labels the 2-edge-connected components of the live subgraph.
pub fn two_edge_connected_components(
    g: &Multigraph,
    edge_alive: impl Fn(usize) -> bool + Copy,
    vertex_alive: impl Fn(usize) -> bool + Copy,
) -> ComponentLabels {
    let b: BTreeSet<usize> = bridges(g, edge_alive, vertex_alive).into_iter().collect();
    ComponentLabels::compute(g, |e| edge_alive(e) && !b.contains(&e), vertex_alive)
}

/// A 3-edge cut with at least two vertices on each side, or `None` when `g`
/// is cyclically 4-edge-connected. Edge triples are scanned in
/// lexicographic order.
pub fn find_nontrivial_3_cut(g: &Multigraph) -> Result<Option<VertexPartition>> {
    if !g.is_cubic() || !edge_connectivity_at_least(g, 3) {
        return precondition("graph must be cubic and 3-edge-connected");
    }
    let m = g.edge_count();
    let mut removed = vec![false; m];
    for a in 0..m {
        if g.is_loop(a) {
            continue;
        }
        removed[a] = true;
        for b in a + 1..m {
            if g.is_loop(b) {
                continue;
            }
            removed[b] = true;
            for c in b + 1..m {
                if g.is_loop(c) {
                    continue;
                }
                removed[c] = true;
                let labels = ComponentLabels::compute(g, |e| !removed[e], |_| true);
                removed[c] = false;
                if labels.count == 2 {
                    let groups = labels.groups();
                    if groups[0].len() >= 2 && groups[1].len() >= 2 {
                        let mut it = groups.into_iter();
                        return Ok(Some(VertexPartition { side_a: it.next().unwrap(), side_b: it.next().unwrap() }));
                    }
                }
            }
            removed[b] = false;
        }
        removed[a] = false;
    }
    Ok(None)
}
