use std::collections::VecDeque;

use super::{ComponentLabels, Cycle, EdgeSet, Multigraph, Path};
use crate::error::{precondition, Error, Result};

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Greedy spanning forest of the allowed edges, lowest edge id first.
pub fn spanning_forest(g: &Multigraph, allowed: &[bool]) -> Vec<usize> {
    let mut uf = UnionFind::new(g.vertex_count());
    g.edge_ids()
        .filter(|&e| allowed[e] && !g.is_loop(e))
        .filter(|&e| {
            let (t, h) = g.endpoints(e);
            uf.union(t, h)
        })
        .collect()
}

/// A spanning tree using only `allowed` edges, chosen greedily by edge id.
pub fn spanning_tree(g: &Multigraph, allowed: &EdgeSet) -> Result<EdgeSet> {
    let forest = spanning_forest(g, &allowed.mask(g.edge_count()));
    if forest.len() + 1 != g.vertex_count().max(1) {
        return Err(Error::Disconnected);
    }
    Ok(forest.into_iter().collect())
}

/// `|S| - |V| + #components of (V, S)`.
pub fn cycle_space_dimension(g: &Multigraph, s: &EdgeSet) -> usize {
    let mask = s.mask(g.edge_count());
    let comps = ComponentLabels::compute(g, |e| mask[e], |_| true).count;
    s.len() + comps - g.vertex_count()
}

/// BFS path from `from` to `to` through live edges and vertices, exploring
/// incidences in edge-id order.
pub fn shortest_path(
    g: &Multigraph,
    from: usize,
    to: usize,
    edge_alive: impl Fn(usize) -> bool,
    vertex_alive: impl Fn(usize) -> bool,
) -> Option<Path> {
    let n = g.vertex_count();
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(e, w) in g.incident(v) {
            if !seen[w] && edge_alive(e) && vertex_alive(w) {
                seen[w] = true;
                pred[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut vertices = vec![to];
    let mut edges = Vec::new();
    let mut w = to;
    while let Some((v, e)) = pred[w] {
        vertices.push(v);
        edges.push(e);
        w = v;
    }
    vertices.reverse();
    edges.reverse();
    Some(Path { vertices, edges })
}

/// The unique cycle in `tree + e`, starting at the tail of `e`.
pub fn fundamental_cycle(g: &Multigraph, tree: &EdgeSet, e: usize) -> Result<Cycle> {
    if e >= g.edge_count() || tree.contains(e) {
        return precondition(format!("edge {} must be a non-tree edge", e + 1));
    }
    if tree.len() + 1 != g.vertex_count() {
        return precondition("tree does not have |V| - 1 edges");
    }
    let (t, h) = g.endpoints(e);
    if t == h {
        return Ok(Cycle::from_steps_unchecked(vec![(t, e)]));
    }
    let mask = tree.mask(g.edge_count());
    let path = shortest_path(g, h, t, |x| mask[x], |_| true)
        .ok_or_else(|| Error::PreconditionViolated("tree is not spanning".into()))?;
    let mut steps = vec![(t, e)];
    steps.extend(path.vertices.iter().zip(&path.edges).map(|(&v, &x)| (v, x)));
    Ok(Cycle::from_steps_unchecked(steps))
}

/// Splits an even edge set into edge-disjoint cycles by repeated walk
/// following; always leaves a vertex by its lowest unused edge.
pub fn decompose_even_set(g: &Multigraph, s: &EdgeSet) -> Result<Vec<Cycle>> {
    let mask = s.mask(g.edge_count());
    let mut residual = vec![0usize; g.vertex_count()];
    for e in s.iter() {
        let (t, h) = g.endpoints(e);
        residual[t] += 1;
        residual[h] += 1;
    }
    if let Some(v) = residual.iter().position(|d| d % 2 == 1) {
        return Err(Error::OddDegree { vertex: v });
    }
    let mut used = vec![false; g.edge_count()];
    let mut cursor = vec![0usize; g.vertex_count()];
    let mut pos: Vec<Option<usize>> = vec![None; g.vertex_count()];
    let mut cycles = Vec::new();

    let next_edge = |v: usize, used: &mut Vec<bool>, cursor: &mut Vec<usize>| -> Option<usize> {
        let inc = g.incident(v);
        while cursor[v] < inc.len() {
            let e = inc[cursor[v]].0;
            if mask[e] && !used[e] {
                used[e] = true;
                return Some(e);
            }
            cursor[v] += 1;
        }
        None
    };

    for start in g.vertices() {
        let mut walk_v = vec![start];
        let mut walk_e: Vec<usize> = Vec::new();
        pos[start] = Some(0);
        let mut v = start;
        while let Some(e) = next_edge(v, &mut used, &mut cursor) {
            let w = g.other_end(e, v);
            if w == v {
                cycles.push(Cycle::from_steps_unchecked(vec![(v, e)]));
                continue;
            }
            walk_e.push(e);
            if let Some(i) = pos[w] {
                let steps: Vec<(usize, usize)> = walk_v[i..].iter().copied().zip(walk_e[i..].iter().copied()).collect();
                cycles.push(Cycle::from_steps_unchecked(steps));
                for &u in &walk_v[i + 1..] {
                    pos[u] = None;
                }
                walk_v.truncate(i + 1);
                walk_e.truncate(i);
            } else {
                pos[w] = Some(walk_v.len());
                walk_v.push(w);
            }
            v = w;
        }
        debug_assert!(walk_e.is_empty(), "even-degree walk got stuck away from its start");
        for &u in &walk_v {
            pos[u] = None;
        }
    }
    Ok(cycles)
}

/// Enumerates every cycle of `g` once, calling `visit` on each. Stops after
/// `budget` cycles. Returns `(count, exhaustive)`.
pub fn enumerate_cycles(g: &Multigraph, budget: usize, mut visit: impl FnMut(&Cycle)) -> (usize, bool) {
    struct Dfs<'a, F: FnMut(&Cycle)> {
        g: &'a Multigraph,
        start: usize,
        on_path: Vec<bool>,
        steps: Vec<(usize, usize)>,
        count: usize,
        budget: usize,
        visit: F,
    }

    impl<F: FnMut(&Cycle)> Dfs<'_, F> {
        // returns false once the budget is exhausted
        fn extend(&mut self, v: usize) -> bool {
            for &(e, w) in self.g.incident(v) {
                if self.g.is_loop(e) || w < self.start {
                    continue;
                }
                if w == self.start {
                    let first = self.steps[0].1;
                    if e != first && first < e {
                        self.steps.push((v, e));
                        let c = Cycle::from_steps_unchecked(self.steps.clone());
                        self.steps.pop();
                        if !self.emit(c) {
                            return false;
                        }
                    }
                    continue;
                }
                if self.on_path[w] {
                    continue;
                }
                self.on_path[w] = true;
                self.steps.push((v, e));
                let ok = self.extend(w);
                self.steps.pop();
                self.on_path[w] = false;
                if !ok {
                    return false;
                }
            }
            true
        }

        fn emit(&mut self, c: Cycle) -> bool {
            if self.count >= self.budget {
                return false;
            }
            self.count += 1;
            (self.visit)(&c);
            true
        }
    }

    let mut dfs = Dfs {
        g,
        start: 0,
        on_path: vec![false; g.vertex_count()],
        steps: Vec::new(),
        count: 0,
        budget,
        visit: &mut visit,
    };
    for s in g.vertices() {
        dfs.start = s;
        for e in g.edge_ids().filter(|&e| g.is_loop(e) && g.tail(e) == s) {
            if !dfs.emit(Cycle::from_steps_unchecked(vec![(s, e)])) {
                return (dfs.count, false);
            }
        }
        dfs.on_path[s] = true;
        for &(e, w) in g.incident(s) {
            if g.is_loop(e) || w < s {
                continue;
            }
            dfs.on_path[w] = true;
            dfs.steps.push((s, e));
            let ok = dfs.extend(w);
            dfs.steps.pop();
            dfs.on_path[w] = false;
            if !ok {
                return (dfs.count, false);
            }
        }
        dfs.on_path[s] = false;
    }
    (dfs.count, true)
}
