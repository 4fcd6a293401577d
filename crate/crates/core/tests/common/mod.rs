//! Checkers shared by the integration tests. They recompute everything from
//! the raw edge lists and never call the constructions they are checking.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use flowsmith::flow::{ForbiddenAssignment, GroupFlow};
use flowsmith::generate::generate_random_cubic;
use flowsmith::graph::{enumerate_cycles, named, Cycle, EdgeSet, Multigraph};
use flowsmith::peripheral::PeripheralPath;

pub struct Dsu(Vec<usize>);

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    pub fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
        a != b
    }
}

/// Number of components of the subgraph on `vertices` using `edges`
/// (edges with an end outside `vertices` are ignored).
pub fn component_count(g: &Multigraph, vertices: &BTreeSet<usize>, edges: impl Fn(usize) -> bool) -> usize {
    let mut dsu = Dsu::new(g.vertex_count());
    let mut count = vertices.len();
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        if edges(e) && vertices.contains(&t) && vertices.contains(&h) && dsu.union(t, h) {
            count -= 1;
        }
    }
    count
}

pub fn all_vertices(g: &Multigraph) -> BTreeSet<usize> {
    (0..g.vertex_count()).collect()
}

pub fn is_peripheral_set(g: &Multigraph, s: &EdgeSet) -> bool {
    component_count(g, &all_vertices(g), |e| !s.contains(e)) == 1
}

pub fn is_spanning_tree(g: &Multigraph, t: &EdgeSet) -> bool {
    t.len() + 1 == g.vertex_count() && component_count(g, &all_vertices(g), |e| t.contains(e)) == 1
}

/// Checks a cycle's walk and that deleting its edges keeps `g` connected.
pub fn check_peripheral_cycle(g: &Multigraph, c: &Cycle) -> Result<(), String> {
    let steps = c.steps();
    let mut seen = HashSet::new();
    for (i, &(v, e)) in steps.iter().enumerate() {
        let next = steps[(i + 1) % steps.len()].0;
        let (t, h) = g.edges()[e];
        if !((t == v && h == next) || (h == v && t == next)) {
            return Err(format!("step {i} does not follow edge {e}"));
        }
        if !seen.insert(v) {
            return Err(format!("vertex {v} repeated"));
        }
    }
    if !is_peripheral_set(g, &c.edge_set()) {
        return Err("cycle is not peripheral".into());
    }
    Ok(())
}

/// Checks the peripheral-path contract for the component of `g - x` that
/// contains the path.
pub fn check_peripheral_path(g: &Multigraph, x: &[usize], f: usize, pp: &PeripheralPath) -> Result<(), String> {
    let in_x: BTreeSet<usize> = x.iter().copied().collect();
    let outside: BTreeSet<usize> = g.vertices().filter(|v| !in_x.contains(v)).collect();
    let mut dsu = Dsu::new(g.vertex_count());
    for &(t, h) in g.edges() {
        if outside.contains(&t) && outside.contains(&h) {
            dsu.union(t, h);
        }
    }
    let p = &pp.path;
    let root = dsu.find(p.vertices[0]);
    let h: BTreeSet<usize> = outside.iter().copied().filter(|&v| dsu.find(v) == root).collect();
    if p.vertices.len() != p.edges.len() + 1 {
        return Err("malformed path".into());
    }
    let distinct: BTreeSet<_> = p.vertices.iter().collect();
    if distinct.len() != p.vertices.len() || !p.vertices.iter().all(|v| h.contains(v)) {
        return Err("path repeats vertices or leaves its component".into());
    }
    for (i, &e) in p.edges.iter().enumerate() {
        let (t, hd) = g.edges()[e];
        let (a, b) = (p.vertices[i], p.vertices[i + 1]);
        if !((t == a && hd == b) || (t == b && hd == a)) {
            return Err(format!("edge {e} does not join path vertices"));
        }
    }
    let on: BTreeSet<usize> = p.edges.iter().copied().collect();
    if component_count(g, &h, |e| !on.contains(&e)) != 1 {
        return Err("path is not peripheral in its component".into());
    }
    let (e0, e1) = pp.attach;
    if e0 == e1 || e0 == f || e1 == f {
        return Err("attachment edges must be distinct and differ from f".into());
    }
    let attaches = |e: usize, v: usize| {
        let (t, hd) = g.edges()[e];
        (t == v && in_x.contains(&hd)) || (hd == v && in_x.contains(&t))
    };
    if !attaches(e0, p.vertices[0]) || !attaches(e1, *p.vertices.last().unwrap()) {
        return Err("attachment edges do not join the ends to X".into());
    }
    let last = p.vertices.len() - 1;
    for &v in &p.vertices[1..last.max(1)] {
        if last > 0 && g.incident(v).iter().any(|&(_, w)| in_x.contains(&w)) {
            return Err(format!("interior vertex {v} neighbours X"));
        }
    }
    Ok(())
}

/// `<s>_k` straight from the definition, by repeatedly scanning all cycles.
pub fn closure_by_cycles(g: &Multigraph, s: &EdgeSet, k: usize) -> EdgeSet {
    let mut cycles: Vec<BTreeSet<usize>> = Vec::new();
    let (_, exhaustive) = enumerate_cycles(g, 2_000_000, |c| cycles.push(c.edges().collect()));
    assert!(exhaustive, "cycle enumeration budget too small for the oracle");
    let mut r: BTreeSet<usize> = s.iter().collect();
    loop {
        let grow = cycles.iter().find(|c| {
            let outside = c.iter().filter(|e| !r.contains(e)).count();
            outside >= 1 && outside <= k
        });
        match grow {
            Some(c) => r.extend(c.iter().copied()),
            None => return r.into_iter().collect(),
        }
    }
}

/// Conservation recomputed from residues.
pub fn conserves(g: &Multigraph, phi: &GroupFlow) -> bool {
    let moduli = phi.spec.moduli();
    let mut excess = vec![vec![0i64; moduli.len()]; g.vertex_count()];
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        for (i, &r) in phi.values[e].residues().iter().enumerate() {
            excess[t][i] += r as i64;
            excess[h][i] -= r as i64;
        }
    }
    excess.iter().all(|x| x.iter().zip(moduli).all(|(&v, &k)| v.rem_euclid(k as i64) == 0))
}

pub fn is_nowhere_zero(phi: &GroupFlow) -> bool {
    phi.values.iter().all(|v| v.residues().iter().any(|&r| r != 0))
}

pub fn avoids(phi: &GroupFlow, f: &ForbiddenAssignment) -> bool {
    phi.values.iter().zip(&f.values).all(|(a, b)| a.residues() != b.residues())
}

/// Distinct, conserving, and each accepted by `predicate`.
pub fn check_flows(g: &Multigraph, flows: &[GroupFlow], predicate: impl Fn(&GroupFlow) -> bool) -> Result<(), String> {
    let mut seen = HashSet::new();
    for (i, phi) in flows.iter().enumerate() {
        if phi.values.len() != g.edge_count() {
            return Err(format!("flow {i} has the wrong length"));
        }
        if !conserves(g, phi) {
            return Err(format!("flow {i} violates conservation"));
        }
        if !predicate(phi) {
            return Err(format!("flow {i} fails the family predicate"));
        }
        let key: Vec<Vec<u32>> = phi.values.iter().map(|v| v.residues().to_vec()).collect();
        if !seen.insert(key) {
            return Err(format!("flow {i} repeats an earlier flow"));
        }
    }
    Ok(())
}

/// Named cubic 3-edge-connected graphs.
pub fn named_cubic() -> Vec<(&'static str, Multigraph)> {
    vec![("theta", named::theta()), ("K4", named::k4()), ("prism", named::prism()), ("Petersen", named::petersen())]
}

/// Seeded random cubic graphs with `4 <= n <= 20`.
pub fn random_cubic(count: usize) -> Vec<(String, Multigraph)> {
    (0..count)
        .map(|i| {
            let n = 4 + 2 * (i % 9);
            (format!("cubic n={n} seed={i}"), generate_random_cubic(n, i as u64).unwrap())
        })
        .collect()
}

pub fn cubic_corpus(random: usize) -> Vec<(String, Multigraph)> {
    let mut out: Vec<(String, Multigraph)> = named_cubic().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    out.extend(random_cubic(random));
    out
}

/// A random multigraph, possibly disconnected, with loops and parallel edges.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Multigraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Multigraph::from_edges(n, &edges)
}

/// Number of components of `(V, edges)`.
pub fn components(g: &Multigraph, edges: impl Fn(usize) -> bool) -> usize {
    component_count(g, &all_vertices(g), edges)
}
