//! Exhaustive flow enumeration over cotree assignments.
//!
//! A spanning forest is fixed once; every flow is determined by its values
//! on the remaining edges, so there are exactly `|Γ|^(m - n + c)` flows.

use rayon::prelude::*;

use super::{ForbiddenAssignment, GroupFlow};
use crate::error::{Error, Result};
use crate::graph::{shortest_path, spanning_forest, EdgeSet, Multigraph};
use crate::group::{CodeTables, GroupSpec};

/// Default cap on `|Γ|^dim` for enumeration and counting.
pub const DEFAULT_FLOW_CAP: u64 = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub cap: u64,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cap: DEFAULT_FLOW_CAP, parallel: true }
    }
}

/// Cotree edges with, for each, the signed tree edges of its fundamental cycle.
struct CotreeSystem {
    tree: Vec<usize>,
    cotree: Vec<usize>,
    /// `(tree edge, same direction as the cotree edge)` per cotree edge
    cycles: Vec<Vec<(usize, bool)>>,
}

impl CotreeSystem {
    fn new(g: &Multigraph) -> Self {
        let tree = spanning_forest(g, &vec![true; g.edge_count()]);
        let tree_set: EdgeSet = tree.iter().copied().collect();
        let mut cotree = Vec::new();
        let mut cycles = Vec::new();
        for e in g.edge_ids().filter(|&e| !tree_set.contains(e)) {
            // walk back from head to tail inside the forest; `e` runs tail to head
            let (t, h) = g.endpoints(e);
            let signed = if t == h {
                Vec::new()
            } else {
                let path = shortest_path(g, h, t, |x| tree_set.contains(x), |_| true)
                    .expect("cotree edge of a spanning forest closes a cycle");
                path.edges.iter().zip(&path.vertices).map(|(&x, &v)| (x, g.tail(x) == v)).collect()
            };
            cotree.push(e);
            cycles.push(signed);
        }
        CotreeSystem { tree, cotree, cycles }
    }

    fn dimension(&self) -> usize {
        self.cotree.len()
    }
}

fn check_cap(spec: &GroupSpec, dim: usize, cap: u64) -> Result<()> {
    let total = u128::from(spec.order()).checked_pow(dim as u32);
    match total {
        Some(t) if t <= u128::from(cap) => Ok(()),
        _ => Err(Error::CapExceeded { what: "flow space size", needed: format!("{}^{dim}", spec.order()), cap }),
    }
}

/// Visits every `spec`-flow of `g` exactly once, in lexicographic order of
/// the cotree values. Returns the number visited.
pub fn enumerate_flows(g: &Multigraph, spec: &GroupSpec, cap: u64, mut visit: impl FnMut(&GroupFlow)) -> Result<u64> {
    let sys = CotreeSystem::new(g);
    check_cap(spec, sys.dimension(), cap)?;
    let order = spec.order();
    let dim = sys.dimension();
    let mut digits = vec![0u64; dim];
    let mut count = 0;
    loop {
        let mut flow = GroupFlow::zero(spec, g.edge_count());
        for (i, &c) in sys.cotree.iter().enumerate() {
            let x = spec.decode(digits[i]);
            let minus = spec.negate_unchecked(&x);
            for &(t, same) in &sys.cycles[i] {
                spec.add_assign(&mut flow.values[t], if same { &x } else { &minus });
            }
            flow.values[c] = x;
        }
        visit(&flow);
        count += 1;
        // odometer with the last cotree edge fastest
        let mut i = dim;
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < order {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Pruned depth-first counter over element codes.
struct Counter<'a> {
    tables: &'a CodeTables,
    /// per cotree position: allowed value codes
    allowed: Vec<Vec<u32>>,
    /// per cotree position: `(tree slot, same direction)`
    updates: Vec<Vec<(usize, bool)>>,
    /// per cotree position: tree slots that become fully determined
    completes: Vec<Vec<usize>>,
    /// per tree slot: forbidden code
    tree_forbidden: Vec<Option<u32>>,
}

impl Counter<'_> {
    fn count_from(&self, depth: usize, partial: &mut Vec<u32>) -> u64 {
        if depth == self.allowed.len() {
            return 1;
        }
        let mut total = 0;
        for &v in &self.allowed[depth] {
            let minus = self.tables.neg[v as usize];
            let saved: Vec<u32> = self.updates[depth].iter().map(|&(t, _)| partial[t]).collect();
            for &(t, same) in &self.updates[depth] {
                partial[t] = self.tables.add(partial[t], if same { v } else { minus });
            }
            if self.completes[depth].iter().all(|&t| Some(partial[t]) != self.tree_forbidden[t]) {
                total += self.count_from(depth + 1, partial);
            }
            for (&(t, _), s) in self.updates[depth].iter().zip(saved) {
                partial[t] = s;
            }
        }
        total
    }
}

fn count_with(g: &Multigraph, spec: &GroupSpec, forbidden: &[Option<u64>], config: OracleConfig) -> Result<u64> {
    let sys = CotreeSystem::new(g);
    check_cap(spec, sys.dimension(), config.cap)?;
    let tables = CodeTables::new(spec);
    let order = tables.order as u32;
    let slot: std::collections::HashMap<usize, usize> = sys.tree.iter().enumerate().map(|(i, &t)| (t, i)).collect();

    // Order cotree edges greedily so tree edges are completed early.
    let mut remaining_uses = vec![0usize; sys.tree.len()];
    for cyc in &sys.cycles {
        for &(t, _) in cyc {
            remaining_uses[slot[&t]] += 1;
        }
    }
    let mut touched = vec![false; sys.tree.len()];
    let mut used = vec![false; sys.dimension()];
    let mut sequence = Vec::with_capacity(sys.dimension());
    for _ in 0..sys.dimension() {
        let score = |i: usize| {
            let mut opened = 0i64;
            let mut closed = 0i64;
            for &(t, _) in &sys.cycles[i] {
                let s = slot[&t];
                if remaining_uses[s] == 1 {
                    closed += 1;
                } else if !touched[s] {
                    opened += 1;
                }
            }
            (opened - closed, i)
        };
        let best = (0..sys.dimension()).filter(|&i| !used[i]).min_by_key(|&i| score(i)).unwrap();
        used[best] = true;
        for &(t, _) in &sys.cycles[best] {
            let s = slot[&t];
            touched[s] = true;
            remaining_uses[s] -= 1;
        }
        sequence.push(best);
    }

    // A tree edge on no fundamental cycle is a bridge and always zero.
    let mut last_use = vec![None; sys.tree.len()];
    for (pos, &i) in sequence.iter().enumerate() {
        for &(t, _) in &sys.cycles[i] {
            last_use[slot[&t]] = Some(pos);
        }
    }
    let tree_forbidden: Vec<Option<u32>> = sys.tree.iter().map(|&t| forbidden[t].map(|c| c as u32)).collect();
    for (s, lu) in last_use.iter().enumerate() {
        if lu.is_none() && tree_forbidden[s] == Some(0) {
            return Ok(0);
        }
    }
    let mut completes = vec![Vec::new(); sys.dimension()];
    for (s, lu) in last_use.iter().enumerate() {
        if let Some(pos) = lu {
            completes[*pos].push(s);
        }
    }
    let counter = Counter {
        tables: &tables,
        allowed: sequence
            .iter()
            .map(|&i| {
                let f = forbidden[sys.cotree[i]].map(|c| c as u32);
                (0..order).filter(|&v| Some(v) != f).collect()
            })
            .collect(),
        updates: sequence.iter().map(|&i| sys.cycles[i].iter().map(|&(t, same)| (slot[&t], same)).collect()).collect(),
        completes,
        tree_forbidden,
    };
    let mut partial = vec![0u32; sys.tree.len()];
    if !config.parallel || counter.allowed.is_empty() {
        return Ok(counter.count_from(0, &mut partial));
    }
    // split on the first two positions
    let firsts: Vec<(u32, Option<u32>)> = counter.allowed[0]
        .iter()
        .flat_map(|&a| {
            if counter.allowed.len() > 1 {
                counter.allowed[1].iter().map(|&b| (a, Some(b))).collect::<Vec<_>>()
            } else {
                vec![(a, None)]
            }
        })
        .collect();
    let total = firsts
        .par_iter()
        .map(|&(a, b)| {
            let mut partial = vec![0u32; counter.tree_forbidden.len()];
            let mut depth = 0;
            for v in std::iter::once(a).chain(b) {
                let minus = tables.neg[v as usize];
                for &(t, same) in &counter.updates[depth] {
                    partial[t] = tables.add(partial[t], if same { v } else { minus });
                }
                if !counter.completes[depth].iter().all(|&t| Some(partial[t]) != counter.tree_forbidden[t]) {
                    return 0;
                }
                depth += 1;
            }
            counter.count_from(depth, &mut partial)
        })
        .sum();
    Ok(total)
}

/// Number of flows with no zero value.
pub fn count_nowhere_zero(g: &Multigraph, spec: &GroupSpec, config: OracleConfig) -> Result<u64> {
    count_with(g, spec, &vec![Some(0); g.edge_count()], config)
}

/// Number of flows that differ from `f` on every edge.
pub fn count_avoiding(g: &Multigraph, f: &ForbiddenAssignment, config: OracleConfig) -> Result<u64> {
    if f.values.len() != g.edge_count() {
        return Err(Error::SpecMismatch(format!(
            "forbidden assignment has {} values for {} edges",
            f.values.len(),
            g.edge_count()
        )));
    }
    let codes: Vec<Option<u64>> = f.values.iter().map(|v| Some(f.spec.encode(v))).collect();
    count_with(g, &f.spec, &codes, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flow::validate_flow;
    use crate::graph::named;

    #[test]
    fn theta_space() {
        let g = named::theta();
        let z6 = GroupSpec::cyclic(6);
        let mut seen = std::collections::HashSet::new();
        let n = enumerate_flows(&g, &z6, 1000, |phi| {
            assert!(validate_flow(&g, phi));
            seen.insert(phi.clone());
        })
        .unwrap();
        assert_eq!(n, 36);
        assert_eq!(seen.len(), 36);
    }

    #[test]
    fn trees_and_loops() {
        let path = Multigraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(enumerate_flows(&path, &GroupSpec::cyclic(5), 10, |_| {}).unwrap(), 1);
        let lp = Multigraph::from_edges(1, &[(0, 0)]);
        assert_eq!(enumerate_flows(&lp, &GroupSpec::cyclic(2), 10, |_| {}).unwrap(), 2);
    }

    #[test]
    fn theta_nowhere_zero_counts() {
        let g = named::theta();
        for s in ["Z6", "Z2xZ3"] {
            let spec = GroupSpec::parse(s).unwrap();
            for parallel in [false, true] {
                let c = count_nowhere_zero(&g, &spec, OracleConfig { cap: 1000, parallel }).unwrap();
                assert_eq!(c, 20, "{s}");
            }
        }
    }

    #[test]
    fn counts_match_enumeration() {
        let g = named::k4();
        let spec = GroupSpec::parse("Z2xZ2").unwrap();
        let f = ForbiddenAssignment::new(spec.clone(), (0..6).map(|i| spec.decode(i % 4)).collect()).unwrap();
        let mut brute = 0;
        enumerate_flows(&g, &spec, 1 << 20, |phi| {
            if phi.avoids(&f) {
                brute += 1;
            }
        })
        .unwrap();
        assert_eq!(count_avoiding(&g, &f, OracleConfig::default()).unwrap(), brute);
    }

    #[test]
    fn cap_is_an_error() {
        let g = named::petersen();
        assert!(matches!(
            count_nowhere_zero(&g, &GroupSpec::cyclic(6), OracleConfig { cap: 1000, parallel: false }),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn bridge_kills_nowhere_zero() {
        let g = Multigraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]);
        assert_eq!(count_nowhere_zero(&g, &GroupSpec::cyclic(3), OracleConfig::default()).unwrap(), 0);
    }
}
