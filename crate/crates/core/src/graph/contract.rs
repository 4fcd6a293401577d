use super::cycles::UnionFind;
use super::{EdgeSet, Multigraph};

/// Result of contracting an edge set.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Multigraph,
    /// old vertex -> new vertex
    pub vertex_map: Vec<usize>,
    /// old edge -> new edge, `None` for contracted edges
    pub edge_map: Vec<Option<usize>>,
}

/// Contracts every edge of `f`. Surviving edges keep their relative order and
/// orientation; edges whose ends merge become loops. New vertices are
/// numbered by the smallest old vertex in their class.
pub fn contract_edges(g: &Multigraph, f: &EdgeSet) -> Contraction {
    let mut uf = UnionFind::new(g.vertex_count());
    for e in f.iter() {
        let (t, h) = g.endpoints(e);
        uf.union(t, h);
    }
    let mut class_id = vec![usize::MAX; g.vertex_count()];
    let mut vertex_map = vec![0; g.vertex_count()];
    let mut next = 0;
    for v in g.vertices() {
        let r = uf.find(v);
        if class_id[r] == usize::MAX {
            class_id[r] = next;
            next += 1;
        }
        vertex_map[v] = class_id[r];
    }
    let mut edges = Vec::new();
    let mut edge_map = vec![None; g.edge_count()];
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        if !f.contains(e) {
            edge_map[e] = Some(edges.len());
            edges.push((vertex_map[t], vertex_map[h]));
        }
    }
    Contraction { graph: Multigraph::from_edges(next, &edges), vertex_map, edge_map }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn theta_contracts_to_two_loops() {
        let c = contract_edges(&named::theta(), &EdgeSet::from([0]));
        assert_eq!(c.graph.vertex_count(), 1);
        assert_eq!(c.graph.edge_count(), 2);
        assert!(c.graph.edge_ids().all(|e| c.graph.is_loop(e)));
    }

    #[test]
    fn k4_contract_one_edge() {
        let c = contract_edges(&named::k4(), &EdgeSet::from([0]));
        assert_eq!(c.graph.vertex_count(), 3);
        assert_eq!(c.graph.edge_count(), 5);
        assert_eq!(c.vertex_map, vec![0, 0, 1, 2]);
        // merged vertex has two parallel edges to each of 3 and 4
        assert_eq!(c.graph.degree(0), 4);
        assert_eq!(c.graph.edges()[..4], [(0, 1), (0, 2), (0, 1), (0, 2)]);
    }

    #[test]
    fn empty_contraction_is_identity() {
        let g = named::petersen();
        let c = contract_edges(&g, &EdgeSet::new());
        assert_eq!(c.graph, g);
        assert!(c.edge_map.iter().enumerate().all(|(e, m)| *m == Some(e)));
    }
}
