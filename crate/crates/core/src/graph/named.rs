//! Small named graphs used throughout tests and examples. Every edge is
//! oriented from its lower to its higher vertex.

use super::Multigraph;

/// Two vertices joined by three parallel edges.
pub fn theta() -> Multigraph {
    Multigraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)])
}

/// `K_n` with edges in lexicographic order of their ends.
pub fn complete(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push((a, b));
        }
    }
    Multigraph::from_edges(n, &edges)
}

pub fn k4() -> Multigraph {
    complete(4)
}

pub fn k5() -> Multigraph {
    complete(5)
}

pub fn k6() -> Multigraph {
    complete(6)
}

/// Triangles 1-2-3 and 4-5-6 joined by the matching 1-4, 2-5, 3-6.
pub fn prism() -> Multigraph {
    Multigraph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)])
}

/// Outer cycle 1..5, spokes i -> i+5, inner pentagram.
pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        edges.push((i.min(j), i.max(j)));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        let (a, b) = (5 + i, 5 + (i + 2) % 5);
        edges.push((a.min(b), a.max(b)));
    }
    Multigraph::from_edges(10, &edges)
}

/// `K_{2,2,2}`: all pairs except 1-2, 3-4, 5-6.
pub fn octahedron() -> Multigraph {
    let mut edges = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            if !(a % 2 == 0 && b == a + 1) {
                edges.push((a, b));
            }
        }
    }
    Multigraph::from_edges(6, &edges)
}

/// A single vertex carrying `loops` loops.
pub fn bouquet(loops: usize) -> Multigraph {
    Multigraph::from_edges(1, &vec![(0, 0); loops])
}
