//! Named reference graphs. Edge identifiers are assigned `0..m` in the order
//! the edges are listed by each constructor.

use crate::graph::MultiGraph;
use crate::sets::Vertex;

fn build(n: usize, edges: &[(Vertex, Vertex)]) -> MultiGraph {
    MultiGraph::from_edges(n, edges).expect("reference graph within identifier range")
}

/// Complete graph `K_n`, edges in lexicographic order of endpoints.
pub fn complete(n: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    build(n, &edges)
}

/// Cycle `C_n` with edge `i` joining `i` and `i + 1 (mod n)`.
pub fn cycle(n: usize) -> MultiGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> MultiGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Wheel `W_k`: rim `0..k` (edges `0..k`) and centre `k` (spokes `k..2k`).
pub fn wheel(k: usize) -> MultiGraph {
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    build(k + 1, &edges)
}

/// Complete bipartite `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    build(a + b, &edges)
}

pub fn k33() -> MultiGraph {
    complete_bipartite(3, 3)
}

pub fn k5() -> MultiGraph {
    complete(5)
}

/// `K_5` minus the edge `{3, 4}`.
pub fn k5_minus() -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in u + 1..5 {
            if (u, v) != (3, 4) {
                edges.push((u, v));
            }
        }
    }
    build(5, &edges)
}

/// The 3-cube on vertices `0..8`, adjacent when the labels differ in one bit.
pub fn cube() -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in [1, 2, 4] {
            let v = u ^ bit;
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, &edges)
}

/// The octahedron `K_{2,2,2}`: vertex `i` is not adjacent to `i + 3`.
pub fn octahedron() -> MultiGraph {
    let mut edges = Vec::new();
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                edges.push((u, v));
            }
        }
    }
    build(6, &edges)
}

/// The cube with vertex 7 replaced by a triangle on its neighbours 3, 5, 6.
pub fn h_graph() -> MultiGraph {
    let cube = cube();
    let mut edges: Vec<_> = cube.edges().iter().filter_map(|e| cube.endpoints(e)).filter(|&(u, v)| u != 7 && v != 7).collect();
    edges.extend([(3, 5), (3, 6), (5, 6)]);
    build(7, &edges)
}

/// The octahedron with the triangle `0, 1, 2` replaced by a new vertex 6
/// joined to its corners.
pub fn h_from_octahedron() -> MultiGraph {
    let oct = octahedron();
    let mut edges: Vec<_> = oct.edges().iter().filter_map(|e| oct.endpoints(e)).filter(|&(u, v)| !(u < 3 && v < 3)).collect();
    edges.extend([(0, 6), (1, 6), (2, 6)]);
    build(7, &edges)
}

/// Triangular prism: triangles `0 1 2` and `3 4 5` with rungs `i, i + 3`.
pub fn prism() -> MultiGraph {
    build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
}

/// The prism with one extra edge `{0, 4}` across a square face.
pub fn prism_plus() -> MultiGraph {
    build(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5), (0, 4)])
}

/// Double fan: the path `0 1 2 3` plus vertices 4 and 5 each joined to all
/// four path vertices.
pub fn double_fan() -> MultiGraph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    for hub in [4, 5] {
        edges.extend((0..4).map(|p| (p, hub)));
    }
    build(6, &edges)
}

/// Planar dual of [`double_fan`]: two 4-cycles `0 1 2 3` and `0 4 5 6`
/// sharing vertex 0, with rungs `1-4`, `2-5`, `3-6`.
pub fn double_fan_dual() -> MultiGraph {
    build(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0), (1, 4), (2, 5), (3, 6)])
}

/// `K_{1,3}` with each edge subdivided once: centre 0, middles 1..4, leaves 4..7.
pub fn subdivided_claw() -> MultiGraph {
    build(7, &[(0, 1), (1, 4), (0, 2), (2, 5), (0, 3), (3, 6)])
}

/// The excluded minors for width at most three, by name.
pub fn f0_family() -> Vec<(&'static str, MultiGraph)> {
    vec![("K33", k33()), ("K5", k5()), ("C", cube()), ("H", h_graph()), ("O", octahedron())]
}

/// Looks up a reference graph by name (`K4`, `W5`, `cube`, `P+`, ...).
pub fn by_name(name: &str) -> Option<MultiGraph> {
    let lower = name.to_ascii_lowercase();
    let numbered = |prefix: &str| lower.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    Some(match lower.as_str() {
        "k33" | "k3,3" => k33(),
        "cube" | "c" => cube(),
        "octahedron" | "o" => octahedron(),
        "h" => h_graph(),
        "k5-" | "k5minus" => k5_minus(),
        "prism" | "p" => prism(),
        "p+" | "prismplus" => prism_plus(),
        "d" => double_fan(),
        "d*" => double_fan_dual(),
        "claw" => subdivided_claw(),
        _ => {
            if let Some(n) = numbered("k").filter(|&n| (1..=11).contains(&n)) {
                complete(n)
            } else if let Some(k) = numbered("w").filter(|&k| (3..=30).contains(&k)) {
                wheel(k)
            } else {
                cycle(numbered("cyc").filter(|&n| (3..=60).contains(&n))?)
            }
        }
    })
}
