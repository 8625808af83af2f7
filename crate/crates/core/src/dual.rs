//! Planar duals of 3-connected planar graphs, built from their faces: the
//! induced cycles whose removal leaves the rest connected.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::sets::{EdgeId, EdgeSet};

/// Largest edge count accepted by [`planar_dual`].
pub const MAX_DUAL_EDGES: usize = 24;

fn is_cycle(g: &MultiGraph, c: EdgeSet) -> bool {
    let verts = g.edge_vertices(c);
    c.len() >= 3
        && verts.len() == c.len()
        && verts.iter().all(|v| (g.incident_edges(v) & c).len() == 2)
        && g.forest_rank(c) + 1 == verts.len()
}

/// The faces of a 3-connected planar graph as edge sets.
pub fn faces(g: &MultiGraph) -> Result<Vec<EdgeSet>> {
    if !g.is_simple() || g.num_vertices() < 4 || !g.is_k_connected(3) {
        return Err(Error::domain("faces are determined only for simple 3-connected graphs"));
    }
    if g.num_edges() > MAX_DUAL_EDGES {
        return Err(Error::Unsupported(format!("faces of a graph with {} edges (cap {MAX_DUAL_EDGES})", g.num_edges())));
    }
    let mut out = Vec::new();
    for c in g.edges().subsets() {
        if !is_cycle(g, c) {
            continue;
        }
        let verts = g.edge_vertices(c);
        let chords = g.edges().iter().filter(|&e| !c.contains(e)).any(|e| {
            let (u, v) = g.endpoints(e).expect("edge of g");
            verts.contains(u) && verts.contains(v)
        });
        if chords {
            continue;
        }
        let mut rest = *g;
        for v in verts.iter() {
            rest = rest.delete_vertex(v)?;
        }
        if rest.num_vertices() == 0 || rest.is_connected() {
            out.push(c);
        }
    }
    Ok(out)
}

/// The planar dual on the same edge identifiers, with face `i` as vertex
/// `i`. Fails when `g` is not 3-connected and planar.
pub fn planar_dual(g: &MultiGraph) -> Result<MultiGraph> {
    let faces = faces(g)?;
    if g.num_vertices() + faces.len() != g.num_edges() + 2 {
        return Err(Error::domain("graph is not planar"));
    }
    let mut dual = MultiGraph::with_vertices(faces.len())?;
    for e in g.edges().iter() {
        let on: Vec<usize> = (0..faces.len()).filter(|&i| faces[i].contains(e)).collect();
        match on.as_slice() {
            &[a, b] => dual.add_edge(e, a, b)?,
            _ => return Err(Error::domain("graph is not planar")),
        }
    }
    Ok(dual)
}

/// Identity bijection on the edges of `g`, for use with
/// [`crate::graph::is_matroid_dual_pair`].
pub fn identity_bijection(g: &MultiGraph) -> std::collections::BTreeMap<EdgeId, EdgeId> {
    g.edges().iter().map(|e| (e, e)).collect()
}
