//! Labelled multigraphs with stable edge identifiers, separations,
//! connectivity and spanning trees.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::linalg;
use crate::sets::{DisjointSets, EdgeId, EdgeSet, Vertex, VertexSet, MAX_IDS};

/// An undirected multigraph. Loops and parallel edges are allowed; edge
/// identifiers survive deletion and contraction of other edges.
///
/// The value is `Copy`: all operations return new graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertices: VertexSet,
    edges: EdgeSet,
    // ends[e] is meaningful only for e in `edges`; otherwise kept at (0, 0)
    // so that derived equality and hashing are structural.
    ends: [(u8, u8); MAX_IDS],
}

impl Default for MultiGraph {
    fn default() -> Self {
        Self::new()
    }
}

fn check_id(id: usize) -> Result<()> {
    if id < MAX_IDS {
        Ok(())
    } else {
        Err(Error::IdOutOfRange(id))
    }
}

impl MultiGraph {
    pub fn new() -> Self {
        MultiGraph { vertices: VertexSet::EMPTY, edges: EdgeSet::EMPTY, ends: [(0, 0); MAX_IDS] }
    }

    /// Graph on vertices `0..n` with no edges.
    pub fn with_vertices(n: usize) -> Result<Self> {
        if n > MAX_IDS {
            return Err(Error::IdOutOfRange(n));
        }
        let mut g = Self::new();
        g.vertices = VertexSet::range(n);
        Ok(g)
    }

    /// Graph on vertices `0..n` whose edges get identifiers `0..edges.len()`.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::with_vertices(n)?;
        for (id, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(id, u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> Result<()> {
        check_id(v)?;
        self.vertices.insert(v);
        Ok(())
    }

    pub fn add_edge(&mut self, id: EdgeId, u: Vertex, v: Vertex) -> Result<()> {
        check_id(id)?;
        if self.edges.contains(id) {
            return Err(Error::DuplicateEdge(id));
        }
        for x in [u, v] {
            if !self.vertices.contains(x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        self.edges.insert(id);
        self.ends[id] = (u.min(v) as u8, u.max(v) as u8);
        Ok(())
    }

    /// Adds an edge under the smallest unused identifier.
    pub fn push_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        let id = (0..MAX_IDS).find(|&i| !self.edges.contains(i)).ok_or(Error::IdOutOfRange(MAX_IDS))?;
        self.add_edge(id, u, v)?;
        Ok(id)
    }

    /// Smallest vertex identifier not in use.
    pub fn fresh_vertex(&self) -> Result<Vertex> {
        (0..MAX_IDS).find(|&i| !self.vertices.contains(i)).ok_or(Error::IdOutOfRange(MAX_IDS))
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(e)
    }

    /// Endpoints of `e`, smaller identifier first.
    pub fn endpoints(&self, e: EdgeId) -> Option<(Vertex, Vertex)> {
        self.edges.contains(e).then(|| self.ends(e))
    }

    pub(crate) fn ends(&self, e: EdgeId) -> (Vertex, Vertex) {
        let (u, v) = self.ends[e];
        (u as usize, v as usize)
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.has_edge(e) && self.ends[e].0 == self.ends[e].1
    }

    pub fn loops(&self) -> EdgeSet {
        self.edges.iter().filter(|&e| self.is_loop(e)).collect()
    }

    /// Fails with the smallest id of `a` that is not an edge.
    pub fn check_edges(&self, a: EdgeSet) -> Result<()> {
        match (a - self.edges).min() {
            Some(e) => Err(Error::UnknownEdge(e)),
            None => Ok(()),
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(Error::UnknownEdge(e))
        }
    }

    pub fn incident_edges(&self, v: Vertex) -> EdgeSet {
        self.edges
            .iter()
            .filter(|&e| {
                let (a, b) = self.ends(e);
                a == v || b == v
            })
            .collect()
    }

    /// Degree of `v`; a loop contributes two.
    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .iter()
            .map(|e| {
                let (a, b) = self.ends(e);
                (a == v) as usize + (b == v) as usize
            })
            .sum()
    }

    /// Neighbours of `v` other than `v` itself.
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for e in self.edges.iter() {
            let (a, b) = self.ends(e);
            if a == v && b != v {
                out.insert(b);
            } else if b == v && a != v {
                out.insert(a);
            }
        }
        out
    }

    /// Edges joining `u` and `v` (loops when `u == v`).
    pub fn edges_between(&self, u: Vertex, v: Vertex) -> EdgeSet {
        let key = (u.min(v) as u8, u.max(v) as u8);
        self.edges.iter().filter(|&e| self.ends[e] == key).collect()
    }

    /// Vertices incident with at least one edge of `a` (the vertex set of `G_A`).
    pub fn edge_vertices(&self, a: EdgeSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for e in (a & self.edges).iter() {
            let (u, v) = self.ends(e);
            out.insert(u);
            out.insert(v);
        }
        out
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices - self.edge_vertices(self.edges)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::new();
        self.edges.iter().all(|e| {
            let (u, v) = self.ends(e);
            u != v && seen.insert((u, v))
        })
    }

    /// Per-vertex incidence masks, indexed by vertex identifier.
    pub(crate) fn incidence(&self) -> [EdgeSet; MAX_IDS] {
        let mut inc = [EdgeSet::EMPTY; MAX_IDS];
        for e in self.edges.iter() {
            let (u, v) = self.ends(e);
            inc[u].insert(e);
            inc[v].insert(e);
        }
        inc
    }

    /// Per-vertex neighbour masks (loops ignored).
    pub(crate) fn adjacency(&self) -> [VertexSet; MAX_IDS] {
        let mut adj = [VertexSet::EMPTY; MAX_IDS];
        for e in self.edges.iter() {
            let (u, v) = self.ends(e);
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        adj
    }

    // ---- separations -------------------------------------------------

    /// `∂(A)`: vertices incident both with an edge of `A` and with an edge
    /// outside `A`.
    pub fn boundary(&self, a: EdgeSet) -> Result<VertexSet> {
        self.check_edges(a)?;
        Ok(self.boundary_unchecked(a))
    }

    pub(crate) fn boundary_unchecked(&self, a: EdgeSet) -> VertexSet {
        self.edge_vertices(a) & self.edge_vertices(self.edges - a)
    }

    pub fn separation_order(&self, a: EdgeSet) -> Result<usize> {
        Ok(self.boundary(a)?.len())
    }

    /// Both `V(G_A) \ V(G_B)` and `V(G_B) \ V(G_A)` are nonempty.
    pub fn is_proper(&self, a: EdgeSet) -> Result<bool> {
        self.check_edges(a)?;
        let va = self.edge_vertices(a);
        let vb = self.edge_vertices(self.edges - a);
        Ok(!(va - vb).is_empty() && !(vb - va).is_empty())
    }

    pub fn separation(&self, a: EdgeSet) -> Result<GraphSeparation> {
        self.check_edges(a)?;
        Ok(GraphSeparation { side_a: a, side_b: self.edges - a, boundary: self.boundary_unchecked(a) })
    }

    /// The pieces of `G` relative to the cut `x`: for each component of
    /// `G - x` the edges meeting it, and each edge with both ends in `x` on
    /// its own. Every separation whose boundary lies inside `x` is a union of
    /// pieces.
    pub(crate) fn pieces(&self, x: VertexSet, adj: &[VertexSet; MAX_IDS], inc: &[EdgeSet; MAX_IDS]) -> Vec<EdgeSet> {
        let mut out = Vec::new();
        let active = self.edge_vertices(self.edges);
        let mut remaining = active - x;
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | adj[v];
                }
                next = next - x - comp;
                comp = comp | next;
                frontier = next;
            }
            remaining = remaining - comp;
            let mut edges = EdgeSet::EMPTY;
            for v in comp.iter() {
                edges = edges | inc[v];
            }
            out.push(edges);
        }
        for e in self.edges.iter() {
            let (u, v) = self.ends(e);
            if x.contains(u) && x.contains(v) {
                out.push(EdgeSet::singleton(e));
            }
        }
        out
    }

    /// Every separation `(A, B)` of order at most `max_order` (0, 1 or 2),
    /// each listed once up to swapping sides. Sides may be empty.
    ///
    /// Enumerates candidate boundaries of size at most `max_order` and
    /// two-colours the pieces each one leaves.
    pub fn low_order_separations(&self, max_order: usize) -> Result<Vec<GraphSeparation>> {
        if max_order > 2 {
            return Err(Error::domain("low-order separations are enumerated up to order 2"));
        }
        let adj = self.adjacency();
        let inc = self.incidence();
        let active = self.edge_vertices(self.edges);
        let mut cuts = vec![VertexSet::EMPTY];
        for k in 1..=max_order {
            cuts.extend(active.combinations(k));
        }
        let lowest = self.edges.min();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in cuts {
            let pieces = self.pieces(x, &adj, &inc);
            if pieces.len() > 24 {
                return Err(Error::Unsupported(format!("{} pieces around a cut", pieces.len())));
            }
            for mask in 0u32..(1 << pieces.len()) {
                let mut a = EdgeSet::EMPTY;
                for (i, p) in pieces.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        a = a | *p;
                    }
                }
                if lowest.is_some_and(|l| a.contains(l)) {
                    a = self.edges - a;
                }
                if !seen.insert(a) {
                    continue;
                }
                let boundary = self.boundary_unchecked(a);
                if boundary.len() <= max_order {
                    out.push(GraphSeparation { side_a: a, side_b: self.edges - a, boundary });
                }
            }
        }
        out.sort_by_key(|s| (s.boundary.len(), s.side_a));
        Ok(out)
    }

    // ---- minor operations --------------------------------------------

    pub fn delete_edge(&self, e: EdgeId) -> Result<Self> {
        self.check_edge(e)?;
        let mut g = *self;
        g.edges.remove(e);
        g.ends[e] = (0, 0);
        Ok(g)
    }

    pub(crate) fn delete_edges(&self, a: EdgeSet) -> Self {
        let mut g = *self;
        for e in (a & self.edges).iter() {
            g.edges.remove(e);
            g.ends[e] = (0, 0);
        }
        g
    }

    /// Identifies the ends of `e` (keeping the smaller vertex identifier) and
    /// removes `e`. Parallel edges that this turns into loops are deleted;
    /// other parallels are kept.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Self> {
        self.contract_keeping(e, EdgeSet::EMPTY)
    }

    /// As [`MultiGraph::contract_edge`], but loops created from edges in
    /// `keep` survive.
    pub(crate) fn contract_keeping(&self, e: EdgeId, keep: EdgeSet) -> Result<Self> {
        self.check_edge(e)?;
        if self.is_loop(e) {
            return Err(Error::domain(format!("cannot contract loop {e}")));
        }
        let (u, v) = self.ends(e);
        let parallels = self.edges_between(u, v).without(e);
        let mut g = self.delete_edges((parallels - keep).with(e));
        for f in g.edges.iter() {
            let (a, b) = g.ends(f);
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            g.ends[f] = (a.min(b) as u8, a.max(b) as u8);
        }
        g.vertices.remove(v);
        Ok(g)
    }

    /// Removes `v` with all incident edges.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Self> {
        if !self.vertices.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut g = self.delete_edges(self.incident_edges(v));
        g.vertices.remove(v);
        Ok(g)
    }

    pub fn without_isolated(&self) -> Self {
        let mut g = *self;
        g.vertices = g.vertices - self.isolated_vertices();
        g
    }

    /// Spanning subgraph keeping only the edges of `a`.
    pub fn restrict(&self, a: EdgeSet) -> Self {
        self.delete_edges(self.edges - a)
    }

    /// Renames vertices by `map` (old → new) and edges by `edge_map`.
    pub fn relabel(&self, map: &dyn Fn(Vertex) -> Vertex, edge_map: &dyn Fn(EdgeId) -> EdgeId) -> Result<Self> {
        let mut g = Self::new();
        for v in self.vertices.iter() {
            g.add_vertex(map(v))?;
        }
        if g.num_vertices() != self.num_vertices() {
            return Err(Error::domain("vertex relabelling is not injective"));
        }
        for e in self.edges.iter() {
            let (a, b) = self.ends(e);
            g.add_edge(edge_map(e), map(a), map(b))?;
        }
        Ok(g)
    }

    // ---- connectivity ------------------------------------------------

    /// Components as vertex sets (isolated vertices are singleton components).
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices, &self.adjacency())
    }

    fn components_within(&self, within: VertexSet, adj: &[VertexSet; MAX_IDS]) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut remaining = within;
        while let Some(start) = remaining.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | adj[v];
                }
                next = (next & within) - comp;
                comp = comp | next;
                frontier = next;
            }
            remaining = remaining - comp;
            out.push(comp);
        }
        out
    }

    /// Connected, counting isolated vertices. The graph with no vertices is
    /// connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of components of the spanning subgraph `(V, A)`.
    pub fn component_count(&self, a: EdgeSet) -> usize {
        let mut ds = DisjointSets::new();
        let mut joins = 0;
        for e in (a & self.edges).iter() {
            let (u, v) = self.ends(e);
            if ds.union(u, v) {
                joins += 1;
            }
        }
        self.num_vertices() - joins
    }

    /// Rank of `A` in the cycle matroid: `|V| - comp(V, A)`.
    pub fn forest_rank(&self, a: EdgeSet) -> usize {
        let mut ds = DisjointSets::new();
        (a & self.edges)
            .iter()
            .filter(|&e| {
                let (u, v) = self.ends(e);
                ds.union(u, v)
            })
            .count()
    }

    pub fn is_acyclic(&self, a: EdgeSet) -> bool {
        self.forest_rank(a) == a.len()
    }

    /// Vertex connectivity at least `k` on the underlying simple graph:
    /// more than `k` vertices and no set of fewer than `k` vertices whose
    /// removal disconnects the rest.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if self.num_vertices() <= k {
            return false;
        }
        let adj = self.adjacency();
        (0..k).all(|size| self.vertices.combinations(size).all(|x| self.components_within(self.vertices - x, &adj).len() <= 1))
    }

    // ---- spanning trees ----------------------------------------------

    pub fn is_spanning_tree(&self, t: EdgeSet) -> bool {
        t.is_subset(self.edges) && t.len() + 1 == self.num_vertices() && self.is_acyclic(t)
    }

    /// Calls `f` with the edge set of every spanning tree.
    pub fn for_each_spanning_tree(&self, f: &mut dyn FnMut(EdgeSet)) {
        let n = self.num_vertices();
        if n == 0 || !self.is_connected() {
            return;
        }
        let candidates: Vec<EdgeId> = (self.edges - self.loops()).to_vec();
        fn rec(g: &MultiGraph, cand: &[EdgeId], i: usize, need: usize, ds: &DisjointSets, chosen: EdgeSet, f: &mut dyn FnMut(EdgeSet)) {
            if need == 0 {
                f(chosen);
                return;
            }
            if cand.len() - i < need {
                return;
            }
            let e = cand[i];
            let (u, v) = g.ends(e);
            let mut with = ds.clone();
            if with.union(u, v) {
                rec(g, cand, i + 1, need - 1, &with, chosen.with(e), f);
            }
            rec(g, cand, i + 1, need, ds, chosen, f);
        }
        rec(self, &candidates, 0, n - 1, &DisjointSets::new(), EdgeSet::EMPTY, f);
    }

    pub fn spanning_trees(&self) -> Vec<EdgeSet> {
        let mut out = Vec::new();
        self.for_each_spanning_tree(&mut |t| out.push(t));
        out
    }

    /// Number of spanning trees by the matrix-tree theorem (reduced
    /// Laplacian determinant).
    pub fn spanning_tree_count(&self) -> BigUint {
        let verts = self.vertices.to_vec();
        let n = verts.len();
        if n == 0 {
            return BigUint::from(0u8);
        }
        let pos: BTreeMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut lap = vec![vec![0i64; n]; n];
        for e in self.edges.iter() {
            let (u, v) = self.ends(e);
            if u == v {
                continue;
            }
            let (a, b) = (pos[&u], pos[&v]);
            lap[a][a] += 1;
            lap[b][b] += 1;
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
        let reduced: Vec<Vec<i64>> = lap[..n - 1].iter().map(|r| r[..n - 1].to_vec()).collect();
        let d = linalg::det_int(&reduced);
        d.to_biguint().unwrap_or_else(|| (-d).to_biguint().unwrap_or_default())
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph {{ vertices: {}, edges: [", self.vertices)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let (u, v) = self.ends(e);
            write!(f, "{e}:{u}-{v}")?;
        }
        write!(f, "] }}")
    }
}

/// A separation `(A, B)` with its boundary `V(G_A) ∩ V(G_B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphSeparation {
    pub side_a: EdgeSet,
    pub side_b: EdgeSet,
    pub boundary: VertexSet,
}

impl GraphSeparation {
    pub fn order(&self) -> usize {
        self.boundary.len()
    }

    pub fn swapped(&self) -> Self {
        GraphSeparation { side_a: self.side_b, side_b: self.side_a, boundary: self.boundary }
    }
}

/// Checks that `bijection` carries the complements of spanning trees of `g`
/// exactly onto the spanning trees of `h` (dual cycle matroids).
pub fn is_matroid_dual_pair(g: &MultiGraph, h: &MultiGraph, bijection: &BTreeMap<EdgeId, EdgeId>) -> Result<bool> {
    let keys: EdgeSet = bijection.keys().copied().collect();
    let values: EdgeSet = bijection.values().copied().collect();
    if keys != g.edges() || values != h.edges() || values.len() != bijection.len() {
        return Err(Error::domain("edge map is not a bijection E(G) -> E(H)"));
    }
    let map = |s: EdgeSet| -> EdgeSet { s.iter().map(|e| bijection[&e]).collect() };
    let mut from_g: Vec<EdgeSet> = g.spanning_trees().into_iter().map(|t| map(g.edges() - t)).collect();
    let mut trees_h = h.spanning_trees();
    if from_g.is_empty() {
        return Ok(false);
    }
    from_g.sort();
    trees_h.sort();
    Ok(from_g == trees_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn path(n: usize) -> MultiGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        MultiGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn boundary_examples() {
        let tri = families::cycle(3);
        let b = tri.boundary(EdgeSet::singleton(0)).unwrap();
        assert_eq!(b, tri.edge_vertices(EdgeSet::singleton(0)));
        assert!(tri.boundary(tri.edges()).unwrap().is_empty());
        // a-b-c-d with A = {ab, bc}
        let p = path(4);
        assert_eq!(p.boundary(EdgeSet::from_iter([0, 1])).unwrap(), VertexSet::singleton(2));
        assert_eq!(p.boundary(EdgeSet::singleton(9)), Err(Error::UnknownEdge(9)));
    }

    #[test]
    fn order_examples() {
        let c4 = families::cycle(4);
        assert_eq!(c4.separation_order(EdgeSet::from_iter([0, 1])).unwrap(), 2);
        let k4 = families::complete(4);
        let star = k4.incident_edges(0);
        assert_eq!(star.len(), 3);
        assert_eq!(k4.separation_order(star).unwrap(), 3);
        assert_eq!(k4.separation_order(EdgeSet::EMPTY).unwrap(), 0);
    }

    #[test]
    fn proper_examples() {
        let k4 = families::complete(4);
        assert!(!k4.is_proper(EdgeSet::singleton(0)).unwrap());
        assert!(!k4.is_proper(k4.edges()).unwrap());
        let cube = families::cube();
        // face on vertices 0,1,2,3 (bit patterns with top bit clear)
        let face: EdgeSet = cube
            .edges()
            .iter()
            .filter(|&e| {
                let (u, v) = cube.endpoints(e).unwrap();
                u < 4 && v < 4
            })
            .collect();
        assert_eq!(face.len(), 4);
        // every face vertex also meets a vertical edge
        assert!(!cube.is_proper(face).unwrap());
        assert!(cube.is_proper(cube.incident_edges(0)).unwrap());
    }

    #[test]
    fn deletion_and_contraction() {
        let tri = families::cycle(3);
        let c = tri.contract_edge(0).unwrap();
        assert_eq!(c.num_edges(), 2);
        assert_eq!(c.num_vertices(), 2);
        assert!(!c.is_simple());
        let pair = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let single = pair.contract_edge(0).unwrap();
        assert_eq!(single.num_vertices(), 1);
        assert_eq!(single.num_edges(), 0);
        let k4 = families::complete(4);
        let d = k4.delete_edge(2).unwrap();
        assert_eq!(d.num_edges(), 5);
        assert!(d.is_simple());
        assert_eq!(d.endpoints(3), k4.endpoints(3));
        let looped = MultiGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert!(matches!(looped.contract_edge(0), Err(Error::Domain(_))));
    }

    #[test]
    fn connectivity_examples() {
        assert!(families::complete(4).is_k_connected(3));
        assert!(!families::cube().is_k_connected(4));
        assert!(families::cube().is_k_connected(3));
        assert!(!path(3).is_k_connected(2));
        assert!(families::complete(5).is_k_connected(4));
        assert!(!families::complete(5).is_k_connected(5));
    }

    #[test]
    fn spanning_tree_examples() {
        assert_eq!(families::cycle(3).spanning_tree_count(), BigUint::from(3u8));
        assert_eq!(families::complete(5).spanning_tree_count(), BigUint::from(125u8));
        assert_eq!(families::complete(5).spanning_trees().len(), 125);
        let two = MultiGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.spanning_tree_count(), BigUint::from(0u8));
        assert!(two.spanning_trees().is_empty());
        assert_eq!(families::cube().spanning_trees().len(), 384);
    }

    #[test]
    fn separations_of_small_graphs() {
        // two triangles sharing vertex 0
        let bowtie = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let seps = bowtie.low_order_separations(1).unwrap();
        let split = EdgeSet::from_iter([0, 1, 2]);
        assert!(seps.iter().any(|s| (s.side_a == split || s.side_b == split) && s.order() == 1));

        let k4 = families::complete(4);
        let seps = k4.low_order_separations(2).unwrap();
        assert!(seps.iter().all(|s| s.side_a.len() < 2 || s.side_b.len() < 2 || !k4.is_proper(s.side_a).unwrap()));
    }

    #[test]
    fn dual_pair_examples() {
        let tri = families::cycle(3);
        let theta = MultiGraph::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let id: BTreeMap<_, _> = (0..3).map(|e| (e, e)).collect();
        assert!(is_matroid_dual_pair(&tri, &theta, &id).unwrap());
        let k4 = families::complete(4);
        let id: BTreeMap<_, _> = (0..6).map(|e| (e, e)).collect();
        assert!(!is_matroid_dual_pair(&k4, &k4, &id).unwrap());
        let bad: BTreeMap<_, _> = (0..6).map(|e| (e, 0)).collect();
        assert!(is_matroid_dual_pair(&k4, &k4, &bad).is_err());
    }
}
