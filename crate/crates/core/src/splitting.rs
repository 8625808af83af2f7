//! Deciding Feynman 5-splitting.
//!
//! A 5-configuration `S` of an enhanced graph splits when the graph itself,
//! or the graph after deleting an edge of `S \ D` or contracting a non-loop
//! edge of `S \ C`, has a *bad* separation `(A, B)`: order at most one with
//! configuration edges on both sides, or order two with exactly two
//! configuration edges on the sparser side. In a derived graph the
//! configuration is `S` minus the operated edge. Plain graphs are enhanced
//! graphs without protections.
//!
//! Two further deciders serve as cross-checks: the spanning-tree test via
//! matroid intersection ([`config_splits_via_trees`]) and the thirty Dodgson
//! polynomials ([`config_splits_algebraic`]).

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{GraphSeparation, MultiGraph};
use crate::kirchhoff;
use crate::matroid;
use crate::sets::{EdgeId, EdgeSet, VertexSet};

/// A graph with contract-proof (`C`) and delete-proof (`D`) edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnhancedGraph {
    graph: MultiGraph,
    contract_proof: EdgeSet,
    delete_proof: EdgeSet,
}

impl EnhancedGraph {
    pub fn new(graph: MultiGraph, contract_proof: EdgeSet, delete_proof: EdgeSet) -> Result<Self> {
        graph.check_edges(contract_proof | delete_proof)?;
        Ok(EnhancedGraph { graph, contract_proof, delete_proof })
    }

    pub fn plain(graph: MultiGraph) -> Self {
        EnhancedGraph { graph, contract_proof: EdgeSet::EMPTY, delete_proof: EdgeSet::EMPTY }
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn contract_proof(&self) -> EdgeSet {
        self.contract_proof
    }

    pub fn delete_proof(&self) -> EdgeSet {
        self.delete_proof
    }

    pub fn protected(&self) -> EdgeSet {
        self.contract_proof | self.delete_proof
    }

    /// `|E| + |C| + |D|`.
    pub fn weight(&self) -> usize {
        self.graph.num_edges() + self.contract_proof.len() + self.delete_proof.len()
    }

    /// Replaces the underlying graph, dropping marks on edges that vanished.
    pub fn with_graph(&self, graph: MultiGraph) -> Self {
        let e = graph.edges();
        EnhancedGraph { graph, contract_proof: self.contract_proof & e, delete_proof: self.delete_proof & e }
    }

    /// The enhanced dual on a given dual graph over the same edge set:
    /// contract-proof and delete-proof marks are exchanged.
    pub fn dual_on(&self, dual_graph: MultiGraph) -> Result<Self> {
        if dual_graph.edges() != self.graph.edges() {
            return Err(Error::domain("a dual graph must have the same edge identifiers"));
        }
        Ok(EnhancedGraph { graph: dual_graph, contract_proof: self.delete_proof, delete_proof: self.contract_proof })
    }
}

impl fmt::Display for EnhancedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} c={} d={}", self.graph, self.contract_proof, self.delete_proof)
    }
}

/// Checks that `s` is a 5-configuration of `g`.
pub fn check_config(g: &MultiGraph, s: EdgeSet) -> Result<()> {
    if s.len() != 5 {
        return Err(Error::domain(format!("a 5-configuration needs 5 edges, got {}", s.len())));
    }
    g.check_edges(s)
}

/// Whether `(a, E \ a)` is a bad separation of `h` for the configuration `s`.
pub fn is_bad_separation(h: &MultiGraph, a: EdgeSet, s: EdgeSet) -> bool {
    let s = s & h.edges();
    let (in_a, in_b) = ((s & a).len(), (s - a).len());
    match h.boundary_unchecked(a & h.edges()).len() {
        0 | 1 => in_a > 0 && in_b > 0,
        2 => in_a.min(in_b) == 2,
        _ => false,
    }
}

/// Finds a bad separation of `h` for the configuration `s`, if any.
///
/// Every separation of order at most two is a union of the pieces left by
/// its boundary, so it suffices to scan cuts of at most two vertices and
/// group pieces by how many configuration edges they hold.
pub fn find_bad_separation(h: &MultiGraph, s: EdgeSet) -> Option<GraphSeparation> {
    let s = s & h.edges();
    if s.len() < 2 {
        return None;
    }
    let adj = h.adjacency();
    let inc = h.incidence();
    let active = h.edge_vertices(h.edges());
    let cuts = std::iter::once(VertexSet::EMPTY).chain(active.iter().map(VertexSet::singleton)).chain(active.combinations(2));
    for x in cuts {
        let loaded: Vec<(EdgeSet, usize)> =
            h.pieces(x, &adj, &inc).into_iter().map(|p| (p, (p & s).len())).filter(|&(_, c)| c > 0).collect();
        if loaded.len() < 2 {
            continue;
        }
        let side = if x.len() <= 1 {
            Some(loaded[0].0)
        } else if s.len() >= 4 {
            loaded.iter().find(|&&(_, c)| c == 2).map(|&(p, _)| p).or_else(|| {
                let mut ones = loaded.iter().filter(|&&(_, c)| c == 1);
                match (ones.next(), ones.next()) {
                    (Some(&(p, _)), Some(&(q, _))) => Some(p | q),
                    _ => None,
                }
            })
        } else {
            None
        };
        if let Some(a) = side {
            debug_assert!(is_bad_separation(h, a, s));
            return Some(GraphSeparation { side_a: a, side_b: h.edges() - a, boundary: h.boundary_unchecked(a) });
        }
    }
    None
}

/// The graph on which a bad separation was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitOperation {
    Itself,
    Delete(EdgeId),
    Contract(EdgeId),
}

impl SplitOperation {
    pub fn apply(self, g: &MultiGraph) -> Result<MultiGraph> {
        match self {
            SplitOperation::Itself => Ok(*g),
            SplitOperation::Delete(e) => g.delete_edge(e),
            SplitOperation::Contract(e) => g.contract_edge(e),
        }
    }

    /// The configuration seen by the derived graph.
    pub fn remaining(self, s: EdgeSet) -> EdgeSet {
        match self {
            SplitOperation::Itself => s,
            SplitOperation::Delete(e) | SplitOperation::Contract(e) => s.without(e),
        }
    }
}

impl fmt::Display for SplitOperation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitOperation::Itself => write!(f, "itself"),
            SplitOperation::Delete(e) => write!(f, "delete {e}"),
            SplitOperation::Contract(e) => write!(f, "contract {e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    pub operation: SplitOperation,
    /// A bad separation of the derived graph.
    pub separation: GraphSeparation,
}

impl SplitWitness {
    /// Configuration edges on each side of the separation.
    pub fn config_sides(&self, s: EdgeSet) -> (EdgeSet, EdgeSet) {
        let s = self.operation.remaining(s);
        (s & self.separation.side_a, s & self.separation.side_b)
    }

    /// Re-checks the witness against the definition.
    pub fn verify(&self, g: &EnhancedGraph, s: EdgeSet) -> bool {
        let allowed = match self.operation {
            SplitOperation::Itself => true,
            SplitOperation::Delete(e) => s.contains(e) && !g.delete_proof.contains(e),
            SplitOperation::Contract(e) => s.contains(e) && !g.contract_proof.contains(e) && !g.graph.is_loop(e),
        };
        let Ok(h) = self.operation.apply(&g.graph) else { return false };
        allowed
            && self.separation.side_a | self.separation.side_b == h.edges()
            && !self.separation.side_a.intersects(self.separation.side_b)
            && is_bad_separation(&h, self.separation.side_a, self.operation.remaining(s))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitVerdict {
    pub splits: bool,
    pub witness: Option<SplitWitness>,
}

/// The verdict for one configuration of an enhanced graph, with a witness
/// when it splits.
pub fn enhanced_config_splits(g: &EnhancedGraph, s: EdgeSet) -> Result<SplitVerdict> {
    check_config(&g.graph, s)?;
    let ops = std::iter::once(SplitOperation::Itself)
        .chain((s - g.delete_proof).iter().map(SplitOperation::Delete))
        .chain((s - g.contract_proof - g.graph.loops()).iter().map(SplitOperation::Contract));
    for op in ops {
        let h = op.apply(&g.graph)?;
        if let Some(separation) = find_bad_separation(&h, op.remaining(s)) {
            return Ok(SplitVerdict { splits: true, witness: Some(SplitWitness { operation: op, separation }) });
        }
    }
    Ok(SplitVerdict { splits: false, witness: None })
}

pub fn config_splits(g: &MultiGraph, s: EdgeSet) -> Result<SplitVerdict> {
    enhanced_config_splits(&EnhancedGraph::plain(*g), s)
}

/// Tree formulation: `S` splits iff for some `e ∈ S` and pairing
/// `S \ e = S1 ∪ S2`, one of `G \ e`, `G / e` has no `T` making both
/// `T ∪ S1` and `T ∪ S2` spanning trees.
pub fn config_splits_via_trees(g: &MultiGraph, s: EdgeSet) -> Result<bool> {
    check_config(g, s)?;
    for e in s.iter() {
        let rest = s.without(e);
        let mut derived = vec![g.delete_edge(e)?];
        if !g.is_loop(e) {
            derived.push(g.contract_keeping(e, rest)?);
        }
        let v = rest.to_vec();
        for partner in 1..4 {
            let s1 = EdgeSet::from_iter([v[0], v[partner]]);
            let s2 = rest - s1;
            for h in &derived {
                if !matroid::common_tree_exists(h, s1, s2)? {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Definition via polynomials: some Dodgson of `S` vanishes identically.
pub fn config_splits_algebraic(g: &MultiGraph, s: EdgeSet) -> Result<bool> {
    check_config(g, s)?;
    for spec in kirchhoff::thirty_dodgsons(s)? {
        if kirchhoff::dodgson(g, &spec)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Which protections a configuration needs in order not to split.
///
/// `S` is non-split under `(C, D)` exactly when the graph itself has no bad
/// separation, `delete_required ⊆ D` and `contract_required ⊆ C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SplitProfile {
    pub config: EdgeSet,
    pub itself: bool,
    pub delete_required: EdgeSet,
    pub contract_required: EdgeSet,
}

impl SplitProfile {
    pub fn new(g: &MultiGraph, s: EdgeSet) -> Self {
        let itself = find_bad_separation(g, s).is_some();
        let mut delete_required = EdgeSet::EMPTY;
        let mut contract_required = EdgeSet::EMPTY;
        if !itself {
            for e in s.iter() {
                if find_bad_separation(&g.delete_edges(EdgeSet::singleton(e)), s.without(e)).is_some() {
                    delete_required.insert(e);
                }
                if !g.is_loop(e) {
                    let h = g.contract_edge(e).expect("edge of g");
                    if find_bad_separation(&h, s.without(e)).is_some() {
                        contract_required.insert(e);
                    }
                }
            }
        }
        SplitProfile { config: s, itself, delete_required, contract_required }
    }

    pub fn splits_under(&self, contract_proof: EdgeSet, delete_proof: EdgeSet) -> bool {
        self.itself || !self.delete_required.is_subset(delete_proof) || !self.contract_required.is_subset(contract_proof)
    }

    /// The least protections under which `S` does not split.
    pub fn minimal_protection(&self) -> Option<(EdgeSet, EdgeSet)> {
        (!self.itself).then_some((self.contract_required, self.delete_required))
    }
}

/// Profiles of every 5-configuration of `g`, in combination order.
pub fn profile_table(g: &MultiGraph) -> Vec<SplitProfile> {
    g.edges().combinations(5).map(|s| SplitProfile::new(g, s)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphVerdict {
    pub splits: bool,
    /// The first non-split configuration in combination order.
    pub failing: Option<EdgeSet>,
}

/// Whether every 5-configuration of the enhanced graph splits.
pub fn enhanced_splits(g: &EnhancedGraph) -> GraphVerdict {
    let configs: Vec<EdgeSet> = g.graph.edges().combinations(5).collect();
    let failing = configs.par_iter().find_first(|&&s| !enhanced_config_splits(g, s).expect("configuration of g").splits).copied();
    GraphVerdict { splits: failing.is_none(), failing }
}

/// Whether every 5-configuration of `g` splits. A configuration meeting two
/// blocks always splits, so disconnected graphs are decided block by block.
pub fn graph_splits(g: &MultiGraph) -> GraphVerdict {
    enhanced_splits(&EnhancedGraph::plain(*g))
}

/// Replacement for an edge that is both contract-proof and delete-proof.
/// Each variant has one configuration edge `f` not joining the original ends
/// `x, y`, and the gadget minus `f` still joins `x` to `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Gadget {
    /// Path `x z y` plus the edge `x y`; `f = x z`.
    #[default]
    Triangle,
    /// Edge `x z` followed by a parallel pair `z y`; `f` in the pair.
    ParallelThenSeries,
    /// Parallel pair `x z` followed by edge `z y`; `f` in the pair.
    SeriesThenParallel,
}

impl Gadget {
    pub const ALL: [Gadget; 3] = [Gadget::Triangle, Gadget::ParallelThenSeries, Gadget::SeriesThenParallel];
}

/// An ordinary graph and configuration associated with `(g, s)`.
pub fn from_enhanced(g: &EnhancedGraph, s: EdgeSet) -> Result<(MultiGraph, EdgeSet)> {
    from_enhanced_with(g, s, Gadget::default())
}

pub fn from_enhanced_with(g: &EnhancedGraph, s: EdgeSet, gadget: Gadget) -> Result<(MultiGraph, EdgeSet)> {
    check_config(&g.graph, s)?;
    if !g.protected().is_subset(s) {
        return Err(Error::domain("protected edges must lie in the configuration"));
    }
    let mut out = g.graph;
    let mut next_id = g.graph.edges().max().map_or(0, |m| m + 1);
    let mut fresh = || {
        next_id += 1;
        next_id - 1
    };
    for e in s.iter() {
        let (x, y) = g.graph.ends(e);
        match (g.contract_proof.contains(e), g.delete_proof.contains(e)) {
            (false, false) => {}
            (false, true) => {
                out.add_edge(fresh(), x, y)?;
            }
            (true, false) => {
                let z = out.fresh_vertex()?;
                out = out.delete_edges(EdgeSet::singleton(e));
                out.add_vertex(z)?;
                out.add_edge(e, x, z)?;
                out.add_edge(fresh(), z, y)?;
            }
            (true, true) => {
                let z = out.fresh_vertex()?;
                out = out.delete_edges(EdgeSet::singleton(e));
                out.add_vertex(z)?;
                match gadget {
                    Gadget::Triangle => {
                        out.add_edge(e, x, z)?;
                        out.add_edge(fresh(), z, y)?;
                        out.add_edge(fresh(), x, y)?;
                    }
                    Gadget::ParallelThenSeries => {
                        out.add_edge(fresh(), x, z)?;
                        out.add_edge(e, z, y)?;
                        out.add_edge(fresh(), z, y)?;
                    }
                    Gadget::SeriesThenParallel => {
                        out.add_edge(e, x, z)?;
                        out.add_edge(fresh(), x, z)?;
                        out.add_edge(fresh(), z, y)?;
                    }
                }
            }
        }
    }
    Ok((out, s))
}

/// The enhanced graph and configuration associated with a non-split
/// configuration `s` of `g`: the block holding `s` with every maximal lobe
/// (a 2-separated side with at most one configuration edge) collapsed to a
/// single edge. Collapsed edges keep the identifier of the configuration
/// edge in the lobe, or else the lobe's smallest identifier.
pub fn to_enhanced(g: &MultiGraph, s: EdgeSet) -> Result<(EnhancedGraph, EdgeSet)> {
    if config_splits(g, s)?.splits {
        return Err(Error::domain("the configuration splits, so no enhanced graph is associated with it"));
    }
    let adj = g.adjacency();
    let inc = g.incidence();
    let anchor = s.min().expect("nonempty configuration");
    let mut block = g.edges();
    for x in std::iter::once(VertexSet::EMPTY).chain(g.vertices().iter().map(VertexSet::singleton)) {
        if let Some(p) = g.pieces(x, &adj, &inc).into_iter().find(|p| p.contains(anchor)) {
            block = block & p;
        }
    }
    let b = g.restrict(block).without_isolated();
    let mut maximal: BTreeMap<EdgeId, EdgeSet> = block.iter().map(|e| (e, EdgeSet::singleton(e))).collect();
    for sep in b.low_order_separations(2)? {
        if sep.order() != 2 {
            continue;
        }
        for lobe in [sep.side_a, sep.side_b] {
            if !lobe.is_empty() && (lobe & s).len() <= 1 {
                for e in lobe.iter() {
                    let m = maximal.get_mut(&e).expect("block edge");
                    *m = *m | lobe;
                }
            }
        }
    }
    let mut lobes: Vec<EdgeSet> = maximal.into_values().collect();
    lobes.sort();
    lobes.dedup();
    let mut enhanced = MultiGraph::new();
    let (mut c, mut d, mut s_new) = (EdgeSet::EMPTY, EdgeSet::EMPTY, EdgeSet::EMPTY);
    for lobe in lobes {
        let ends = b.boundary_unchecked(lobe);
        let (x, y) = match (ends.min(), ends.max()) {
            (Some(x), Some(y)) if ends.len() == 2 => (x, y),
            _ => return Err(Error::domain("lobes do not partition the block; the configuration is not 2-separated cleanly")),
        };
        let in_s = lobe & s;
        let id = in_s.min().unwrap_or_else(|| lobe.min().expect("nonempty lobe"));
        for v in [x, y] {
            if !enhanced.vertices().contains(v) {
                enhanced.add_vertex(v)?;
            }
        }
        enhanced.add_edge(id, x, y)?;
        if let Some(f) = in_s.min() {
            s_new.insert(id);
            let rest = b.restrict(lobe - s);
            if rest.components().iter().any(|comp| comp.contains(x) && comp.contains(y)) {
                d.insert(id);
            }
            let (fu, fv) = b.ends(f);
            if (fu.min(fv), fu.max(fv)) != (x, y) {
                c.insert(id);
            }
        }
    }
    Ok((EnhancedGraph::new(enhanced, c, d)?, s_new))
}

/// Necessary conditions on any non-split configuration: a triangle inside
/// `S` is contract-proof, and all three edges at a degree-3 vertex inside
/// `S` are delete-proof.
pub fn protection_conditions_hold(g: &EnhancedGraph, s: EdgeSet) -> bool {
    let h = &g.graph;
    for tri in s.combinations(3) {
        let verts = h.edge_vertices(tri);
        let is_triangle = verts.len() == 3 && verts.iter().all(|v| (h.incident_edges(v) & tri).len() == 2) && (tri & h.loops()).is_empty();
        if is_triangle && !tri.is_subset(g.contract_proof) {
            return false;
        }
    }
    for v in h.vertices().iter() {
        let star = h.incident_edges(v);
        if h.degree(v) == 3 && star.len() == 3 && star.is_subset(s) && !star.is_subset(g.delete_proof) {
            return false;
        }
    }
    true
}
