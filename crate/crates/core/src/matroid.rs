//! Matroids given by rank oracles, matroid intersection with a checked dual
//! certificate, common spanning trees and caterpillar width.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::sets::{EdgeId, EdgeSet};
use crate::width;

pub trait RankOracle {
    fn ground(&self) -> EdgeSet;
    fn rank(&self, s: EdgeSet) -> usize;

    fn is_independent(&self, s: EdgeSet) -> bool {
        self.rank(s) == s.len()
    }
}

/// Cycle matroid of a graph: `r(S) = |V| - comp(V, S)`.
#[derive(Clone, Copy, Debug)]
pub struct GraphicMatroid {
    pub host: MultiGraph,
}

impl GraphicMatroid {
    pub fn new(host: MultiGraph) -> Self {
        GraphicMatroid { host }
    }
}

impl RankOracle for GraphicMatroid {
    fn ground(&self) -> EdgeSet {
        self.host.edges()
    }

    fn rank(&self, s: EdgeSet) -> usize {
        self.host.forest_rank(s)
    }
}

/// Every subset independent.
#[derive(Clone, Copy, Debug)]
pub struct FreeMatroid {
    pub ground: EdgeSet,
}

impl RankOracle for FreeMatroid {
    fn ground(&self) -> EdgeSet {
        self.ground
    }

    fn rank(&self, s: EdgeSet) -> usize {
        (s & self.ground).len()
    }
}

/// `M / contract \ delete`, with rank `r(X ∪ C) - r(C)`.
pub struct MinorOracle<'a> {
    base: &'a dyn RankOracle,
    contract: EdgeSet,
    delete: EdgeSet,
    contract_rank: usize,
}

impl<'a> MinorOracle<'a> {
    pub fn new(base: &'a dyn RankOracle, contract: EdgeSet, delete: EdgeSet) -> Self {
        MinorOracle { base, contract, delete, contract_rank: base.rank(contract) }
    }
}

impl RankOracle for MinorOracle<'_> {
    fn ground(&self) -> EdgeSet {
        self.base.ground() - self.contract - self.delete
    }

    fn rank(&self, s: EdgeSet) -> usize {
        self.base.rank((s & self.ground()) | self.contract) - self.contract_rank
    }
}

/// `r(A) + r(E \ A) - r(E) + 1`.
pub fn matroid_sep_order(m: &dyn RankOracle, a: EdgeSet) -> Result<usize> {
    let e = m.ground();
    if !a.is_subset(e) {
        return Err(Error::domain("separation side is not inside the ground set"));
    }
    Ok(m.rank(a) + m.rank(e - a) + 1 - m.rank(e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntersectionOutcome {
    /// A set of size `k` independent in both matroids.
    Common(EdgeSet),
    /// A partition `(A, B)` of the ground set with `r1(A) + r2(B) < k`.
    Certificate { a: EdgeSet, b: EdgeSet },
}

/// Largest common independent set by repeated shortest augmenting paths in
/// the exchange graph, stopping once size `k` is reached.
pub fn max_common_independent(m1: &dyn RankOracle, m2: &dyn RankOracle, k: usize) -> Result<(EdgeSet, EdgeSet)> {
    let ground = m1.ground();
    if ground != m2.ground() {
        return Err(Error::domain("matroids have different ground sets"));
    }
    let mut x = EdgeSet::EMPTY;
    loop {
        let outside = ground - x;
        let sources: EdgeSet = outside.iter().filter(|&y| m1.is_independent(x.with(y))).collect();
        let sinks: EdgeSet = outside.iter().filter(|&y| m2.is_independent(x.with(y))).collect();
        let mut parent = [usize::MAX; crate::sets::MAX_IDS];
        let mut reached = sources;
        let mut queue: VecDeque<EdgeId> = sources.iter().collect();
        let mut end = None;
        while let Some(u) = queue.pop_front() {
            if sinks.contains(u) {
                end = Some(u);
                break;
            }
            let next: Vec<EdgeId> = if x.contains(u) {
                // u in X → y outside with X - u + y independent in M1
                outside.iter().filter(|&y| !reached.contains(y) && m1.is_independent(x.without(u).with(y))).collect()
            } else {
                // y outside → x in X with X - x + y independent in M2
                x.iter().filter(|&w| !reached.contains(w) && m2.is_independent(x.without(w).with(u))).collect()
            };
            for v in next {
                reached.insert(v);
                parent[v] = u;
                queue.push_back(v);
            }
        }
        match end {
            Some(mut v) => {
                loop {
                    if x.contains(v) {
                        x.remove(v);
                    } else {
                        x.insert(v);
                    }
                    if parent[v] == usize::MAX {
                        break;
                    }
                    v = parent[v];
                }
                if x.len() >= k {
                    return Ok((x, reached));
                }
            }
            None => return Ok((x, reached)),
        }
    }
}

/// Either a common independent set of size `k` or a verified certificate
/// that none exists.
pub fn matroid_intersection(m1: &dyn RankOracle, m2: &dyn RankOracle, k: usize) -> Result<IntersectionOutcome> {
    let (x, reached) = max_common_independent(m1, m2, k)?;
    if x.len() >= k {
        let common = x.iter().take(k).collect();
        return Ok(IntersectionOutcome::Common(common));
    }
    let ground = m1.ground();
    for (a, b) in [(ground - reached, reached), (reached, ground - reached)] {
        if m1.rank(a) + m2.rank(b) == x.len() {
            debug_assert!(m1.rank(a) + m2.rank(b) < k);
            return Ok(IntersectionOutcome::Certificate { a, b });
        }
    }
    Err(Error::domain("intersection certificate failed verification"))
}

/// Whether some `T ⊆ E \ (S1 ∪ S2)` makes both `T ∪ S1` and `T ∪ S2`
/// spanning trees of `g`.
pub fn common_tree_exists(g: &MultiGraph, s1: EdgeSet, s2: EdgeSet) -> Result<bool> {
    if s1.intersects(s2) {
        return Err(Error::domain("S1 and S2 overlap"));
    }
    g.check_edges(s1 | s2)?;
    if s1.len() != s2.len() || !g.is_connected() || !g.is_acyclic(s1) || !g.is_acyclic(s2) {
        return Ok(false);
    }
    let rest = g.edges() - s1 - s2;
    if g.forest_rank(rest | s1) + 1 < g.num_vertices() || g.forest_rank(rest | s2) + 1 < g.num_vertices() {
        return Ok(false);
    }
    let m = GraphicMatroid::new(*g);
    let m1 = MinorOracle::new(&m, s1, s2);
    let m2 = MinorOracle::new(&m, s2, s1);
    let k = g.num_vertices() - 1 - s1.len();
    Ok(matches!(matroid_intersection(&m1, &m2, k)?, IntersectionOutcome::Common(_)))
}

/// Brute-force reference for [`common_tree_exists`].
pub fn common_tree_exists_brute(g: &MultiGraph, s1: EdgeSet, s2: EdgeSet) -> bool {
    let mut found = false;
    g.for_each_spanning_tree(&mut |t| {
        if !found && s1.is_subset(t) && !t.intersects(s2) && g.is_spanning_tree((t - s1) | s2) {
            found = true;
        }
    });
    found
}

/// Minimum over leaf orderings of a caterpillar of the largest separation
/// order of a prefix or a single element, with an optimal ordering.
pub fn caterpillar_width_with_order(m: &dyn RankOracle) -> Result<(usize, Vec<EdgeId>)> {
    let items = m.ground().to_vec();
    if items.len() < 2 {
        return Err(Error::domain("caterpillar width needs at least two elements"));
    }
    if items.len() > width::MAX_DP_EDGES {
        return Err(Error::Unsupported(format!("caterpillar width over {} elements", items.len())));
    }
    let total = m.rank(m.ground());
    let to_set = |mask: u32| -> EdgeSet { items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect() };
    let order_of = |a: EdgeSet| (m.rank(a) + m.rank(m.ground() - a) + 1 - total) as u8;
    let (w, order) = width::min_max_ordering(items.len(), &|mask| order_of(to_set(mask)));
    let singles = items.iter().map(|&e| order_of(EdgeSet::singleton(e))).max().unwrap_or(0);
    Ok((w.max(singles) as usize, order.into_iter().map(|i| items[i]).collect()))
}

pub fn caterpillar_width(m: &dyn RankOracle) -> Result<usize> {
    Ok(caterpillar_width_with_order(m)?.0)
}
