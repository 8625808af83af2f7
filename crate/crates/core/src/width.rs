//! Width of edge orderings: the largest boundary of a proper prefix, and its
//! minimum over all orderings.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::sets::{EdgeId, EdgeSet, MAX_IDS};

/// Largest edge count the subset dynamic programme accepts.
pub const MAX_DP_EDGES: usize = 22;

/// `max_{1 ≤ ℓ < n} |∂{e_1..e_ℓ}|`; zero for a single edge.
pub fn ordering_width(g: &MultiGraph, ord: &[EdgeId]) -> Result<usize> {
    let as_set: EdgeSet = ord.iter().copied().collect();
    if ord.iter().any(|&e| e >= MAX_IDS) || as_set != g.edges() || ord.len() != g.num_edges() {
        return Err(Error::domain("ordering is not a permutation of the edges"));
    }
    let mut prefix = EdgeSet::EMPTY;
    let mut best = 0;
    for &e in &ord[..ord.len().saturating_sub(1)] {
        prefix.insert(e);
        best = best.max(g.boundary_unchecked(prefix).len());
    }
    Ok(best)
}

/// Minimises `max(cost(prefix))` over orderings of `n` items, where `cost`
/// is charged on every proper nonempty prefix. Returns the optimum and an
/// optimal ordering of item indices.
pub(crate) fn min_max_ordering(n: usize, cost: &dyn Fn(u32) -> u8) -> (u8, Vec<usize>) {
    if n == 0 {
        return (0, Vec::new());
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut f = vec![u8::MAX; 1 << n];
    f[0] = 0;
    for mask in 1..=full {
        let mut best = u8::MAX;
        let mut bits = mask;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            best = best.min(f[(mask ^ b) as usize]);
            bits ^= b;
        }
        f[mask as usize] = if mask == full { best } else { best.max(cost(mask)) };
    }
    let mut order = Vec::with_capacity(n);
    let mut mask = full;
    while mask != 0 {
        let target = f[mask as usize];
        let mut bits = mask;
        loop {
            let b = bits & bits.wrapping_neg();
            let prev = mask ^ b;
            if f[prev as usize] <= target {
                order.push(b.trailing_zeros() as usize);
                mask = prev;
                break;
            }
            bits ^= b;
        }
    }
    order.reverse();
    (f[full as usize], order)
}

/// Whether some ordering keeps every proper prefix cost at most `k`
/// (search restricted to prefixes within budget).
pub(crate) fn ordering_within(n: usize, k: u8, cost: &dyn Fn(u32) -> u8) -> bool {
    if n <= 1 {
        return true;
    }
    let full: u32 = (1 << n) - 1;
    let mut seen = vec![false; 1 << n];
    let mut stack = vec![0u32];
    seen[0] = true;
    while let Some(mask) = stack.pop() {
        for i in 0..n {
            let next = mask | 1 << i;
            if next == mask || seen[next as usize] {
                continue;
            }
            if next == full {
                return true;
            }
            if cost(next) <= k {
                seen[next as usize] = true;
                stack.push(next);
            }
        }
    }
    false
}

struct EdgeIndex {
    edges: Vec<EdgeId>,
    inc: Vec<u32>,
}

impl EdgeIndex {
    fn new(g: &MultiGraph) -> Result<Self> {
        if g.num_edges() == 0 || !g.is_connected() {
            return Err(Error::domain("width needs a connected graph with at least one edge"));
        }
        if g.num_edges() > MAX_DP_EDGES {
            return Err(Error::Unsupported(format!("width of a graph with {} edges (cap {MAX_DP_EDGES})", g.num_edges())));
        }
        let edges = g.edges().to_vec();
        let inc = g
            .vertices()
            .iter()
            .map(|v| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| {
                        let (a, b) = g.ends(e);
                        a == v || b == v
                    })
                    .fold(0u32, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(EdgeIndex { edges, inc })
    }

    fn boundary(&self, mask: u32) -> u8 {
        let full = (1u32 << self.edges.len()) - 1;
        let rest = full & !mask;
        self.inc.iter().filter(|&&i| i & mask != 0 && i & rest != 0).count() as u8
    }
}

/// Exact width and an ordering achieving it.
pub fn graph_width(g: &MultiGraph) -> Result<(usize, Vec<EdgeId>)> {
    let idx = EdgeIndex::new(g)?;
    let (w, order) = min_max_ordering(idx.edges.len(), &|m| idx.boundary(m));
    Ok((w as usize, order.into_iter().map(|i| idx.edges[i]).collect()))
}

pub fn has_width_le(g: &MultiGraph, k: usize) -> Result<bool> {
    let idx = EdgeIndex::new(g)?;
    Ok(ordering_within(idx.edges.len(), k.min(u8::MAX as usize) as u8, &|m| idx.boundary(m)))
}
