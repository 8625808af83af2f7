//! Kirchhoff polynomials, Dodgson polynomials and 5-invariants.
//!
//! The exploded Laplacian of a graph is the block matrix
//!
//! ```text
//!   M_G = [  A     ξ̂ ]
//!         [ -ξ̂ᵀ    0 ]
//! ```
//!
//! where `A` is the diagonal matrix of edge variables and `ξ̂` is the signed
//! incidence matrix with the column of one vertex removed. The first rows and
//! columns are indexed by edges (in the convention's edge order), the rest by
//! the remaining vertices in increasing order.
//!
//! Signs of Dodgson polynomials depend on the matrix convention. Every signed
//! result here is relative to [`default_convention`] unless a convention is
//! passed explicitly.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::linalg;
use crate::poly::{Monomial, MultiPoly};
use crate::sets::{EdgeId, EdgeSet, Vertex};

/// Interpolation evaluates `2^v` integer determinants for `v` free variables.
const MAX_INTERPOLATION_VARS: usize = 22;

/// Edge order, edge orientations and the removed vertex used to build `M_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixConvention {
    edge_order: Vec<EdgeId>,
    orientation: BTreeMap<EdgeId, (Vertex, Vertex)>,
    removed_vertex: Vertex,
}

impl MatrixConvention {
    /// Validates that `edge_order` is a permutation of `E(g)`, that each
    /// orientation is one of the two orders of the edge's ends, and that the
    /// removed vertex belongs to `g`.
    pub fn new(
        g: &MultiGraph,
        edge_order: Vec<EdgeId>,
        orientation: BTreeMap<EdgeId, (Vertex, Vertex)>,
        removed_vertex: Vertex,
    ) -> Result<Self> {
        let as_set: EdgeSet = edge_order.iter().copied().collect();
        if as_set != g.edges() || edge_order.len() != g.num_edges() {
            return Err(Error::domain("edge order is not a permutation of the edges"));
        }
        for e in g.edges().iter() {
            let (u, v) = g.ends(e);
            match orientation.get(&e) {
                Some(&(a, b)) if (a, b) == (u, v) || (a, b) == (v, u) => {}
                _ => return Err(Error::domain(format!("bad orientation for edge {e}"))),
            }
        }
        if orientation.len() != g.num_edges() {
            return Err(Error::domain("orientation lists edges outside the graph"));
        }
        if !g.vertices().contains(removed_vertex) {
            return Err(Error::UnknownVertex(removed_vertex));
        }
        Ok(MatrixConvention { edge_order, orientation, removed_vertex })
    }

    pub fn edge_order(&self) -> &[EdgeId] {
        &self.edge_order
    }

    /// `(tail, head)` of each edge; the tail gets `+1` in the incidence matrix.
    pub fn orientation(&self, e: EdgeId) -> Option<(Vertex, Vertex)> {
        self.orientation.get(&e).copied()
    }

    pub fn removed_vertex(&self) -> Vertex {
        self.removed_vertex
    }
}

/// Edges ascending, each oriented from its smaller to its larger end, and the
/// largest vertex removed.
pub fn default_convention(g: &MultiGraph) -> Result<MatrixConvention> {
    let removed_vertex = g.vertices().max().ok_or_else(|| Error::domain("graph has no vertices"))?;
    Ok(MatrixConvention { edge_order: g.edges().to_vec(), orientation: g.edges().iter().map(|e| (e, g.ends(e))).collect(), removed_vertex })
}

/// Layout of `M_G`: which edge or vertex each row/column index stands for.
struct Layout {
    edges: Vec<EdgeId>,
    /// Constant part of `M_G` (all variables zero).
    base: Vec<Vec<i64>>,
}

impl Layout {
    fn new(g: &MultiGraph, conv: &MatrixConvention) -> Self {
        let edges = conv.edge_order.clone();
        let vertices: Vec<Vertex> = g.vertices().iter().filter(|&v| v != conv.removed_vertex).collect();
        let m = edges.len();
        let size = m + vertices.len();
        let mut base = vec![vec![0i64; size]; size];
        let vpos: BTreeMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, m + i)).collect();
        for (r, &e) in edges.iter().enumerate() {
            let (tail, head) = conv.orientation[&e];
            if tail == head {
                continue;
            }
            for (v, sign) in [(tail, 1i64), (head, -1i64)] {
                if let Some(&c) = vpos.get(&v) {
                    base[r][c] += sign;
                    base[c][r] -= sign;
                }
            }
        }
        Layout { edges, base }
    }

    fn size(&self) -> usize {
        self.base.len()
    }

    fn edge_index(&self, e: EdgeId) -> usize {
        self.edges.iter().position(|&f| f == e).expect("edge in layout")
    }
}

/// The symbolic exploded Laplacian under `conv`.
pub fn exploded_matrix(g: &MultiGraph, conv: &MatrixConvention) -> Vec<Vec<MultiPoly>> {
    let layout = Layout::new(g, conv);
    let mut m: Vec<Vec<MultiPoly>> = layout.base.iter().map(|row| row.iter().map(|&x| MultiPoly::constant(x)).collect()).collect();
    for (i, &e) in layout.edges.iter().enumerate() {
        m[i][i] = MultiPoly::var(e);
    }
    m
}

/// `Ψ^{I,J}_K`: rows `I` and columns `J` deleted, `x_e = 0` for `e ∈ K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DodgsonSpec {
    pub i: EdgeSet,
    pub j: EdgeSet,
    pub k: EdgeSet,
}

impl DodgsonSpec {
    pub fn new(i: EdgeSet, j: EdgeSet, k: EdgeSet) -> Result<Self> {
        if i.len() != j.len() {
            return Err(Error::domain(format!("|I| = {} differs from |J| = {}", i.len(), j.len())));
        }
        if i.intersects(k) || j.intersects(k) {
            return Err(Error::domain("K must be disjoint from I and J"));
        }
        Ok(DodgsonSpec { i, j, k })
    }

    /// `I ∪ J ∪ K`.
    pub fn support(&self) -> EdgeSet {
        self.i | self.j | self.k
    }

    /// The same Dodgson with `I` and `J` exchanged so that `I ≤ J`.
    pub fn normalized(self) -> Self {
        if self.j < self.i {
            DodgsonSpec { i: self.j, j: self.i, k: self.k }
        } else {
            self
        }
    }
}

impl fmt::Display for DodgsonSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I={} J={} K={}", self.i, self.j, self.k)
    }
}

/// How to evaluate polynomial determinants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DetMethod {
    /// Integer determinants at every 0/1 point of the free variables,
    /// followed by Möbius inversion. Exact because Dodgsons are multilinear.
    #[default]
    Interpolation,
    /// Fraction-free elimination over polynomials.
    Bareiss,
    /// Laplace expansion along the first row (small matrices only).
    Cofactor,
}

fn check_spec(g: &MultiGraph, spec: &DodgsonSpec) -> Result<()> {
    DodgsonSpec::new(spec.i, spec.j, spec.k)?;
    g.check_edges(spec.support())
}

/// `Ψ_G`, normalised to positive coefficients; zero for disconnected graphs.
pub fn kirchhoff_poly(g: &MultiGraph) -> MultiPoly {
    if g.num_vertices() == 0 || !g.is_connected() {
        return MultiPoly::zero();
    }
    let spec = DodgsonSpec { i: EdgeSet::EMPTY, j: EdgeSet::EMPTY, k: EdgeSet::EMPTY };
    dodgson(g, &spec).expect("empty spec is valid").normalized_sign()
}

/// `Σ_T ∏_{e ∉ T} x_e` over spanning trees `T`.
pub fn kirchhoff_poly_via_trees(g: &MultiGraph) -> MultiPoly {
    let mut p = MultiPoly::zero();
    g.for_each_spanning_tree(&mut |t| p.add_term(Monomial::from_set(g.edges() - t), BigInt::one()));
    p
}

/// `Ψ^{I,J}_K` under the default convention.
pub fn dodgson(g: &MultiGraph, spec: &DodgsonSpec) -> Result<MultiPoly> {
    dodgson_with(g, spec, &default_convention(g)?, DetMethod::default())
}

pub fn dodgson_with(g: &MultiGraph, spec: &DodgsonSpec, conv: &MatrixConvention, method: DetMethod) -> Result<MultiPoly> {
    check_spec(g, spec)?;
    let layout = Layout::new(g, conv);
    let keep_rows: Vec<usize> = (0..layout.size()).filter(|&r| r >= layout.edges.len() || !spec.i.contains(layout.edges[r])).collect();
    let keep_cols: Vec<usize> = (0..layout.size()).filter(|&c| c >= layout.edges.len() || !spec.j.contains(layout.edges[c])).collect();
    match method {
        DetMethod::Interpolation => interpolate(&layout, spec, &keep_rows, &keep_cols),
        DetMethod::Bareiss | DetMethod::Cofactor => {
            let full = exploded_matrix(g, conv);
            let m: Vec<Vec<MultiPoly>> =
                keep_rows.iter().map(|&r| keep_cols.iter().map(|&c| full[r][c].set_zero(spec.k)).collect()).collect();
            if method == DetMethod::Bareiss {
                Ok(det_poly_bareiss(m))
            } else {
                det_poly_cofactor(&m)
            }
        }
    }
}

/// `Ψ^{I,J}_K` evaluated at `x_e = value(e)`, an exact integer.
pub fn dodgson_value(g: &MultiGraph, spec: &DodgsonSpec, conv: &MatrixConvention, value: &dyn Fn(EdgeId) -> i64) -> Result<BigInt> {
    check_spec(g, spec)?;
    let layout = Layout::new(g, conv);
    let m = layout.edges.len();
    let keep_rows: Vec<usize> = (0..layout.size()).filter(|&r| r >= m || !spec.i.contains(layout.edges[r])).collect();
    let keep_cols: Vec<usize> = (0..layout.size()).filter(|&c| c >= m || !spec.j.contains(layout.edges[c])).collect();
    let mut full = layout.base.clone();
    for (r, &e) in layout.edges.iter().enumerate() {
        full[r][r] = if spec.k.contains(e) { 0 } else { value(e) };
    }
    let reduced: Vec<Vec<i64>> = keep_rows.iter().map(|&r| keep_cols.iter().map(|&c| full[r][c]).collect()).collect();
    Ok(linalg::det_int(&reduced))
}

fn interpolate(layout: &Layout, spec: &DodgsonSpec, keep_rows: &[usize], keep_cols: &[usize]) -> Result<MultiPoly> {
    let free: Vec<EdgeId> = layout.edges.iter().copied().filter(|&e| !spec.support().contains(e)).collect();
    if free.len() > MAX_INTERPOLATION_VARS {
        return Err(Error::Unsupported(format!("{} free variables for interpolation", free.len())));
    }
    let base: Vec<Vec<i64>> = keep_rows.iter().map(|&r| keep_cols.iter().map(|&c| layout.base[r][c]).collect()).collect();
    // position of each free variable inside the reduced matrix
    let slots: Vec<(usize, usize)> = free
        .iter()
        .map(|&e| {
            let full = layout.edge_index(e);
            let r = keep_rows.iter().position(|&x| x == full).expect("free edge row kept");
            let c = keep_cols.iter().position(|&x| x == full).expect("free edge column kept");
            (r, c)
        })
        .collect();
    let v = free.len();
    let mut values: Vec<BigInt> = Vec::with_capacity(1 << v);
    let mut m = base;
    for mask in 0u64..(1u64 << v) {
        for (bit, &(r, c)) in slots.iter().enumerate() {
            m[r][c] = (mask >> bit & 1) as i64;
        }
        values.push(linalg::det_int(&m));
    }
    for bit in 0..v {
        for mask in 0..values.len() {
            if mask >> bit & 1 == 1 {
                let lower = values[mask ^ (1 << bit)].clone();
                values[mask] -= lower;
            }
        }
    }
    let mut p = MultiPoly::zero();
    for (mask, c) in values.into_iter().enumerate() {
        if !c.is_zero() {
            let vars: EdgeSet = (0..v).filter(|&b| mask >> b & 1 == 1).map(|b| free[b]).collect();
            p.add_term(Monomial::from_set(vars), c);
        }
    }
    Ok(p)
}

/// Determinant by fraction-free elimination with exact polynomial division.
pub fn det_poly_bareiss(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant by Laplace expansion; refuses matrices larger than 10×10.
pub fn det_poly_cofactor(a: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    if a.len() > 10 {
        return Err(Error::Unsupported(format!("cofactor expansion of a {}x{} matrix", a.len(), a.len())));
    }
    fn rec(a: &[Vec<MultiPoly>], rows: &[usize], cols: &mut Vec<usize>) -> MultiPoly {
        let Some((&r, rest)) = rows.split_first() else {
            return MultiPoly::one();
        };
        let mut total = MultiPoly::zero();
        for idx in 0..cols.len() {
            let c = cols[idx];
            if a[r][c].is_zero() {
                continue;
            }
            cols.remove(idx);
            let minor = rec(a, rest, cols);
            cols.insert(idx, c);
            let term = &a[r][c] * &minor;
            total = if idx % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }
    let rows: Vec<usize> = (0..a.len()).collect();
    let mut cols = rows.clone();
    Ok(rec(a, &rows, &mut cols))
}

/// `Ψ^{I,J}_K` as a signed sum over common spanning trees, under the default
/// convention.
pub fn dodgson_via_trees(g: &MultiGraph, spec: &DodgsonSpec) -> Result<MultiPoly> {
    dodgson_via_trees_with(g, spec, &default_convention(g)?)
}

/// Sums `± ∏_{e ∉ T ∪ S} x_e` over edge sets `T ⊆ E \ S` that are spanning
/// trees of both `G \ I / ((J ∪ K) − I)` and `G \ J / ((I ∪ K) − J)`. The
/// sign of each term is read off the integer minor of `M_G` that multiplies
/// the monomial.
pub fn dodgson_via_trees_with(g: &MultiGraph, spec: &DodgsonSpec, conv: &MatrixConvention) -> Result<MultiPoly> {
    check_spec(g, spec)?;
    let s = spec.support();
    let row_side = (spec.j | spec.k) - spec.i;
    let col_side = (spec.i | spec.k) - spec.j;
    let layout = Layout::new(g, conv);
    let m = layout.edges.len();
    let mut p = MultiPoly::zero();
    let mut failure = None;
    g.for_each_spanning_tree(&mut |tree| {
        if failure.is_some() || tree.intersects(spec.i) || !row_side.is_subset(tree) {
            return;
        }
        let t = tree - s;
        if !g.is_spanning_tree(t | col_side) {
            return;
        }
        let d = g.edges() - s - t;
        let rows: Vec<usize> = (0..layout.size()).filter(|&r| r >= m || !(spec.i | d).contains(layout.edges[r])).collect();
        let cols: Vec<usize> = (0..layout.size()).filter(|&c| c >= m || !(spec.j | d).contains(layout.edges[c])).collect();
        let minor: Vec<Vec<i64>> = rows.iter().map(|&r| cols.iter().map(|&c| layout.base[r][c]).collect()).collect();
        // Laplace sign of the diagonal block x_D inside M(I, J)
        let position_sum: usize = layout
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| d.contains(**e))
            .map(|(full, _)| {
                let r = (0..full).filter(|&x| !spec.i.contains(layout.edges[x])).count();
                let c = (0..full).filter(|&x| !spec.j.contains(layout.edges[x])).count();
                r + c
            })
            .sum();
        let mut coeff = linalg::det_int(&minor);
        if position_sum % 2 == 1 {
            coeff = -coeff;
        }
        if coeff.is_zero() {
            failure = Some(Error::domain(format!("tree {t} gives a vanishing minor")));
            return;
        }
        p.add_term(Monomial::from_set(d), coeff);
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(p),
    }
}

/// The thirty Dodgsons of a 5-configuration: fifteen of shape
/// `|I| = |J| = 2, |K| = 1` and fifteen of shape `|I| = |J| = 3, |I ∩ J| = 1`.
/// Each is listed once with `I` holding the smallest element of `I Δ J`.
pub fn thirty_dodgsons(s: EdgeSet) -> Result<Vec<DodgsonSpec>> {
    if s.len() != 5 {
        return Err(Error::domain(format!("a 5-configuration needs 5 edges, got {}", s.len())));
    }
    let mut out = Vec::with_capacity(30);
    let pairings = |four: EdgeSet| -> Vec<(EdgeSet, EdgeSet)> {
        let v = four.to_vec();
        (1..4)
            .map(|partner| {
                let first = EdgeSet::from_iter([v[0], v[partner]]);
                (first, four - first)
            })
            .collect()
    };
    for k in s.iter() {
        for (a, b) in pairings(s.without(k)) {
            out.push(DodgsonSpec { i: a, j: b, k: EdgeSet::singleton(k) });
        }
    }
    for shared in s.iter() {
        for (a, b) in pairings(s.without(shared)) {
            out.push(DodgsonSpec { i: a.with(shared), j: b.with(shared), k: EdgeSet::EMPTY });
        }
    }
    Ok(out)
}

/// `Ψ^{12,34}_5 Ψ^{135,245} − Ψ^{13,24}_5 Ψ^{125,345}` for the ordered edges
/// `e1..e5`, with the leading term made positive.
pub fn five_invariant(g: &MultiGraph, e: [EdgeId; 5]) -> Result<MultiPoly> {
    five_invariant_with(g, e, &default_convention(g)?, DetMethod::default())
}

pub fn five_invariant_with(g: &MultiGraph, e: [EdgeId; 5], conv: &MatrixConvention, method: DetMethod) -> Result<MultiPoly> {
    let set: EdgeSet = e.iter().copied().collect();
    if set.len() != 5 {
        return Err(Error::domain("five-invariant needs five distinct edges"));
    }
    g.check_edges(set)?;
    let s = |ids: &[usize]| -> EdgeSet { ids.iter().map(|&i| e[i - 1]).collect() };
    let d = |i: &[usize], j: &[usize], k: &[usize]| dodgson_with(g, &DodgsonSpec::new(s(i), s(j), s(k))?, conv, method);
    let first = &d(&[1, 2], &[3, 4], &[5])? * &d(&[1, 3, 5], &[2, 4, 5], &[])?;
    let second = &d(&[1, 3], &[2, 4], &[5])? * &d(&[1, 2, 5], &[3, 4, 5], &[])?;
    Ok((first - second).normalized_sign())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use num_bigint::BigUint;

    fn spec(i: &[usize], j: &[usize], k: &[usize]) -> DodgsonSpec {
        DodgsonSpec::new(i.iter().copied().collect(), j.iter().copied().collect(), k.iter().copied().collect()).unwrap()
    }

    fn triangle() -> MultiGraph {
        crate::io::parse_graph("3 3\n1 0 1\n2 1 2\n3 0 2\n").unwrap().graph
    }

    #[test]
    fn default_convention_examples() {
        let t = triangle();
        let conv = default_convention(&t).unwrap();
        assert_eq!(conv.removed_vertex(), 2);
        assert_eq!(conv.edge_order(), &[1, 2, 3]);
        assert_eq!(conv.orientation(2), Some((1, 2)));
        assert_eq!(conv.orientation(3), Some((0, 2)));
        assert_eq!(default_convention(&families::complete(4)).unwrap().removed_vertex(), 3);
        let single = MultiGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(exploded_matrix(&single, &default_convention(&single).unwrap()).len(), 2);
    }

    #[test]
    fn kirchhoff_examples() {
        assert_eq!(kirchhoff_poly(&triangle()).to_string(), "x1 + x2 + x3");
        let pair = crate::io::parse_graph("2 2\n1 0 1\n2 0 1\n").unwrap().graph;
        assert_eq!(kirchhoff_poly(&pair).to_string(), "x1 + x2");
        let k5 = families::k5();
        let ones: BTreeMap<usize, BigInt> = (0..10).map(|i| (i, BigInt::one())).collect();
        assert_eq!(kirchhoff_poly(&k5).eval_int(&ones).unwrap(), BigInt::from(125));
        assert_eq!(kirchhoff_poly(&k5), kirchhoff_poly_via_trees(&k5));
        let two = MultiGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(kirchhoff_poly(&two).is_zero());
    }

    #[test]
    fn determinant_methods_agree() {
        for g in [families::complete(4), families::wheel(4), triangle()] {
            let conv = default_convention(&g).unwrap();
            for sp in [spec(&[], &[], &[]), spec(&[g.edges().min().unwrap()], &[g.edges().max().unwrap()], &[])] {
                let a = dodgson_with(&g, &sp, &conv, DetMethod::Interpolation).unwrap();
                let b = dodgson_with(&g, &sp, &conv, DetMethod::Bareiss).unwrap();
                assert_eq!(a, b);
                if g.num_edges() + g.num_vertices() <= 11 {
                    assert_eq!(a, dodgson_with(&g, &sp, &conv, DetMethod::Cofactor).unwrap());
                }
            }
        }
    }

    #[test]
    fn dodgson_examples() {
        let t = triangle();
        assert_eq!(dodgson(&t, &spec(&[], &[], &[])).unwrap().normalized_sign(), kirchhoff_poly(&t));
        let a = dodgson(&t, &spec(&[1], &[2], &[])).unwrap();
        assert!(a.variables().is_subset(EdgeSet::singleton(3)) || a.is_zero());
        assert!(a.equal_up_to_sign(&dodgson_via_trees(&t, &spec(&[1], &[2], &[])).unwrap()));
        // deleting row and column 1 leaves the coefficient of x1, i.e. Ψ of the triangle minus edge 1
        assert_eq!(dodgson(&t, &spec(&[1], &[1], &[])).unwrap().normalized_sign().to_string(), "1");
        assert_eq!(dodgson(&t, &spec(&[], &[], &[1])).unwrap().normalized_sign().to_string(), "x2 + x3");
        assert!(matches!(DodgsonSpec::new(EdgeSet::singleton(1), EdgeSet::EMPTY, EdgeSet::EMPTY), Err(Error::Domain(_))));
        // path edge 0 is a bridge once edge 1 is contracted and edge 2 deleted
        let p = families::path(3);
        assert!(dodgson(&p, &spec(&[0], &[1], &[])).unwrap().is_zero());
        assert!(dodgson_via_trees(&p, &spec(&[0], &[1], &[])).unwrap().is_zero());
    }

    #[test]
    fn tree_route_matches_determinants_on_k4() {
        let g = families::complete(4);
        for i in g.edges().combinations(2) {
            for j in (g.edges() - i).combinations(2) {
                for k in (g.edges() - i - j).combinations(1) {
                    let sp = DodgsonSpec::new(i, j, k).unwrap();
                    assert_eq!(dodgson(&g, &sp).unwrap(), dodgson_via_trees(&g, &sp).unwrap(), "{sp}");
                }
            }
        }
    }

    #[test]
    fn thirty_shapes() {
        let s = EdgeSet::from_iter([1, 3, 4, 8, 9]);
        let all = thirty_dodgsons(s).unwrap();
        assert_eq!(all.len(), 30);
        assert_eq!(all.iter().filter(|d| d.k.len() == 1).count(), 15);
        assert_eq!(all.iter().filter(|d| d.i.len() == 3).count(), 15);
        let distinct: std::collections::HashSet<_> = all.iter().map(|d| d.normalized()).collect();
        assert_eq!(distinct.len(), 30);
        assert!(all.iter().all(|d| d.support() == s && !d.i.intersects(d.k) && !d.j.intersects(d.k)));
        assert!(thirty_dodgsons(EdgeSet::range(4)).is_err());
    }

    #[test]
    fn deletion_and_contraction_identities() {
        let g = families::wheel(4);
        for e in g.edges().iter() {
            let deleted = dodgson(&g, &spec(&[e], &[e], &[])).unwrap().normalized_sign();
            assert_eq!(deleted, kirchhoff_poly(&g.delete_edge(e).unwrap()));
            let contracted = dodgson(&g, &spec(&[], &[], &[e])).unwrap().normalized_sign();
            assert_eq!(contracted, kirchhoff_poly(&g.contract_edge(e).unwrap()));
            assert_eq!(contracted, kirchhoff_poly(&g).set_zero(EdgeSet::singleton(e)));
        }
    }

    #[test]
    fn tree_count_matches_polynomial() {
        let g = families::cube();
        let ones: BTreeMap<usize, BigInt> = (0..12).map(|i| (i, BigInt::one())).collect();
        let psi = kirchhoff_poly(&g);
        assert_eq!(psi.eval_int(&ones).unwrap(), BigInt::from(g.spanning_tree_count()));
        assert_eq!(g.spanning_tree_count(), BigUint::from(384u32));
    }

    #[test]
    fn five_invariant_rejects_repeats() {
        let g = families::complete(4);
        assert!(five_invariant(&g, [0, 1, 2, 3, 3]).is_err());
        assert!(five_invariant(&g, [0, 1, 2, 3, 9]).is_err());
    }

    #[test]
    fn numeric_values_match_symbolic() {
        let g = families::wheel(4);
        let conv = default_convention(&g).unwrap();
        let value = |e: EdgeId| (e as i64) * 3 - 7;
        let point: BTreeMap<usize, BigInt> = g.edges().iter().map(|e| (e, BigInt::from(value(e)))).collect();
        for spec in thirty_dodgsons(EdgeSet::from_iter([0, 2, 3, 5, 7])).unwrap() {
            let symbolic = dodgson_with(&g, &spec, &conv, DetMethod::default()).unwrap();
            let numeric = dodgson_value(&g, &spec, &conv, &value).unwrap();
            assert_eq!(symbolic.eval_int(&point).unwrap(), numeric, "{spec}");
        }
    }
}
