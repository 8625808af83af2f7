//! Minors: plain and rooted minor tests, the enhanced minor order,
//! canonical forms of enhanced graphs and family labels for the catalog.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::MultiGraph;
use crate::sets::{EdgeId, EdgeSet, Vertex};
use crate::splitting::EnhancedGraph;

/// Vertex cap for canonical forms.
pub const MAX_CANON_VERTICES: usize = 12;

/// Refinement signature of a vertex: colour, loop colours, sorted neighbour
/// colours with packed edge counts.
type Signature = (usize, u32, Vec<(usize, u32)>);
/// A relabelled edge: ends, colour, original id.
type EdgeKey = (usize, usize, u32, EdgeId);

/// A loopless graph to look for as a minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinorPattern {
    pattern: MultiGraph,
}

impl MinorPattern {
    pub fn new(pattern: MultiGraph) -> Result<Self> {
        if !pattern.loops().is_empty() {
            return Err(Error::domain("minor patterns must be loopless"));
        }
        Ok(MinorPattern { pattern })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.pattern
    }
}

struct ModelSearch {
    host_vertices: Vec<Vertex>,
    host_adj: Vec<u64>,
    host_mult: Vec<Vec<u32>>,
    pattern_mult: Vec<Vec<u32>>,
    pattern_edges: Vec<(usize, usize, u32)>,
    fixed: Vec<Option<usize>>,
}

impl ModelSearch {
    fn new(g: &MultiGraph, p: &MultiGraph, roots: &[(Vertex, Vertex)]) -> Self {
        let host_vertices = g.vertices().to_vec();
        let pattern_vertices = p.vertices().to_vec();
        let hidx = |v: Vertex| host_vertices.iter().position(|&w| w == v).expect("host vertex");
        let pidx = |v: Vertex| pattern_vertices.iter().position(|&w| w == v).expect("pattern vertex");
        let n = host_vertices.len();
        let mut host_mult = vec![vec![0u32; n]; n];
        let mut host_adj = vec![0u64; n];
        for e in g.edges().iter() {
            let (a, b) = g.ends(e);
            let (a, b) = (hidx(a), hidx(b));
            if a != b {
                host_mult[a][b] += 1;
                host_mult[b][a] += 1;
                host_adj[a] |= 1 << b;
                host_adj[b] |= 1 << a;
            }
        }
        let k = pattern_vertices.len();
        let mut pattern_mult = vec![vec![0u32; k]; k];
        for e in p.edges().iter() {
            let (a, b) = p.ends(e);
            let (a, b) = (pidx(a), pidx(b));
            pattern_mult[a][b] += 1;
            pattern_mult[b][a] += 1;
        }
        let mut pattern_edges = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                if pattern_mult[a][b] > 0 {
                    pattern_edges.push((a, b, pattern_mult[a][b]));
                }
            }
        }
        let mut fixed = vec![None; n];
        for &(t, u) in roots {
            fixed[hidx(t)] = Some(pidx(u));
        }
        ModelSearch { host_vertices, host_adj, host_mult, pattern_mult, pattern_edges, fixed }
    }

    fn pattern_size(&self) -> usize {
        self.pattern_mult.len()
    }

    fn run(&self) -> bool {
        let n = self.host_vertices.len();
        let k = self.pattern_size();
        if k == 0 {
            return true;
        }
        if n < k {
            return false;
        }
        let host_edges: u32 = (0..n).map(|a| (a + 1..n).map(|b| self.host_mult[a][b]).sum::<u32>()).sum();
        let pattern_edges: u32 = self.pattern_edges.iter().map(|e| e.2).sum();
        if host_edges < pattern_edges {
            return false;
        }
        let mut sets = vec![0u64; k];
        let mut assign = vec![usize::MAX; n];
        self.extend(0, &mut assign, &mut sets)
    }

    fn extend(&self, i: usize, assign: &mut [usize], sets: &mut [u64]) -> bool {
        let n = assign.len();
        let k = sets.len();
        let empty = sets.iter().filter(|&&s| s == 0).count();
        if n - i < empty {
            return false;
        }
        if i == n {
            return self.is_model(sets);
        }
        let try_label = |label: usize, assign: &mut [usize], sets: &mut [u64]| -> bool {
            assign[i] = label;
            if label != usize::MAX {
                sets[label] |= 1 << i;
            }
            let ok = self.extend(i + 1, assign, sets);
            if label != usize::MAX {
                sets[label] &= !(1 << i);
            }
            assign[i] = usize::MAX;
            ok
        };
        if let Some(label) = self.fixed[i] {
            return try_label(label, assign, sets);
        }
        for label in 0..k {
            if try_label(label, assign, sets) {
                return true;
            }
        }
        if n - i > empty {
            return try_label(usize::MAX, assign, sets);
        }
        false
    }

    fn is_model(&self, sets: &[u64]) -> bool {
        for &s in sets {
            let start = s & s.wrapping_neg();
            let mut seen = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let b = f.trailing_zeros() as usize;
                    next |= self.host_adj[b];
                    f &= f - 1;
                }
                next &= s & !seen;
                seen |= next;
                frontier = next;
            }
            if seen != s {
                return false;
            }
        }
        self.pattern_edges.iter().all(|&(a, b, need)| {
            let mut count = 0;
            let mut sa = sets[a];
            while sa != 0 {
                let x = sa.trailing_zeros() as usize;
                let mut sb = sets[b];
                while sb != 0 {
                    let y = sb.trailing_zeros() as usize;
                    count += self.host_mult[x][y];
                    sb &= sb - 1;
                }
                sa &= sa - 1;
            }
            count >= need
        })
    }
}

/// Whether `g` has `p` as a minor, by searching for branch sets.
pub fn has_minor(g: &MultiGraph, p: &MinorPattern) -> bool {
    ModelSearch::new(g, &p.pattern, &[]).run()
}

/// Whether `(g; t_1..t_n)` has a rooted `(r; u_1..u_n)` minor: a model of `r`
/// with `t_i` in the branch set of `u_i`.
pub fn has_rooted_minor(g: &MultiGraph, g_roots: &[Vertex], r: &MinorPattern, r_roots: &[Vertex]) -> Result<bool> {
    if g_roots.len() != r_roots.len() {
        return Err(Error::domain(format!("{} host roots but {} pattern roots", g_roots.len(), r_roots.len())));
    }
    let distinct = |roots: &[Vertex]| roots.iter().collect::<HashSet<_>>().len() == roots.len();
    if !distinct(g_roots) || !distinct(r_roots) {
        return Err(Error::domain("roots must be distinct"));
    }
    for &t in g_roots {
        if !g.vertices().contains(t) {
            return Err(Error::UnknownVertex(t));
        }
    }
    for &u in r_roots {
        if !r.pattern.vertices().contains(u) {
            return Err(Error::UnknownVertex(u));
        }
    }
    let pairs: Vec<_> = g_roots.iter().copied().zip(r_roots.iter().copied()).collect();
    Ok(ModelSearch::new(g, &r.pattern, &pairs).run())
}

/// Reference implementation of [`has_minor`]: deletions and contractions
/// explored up to isomorphism.
pub fn has_minor_by_reduction(g: &MultiGraph, p: &MinorPattern) -> Result<bool> {
    let target = canonical_form(&EnhancedGraph::plain(p.pattern.without_isolated()))?;
    let (pv, pe) = (p.pattern.without_isolated().num_vertices(), p.pattern.num_edges());
    let isolated = p.pattern.isolated_vertices().len();
    let start = g.delete_edges(g.loops());
    let mut seen = HashSet::new();
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        let core = h.without_isolated();
        if !seen.insert(canonical_form(&EnhancedGraph::plain(core))?) {
            continue;
        }
        if core.num_edges() == pe
            && core.num_vertices() == pv
            && h.num_vertices() >= pv + isolated
            && canonical_form(&EnhancedGraph::plain(core))? == target
        {
            return Ok(true);
        }
        if core.num_edges() <= pe {
            continue;
        }
        for e in core.edges().iter() {
            let d = h.delete_edge(e)?;
            if d.num_edges() >= pe {
                stack.push(d);
            }
            let c = h.contract_edge(e)?;
            if c.num_edges() >= pe && c.num_vertices() >= pv + isolated {
                stack.push(c);
            }
        }
    }
    Ok(false)
}

/// No member of `{K33, K5, cube, H, octahedron}` is a minor of `g`.
pub fn f0_free(g: &MultiGraph) -> bool {
    f0_member_minor(g).is_none()
}

/// The first member of the width-four excluded family that is a minor.
pub fn f0_member_minor(g: &MultiGraph) -> Option<&'static str> {
    families::f0_family().into_iter().find(|(_, f)| has_minor(g, &MinorPattern::new(*f).expect("loopless reference"))).map(|(name, _)| name)
}

// ---- canonical forms ---------------------------------------------------

/// Isomorphism-invariant text encoding of an enhanced graph:
/// `n|u-v,u-vc,u-vd,u-vcd,...` with vertices relabelled `0..n` and edges
/// listed in sorted order; the suffix records contract-proof (`c`) and
/// delete-proof (`d`) marks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The enhanced graph the encoding describes, with edge `i` being the
    /// `i`-th listed edge.
    pub fn decode(&self) -> Result<EnhancedGraph> {
        let bad = |msg: &str| Error::parse(1, format!("canonical form {:?}: {msg}", self.0));
        let (n, rest) = self.0.split_once('|').ok_or_else(|| bad("missing '|'"))?;
        let n: usize = n.parse().map_err(|_| bad("bad vertex count"))?;
        let mut g = MultiGraph::with_vertices(n)?;
        let (mut c, mut d) = (EdgeSet::EMPTY, EdgeSet::EMPTY);
        for (id, tok) in rest.split(',').filter(|t| !t.is_empty()).enumerate() {
            let marks_at = tok.find(['c', 'd']).unwrap_or(tok.len());
            let (pair, marks) = tok.split_at(marks_at);
            let (u, v) = pair.split_once('-').ok_or_else(|| bad("edge without '-'"))?;
            let u: usize = u.parse().map_err(|_| bad("bad endpoint"))?;
            let v: usize = v.parse().map_err(|_| bad("bad endpoint"))?;
            g.add_edge(id, u, v)?;
            match marks {
                "" => {}
                "c" => c.insert(id),
                "d" => d.insert(id),
                "cd" => {
                    c.insert(id);
                    d.insert(id);
                }
                _ => return Err(bad("unknown edge mark")),
            }
        }
        EnhancedGraph::new(g, c, d)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for CanonicalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let form = CanonicalForm(s.trim().to_string());
        let decoded = form.decode()?;
        if canonical_form(&decoded)? != form {
            return Err(Error::parse(1, format!("{s:?} is not in canonical form")));
        }
        Ok(form)
    }
}

/// A canonical labelling: the form and where each vertex and edge goes.
#[derive(Clone, Debug)]
pub struct Labelling {
    pub form: CanonicalForm,
    /// `vertex_map[v]` is the canonical index of vertex `v`.
    pub vertex_map: HashMap<Vertex, Vertex>,
    /// `edge_map[e]` is the canonical index of edge `e`.
    pub edge_map: HashMap<EdgeId, EdgeId>,
}

/// An automorphism as permutations of vertex and edge identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    pub vertices: HashMap<Vertex, Vertex>,
    pub edges: HashMap<EdgeId, EdgeId>,
}

impl Automorphism {
    pub fn map_edges(&self, s: EdgeSet) -> EdgeSet {
        s.iter().map(|e| self.edges[&e]).collect()
    }
}

fn colour(g: &EnhancedGraph, e: EdgeId) -> u32 {
    g.contract_proof().contains(e) as u32 | (g.delete_proof().contains(e) as u32) << 1
}

struct Canon<'a> {
    g: &'a EnhancedGraph,
    verts: Vec<Vertex>,
    // pair signature: counts of edges of each colour, packed bytewise
    sig: Vec<Vec<u32>>,
    best: Option<Vec<u32>>,
    leaves: Vec<Vec<usize>>,
}

impl<'a> Canon<'a> {
    fn new(g: &'a EnhancedGraph) -> Result<Self> {
        let verts = g.graph().vertices().to_vec();
        if verts.len() > MAX_CANON_VERTICES {
            return Err(Error::Unsupported(format!("canonical form of a graph with {} vertices (cap {MAX_CANON_VERTICES})", verts.len())));
        }
        let n = verts.len();
        let idx: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut sig = vec![vec![0u32; n]; n];
        for e in g.graph().edges().iter() {
            let (a, b) = g.graph().ends(e);
            let (a, b) = (idx[&a], idx[&b]);
            let inc = 1u32 << (8 * colour(g, e));
            sig[a][b] += inc;
            if a != b {
                sig[b][a] += inc;
            }
        }
        Ok(Canon { g, verts, sig, best: None, leaves: Vec::new() })
    }

    fn refine(&self, mut col: Vec<usize>) -> Vec<usize> {
        let n = col.len();
        let mut classes = col.iter().collect::<HashSet<_>>().len();
        loop {
            let sigs: Vec<Signature> = (0..n)
                .map(|v| {
                    let mut nb: Vec<(usize, u32)> =
                        (0..n).filter(|&w| w != v && self.sig[v][w] != 0).map(|w| (col[w], self.sig[v][w])).collect();
                    nb.sort_unstable();
                    (col[v], self.sig[v][v], nb)
                })
                .collect();
            let mut sorted: Vec<&Signature> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(&s).expect("present")).collect();
            col = next;
            if sorted.len() == classes {
                return col;
            }
            classes = sorted.len();
        }
    }

    fn search(&mut self, col: Vec<usize>) {
        let col = self.refine(col);
        let n = col.len();
        let mut counts = vec![0usize; n];
        for &c in &col {
            counts[c] += 1;
        }
        match (0..n).find(|&c| counts[c] > 1) {
            None => {
                let mut inv = vec![0; n];
                for (v, &c) in col.iter().enumerate() {
                    inv[c] = v;
                }
                let code: Vec<u32> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| self.sig[inv[i]][inv[j]]).collect();
                match &self.best {
                    Some(b) if code > *b => {}
                    Some(b) if code == *b => self.leaves.push(col),
                    _ => {
                        self.best = Some(code);
                        self.leaves = vec![col];
                    }
                }
            }
            Some(cell) => {
                for v in (0..n).filter(|&v| col[v] == cell) {
                    let split: Vec<usize> =
                        col.iter().enumerate().map(|(w, &c)| if c < cell || (c == cell && w == v) { 2 * c } else { 2 * c + 1 }).collect();
                    self.search(split);
                }
            }
        }
    }

    fn edge_map(&self, pos: &[usize]) -> (Vec<EdgeKey>, HashMap<EdgeId, EdgeId>) {
        let idx: HashMap<Vertex, usize> = self.verts.iter().enumerate().map(|(i, &v)| (v, pos[i])).collect();
        let g = self.g.graph();
        let mut list: Vec<(usize, usize, u32, EdgeId)> = g
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = g.ends(e);
                let (a, b) = (idx[&a], idx[&b]);
                (a.min(b), a.max(b), colour(self.g, e), e)
            })
            .collect();
        list.sort_unstable();
        let map = list.iter().enumerate().map(|(i, t)| (t.3, i)).collect();
        (list, map)
    }
}

pub fn canonical_labelling(g: &EnhancedGraph) -> Result<Labelling> {
    let mut c = Canon::new(g)?;
    c.search(vec![0; c.verts.len()]);
    let n = c.verts.len();
    let pos = c.leaves.first().cloned().unwrap_or_default();
    let (list, edge_map) = c.edge_map(&pos);
    let mut text = format!("{n}|");
    for (i, &(a, b, col, _)) in list.iter().enumerate() {
        if i > 0 {
            text.push(',');
        }
        let marks = ["", "c", "d", "cd"][col as usize];
        text.push_str(&format!("{a}-{b}{marks}"));
    }
    let vertex_map = c.verts.iter().enumerate().map(|(i, &v)| (v, pos[i])).collect();
    Ok(Labelling { form: CanonicalForm(text), vertex_map, edge_map })
}

pub fn canonical_form(g: &EnhancedGraph) -> Result<CanonicalForm> {
    Ok(canonical_labelling(g)?.form)
}

pub fn is_isomorphic(a: &EnhancedGraph, b: &EnhancedGraph) -> Result<bool> {
    Ok(a.graph().num_edges() == b.graph().num_edges()
        && a.graph().num_vertices() == b.graph().num_vertices()
        && canonical_form(a)? == canonical_form(b)?)
}

/// All automorphisms (preserving marks), the identity included.
pub fn automorphisms(g: &EnhancedGraph) -> Result<Vec<Automorphism>> {
    let mut c = Canon::new(g)?;
    c.search(vec![0; c.verts.len()]);
    let leaves = std::mem::take(&mut c.leaves);
    let base = &leaves[..1.min(leaves.len())];
    let Some(first) = base.first() else {
        return Ok(vec![Automorphism { vertices: HashMap::new(), edges: HashMap::new() }]);
    };
    let (_, first_edges) = c.edge_map(first);
    let mut out = Vec::new();
    for leaf in &leaves {
        let mut inv = vec![0; leaf.len()];
        for (i, &p) in leaf.iter().enumerate() {
            inv[p] = i;
        }
        let vertices = c.verts.iter().enumerate().map(|(i, &v)| (v, c.verts[inv[first[i]]])).collect();
        let (list, _) = c.edge_map(leaf);
        let edges = first_edges.iter().map(|(&e, &k)| (e, list[k].3)).collect();
        out.push(Automorphism { vertices, edges });
    }
    Ok(out)
}

// ---- enhanced minor order ------------------------------------------------

/// Every enhanced graph one minor operation below `g`, isolated vertices
/// removed. Protected edges are immune to the operation they are protected
/// against until the mark is removed.
pub fn enhanced_children(g: &EnhancedGraph) -> Vec<EnhancedGraph> {
    let h = g.graph();
    let (c, d) = (g.contract_proof(), g.delete_proof());
    let strip = |x: EnhancedGraph| x.with_graph(x.graph().without_isolated());
    let mut out = Vec::new();
    for v in h.vertices().iter() {
        out.push(strip(g.with_graph(h.delete_vertex(v).expect("vertex of h"))));
    }
    for e in (h.edges() - d).iter() {
        out.push(strip(g.with_graph(h.delete_edge(e).expect("edge of h"))));
    }
    for e in (h.edges() - c - h.loops()).iter() {
        out.push(strip(g.with_graph(h.contract_edge(e).expect("non-loop edge"))));
    }
    for e in c.iter() {
        out.push(EnhancedGraph::new(*h, c.without(e), d).expect("same edges"));
    }
    for e in d.iter() {
        out.push(EnhancedGraph::new(*h, c, d.without(e)).expect("same edges"));
    }
    for e in (h.edges() - h.loops()).iter() {
        let (x, y) = h.ends(e);
        for f in h.edges_between(x, y).without(e).iter() {
            let smaller = g.with_graph(h.delete_edge(f).expect("edge of h"));
            out.push(EnhancedGraph::new(*smaller.graph(), smaller.contract_proof(), smaller.delete_proof().with(e)).expect("e survives"));
        }
    }
    for v in h.vertices().iter() {
        let star = h.incident_edges(v);
        if star.len() != 2 || h.degree(v) != 2 {
            continue;
        }
        let pair = star.to_vec();
        for (keep, gone) in [(pair[0], pair[1]), (pair[1], pair[0])] {
            if h.is_loop(keep) || h.is_loop(gone) || h.edges_between(h.ends(keep).0, h.ends(keep).1).contains(gone) {
                continue;
            }
            let smaller = strip(g.with_graph(h.contract_edge(gone).expect("non-loop edge")));
            out.push(
                EnhancedGraph::new(*smaller.graph(), smaller.contract_proof().with(keep), smaller.delete_proof()).expect("keep survives"),
            );
        }
    }
    out
}

/// Canonical forms of every enhanced minor of `g` with weight at least
/// `min_weight`, `g` included.
pub fn enhanced_minors(g: &EnhancedGraph, min_weight: usize) -> Result<HashSet<CanonicalForm>> {
    let start = g.with_graph(g.graph().without_isolated());
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([start]);
    seen.insert(canonical_form(&start)?);
    while let Some(x) = queue.pop_front() {
        for child in enhanced_children(&x) {
            if child.weight() < min_weight {
                continue;
            }
            if seen.insert(canonical_form(&child)?) {
                queue.push_back(child);
            }
        }
    }
    Ok(seen)
}

/// Whether `h` is an enhanced minor of `g` (isolated vertices ignored).
pub fn enhanced_has_minor(g: &EnhancedGraph, h: &EnhancedGraph) -> Result<bool> {
    let target = h.with_graph(h.graph().without_isolated());
    if target.weight() > g.weight() || target.graph().num_vertices() > g.graph().without_isolated().num_vertices() {
        return Ok(false);
    }
    let form = canonical_form(&target)?;
    Ok(enhanced_minors(g, target.weight())?.contains(&form))
}

// ---- catalog entries -------------------------------------------------------

/// One minor-minimal non-split enhanced graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub form: CanonicalForm,
    pub enhanced: EnhancedGraph,
    /// A non-split configuration, in the canonical edge numbering.
    pub witness: EdgeSet,
    pub family: String,
    pub weight: usize,
    /// Index of the entry holding the planar dual, when there is one.
    pub dual_partner: Option<usize>,
}

impl CatalogEntry {
    /// Builds an entry from any labelled copy, moving it to canonical labels.
    pub fn new(g: &EnhancedGraph, witness: EdgeSet) -> Result<Self> {
        let lab = canonical_labelling(g)?;
        let enhanced = lab.form.decode()?;
        let witness = witness.iter().map(|e| lab.edge_map[&e]).collect();
        let family = family_label(enhanced.graph()).unwrap_or("other").to_string();
        Ok(CatalogEntry { weight: enhanced.weight(), form: lab.form, enhanced, witness, family, dual_partner: None })
    }

    pub fn is_f0(&self) -> bool {
        families::f0_family().iter().any(|(name, _)| *name == self.family)
    }
}

fn reference_forms() -> &'static Vec<(&'static str, CanonicalForm)> {
    static FORMS: OnceLock<Vec<(&'static str, CanonicalForm)>> = OnceLock::new();
    FORMS.get_or_init(|| {
        let mut refs = vec![
            ("K4", families::complete(4)),
            ("W4", families::wheel(4)),
            ("W5", families::wheel(5)),
            ("K5-", families::k5_minus()),
            ("P", families::prism()),
            ("P+", families::prism_plus()),
            ("D", families::double_fan()),
            ("D*", families::double_fan_dual()),
        ];
        refs.extend(families::f0_family());
        refs.into_iter().map(|(name, g)| (name, canonical_form(&EnhancedGraph::plain(g)).expect("small reference graph"))).collect()
    })
}

/// Name of the reference graph isomorphic to `g`, if any.
pub fn family_label(g: &MultiGraph) -> Option<&'static str> {
    if g.num_vertices() > MAX_CANON_VERTICES {
        return None;
    }
    let form = canonical_form(&EnhancedGraph::plain(g.without_isolated())).ok()?;
    reference_forms().iter().find(|(_, f)| *f == form).map(|(name, _)| *name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::EdgeSet;
    use proptest::prelude::*;

    fn pat(g: MultiGraph) -> MinorPattern {
        MinorPattern::new(g).unwrap()
    }

    #[test]
    fn minor_examples() {
        assert!(has_minor(&families::k5(), &pat(families::complete(4))));
        assert!(!has_minor(&families::cube(), &pat(families::k5())));
        assert!(has_minor(&families::h_graph(), &pat(families::complete(4))));
        assert!(has_minor(&families::octahedron(), &pat(families::octahedron())));
        assert!(!has_minor(&families::wheel(6), &pat(families::k33())));
        let looped = MultiGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert!(MinorPattern::new(looped).is_err());
    }

    #[test]
    fn rooted_minor_examples() {
        let k4 = families::complete(4);
        assert!(has_rooted_minor(&k4, &[0, 1, 2], &pat(k4), &[0, 1, 2]).unwrap());
        let path = families::path(3);
        let edge = families::path(2);
        assert!(has_rooted_minor(&path, &[0, 2], &pat(edge), &[0, 1]).unwrap());
        assert!(!has_rooted_minor(&families::path(4), &[0, 3], &pat(families::cycle(3)), &[0, 1]).unwrap());
        assert!(has_rooted_minor(&path, &[0], &pat(edge), &[0, 1]).is_err());
    }

    #[test]
    fn f0_membership() {
        for k in 3..8 {
            assert!(f0_free(&families::wheel(k)), "W{k}");
        }
        assert!(!f0_free(&families::octahedron()));
        assert!(f0_free(&families::prism_plus()));
        for (name, g) in families::f0_family() {
            assert_eq!(f0_member_minor(&g), Some(name));
        }
    }

    #[test]
    fn h_constructions_agree() {
        let a = EnhancedGraph::plain(families::h_graph());
        let b = EnhancedGraph::plain(families::h_from_octahedron());
        assert!(is_isomorphic(&a, &b).unwrap());
    }

    #[test]
    fn reduction_agrees_with_model_search() {
        let hosts = [families::wheel(5), families::prism_plus(), families::k33(), families::k5_minus(), families::octahedron()];
        for host in hosts {
            for (_, f) in families::f0_family() {
                let p = pat(f);
                assert_eq!(has_minor(&host, &p), has_minor_by_reduction(&host, &p).unwrap());
            }
            let k4 = pat(families::complete(4));
            assert_eq!(has_minor(&host, &k4), has_minor_by_reduction(&host, &k4).unwrap());
        }
    }

    #[test]
    fn canonical_form_examples() {
        let w4 = families::wheel(4);
        let s: EdgeSet = [0, 4].into_iter().collect();
        let a = EnhancedGraph::new(w4, s, EdgeSet::singleton(1)).unwrap();
        let shuffled = w4.relabel(&|v| (v + 2) % 5, &|e| 9 - e).unwrap();
        let b = EnhancedGraph::new(shuffled, [9, 5].into_iter().collect(), EdgeSet::singleton(8)).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let swapped = EnhancedGraph::new(w4, EdgeSet::singleton(1), s).unwrap();
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&swapped).unwrap());
        let form = canonical_form(&a).unwrap();
        assert_eq!(canonical_form(&form.decode().unwrap()).unwrap(), form);
        assert_eq!(form.as_str().parse::<CanonicalForm>().unwrap(), form);
        let big = families::cycle(13);
        assert!(matches!(canonical_form(&EnhancedGraph::plain(big)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn automorphism_counts() {
        let count = |g: MultiGraph| automorphisms(&EnhancedGraph::plain(g)).unwrap().len();
        assert_eq!(count(families::complete(4)), 24);
        assert_eq!(count(families::k5()), 120);
        assert_eq!(count(families::cube()), 48);
        assert_eq!(count(families::k33()), 72);
        assert_eq!(count(families::wheel(5)), 10);
        assert_eq!(count(families::prism()), 12);
        let w4 = families::wheel(4);
        for a in automorphisms(&EnhancedGraph::plain(w4)).unwrap() {
            for e in w4.edges().iter() {
                let (u, v) = w4.endpoints(e).unwrap();
                let (x, y) = w4.endpoints(a.edges[&e]).unwrap();
                let (mu, mv) = (a.vertices[&u], a.vertices[&v]);
                assert!((x, y) == (mu.min(mv), mu.max(mv)) || (x, y) == (mu, mv) || (y, x) == (mu, mv));
            }
        }
    }

    #[test]
    fn children_examples() {
        let k4 = EnhancedGraph::plain(families::complete(4));
        let kids = enhanced_children(&k4);
        assert!(kids.iter().any(|k| k.graph().num_edges() == 5 && k.graph().num_vertices() == 4));
        assert!(kids.iter().any(|k| k.graph().num_edges() == 3 && k.graph().num_vertices() == 3));
        let pair = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let kids = enhanced_children(&EnhancedGraph::plain(pair));
        assert!(kids.iter().any(|k| k.graph().num_edges() == 3 && k.delete_proof() == EdgeSet::singleton(0)));
        let path = families::path(3);
        let kids = enhanced_children(&EnhancedGraph::plain(path));
        assert!(kids.iter().any(|k| k.graph().num_edges() == 1 && k.contract_proof() == EdgeSet::singleton(0)));
    }

    #[test]
    fn enhanced_minor_examples() {
        let s: EdgeSet = (0..5).collect();
        let k4_1 = EnhancedGraph::new(families::complete(4), s, s).unwrap();
        for child in enhanced_children(&k4_1) {
            assert!(enhanced_has_minor(&k4_1, &child).unwrap());
        }
        let w4 = EnhancedGraph::new(families::wheel(4), s, EdgeSet::EMPTY).unwrap();
        assert!(!enhanced_has_minor(&k4_1, &w4).unwrap());
        let k4 = EnhancedGraph::plain(families::complete(4));
        assert!(enhanced_has_minor(&EnhancedGraph::plain(families::wheel(4)), &k4).unwrap());
    }

    #[test]
    fn family_labels() {
        assert_eq!(family_label(&families::wheel(4)), Some("W4"));
        assert_eq!(family_label(&families::k33()), Some("K33"));
        assert_eq!(family_label(&families::cycle(5)), None);
    }

    proptest! {
        #[test]
        fn canonical_form_is_relabelling_invariant(perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle(), marks in 0u64..(1 << 18)) {
            let g = families::prism_plus();
            let c: EdgeSet = (0..10).filter(|i| marks >> i & 1 == 1).collect();
            let d: EdgeSet = (0..8).filter(|i| marks >> (i + 10) & 1 == 1).collect();
            let a = EnhancedGraph::new(g, c, d).unwrap();
            let moved = g.relabel(&|v| perm[v], &|e| e).unwrap();
            let b = EnhancedGraph::new(moved, c, d).unwrap();
            prop_assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        }

        #[test]
        fn minor_monotone_under_edge_addition(u in 0usize..6, v in 0usize..6) {
            prop_assume!(u != v);
            let mut g = families::prism();
            g.push_edge(u, v).unwrap();
            for (_, f) in families::f0_family() {
                let p = pat(f);
                if has_minor(&families::prism(), &p) {
                    prop_assert!(has_minor(&g, &p));
                }
            }
            prop_assert!(has_minor(&g, &pat(families::prism())));
        }
    }
}
