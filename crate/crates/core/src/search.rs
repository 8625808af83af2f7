//! Exhaustive search for minor-minimal non-split enhanced graphs.
//!
//! Underlying graphs are generated by edge augmentation with isomorph
//! rejection. For each graph, phase one keeps the configurations (one per
//! automorphism orbit) that survive full protection; phase two tries every
//! protection assignment inside each survivor and keeps the non-split
//! enhanced graphs all of whose one-step minors split.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use log::{info, warn};
use rayon::prelude::*;

use crate::dual;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::io;
use crate::minors::{self, CanonicalForm, CatalogEntry};
use crate::sets::EdgeSet;
use crate::splitting::{self, EnhancedGraph, SplitProfile};

/// Largest underlying edge count the search accepts.
pub const MAX_SEARCH_EDGES: usize = 12;
/// Largest edge count for the unrestricted protection mode.
pub const MAX_UNRESTRICTED_EDGES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_edges: usize,
    pub require_3connected: bool,
    /// Allow protections on edges outside the configuration.
    pub unrestricted: bool,
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_edges: 11, require_3connected: true, unrestricted: false, jobs: 1, checkpoint: None }
    }
}

impl SearchConfig {
    pub fn with_max_edges(max_edges: usize) -> Self {
        SearchConfig { max_edges, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.max_edges > MAX_SEARCH_EDGES {
            return Err(Error::Unsupported(format!("searches above {MAX_SEARCH_EDGES} edges")));
        }
        if self.unrestricted && self.max_edges > MAX_UNRESTRICTED_EDGES {
            return Err(Error::Unsupported(format!("unrestricted protections above {MAX_UNRESTRICTED_EDGES} edges")));
        }
        if self.jobs == 0 {
            return Err(Error::domain("at least one worker is needed"));
        }
        Ok(())
    }

    fn vertex_cap(&self) -> usize {
        if self.require_3connected {
            (2 * self.max_edges / 3).min(minors::MAX_CANON_VERTICES)
        } else {
            (self.max_edges + 1).min(minors::MAX_CANON_VERTICES)
        }
    }

    fn header(&self) -> String {
        format!(
            "# checkpoint max_edges={} require_3connected={} unrestricted={}",
            self.max_edges, self.require_3connected, self.unrestricted
        )
    }
}

/// Connected simple graphs with at most `max_edges` edges and `max_vertices`
/// vertices, one per isomorphism class, in canonical labelling and ordered
/// by edge count and then canonical form.
pub fn connected_graphs(max_edges: usize, max_vertices: usize) -> Result<Vec<MultiGraph>> {
    if max_vertices > minors::MAX_CANON_VERTICES {
        return Err(Error::Unsupported(format!("generation above {} vertices", minors::MAX_CANON_VERTICES)));
    }
    let mut out = Vec::new();
    if max_edges == 0 || max_vertices < 2 {
        return Ok(out);
    }
    let mut level = vec![MultiGraph::from_edges(2, &[(0, 1)])?];
    for m in 1..=max_edges {
        out.extend(level.iter().copied());
        if m == max_edges {
            break;
        }
        let candidates: Vec<(CanonicalForm, MultiGraph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                let n = g.num_vertices();
                let adj = g.adjacency();
                let mut next = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if !adj[u].contains(v) {
                            let mut h = *g;
                            h.push_edge(u, v).expect("room for an edge");
                            next.push(h);
                        }
                    }
                    if n < max_vertices {
                        let mut h = *g;
                        h.add_vertex(n).expect("room for a vertex");
                        h.push_edge(u, n).expect("room for an edge");
                        next.push(h);
                    }
                }
                next.into_iter().map(|h| {
                    let form = minors::canonical_form(&EnhancedGraph::plain(h)).expect("within the vertex cap");
                    (form, h)
                })
            })
            .collect();
        let mut seen = HashSet::new();
        let mut fresh = Vec::new();
        for (form, _) in candidates {
            if seen.insert(form.clone()) {
                fresh.push(form);
            }
        }
        fresh.sort();
        level = fresh.iter().map(|f| *f.decode().expect("own encoding").graph()).collect();
    }
    Ok(out)
}

/// Simple 3-connected graphs with at most `max_vertices` vertices and
/// `max_edges` edges.
pub fn three_connected_census(max_vertices: usize, max_edges: usize) -> Result<Vec<MultiGraph>> {
    Ok(connected_graphs(max_edges, max_vertices)?.into_iter().filter(|g| g.is_k_connected(3)).collect())
}

/// The underlying graphs the search visits.
pub fn enumerate_underlying(config: &SearchConfig) -> Result<Vec<MultiGraph>> {
    config.validate()?;
    let graphs = connected_graphs(config.max_edges, config.vertex_cap())?;
    Ok(graphs.into_iter().filter(|g| g.num_edges() >= 5 && (!config.require_3connected || g.is_k_connected(3))).collect())
}

/// One configuration per orbit of the automorphism group.
pub fn configuration_orbits(g: &MultiGraph) -> Result<Vec<EdgeSet>> {
    let autos = minors::automorphisms(&EnhancedGraph::plain(*g))?;
    Ok(g.edges().combinations(5).filter(|&s| autos.iter().all(|a| a.map_edges(s) >= s)).collect())
}

/// Outcome of a search: the entries, sorted, and any warnings.
#[derive(Clone, Debug, Default)]
pub struct SearchReport {
    pub entries: Vec<CatalogEntry>,
    pub graphs_examined: usize,
    pub phase_one_survivors: usize,
    pub warnings: Vec<String>,
}

impl SearchReport {
    /// Entry counts per family label.
    pub fn family_counts(&self) -> BTreeMap<String, usize> {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.family.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// Entries carrying protections or lying outside the width-four family.
    pub fn enhanced_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_f0()).count()
    }
}

struct Tables {
    cache: HashMap<MultiGraph, Vec<SplitProfile>>,
}

impl Tables {
    fn new() -> Self {
        Tables { cache: HashMap::new() }
    }

    fn splits(&mut self, g: &EnhancedGraph) -> bool {
        let table = self.cache.entry(*g.graph()).or_insert_with(|| splitting::profile_table(g.graph()));
        table.iter().all(|p| p.splits_under(g.contract_proof(), g.delete_proof()))
    }

    fn is_minimal(&mut self, g: &EnhancedGraph) -> bool {
        minors::enhanced_children(g).iter().all(|child| self.splits(child))
    }
}

fn phase_one(g: &MultiGraph) -> Result<Vec<(EdgeSet, SplitProfile)>> {
    Ok(configuration_orbits(g)?.into_iter().map(|s| (s, SplitProfile::new(g, s))).filter(|(_, p)| !p.itself).collect())
}

fn assignments(within: EdgeSet) -> impl Iterator<Item = (EdgeSet, EdgeSet)> {
    within.subsets().flat_map(move |c| within.subsets().map(move |d| (c, d)))
}

fn phase_two(g: &MultiGraph, survivors: &[EdgeSet], unrestricted: bool) -> Result<Vec<CatalogEntry>> {
    let mut tables = Tables::new();
    let profiles: Vec<SplitProfile> = survivors.iter().map(|&s| SplitProfile::new(g, s)).collect();
    let mut candidates: Vec<(EnhancedGraph, EdgeSet)> = Vec::new();
    let mut consider = |c: EdgeSet, d: EdgeSet, witness: EdgeSet| {
        candidates.push((EnhancedGraph::new(*g, c, d).expect("marks on edges of g"), witness));
    };
    if unrestricted {
        for (c, d) in assignments(g.edges()) {
            if let Some(p) = profiles.iter().find(|p| !p.splits_under(c, d)) {
                consider(c, d, p.config);
            }
        }
    } else {
        for p in &profiles {
            for (c, d) in assignments(p.config) {
                if !p.splits_under(c, d) {
                    consider(c, d, p.config);
                }
            }
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (eg, witness) in candidates {
        let removal_keeps_nonsplit = eg
            .contract_proof()
            .iter()
            .map(|e| (eg.contract_proof().without(e), eg.delete_proof()))
            .chain(eg.delete_proof().iter().map(|e| (eg.contract_proof(), eg.delete_proof().without(e))))
            .any(|(c, d)| profiles.iter().any(|p| !p.splits_under(c, d)));
        if removal_keeps_nonsplit {
            continue;
        }
        let form = minors::canonical_form(&eg)?;
        if !seen.insert(form) {
            continue;
        }
        if tables.is_minimal(&eg) {
            debug_assert!(!splitting::enhanced_config_splits(&eg, witness)?.splits);
            out.push(CatalogEntry::new(&eg, witness)?);
        }
    }
    Ok(out)
}

/// `id:u-v` items joined by commas.
fn edge_list(g: &MultiGraph) -> String {
    g.edges()
        .iter()
        .map(|e| {
            let (u, v) = g.endpoints(e).expect("edge of g");
            format!("{e}:{u}-{v}")
        })
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_edge_list(text: &str) -> Option<MultiGraph> {
    let mut g = MultiGraph::new();
    for item in text.split(',') {
        let (id, ends) = item.split_once(':')?;
        let (u, v) = ends.split_once('-')?;
        let (id, u, v): (usize, usize, usize) = (id.parse().ok()?, u.parse().ok()?, v.parse().ok()?);
        for w in [u, v] {
            if !g.vertices().contains(w) {
                g.add_vertex(w).ok()?;
            }
        }
        g.add_edge(id, u, v).ok()?;
    }
    Some(g)
}

fn read_checkpoint(config: &SearchConfig, warnings: &mut Vec<String>) -> Option<Vec<(MultiGraph, Vec<EdgeSet>)>> {
    let path = config.checkpoint.as_ref()?;
    let text = fs::read_to_string(path).ok()?;
    let mut lines = text.lines();
    if lines.next() != Some(config.header().as_str()) {
        warnings.push(format!("checkpoint {} belongs to another configuration; recomputing", path.display()));
        return None;
    }
    let mut out: Vec<(MultiGraph, Vec<EdgeSet>)> = Vec::new();
    let mut complete = false;
    for line in lines {
        if line == "# end" {
            complete = true;
            break;
        }
        let parsed = line.split_once('\t').and_then(|(edges, ids)| {
            let g = parse_edge_list(edges)?;
            let configs = ids.split(';').filter(|t| !t.is_empty()).map(|t| io::parse_id_list(t, 0).ok()).collect::<Option<Vec<_>>>()?;
            Some((g, configs))
        });
        match parsed {
            Some(entry) => out.push(entry),
            None => {
                warnings.push(format!("checkpoint {} is damaged; recomputing", path.display()));
                return None;
            }
        }
    }
    if !complete {
        warnings.push(format!("checkpoint {} is incomplete; recomputing", path.display()));
        return None;
    }
    Some(out)
}

fn write_checkpoint(config: &SearchConfig, survivors: &[(MultiGraph, Vec<EdgeSet>)], warnings: &mut Vec<String>) {
    let Some(path) = &config.checkpoint else { return };
    let result = (|| -> std::io::Result<()> {
        let mut f = fs::File::create(path)?;
        writeln!(f, "{}", config.header())?;
        for (g, configs) in survivors {
            let ids: Vec<String> = configs.iter().map(|s| s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
            writeln!(f, "{}\t{}", edge_list(g), ids.join(";"))?;
        }
        writeln!(f, "# end")
    })();
    if let Err(e) = result {
        warnings.push(format!("could not write checkpoint {}: {e}", path.display()));
    }
}

/// Regenerates the catalog of minor-minimal non-split enhanced graphs whose
/// underlying graph has at most `config.max_edges` edges.
pub fn find_minimal_nonsplit(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.jobs).build().map_err(|e| Error::domain(format!("thread pool: {e}")))?;
    pool.install(|| search_in_pool(config))
}

fn search_in_pool(config: &SearchConfig) -> Result<SearchReport> {
    let mut report = SearchReport::default();
    let survivors = match read_checkpoint(config, &mut report.warnings) {
        Some(s) => {
            info!("resumed {} phase-one graphs from checkpoint", s.len());
            s
        }
        None => {
            let graphs = enumerate_underlying(config)?;
            report.graphs_examined = graphs.len();
            info!("phase one over {} underlying graphs", graphs.len());
            let survivors: Vec<(MultiGraph, Vec<EdgeSet>)> = graphs
                .par_iter()
                .map(|g| Ok((*g, phase_one(g)?.into_iter().map(|(s, _)| s).collect::<Vec<_>>())))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|(_, s)| !s.is_empty())
                .collect();
            write_checkpoint(config, &survivors, &mut report.warnings);
            survivors
        }
    };
    report.phase_one_survivors = survivors.iter().map(|(_, s)| s.len()).sum();
    info!("phase two over {} surviving configurations", report.phase_one_survivors);
    let mut entries: Vec<CatalogEntry> = survivors
        .par_iter()
        .map(|(g, configs)| phase_two(g, configs, config.unrestricted))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    entries.sort_by(|a, b| {
        (a.enhanced.graph().num_edges(), family_rank(&a.family), a.weight, &a.form).cmp(&(
            b.enhanced.graph().num_edges(),
            family_rank(&b.family),
            b.weight,
            &b.form,
        ))
    });
    entries.dedup_by(|a, b| a.form == b.form);
    link_duals(&mut entries);
    for w in &report.warnings {
        warn!("{w}");
    }
    report.entries = entries;
    Ok(report)
}

fn family_rank(name: &str) -> usize {
    ["K4", "W4", "K5-", "P", "K33", "W5", "P+", "K5", "D", "D*", "C", "H", "O"].iter().position(|&n| n == name).unwrap_or(usize::MAX)
}

/// Fills in `dual_partner` for entries whose planar dual is also listed.
pub fn link_duals(entries: &mut [CatalogEntry]) {
    let index: HashMap<CanonicalForm, usize> = entries.iter().enumerate().map(|(i, e)| (e.form.clone(), i)).collect();
    for e in entries.iter_mut() {
        e.dual_partner = dual::planar_dual(e.enhanced.graph())
            .ok()
            .and_then(|d| e.enhanced.dual_on(d).ok())
            .and_then(|d| minors::canonical_form(&d).ok())
            .and_then(|f| index.get(&f).copied());
    }
}

// ---- catalog files -----------------------------------------------------------

/// Renders entries as catalog lines:
/// `encoding<TAB>weight<TAB>family<TAB>witness<TAB>dual-or--`.
pub fn write_catalog(entries: &[CatalogEntry]) -> String {
    let mut s = String::from("# encoding\tweight\tfamily\twitness\tdual\n");
    for e in entries {
        let witness = e.witness.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let dual = e.dual_partner.map_or("-".to_string(), |d| d.to_string());
        s.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", e.form, e.weight, e.family, witness, dual));
    }
    s
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(Error::parse(ln, format!("expected 5 tab-separated fields, found {}", fields.len())));
        }
        let form: CanonicalForm = fields[0].parse().map_err(|e: Error| Error::parse(ln, e.to_string()))?;
        let enhanced = form.decode()?;
        let weight: usize = fields[1].parse().map_err(|_| Error::parse(ln, "weight is not a number"))?;
        let witness = io::parse_id_list(fields[3], ln)?;
        enhanced.graph().check_edges(witness)?;
        let dual_partner = match fields[4] {
            "-" => None,
            d => Some(d.parse().map_err(|_| Error::parse(ln, "dual partner is not an index"))?),
        };
        out.push(CatalogEntry { form, enhanced, witness, family: fields[2].to_string(), weight, dual_partner });
    }
    Ok(out)
}

/// Differences between a regenerated catalog and a golden one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogDiff {
    /// Regenerated entries missing from the golden file.
    pub additions: Vec<CanonicalForm>,
    /// Golden entries the search did not produce.
    pub omissions: Vec<CanonicalForm>,
    /// Entries present in both with different weight or family.
    pub mismatches: Vec<String>,
}

impl CatalogDiff {
    pub fn is_empty(&self) -> bool {
        self.additions.is_empty() && self.omissions.is_empty() && self.mismatches.is_empty()
    }
}

impl fmt::Display for CatalogDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "catalog matches");
        }
        for a in &self.additions {
            writeln!(f, "addition: {a}")?;
        }
        for o in &self.omissions {
            writeln!(f, "omission: {o}")?;
        }
        for m in &self.mismatches {
            writeln!(f, "mismatch: {m}")?;
        }
        Ok(())
    }
}

pub fn diff_catalogs(regenerated: &[CatalogEntry], golden: &[CatalogEntry]) -> CatalogDiff {
    let by_form = |es: &[CatalogEntry]| -> BTreeMap<CanonicalForm, (usize, String)> {
        es.iter().map(|e| (e.form.clone(), (e.weight, e.family.clone()))).collect()
    };
    let (new, old) = (by_form(regenerated), by_form(golden));
    let mut diff = CatalogDiff::default();
    for (form, (w, fam)) in &new {
        match old.get(form) {
            None => diff.additions.push(form.clone()),
            Some((gw, gfam)) if (gw, gfam) != (w, fam) => {
                diff.mismatches.push(format!("{form}: weight {w} family {fam}, golden weight {gw} family {gfam}"))
            }
            _ => {}
        }
    }
    diff.omissions = old.keys().filter(|f| !new.contains_key(*f)).cloned().collect();
    diff
}

/// Regenerates the catalog under `config` and compares it with `golden`.
pub fn verify_catalog(config: &SearchConfig, golden: &str) -> Result<CatalogDiff> {
    let golden = parse_catalog(golden)?;
    let report = find_minimal_nonsplit(config)?;
    Ok(diff_catalogs(&report.entries, &golden))
}
