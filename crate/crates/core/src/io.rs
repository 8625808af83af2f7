//! Text formats for graphs.
//!
//! The native format is a header line `n m` followed by `m` lines
//! `edge_id u v` with 0-based vertices. Blank lines and lines starting with
//! `#` are ignored. Two optional lines `c: <ids>` and `d: <ids>` list the
//! contract-proof and delete-proof edges of an enhanced graph. A file whose
//! first meaningful line is a single graph6 token is read as graph6, with
//! edges numbered in column order of the upper triangle.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::sets::EdgeSet;

/// A parsed graph together with any protection lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: MultiGraph,
    pub contract_proof: EdgeSet,
    pub delete_proof: EdgeSet,
}

/// Parses a list of edge identifiers separated by spaces or commas, with
/// optional surrounding brackets.
pub fn parse_id_list(s: &str, line: usize) -> Result<EdgeSet> {
    let mut out = EdgeSet::EMPTY;
    for tok in s.split(|c: char| c.is_whitespace() || c == ',' || c == '[' || c == ']').filter(|t| !t.is_empty()) {
        let id: usize = tok.parse().map_err(|_| Error::parse(line, format!("expected an edge id, found {tok:?}")))?;
        if id >= crate::sets::MAX_IDS {
            return Err(Error::IdOutOfRange(id));
        }
        out.insert(id);
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (graph, rest): (MultiGraph, Vec<(usize, &str)>) = if fields.len() == 1 && !header.starts_with("c:") && !header.starts_with("d:") {
        (
            parse_graph6(header).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::parse(hline, msg),
                other => other,
            })?,
            lines.collect(),
        )
    } else {
        if fields.len() != 2 {
            return Err(Error::parse(hline, "expected header `n m`"));
        }
        let n: usize = fields[0].parse().map_err(|_| Error::parse(hline, "vertex count is not a number"))?;
        let m: usize = fields[1].parse().map_err(|_| Error::parse(hline, "edge count is not a number"))?;
        let mut g = MultiGraph::with_vertices(n)?;
        let mut rest = Vec::new();
        let mut read = 0;
        for (ln, l) in lines {
            if read == m {
                rest.push((ln, l));
                continue;
            }
            let nums: Vec<usize> = l
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(ln, format!("expected a number, found {t:?}"))))
                .collect::<Result<_>>()?;
            if nums.len() != 3 {
                return Err(Error::parse(ln, "expected `edge_id u v`"));
            }
            g.add_edge(nums[0], nums[1], nums[2])?;
            read += 1;
        }
        if read != m {
            return Err(Error::parse(hline, format!("header announces {m} edges, found {read}")));
        }
        (g, rest)
    };
    let mut file = GraphFile { graph, contract_proof: EdgeSet::EMPTY, delete_proof: EdgeSet::EMPTY };
    for (ln, l) in rest {
        if let Some(ids) = l.strip_prefix("c:") {
            file.contract_proof = file.contract_proof | parse_id_list(ids, ln)?;
        } else if let Some(ids) = l.strip_prefix("d:") {
            file.delete_proof = file.delete_proof | parse_id_list(ids, ln)?;
        } else {
            return Err(Error::parse(ln, format!("unexpected line {l:?}")));
        }
    }
    file.graph.check_edges(file.contract_proof | file.delete_proof)?;
    Ok(file)
}

/// Renders `g` in the native format, optionally with protection lines.
pub fn write_graph(g: &MultiGraph, contract_proof: EdgeSet, delete_proof: EdgeSet) -> String {
    let n = g.vertices().max().map_or(0, |v| v + 1);
    let mut s = format!("{} {}\n", n, g.num_edges());
    for e in g.edges().iter() {
        let (u, v) = g.endpoints(e).expect("edge of g");
        s.push_str(&format!("{e} {u} {v}\n"));
    }
    let list = |set: EdgeSet| set.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
    if !contract_proof.is_empty() {
        s.push_str(&format!("c: {}\n", list(contract_proof)));
    }
    if !delete_proof.is_empty() {
        s.push_str(&format!("d: {}\n", list(delete_proof)));
    }
    s
}

pub fn parse_graph6(token: &str) -> Result<MultiGraph> {
    let bytes = token.as_bytes();
    if bytes.is_empty() || bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, "graph6 characters must lie in '?'..'~'"));
    }
    if bytes[0] == 126 {
        return Err(Error::Unsupported("graph6 graphs with more than 62 vertices".into()));
    }
    let n = (bytes[0] - 63) as usize;
    let bits: Vec<bool> = bytes[1..].iter().flat_map(|&b| (0..6).rev().map(move |i| (b - 63) >> i & 1 == 1)).collect();
    let needed = n * n.saturating_sub(1) / 2;
    if bits.len() < needed || bits.len() >= needed + 6 {
        return Err(Error::parse(1, format!("graph6 body has the wrong length for {n} vertices")));
    }
    let mut g = MultiGraph::with_vertices(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                g.push_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// graph6 encoding of a simple graph, vertices taken in increasing order.
pub fn to_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::domain("graph6 encodes simple graphs only"));
    }
    let verts = g.vertices().to_vec();
    let n = verts.len();
    if n > 62 {
        return Err(Error::Unsupported("graph6 graphs with more than 62 vertices".into()));
    }
    let adj = g.adjacency();
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[verts[i]].contains(verts[j]));
        }
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                b |= 1 << (5 - i);
            }
        }
        s.push((b + 63) as char);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn native_round_trip() {
        let text = "# triangle\n3 3\n1 0 1\n2 1 2\n3 0 2\nc: 1\nd: 2 3\n";
        let f = parse_graph(text).unwrap();
        assert_eq!(f.graph.num_edges(), 3);
        assert_eq!(f.contract_proof, EdgeSet::singleton(1));
        assert_eq!(f.delete_proof, EdgeSet::from_iter([2, 3]));
        let again = parse_graph(&write_graph(&f.graph, f.contract_proof, f.delete_proof)).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 0 5\n"), Err(Error::UnknownVertex(5))));
        assert!(matches!(parse_graph("2 2\n0 0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1\n0 0 1\nd: 4\n"), Err(Error::UnknownEdge(4))));
        assert!(matches!(parse_graph("2 2\n0 0 1\n0 1 0\n"), Err(Error::DuplicateEdge(0))));
    }

    #[test]
    fn graph6_known_strings() {
        // K4 is "C~", the 5-cycle is "Dhc"
        assert_eq!(to_graph6(&families::complete(4)).unwrap(), "C~");
        let k4 = parse_graph("C~").unwrap().graph;
        assert_eq!(k4.num_edges(), 6);
        assert!(k4.is_k_connected(3));
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5.num_edges(), 5);
        assert!(c5.vertices().iter().all(|v| c5.degree(v) == 2));
        for g in [families::cube(), families::octahedron()] {
            let back = parse_graph6(&to_graph6(&g).unwrap()).unwrap();
            assert_eq!(back.num_edges(), g.num_edges());
        }
    }
}
