//! graph6 for simple graphs, and a JSON document for multigraphs and colorings:
//! `{"n": 3, "edges": [[0,1],[1,2]], "colors": [1, null]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoring, Graph};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> Result<String> {
    if g.has_parallel_edges() {
        return Err(Error::domain("graph6 encodes simple graphs only"));
    }
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n as u64 >> shift) & 63) as u8 + 63);
        }
    } else if (n as u64) < (1 << 36) {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Error::domain("graph6 supports fewer than 2^36 vertices"));
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i * n + j] as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let start = text.len() - text.trim_start().len();
    let mut s = text.trim();
    let mut base = start;
    if let Some(rest) = s.strip_prefix(HEADER) {
        s = rest;
        base += HEADER.len();
    }
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(base + i, format!("byte {b:#04x} outside graph6 range")));
        }
    }
    if bytes.is_empty() {
        return Err(Error::parse(base, "empty graph6 string"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::parse(base + bytes.len(), "truncated vertex count"));
        }
        let n = bytes[2..8].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(Error::parse(base + bytes.len(), "truncated vertex count"));
        }
        let n = bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
        (n, 4)
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let need = total_bits.div_ceil(6);
    let have = bytes.len() - pos;
    if have < need {
        return Err(Error::parse(base + bytes.len(), format!("expected {need} adjacency bytes, found {have}")));
    }
    if have > need {
        return Err(Error::parse(base + pos + need, "trailing bytes after adjacency data"));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j).expect("fresh pair");
            }
            bit += 1;
        }
    }
    pos += need;
    if total_bits % 6 != 0 {
        let last = bytes[pos - 1] - 63;
        let pad = 6 - total_bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    colors: Option<Vec<Option<Color>>>,
    /// Set for graphs that accept parallel edges even if none are present.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    multigraph: bool,
}

/// Serializes as the uncolored graph document.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphDoc {
            n: self.n(),
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
            colors: None,
            multigraph: !self.is_simple(),
        }
        .serialize(s)
    }
}

pub fn to_json(g: &Graph, c: Option<&EdgeColoring>) -> String {
    serde_json::to_string(&to_value(g, c)).expect("graph documents serialize")
}

pub fn to_value(g: &Graph, c: Option<&EdgeColoring>) -> serde_json::Value {
    let doc = GraphDoc {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        colors: c.map(|c| c.as_slice().to_vec()),
        multigraph: !g.is_simple(),
    };
    serde_json::to_value(doc).expect("graph documents serialize")
}

/// Parses the JSON document. Graphs with parallel edges, or with
/// `"multigraph": true`, come back as multigraphs.
pub fn from_json(text: &str) -> Result<(Graph, Option<EdgeColoring>)> {
    let doc: GraphDoc =
        serde_json::from_str(text).map_err(|e| Error::parse(byte_offset(text, e.line(), e.column()), e.to_string()))?;
    from_doc(doc, text)
}

fn from_doc(doc: GraphDoc, text: &str) -> Result<(Graph, Option<EdgeColoring>)> {
    let locate = |needle: &str| text.find(needle).unwrap_or(0);
    let mut pairs: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u.min(v), u.max(v))).collect();
    let parallel = {
        pairs.sort_unstable();
        pairs.windows(2).any(|w| w[0] == w[1])
    };
    let mut g = if doc.multigraph || parallel {
        Graph::multigraph(doc.n)
    } else {
        Graph::new(doc.n)
    };
    for &[u, v] in &doc.edges {
        g.add_edge(u, v)
            .map_err(|e| Error::parse(locate("\"edges\""), format!("edge [{u},{v}]: {e}")))?;
    }
    let coloring = match doc.colors {
        None => None,
        Some(cs) => {
            if cs.len() != g.m() {
                return Err(Error::parse(
                    locate("\"colors\""),
                    format!("{} colors for {} edges", cs.len(), g.m()),
                ));
            }
            Some(EdgeColoring::from_partial(cs).map_err(|e| Error::parse(locate("\"colors\""), e.to_string()))?)
        }
    };
    Ok((g, coloring))
}

/// Converts serde_json's 1-based line and column to a byte offset.
fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut offset = 0;
    for (i, l) in text.split_inclusive('\n').enumerate() {
        if i + 1 == line {
            return (offset + column.saturating_sub(1)).min(text.len());
        }
        offset += l.len();
    }
    text.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_strings() {
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(to_graph6(&Graph::new(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::path(2)).unwrap(), "Bg");
        assert_eq!(to_graph6(&Graph::new(0)).unwrap(), "?");
    }

    #[test]
    fn graph6_roundtrip_large_n() {
        let mut g = Graph::new(70);
        g.add_edge(0, 69).unwrap();
        g.add_edge(3, 4).unwrap();
        let s = to_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        let back = from_graph6(&s).unwrap();
        assert_eq!(back.n(), 70);
        let mut a = back.edges().to_vec();
        a.sort();
        assert_eq!(a, vec![(0, 69), (3, 4)]);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert!(matches!(from_graph6("C~~"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(from_graph6("C"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(from_graph6("B\x20"), Err(Error::Parse { .. })));
        assert!(matches!(from_graph6("Bh"), Err(Error::Parse { offset: 1, .. })));
        assert!(from_graph6(">>graph6<<Bg").is_ok());
    }

    #[test]
    fn json_roundtrip_with_coloring() {
        let g = Graph::multi_from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let c = EdgeColoring::from_partial(vec![Some(1), Some(2), None]).unwrap();
        let text = to_json(&g, Some(&c));
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[0,1],[1,2]],"colors":[1,2,null],"multigraph":true}"#);
        let (g2, c2) = from_json(&text).unwrap();
        assert_eq!(g2, g);
        assert_eq!(c2.unwrap(), c);
    }

    #[test]
    fn json_without_flag_infers_parallel_edges() {
        let (g, c) = from_json(r#"{"n": 2, "edges": [[0,1],[1,0]]}"#).unwrap();
        assert!(!g.is_simple());
        assert_eq!(g.m(), 2);
        assert!(c.is_none());
    }

    #[test]
    fn json_errors_carry_offsets() {
        let err = from_json("{\"n\": 2,\n \"edges\": [[0,1]], \"colors\": [0]}").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = from_json("{\"n\": 2, \"edges\": [[0,5]]}").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 9, .. }));
        let err = from_json("{\"n\": 2, \"edges\": x}").unwrap_err();
        assert!(matches!(err, Error::Parse { offset: 18, .. }), "{err:?}");
    }
}
