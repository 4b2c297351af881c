//! graph6 text encoding and the colored-graph JSON document.
//!
//! Only the short graph6 size field is supported (n <= 62, one byte).
//! The adjacency bits cover the upper triangle column by column: the pair
//! (i, j) with i < j is visited for j = 1..n, i = 0..j, packed six bits per
//! character, most significant first, each character offset by 63.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, Graph, Vertex};

pub const GRAPH6_MAX_N: usize = 62;
const HEADER: &str = ">>graph6<<";

pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    if line.starts_with(':') || line.starts_with(">>sparse6<<") {
        return Err(Error::Sparse6Unsupported);
    }
    let bytes = line.as_bytes();
    let Some((&first, rest)) = bytes.split_first() else {
        return Err(Error::Graph6("empty line".into()));
    };
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "character {:?} outside 63..126",
                b as char
            )));
        }
    }
    if first == 126 {
        return Err(Error::Graph6TooLarge {
            n: 63,
            max: GRAPH6_MAX_N,
        });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if rest.len() != want {
        return Err(Error::Graph6(format!(
            "expected {want} data characters for n = {n}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = rest[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // trailing padding bits must be zero for the encoding to be canonical
    if !bits.is_multiple_of(6) {
        let last = rest[want - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    edges.sort_unstable();
    Ok(Graph::new(n, &edges).expect("decoded pairs are distinct and in range"))
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6TooLarge {
            n,
            max: GRAPH6_MAX_N,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    for &(i, j) in g.edges() {
        let k = j * (j - 1) / 2 + i;
        data[k / 6] |= 1 << (5 - k % 6);
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Reads graph6 lines, skipping blank lines. Line numbers in errors are
/// 1-based.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode_graph6(l.trim()).map_err(|e| match e {
                Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", i + 1)),
                other => other,
            })
        })
        .collect()
}

/// On-disk form of a colored graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredGraphDoc {
    pub n: usize,
    pub edges: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Value>,
}

impl ColoredGraphDoc {
    pub fn from_colored(cg: &ColoredGraph, meta: Option<Value>) -> Self {
        ColoredGraphDoc {
            n: cg.graph().n(),
            edges: cg
                .triples()
                .map(|(u, v, c)| [u as i64, v as i64, c as i64])
                .collect(),
            meta,
        }
    }

    pub fn to_colored(&self) -> Result<ColoredGraph> {
        let mut triples: Vec<(Vertex, Vertex, Color)> = Vec::with_capacity(self.edges.len());
        for &[u, v, c] in &self.edges {
            if c <= 0 || c > Color::MAX as i64 {
                return Err(Error::NonPositiveColor(c));
            }
            for w in [u, v] {
                if w < 0 || w as usize >= self.n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w.max(0) as usize,
                        n: self.n,
                    });
                }
            }
            triples.push((u as usize, v as usize, c as Color));
        }
        ColoredGraph::from_triples(self.n, &triples)
    }

    /// Uncolored view; accepts documents whose edges are `[u, v]` pairs or
    /// triples with any color.
    pub fn graph(&self) -> Result<Graph> {
        Ok(self.to_colored()?.into_parts().0)
    }
}

pub fn colored_to_json(cg: &ColoredGraph, meta: Option<Value>) -> String {
    serde_json::to_string(&ColoredGraphDoc::from_colored(cg, meta)).expect("document serializes")
}

pub fn colored_from_json(text: &str) -> Result<ColoredGraph> {
    parse_doc(text)?.to_colored()
}

pub fn parse_doc(text: &str) -> Result<ColoredGraphDoc> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    // a two-element edge has no color; report that rather than a serde shape error
    if let Some(edges) = value.get("edges").and_then(Value::as_array) {
        for e in edges {
            if let Some(a) = e.as_array() {
                if a.len() == 2 {
                    return Err(Error::Document(format!("edge {e} has no color")));
                }
            }
        }
    }
    serde_json::from_value(value).map_err(|e| Error::Document(e.to_string()))
}

/// A graph read from a file: either a colored-graph document or graph6.
pub fn read_graph_text(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Document("missing \"n\"".into()))? as usize;
        let edges = value
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Document("missing \"edges\"".into()))?;
        let mut pairs = Vec::with_capacity(edges.len());
        for e in edges {
            let a = e.as_array().filter(|a| a.len() >= 2);
            let pair = a.and_then(|a| Some((a[0].as_u64()? as usize, a[1].as_u64()? as usize)));
            pairs.push(pair.ok_or_else(|| Error::Document(format!("bad edge {e}")))?);
        }
        Graph::new(n, &pairs)
    } else {
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Error::Graph6("no graph in input".into()))?;
        decode_graph6(line.trim())
    }
}
