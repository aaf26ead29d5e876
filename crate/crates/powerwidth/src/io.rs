//! Bit-exact parsing and serialization of graphs.
//!
//! Two file formats are supported: a human-editable edge list (`.el`,
//! header `p <n>` followed by `e <u> <v>` lines, `#` comments allowed)
//! and graph6 (`.g6`, one graph per line) for interchange with standard
//! graph corpora. Output always uses LF line endings; input tolerates
//! CRLF.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

/// Largest vertex count representable in the supported graph6 forms.
pub const GRAPH6_MAX_N: usize = 258047;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed edge line: {0}")]
    MalformedEdge(String),
    #[error("graph error: {0}")]
    Graph(#[from] GraphError),
    #[error("invalid graph6 byte {0:#x}")]
    InvalidByte(u8),
    #[error("truncated graph6 string")]
    Truncated,
    #[error("graph too large for graph6 ({0} vertices, max {GRAPH6_MAX_N})")]
    TooLarge(usize),
    #[error("empty input")]
    Empty,
}

/// Parses an edge-list document.
pub fn parse_edgelist(text: &str) -> Result<Graph, IoError> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        match it.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(IoError::MalformedHeader("duplicate header".into()));
                }
                let count = it
                    .next()
                    .ok_or_else(|| IoError::MalformedHeader(line.into()))?
                    .parse()
                    .map_err(|_| IoError::MalformedHeader(line.into()))?;
                if it.next().is_some() {
                    return Err(IoError::MalformedHeader(line.into()));
                }
                n = Some(count);
            }
            Some("e") => {
                if n.is_none() {
                    return Err(IoError::MalformedHeader("edge before header".into()));
                }
                let u = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| IoError::MalformedEdge(line.into()))?;
                let v = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| IoError::MalformedEdge(line.into()))?;
                if it.next().is_some() {
                    return Err(IoError::MalformedEdge(line.into()));
                }
                pairs.push((u, v));
            }
            _ => return Err(IoError::MalformedHeader(line.into())),
        }
    }
    let n = n.ok_or(IoError::Empty)?;
    Ok(Graph::from_edges(n, &pairs)?)
}

/// Serializes a graph as an edge-list document, edges sorted
/// lexicographically with `u < v`.
pub fn serialize_edgelist(g: &Graph) -> String {
    let mut out = format!("p {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

fn graph6_size_header(n: usize) -> Result<Vec<u8>, IoError> {
    if n <= 62 {
        Ok(vec![63 + n as u8])
    } else if n <= GRAPH6_MAX_N {
        Ok(vec![
            126,
            63 + ((n >> 12) & 63) as u8,
            63 + ((n >> 6) & 63) as u8,
            63 + (n & 63) as u8,
        ])
    } else {
        Err(IoError::TooLarge(n))
    }
}

/// Encodes a graph in graph6. Vertex order is the graph's own index
/// order; no canonicalization happens on write.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = graph6_size_header(n).expect("caller-checked size");
    let mut acc: u8 = 0;
    let mut filled = 0;
    // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a single graph6 string (surrounding whitespace tolerated).
pub fn parse_graph6(text: &str) -> Result<Graph, IoError> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(IoError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(IoError::InvalidByte(b));
        }
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(IoError::Truncated);
        }
        if bytes[1] == 126 {
            // The 8-byte form encodes n > 258047, beyond the supported range.
            return Err(IoError::TooLarge(GRAPH6_MAX_N + 1));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let need = bit_count.div_ceil(6);
    if rest.len() < need {
        return Err(IoError::Truncated);
    }
    if rest.len() > need {
        return Err(IoError::InvalidByte(rest[need]));
    }
    let mut pairs = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                pairs.push((i, j));
            }
            idx += 1;
        }
    }
    Ok(Graph::from_edges(n, &pairs)?)
}

/// Parses a multi-graph `.g6` corpus, one graph6 string per line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, IoError> {
    text.lines()
        .map(|l| l.trim_end_matches('\r').trim())
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

/// Renders a graph in DOT, vertices emitted in index order. Optional
/// per-vertex label strings become `label` attributes.
pub fn to_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        match labels.and_then(|ls| ls.get(v)) {
            Some(l) => out.push_str(&format!("  {v} [label=\"{l}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    #[test]
    fn edgelist_examples() {
        let p3 = parse_edgelist("p 3\ne 0 1\ne 1 2").unwrap();
        assert_eq!(p3, generators::path(3));

        let k3 = generators::complete(3);
        assert_eq!(serialize_edgelist(&k3), "p 3\ne 0 1\ne 0 2\ne 1 2\n");

        assert_eq!(
            parse_edgelist("p 2\ne 0 2"),
            Err(IoError::Graph(GraphError::VertexOutOfRange(2, 2)))
        );
    }

    #[test]
    fn edgelist_comments_and_crlf() {
        let g = parse_edgelist("# a comment\r\np 3\r\n\r\ne 0 1\r\ne 1 2\r\n").unwrap();
        assert_eq!(g, generators::path(3));
    }

    #[test]
    fn graph6_known_values() {
        assert_eq!(to_graph6(&generators::path(3)), "Bg");
        assert_eq!(to_graph6(&generators::complete(3)), "Bw");
        assert_eq!(to_graph6(&generators::complete(1)), "@");
        // 5-vertex graph with edges 02, 04, 13, 34.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn graph6_decode_errors() {
        assert_eq!(parse_graph6("B"), Err(IoError::Truncated));
        assert_eq!(parse_graph6("B\x1f"), Err(IoError::InvalidByte(0x1f)));
        assert!(parse_graph6("Bgg").is_err());
    }

    #[test]
    fn graph6_long_form() {
        let g = Graph::empty(63);
        let enc = to_graph6(&g);
        assert_eq!(enc.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn dot_output() {
        let k2 = generators::complete(2);
        let dot = to_dot(&k2, None);
        assert!(dot.contains("0 -- 1;"));

        let two = Graph::empty(2);
        let dot = to_dot(&two, None);
        assert!(!dot.contains("--"));

        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let dot = to_dot(&generators::path(3), Some(&labels));
        assert!(dot.contains("label=\"b\""));
    }

    fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let m = n * (n - 1) / 2;
            proptest::collection::vec(proptest::bool::ANY, m).prop_map(move |bits| {
                let mut pairs = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[idx] {
                            pairs.push((u, v));
                        }
                        idx += 1;
                    }
                }
                Graph::from_edges(n, &pairs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn roundtrips(g in arbitrary_graph(40)) {
            prop_assert_eq!(parse_edgelist(&serialize_edgelist(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
