//! File formats: graph6, the labeled edge-list text format, and DOT export.

use thiserror::Error;

use crate::graph::{Graph, Label, LabeledGraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 writer supports order <= 62, got {0}")]
    Graph6OrderTooLarge(usize),
    #[error("line {line}: {reason}")]
    MalformedLabeled { line: usize, reason: String },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: label must be >= 1")]
    LabelOutOfRange { line: usize },
    #[error("line {line}: endpoint out of range")]
    EndpointOutOfRange { line: usize },
    #[error("missing header line \"n <order>\"")]
    MissingHeader,
}

/// Parses a single graph6 line (order <= 62: header byte is `63 + n`,
/// upper triangle packed column-major, 6 bits per byte, bias 63).
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let s = text.trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::MalformedGraph6("empty input".into()));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(FormatError::MalformedGraph6(
            "byte outside printable range 63..=126".into(),
        ));
    }
    if bytes[0] == 126 {
        return Err(FormatError::MalformedGraph6(
            "extended order encoding (>= 63 vertices) not supported".into(),
        ));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != expect {
        return Err(FormatError::MalformedGraph6(format!(
            "expected {expect} body bytes for order {n}, got {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    // trailing padding bits must be zero for a canonical string
    for b in bit..expect * 6 {
        let byte = body[b / 6] - 63;
        if byte & (1 << (5 - b % 6)) != 0 {
            return Err(FormatError::MalformedGraph6("non-zero padding bits".into()));
        }
    }
    Graph::new(n, edges).map_err(|e| FormatError::MalformedGraph6(e.to_string()))
}

pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.order();
    if n > 62 {
        return Err(FormatError::Graph6OrderTooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc = 0u8;
    let mut filled = 0usize;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            filled += 1;
            bit += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(acc + 63);
    }
    debug_assert_eq!(bit, nbits);
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses the labeled edge-list format:
///
/// ```text
/// n <order>
/// e <u> <v> <label>    # with 0 <= u < v < order, label >= 1
/// ```
///
/// `#` lines are comments; blank lines are ignored.
pub fn parse_labeled(text: &str) -> Result<LabeledGraph, FormatError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labels: Vec<Label> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("n") => {
                if order.is_some() {
                    return Err(FormatError::MalformedLabeled {
                        line: lineno,
                        reason: "duplicate header".into(),
                    });
                }
                let n = parts.next().and_then(|t| t.parse::<usize>().ok()).ok_or(
                    FormatError::MalformedLabeled {
                        line: lineno,
                        reason: "expected \"n <order>\"".into(),
                    },
                )?;
                order = Some(n);
            }
            Some("e") => {
                let n = order.ok_or(FormatError::MissingHeader)?;
                let mut field = |name: &str| {
                    parts
                        .next()
                        .map(|t| t.to_owned())
                        .ok_or(FormatError::MalformedLabeled {
                            line: lineno,
                            reason: format!("missing {name}"),
                        })
                };
                let u: usize = field("u")?
                    .parse()
                    .map_err(|_| FormatError::MalformedLabeled {
                        line: lineno,
                        reason: "bad u".into(),
                    })?;
                let v: usize = field("v")?
                    .parse()
                    .map_err(|_| FormatError::MalformedLabeled {
                        line: lineno,
                        reason: "bad v".into(),
                    })?;
                let label: i64 =
                    field("label")?
                        .parse()
                        .map_err(|_| FormatError::MalformedLabeled {
                            line: lineno,
                            reason: "bad label".into(),
                        })?;
                if u >= v || v >= n {
                    return Err(FormatError::EndpointOutOfRange { line: lineno });
                }
                if label < 1 || label > Label::MAX as i64 {
                    return Err(FormatError::LabelOutOfRange { line: lineno });
                }
                if edges.contains(&(u, v)) {
                    return Err(FormatError::DuplicateEdge { line: lineno, u, v });
                }
                edges.push((u, v));
                labels.push(label as Label);
            }
            Some(tok) => {
                return Err(FormatError::MalformedLabeled {
                    line: lineno,
                    reason: format!("unknown directive {tok:?}"),
                })
            }
            None => unreachable!("empty lines skipped"),
        }
    }
    let n = order.ok_or(FormatError::MissingHeader)?;
    let graph =
        Graph::new(n, edges.iter().copied()).map_err(|e| FormatError::MalformedLabeled {
            line: 0,
            reason: e.to_string(),
        })?;
    // reorder labels to the graph's sorted edge order
    let mut sorted_labels = vec![0; graph.size()];
    for (k, &(u, v)) in edges.iter().enumerate() {
        sorted_labels[graph.edge_index(u, v).expect("edge present")] = labels[k];
    }
    LabeledGraph::new(graph, sorted_labels).map_err(|e| FormatError::MalformedLabeled {
        line: 0,
        reason: e.to_string(),
    })
}

/// Writes the normalized form: edges sorted by `(u, v)`.
pub fn write_labeled(l: &LabeledGraph) -> String {
    let mut out = format!("n {}\n", l.graph().order());
    for (i, &(u, v)) in l.graph().edges().iter().enumerate() {
        out.push_str(&format!("e {u} {v} {}\n", l.labels()[i]));
    }
    out
}

const DOT_PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
    "#008080", "#9a6324", "#800000", "#000075",
];

/// DOT text with one node per vertex; each edge carries its integer label and
/// a color cycled from a fixed 12-color palette by label.
pub fn export_dot(l: &LabeledGraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..l.graph().order() {
        out.push_str(&format!("  {v};\n"));
    }
    for (i, &(u, v)) in l.graph().edges().iter().enumerate() {
        let label = l.labels()[i];
        let color = DOT_PALETTE[(label as usize - 1) % DOT_PALETTE.len()];
        out.push_str(&format!(
            "  {u} -- {v} [label={label}, color=\"{color}\"];\n"
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn graph6_k3_is_bw() {
        assert_eq!(write_graph6(&complete(3)).unwrap(), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), complete(3));
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("E?").is_err()); // truncated body for order 6
        assert!(parse_graph6("B\u{7f}").is_err());
    }

    #[test]
    fn graph6_order_6_header() {
        let g = parse_graph6("E?~o").unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn labeled_roundtrip_and_errors() {
        let l = parse_labeled("n 3\ne 0 1 1\ne 1 2 2\ne 0 2 3\n").unwrap();
        assert_eq!(l.graph(), &complete(3));
        assert_eq!(l.label_of(0, 2), Some(3));
        assert_eq!(parse_labeled(&write_labeled(&l)).unwrap(), l);

        assert_eq!(
            parse_labeled("n 2\ne 0 1 0"),
            Err(FormatError::LabelOutOfRange { line: 2 })
        );
        assert!(matches!(
            parse_labeled("n 3\ne 0 1 1\ne 0 1 2"),
            Err(FormatError::DuplicateEdge { .. })
        ));
        assert!(matches!(
            parse_labeled("n 3\ne 1 0 1"),
            Err(FormatError::EndpointOutOfRange { .. })
        ));
        assert!(matches!(
            parse_labeled("n 3\ne 0 1"),
            Err(FormatError::MalformedLabeled { .. })
        ));

        // edgeless single vertex
        let single = parse_labeled("n 1\n").unwrap();
        assert_eq!(single.graph().order(), 1);
        assert!(single.labels().is_empty());

        // comments and blank lines
        let c = parse_labeled("# a triangle\n\nn 3\ne 0 1 1\ne 1 2 1\ne 0 2 1\n").unwrap();
        assert_eq!(c.graph().size(), 3);
    }

    #[test]
    fn dot_export_shapes() {
        let l = parse_labeled("n 3\ne 0 1 1\ne 1 2 2\ne 0 2 3").unwrap();
        let dot = export_dot(&l);
        assert!(dot.starts_with("graph G {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert!(dot.contains("label=3"));

        let empty = LabeledGraph::new(Graph::empty(0), vec![]).unwrap();
        assert_eq!(export_dot(&empty), "graph G {\n}\n");
    }
}
