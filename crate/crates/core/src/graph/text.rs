//! Plain-text graph format.
//!
//! ```text
//! # comments start with '#'
//! delta 2          # optional; inferred from degree / opposite
//! opposite 3       # optional; inferred from the largest label
//! v0 + : 1 2 3 1 2 3
//! e0 + (0,0,1)-(0,3,1)
//! e1 ? (0,1,_)-(0,4,_) *4
//! ```
//!
//! A vertex line gives the parity and one label per slot (`_` when
//! unlabeled). An edge line gives the sign (`?` to derive it from parities),
//! the two ends as `(vertex,slot,label)` and an optional `*size`.

use super::embedded::{build_graph, EdgeEnd, EdgeSpec, EmbeddedGraph, FatVertex, LabelFrame};
use super::Sign;
use crate::error::GraphError;
use std::fmt::Write as _;

fn perr(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_sign(tok: &str, line: usize) -> Result<Option<Sign>, GraphError> {
    match tok {
        "+" | "+1" => Ok(Some(Sign::Plus)),
        "-" | "-1" => Ok(Some(Sign::Minus)),
        "?" => Ok(None),
        _ => Err(perr(line, format!("expected a sign, found '{tok}'"))),
    }
}

fn parse_label(tok: &str, line: usize) -> Result<Option<u32>, GraphError> {
    if tok == "_" {
        return Ok(None);
    }
    tok.parse()
        .map(Some)
        .map_err(|_| perr(line, format!("bad label '{tok}'")))
}

fn parse_index(tok: &str, prefix: char, line: usize) -> Result<usize, GraphError> {
    tok.strip_prefix(prefix)
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| perr(line, format!("bad identifier '{tok}'")))
}

fn parse_end(tok: &str, line: usize) -> Result<EdgeEnd, GraphError> {
    let inner = tok
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| perr(line, format!("bad edge end '{tok}'")))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(perr(line, format!("edge end '{tok}' needs vertex,slot,label")));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| perr(line, format!("bad number '{s}'")))
    };
    Ok(EdgeEnd::new(num(parts[0])?, num(parts[1])?, parse_label(parts[2], line)?))
}

/// Parses the text format and validates the result with [`build_graph`].
pub fn parse_graph(src: &str) -> Result<EmbeddedGraph, GraphError> {
    let mut delta: Option<u32> = None;
    let mut opposite: Option<u32> = None;
    let mut vertices: Vec<(usize, FatVertex)> = Vec::new();
    let mut edges: Vec<(usize, EdgeSpec)> = Vec::new();

    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut toks = text.split_whitespace();
        let head = toks.next().unwrap_or_default();
        match head {
            "delta" | "opposite" => {
                let v: u32 = toks
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| perr(line, format!("'{head}' needs a positive integer")))?;
                if head == "delta" {
                    delta = Some(v);
                } else {
                    opposite = Some(v);
                }
            }
            h if h.starts_with('v') => {
                let id = parse_index(h, 'v', line)?;
                let parity = parse_sign(toks.next().unwrap_or_default(), line)?
                    .ok_or_else(|| perr(line, "vertex parity must be + or -"))?;
                if toks.next() != Some(":") {
                    return Err(perr(line, "expected ':' after the vertex parity"));
                }
                let labels = toks
                    .map(|t| parse_label(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                vertices.push((id, FatVertex::new(parity, labels)));
            }
            h if h.starts_with('e') => {
                let id = parse_index(h, 'e', line)?;
                let sign = parse_sign(toks.next().unwrap_or_default(), line)?;
                let body: String = toks.collect::<Vec<_>>().join(" ");
                let (ends, size) = match body.split_once('*') {
                    Some((e, s)) => (
                        e.trim().to_string(),
                        s.trim()
                            .parse::<u32>()
                            .map_err(|_| perr(line, format!("bad size '{s}'")))?,
                    ),
                    None => (body.trim().to_string(), 1),
                };
                let compact: String = ends.chars().filter(|c| !c.is_whitespace()).collect();
                let (a, b) = compact
                    .split_once(")-(")
                    .ok_or_else(|| perr(line, "edge needs two ends joined by '-'"))?;
                let a = parse_end(&format!("{a})"), line)?;
                let b = parse_end(&format!("({b}"), line)?;
                let mut spec = EdgeSpec::new(a, b).with_size(size);
                spec.sign = sign;
                edges.push((id, spec));
            }
            _ => return Err(perr(line, format!("unrecognized line '{text}'"))),
        }
    }

    vertices.sort_by_key(|(id, _)| *id);
    edges.sort_by_key(|(id, _)| *id);
    for (k, (id, _)) in vertices.iter().enumerate() {
        if *id != k {
            return Err(perr(0, format!("vertex ids must be 0..{}", vertices.len())));
        }
    }
    for (k, (id, _)) in edges.iter().enumerate() {
        if *id != k {
            return Err(perr(0, format!("edge ids must be 0..{}", edges.len())));
        }
    }
    let vertices: Vec<FatVertex> = vertices.into_iter().map(|(_, v)| v).collect();
    let edges: Vec<EdgeSpec> = edges.into_iter().map(|(_, e)| e).collect();

    let max_label = vertices
        .iter()
        .flat_map(|v| v.labels.iter().flatten())
        .chain(edges.iter().flat_map(|e| e.ends.iter().filter_map(|x| x.label.as_ref())))
        .copied()
        .max();
    let frame = match (max_label, opposite) {
        (None, None) => None,
        (_, Some(n)) | (Some(n), None) => {
            let d = match delta {
                Some(d) => d,
                None => {
                    let deg = vertices.first().map_or(0, FatVertex::degree) as u32;
                    if n == 0 || !deg.is_multiple_of(n) {
                        return Err(perr(0, "cannot infer delta from the vertex degree"));
                    }
                    deg / n
                }
            };
            Some(LabelFrame {
                delta: d,
                modulus: n,
            })
        }
    };
    build_graph(vertices, edges, frame)
}

/// Writes a graph in the text format accepted by [`parse_graph`].
pub fn format_graph(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    if let Some(f) = g.frame() {
        let _ = writeln!(out, "delta {}\nopposite {}", f.delta, f.modulus);
    }
    let label = |l: Option<u32>| l.map_or_else(|| "_".to_string(), |x| x.to_string());
    for (i, v) in g.vertices().iter().enumerate() {
        let labels: Vec<String> = v.labels.iter().map(|&l| label(l)).collect();
        let _ = writeln!(out, "v{i} {} : {}", v.parity, labels.join(" "));
    }
    for (i, e) in g.edges().iter().enumerate() {
        let [a, b] = e.ends;
        let _ = write!(
            out,
            "e{i} {} ({},{},{})-({},{},{})",
            e.sign,
            a.vertex,
            a.slot,
            label(a.label),
            b.vertex,
            b.slot,
            label(b.label)
        );
        if e.size != 1 {
            let _ = write!(out, " *{}", e.size);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const THREE_LOOPS: &str = "\
# one vertex, three loops
v0 + : 1 2 3 1 2 3
e0 + (0,0,1)-(0,3,1)
e1 + (0,1,2)-(0,4,2)
e2 ? (0,2,3)-(0,5,3)   # sign derived
";

    #[test]
    fn parses_and_infers_frame() {
        let g = parse_graph(THREE_LOOPS).unwrap();
        assert_eq!(
            g.frame(),
            Some(LabelFrame {
                delta: 2,
                modulus: 3
            })
        );
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.faces().len(), 2);
    }

    #[test]
    fn round_trips() {
        let g = parse_graph(THREE_LOOPS).unwrap();
        let again = parse_graph(&format_graph(&g)).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn unlabeled_with_sizes() {
        let src = "v0 + : _ _ _ _\ne0 + (0,0,_)-(0,2,_) *3\ne1 + (0,1,_)-(0,3,_) *2\n";
        let g = parse_graph(src).unwrap();
        assert_eq!(g.frame(), None);
        assert_eq!(g.size(0), 3);
        assert_eq!(g.euler_characteristic(), 0);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_graph("v0 + : 1 2\nbogus\n").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 2,
                message: "unrecognized line 'bogus'".into()
            }
        );
    }

    #[test]
    fn declared_sign_is_checked() {
        let src = "v0 + : _ _\ne0 - (0,0,_)-(0,1,_)\n";
        assert_eq!(
            parse_graph(src),
            Err(GraphError::ParityContradiction { edge: 0 })
        );
    }
}
