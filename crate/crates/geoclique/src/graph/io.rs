//! Graph exchange formats: JSON adjacency and DIMACS-like edge lists.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<f64>>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges(),
        weights: g.weights().map(|w| w.to_vec()),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes")
}

pub fn from_json(s: &str) -> Result<Graph, GraphError> {
    let doc: GraphJson = serde_json::from_str(s).map_err(|e| GraphError::Parse(e.to_string()))?;
    let mut g = Graph::from_edges(doc.n, &doc.edges)?;
    if let Some(w) = doc.weights {
        g.set_weights(w)?;
    }
    Ok(g)
}

/// DIMACS edge format, 1-indexed: `p edge n m` then `e u v` lines.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn from_dimacs(s: &str) -> Result<Graph, GraphError> {
    let mut g: Option<Graph> = None;
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                let _fmt = parts.next();
                let n: usize = parse_field(parts.next(), lineno)?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let u: usize = parse_field(parts.next(), lineno)?;
                let v: usize = parse_field(parts.next(), lineno)?;
                let g = g
                    .as_mut()
                    .ok_or_else(|| GraphError::Parse("edge before problem line".into()))?;
                if u == 0 || v == 0 {
                    return Err(GraphError::Parse(format!(
                        "line {}: DIMACS vertices are 1-indexed",
                        lineno + 1
                    )));
                }
                g.try_add_edge(u - 1, v - 1)?;
            }
            Some(other) => {
                return Err(GraphError::Parse(format!(
                    "line {}: unknown record '{}'",
                    lineno + 1,
                    other
                )))
            }
            None => {}
        }
    }
    g.ok_or_else(|| GraphError::Parse("missing problem line".into()))
}

fn parse_field(field: Option<&str>, lineno: usize) -> Result<usize, GraphError> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| GraphError::Parse(format!("line {}: bad integer field", lineno + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    #[test]
    fn json_round_trip() {
        let mut g = cycle(5);
        g.set_weights(vec![1.0, 2.5, 0.0, 4.0, 1e-9]).unwrap();
        let back = from_json(&to_json(&g)).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.weights(), g.weights());
    }

    #[test]
    fn dimacs_round_trip() {
        let g = cycle(6);
        let back = from_dimacs(&to_dimacs(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn dimacs_rejects_garbage() {
        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge 3 1\ne 0 2\n").is_err());
        assert!(from_dimacs("p edge 3 1\nq 1 2\n").is_err());
    }
}
