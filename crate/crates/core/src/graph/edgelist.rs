//! Plain-text edge lists: one `u v` pair per line.
//!
//! Header lines start with `#`. `#base=0` (the default) or `#base=1` selects the
//! index base and `#n=K` fixes the vertex count, which is otherwise one more than
//! the largest index. Other `#` lines and blank lines are ignored.

use super::{Graph, GraphError, MAX_VERTICES};

fn err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::EdgeList { line, reason: reason.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut base = 0usize;
    let mut declared_n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('#') {
            let header = header.trim();
            if let Some(value) = header.strip_prefix("base=") {
                base = match value.trim() {
                    "0" => 0,
                    "1" => 1,
                    other => return Err(err(lineno, format!("unsupported base `{other}`"))),
                };
            } else if let Some(value) = header.strip_prefix("n=") {
                let n = value.trim().parse().map_err(|_| err(lineno, format!("bad vertex count `{value}`")))?;
                declared_n = Some(n);
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(lineno, format!("expected two vertex indices, found {}", fields.len())));
        };
        let parse = |s: &str| -> Result<usize, GraphError> {
            let raw: usize = s.parse().map_err(|_| err(lineno, format!("bad vertex index `{s}`")))?;
            raw.checked_sub(base)
                .ok_or_else(|| err(lineno, format!("vertex index {raw} below base {base}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u == v {
            return Err(err(lineno, format!("self-loop at vertex {}", u + base)));
        }
        if let Some(n) = declared_n {
            if u.max(v) >= n {
                return Err(err(lineno, format!("vertex index {} out of range for n={n}", u.max(v) + base)));
            }
        }
        if u.max(v) >= MAX_VERTICES {
            return Err(GraphError::TooManyVertices(u.max(v) + 1));
        }
        edges.push((u, v));
    }
    let n = match declared_n {
        Some(n) => n,
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or(GraphError::NoVertices)?,
    };
    Graph::from_edges(n, edges)
}
