use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, MAX_VERTICES};

/// Standard constructions, written `K4`, `C5`, `P4`, `K3_3`, `double_star(2,2)`, `petersen`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum NamedGraph {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    /// Two adjacent centers carrying `a` and `b` pendant leaves.
    DoubleStar(usize, usize),
    Petersen,
}

impl NamedGraph {
    pub fn order(&self) -> usize {
        match *self {
            NamedGraph::Complete(n) | NamedGraph::Cycle(n) | NamedGraph::Path(n) => n,
            NamedGraph::CompleteBipartite(a, b) => a + b,
            NamedGraph::DoubleStar(a, b) => a + b + 2,
            NamedGraph::Petersen => 10,
        }
    }

    /// Identifier used in Lean output.
    pub fn lean_name(&self) -> String {
        match *self {
            NamedGraph::DoubleStar(a, b) => format!("(double_star {a} {b})"),
            other => other.to_string(),
        }
    }
}

pub fn named_graph(name: &NamedGraph) -> Result<Graph, GraphError> {
    let n = name.order();
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let edges: Vec<(usize, usize)> = match *name {
        NamedGraph::Complete(n) => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidParameters(format!("cycle C{n} needs at least 3 vertices")));
            }
            (0..n).map(|u| (u, (u + 1) % n)).collect()
        }
        NamedGraph::Path(n) => (1..n).map(|v| (v - 1, v)).collect(),
        NamedGraph::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(GraphError::InvalidParameters(format!("K{a}_{b} needs both sides nonempty")));
            }
            (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect()
        }
        NamedGraph::DoubleStar(a, b) => {
            let mut e = vec![(0, 1)];
            e.extend((0..a).map(|i| (0, 2 + i)));
            e.extend((0..b).map(|i| (1, 2 + a + i)));
            e
        }
        NamedGraph::Petersen => {
            let mut e = Vec::with_capacity(15);
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((i + 5, (i + 2) % 5 + 5));
            }
            e
        }
    };
    Graph::from_edges(n, edges)
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "K{a}_{b}"),
            NamedGraph::DoubleStar(a, b) => write!(f, "double_star({a},{b})"),
            NamedGraph::Petersen => f.write_str("petersen"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<NamedGraph, GraphError> {
        let bad = || GraphError::UnknownName(s.to_string());
        let num = |t: &str| -> Result<usize, GraphError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.eq_ignore_ascii_case("petersen") {
            return Ok(NamedGraph::Petersen);
        }
        if let Some(args) = compact.strip_prefix("double_star(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = args.split_once(',').ok_or_else(bad)?;
            return Ok(NamedGraph::DoubleStar(num(a)?, num(b)?));
        }
        let (head, rest) = compact.split_at(compact.chars().next().map_or(0, char::len_utf8));
        match head {
            "K" => match rest.split_once(['_', ',']) {
                Some((a, b)) => Ok(NamedGraph::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(NamedGraph::Complete(num(rest)?)),
            },
            "C" => Ok(NamedGraph::Cycle(num(rest)?)),
            "P" => Ok(NamedGraph::Path(num(rest)?)),
            _ => Err(bad()),
        }
    }
}
