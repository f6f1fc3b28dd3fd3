//! Browser bindings: an invariant explorer, a scatter of two invariants over
//! enumerated graphs, and a step-by-step zero forcing run.
//!
//! Every export returns a JSON string; the plain `*_json` functions are the same
//! operations without `wasm-bindgen` types so they can be tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use gconj_core::dsl::builtin_conjectures;
use gconj_core::engine::{evaluate, Outcome};
use gconj_core::graph::{
    enumerate_connected, named_graph, parse_edge_list, parse_graph6, EnumBudget, FamilyFilter, NamedGraph,
};
use gconj_core::invariants::{invariant_record, invariant_records, zero_forcing_closure, BlueSet, Invariant, InvariantRecord};
use gconj_core::{Graph, Rational};

/// Largest order the scatter enumerates; 11117 graphs at n = 8.
pub const SCATTER_MAX_N: usize = 8;

/// Accepts a graph name (`petersen`, `C5`, `K3_3`, `double_star(2,1)`), a graph6
/// line, or an edge list.
pub fn parse_any(text: &str) -> Result<Graph, String> {
    let t = text.trim();
    if let Ok(name) = t.parse::<NamedGraph>() {
        return named_graph(&name).map_err(|e| e.to_string());
    }
    if t.contains(char::is_whitespace) || t.contains('#') {
        return parse_edge_list(t).map_err(|e| e.to_string());
    }
    parse_graph6(t).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Verdict {
    conjecture: String,
    statement: String,
    outcome: Outcome,
    lhs: Option<Rational>,
    rhs: Option<Rational>,
}

#[derive(Serialize)]
struct Explored {
    edges: Vec<(usize, usize)>,
    record: InvariantRecord,
    conjectures: Vec<Verdict>,
}

pub fn explore_json(text: &str) -> Result<String, String> {
    let g = parse_any(text)?;
    if g.order() > 20 {
        return Err(format!("{} vertices; the explorer handles at most 20", g.order()));
    }
    let record = invariant_record(&g).map_err(|e| e.to_string())?;
    let conjectures = builtin_conjectures()
        .into_iter()
        .map(|c| {
            let e = evaluate(&c, &g);
            let (lhs, rhs) = e.sides.map_or((None, None), |(l, r)| (Some(l), Some(r)));
            Verdict { conjecture: c.name.clone(), statement: c.to_string(), outcome: e.outcome, lhs, rhs }
        })
        .collect();
    let out = Explored { edges: g.edges().collect(), record, conjectures };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

fn approx(q: &Rational) -> f64 {
    q.numer().to_string().parse::<f64>().unwrap_or(f64::NAN) / q.denom().to_string().parse::<f64>().unwrap_or(f64::NAN)
}

#[derive(Serialize)]
struct Point {
    graph6: String,
    n: usize,
    x: Rational,
    y: Rational,
    /// Plot positions only; `equal` and `above` are decided exactly.
    xf: f64,
    yf: f64,
    equal: bool,
    above: bool,
}

#[derive(Serialize)]
struct Scatter {
    x: String,
    y: String,
    points: Vec<Point>,
    equal: usize,
    above: usize,
}

/// `y` against `x` over connected graphs with 2 <= n <= `max_n`.
pub fn scatter_json(x: &str, y: &str, max_n: usize) -> Result<String, String> {
    let xi: Invariant = x.parse().map_err(|e: gconj_core::invariants::UnknownInvariant| e.to_string())?;
    let yi: Invariant = y.parse().map_err(|e: gconj_core::invariants::UnknownInvariant| e.to_string())?;
    if !(2..=SCATTER_MAX_N).contains(&max_n) {
        return Err(format!("max_n must be between 2 and {SCATTER_MAX_N}"));
    }
    let mut graphs = Vec::new();
    for n in 2..=max_n {
        graphs.extend(enumerate_connected(n, &FamilyFilter::ALL, &EnumBudget::default()).map_err(|e| e.to_string())?);
    }
    let records = invariant_records(&graphs).map_err(|e| e.to_string())?;
    let points: Vec<Point> = records
        .into_iter()
        .map(|r| {
            let (xv, yv) = (xi.value(&r), yi.value(&r));
            Point {
                graph6: r.graph6,
                n: r.n,
                xf: approx(&xv),
                yf: approx(&yv),
                equal: xv == yv,
                above: yv > xv,
                x: xv,
                y: yv,
            }
        })
        .collect();
    let equal = points.iter().filter(|p| p.equal).count();
    let above = points.iter().filter(|p| p.above).count();
    serde_json::to_string(&Scatter { x: x.into(), y: y.into(), points, equal, above }).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Force {
    forcer: usize,
    forced: usize,
}

#[derive(Serialize)]
struct ForcingRun {
    n: usize,
    edges: Vec<(usize, usize)>,
    initial: Vec<usize>,
    steps: Vec<Force>,
    complete: bool,
    zero_forcing_number: usize,
}

/// Smallest forcing set; the lexicographically first of minimum size.
fn minimum_forcing_set(g: &Graph) -> BlueSet {
    let n = g.order();
    let full = BlueSet::full(n);
    for k in 0..=n {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let s = BlueSet::from_vertices(pick.iter().copied());
            if zero_forcing_closure(g, s) == full {
                return s;
            }
            // next k-subset in lexicographic order
            let Some(i) = (0..k).rev().find(|&i| pick[i] < n - k + i) else { break };
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    full
}

/// Runs the color-change rule one force at a time, always using the smallest
/// blue vertex with exactly one white neighbour. Without `initial`, starts from
/// a minimum forcing set.
pub fn zero_forcing_json(text: &str, initial: &[usize]) -> Result<String, String> {
    let g = parse_any(text)?;
    let n = g.order();
    if n > 16 {
        return Err(format!("{n} vertices; the stepper handles at most 16"));
    }
    if let Some(&v) = initial.iter().find(|&&v| v >= n) {
        return Err(format!("vertex {v} out of range for {n} vertices"));
    }
    let minimum = minimum_forcing_set(&g);
    let start = if initial.is_empty() { minimum } else { BlueSet::from_vertices(initial.iter().copied()) };
    let mut blue = start;
    let mut steps = Vec::new();
    loop {
        let next = blue.iter().find_map(|v| {
            let white: Vec<usize> = g.neighbors(v).iter().filter(|&w| !blue.contains(w)).collect();
            (white.len() == 1).then(|| Force { forcer: v, forced: white[0] })
        });
        let Some(f) = next else { break };
        blue = BlueSet::from_vertices(blue.iter().chain([f.forced]));
        steps.push(f);
    }
    let run = ForcingRun {
        n,
        edges: g.edges().collect(),
        initial: start.iter().collect(),
        steps,
        complete: blue == BlueSet::full(n),
        zero_forcing_number: minimum.len(),
    };
    serde_json::to_string(&run).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn explore(text: &str) -> Result<String, JsValue> {
    explore_json(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn scatter(x: &str, y: &str, max_n: usize) -> Result<String, JsValue> {
    scatter_json(x, y, max_n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn zero_forcing_steps(text: &str, initial: Vec<u32>) -> Result<String, JsValue> {
    let initial: Vec<usize> = initial.into_iter().map(|v| v as usize).collect();
    zero_forcing_json(text, &initial).map_err(|e| JsValue::from_str(&e))
}
