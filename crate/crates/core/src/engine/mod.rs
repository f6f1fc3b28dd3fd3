//! Checking conjectures over graph collections.

mod report;

use rayon::prelude::*;
use serde::Serialize;

use crate::dsl::{parse_conjecture, Conjecture, Relation};
use crate::graph::{enumerate_connected, write_graph6, EnumBudget, FamilyFilter, Graph, GraphError};
use crate::invariants::{invariant_record, InvariantRecord};
use crate::Rational;

pub use report::{ConjectureReport, Totals, Witness, REPORT_SCHEMA_VERSION};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    HypothesisNotMet,
    HoldsStrict,
    /// Equality: the graph touches the bound.
    HoldsEqual,
    Fails,
    /// Some divisor evaluated to zero.
    Undefined,
}

/// Outcome of `c` on `g`, given its record.
pub fn check_graph(c: &Conjecture, g: &Graph, rec: &InvariantRecord) -> Outcome {
    if c.hypothesis.eval_structural(g) == Some(false) || !c.hypothesis.eval(g, rec) {
        return Outcome::HypothesisNotMet;
    }
    compare(c, rec).0
}

fn compare(c: &Conjecture, rec: &InvariantRecord) -> (Outcome, Option<(Rational, Rational)>) {
    let (Some(l), Some(r)) = (c.lhs.evaluate(rec), c.rhs.evaluate(rec)) else {
        return (Outcome::Undefined, None);
    };
    let outcome = match (c.relation, l.cmp(&r)) {
        (_, std::cmp::Ordering::Equal) => Outcome::HoldsEqual,
        (Relation::Le, std::cmp::Ordering::Less) | (Relation::Ge, std::cmp::Ordering::Greater) => {
            Outcome::HoldsStrict
        }
        _ => Outcome::Fails,
    };
    (outcome, Some((l, r)))
}

/// Per-graph result including both sides when they were evaluated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Evaluation {
    pub outcome: Outcome,
    pub sides: Option<(Rational, Rational)>,
}

/// Structural atoms first; the record (and its NP-hard invariants) only when they pass.
pub fn evaluate(c: &Conjecture, g: &Graph) -> Evaluation {
    let not_met = Evaluation { outcome: Outcome::HypothesisNotMet, sides: None };
    if c.hypothesis.eval_structural(g) == Some(false) {
        return not_met;
    }
    let rec = invariant_record(g).expect("degree sequences of graphs are graphic");
    if !c.hypothesis.eval(g, &rec) {
        return not_met;
    }
    let (outcome, sides) = compare(c, &rec);
    Evaluation { outcome, sides }
}

const STOP_FIRST_CHUNK: usize = 256;

fn evaluate_all(c: &Conjecture, graphs: &[Graph]) -> Vec<Evaluation> {
    graphs.par_iter().map(|g| evaluate(c, g)).collect()
}

/// Checks `c` on every graph in input order.
///
/// With `stop_first`, scanning ends at the first failure (in input order) and
/// the report covers only the scanned prefix.
pub fn check_dataset(c: &Conjecture, graphs: &[Graph], dataset: &str, stop_first: bool) -> ConjectureReport {
    let mut acc = Accumulator::new(c, dataset);
    if stop_first {
        for chunk in graphs.chunks(STOP_FIRST_CHUNK) {
            if acc.absorb(chunk, &evaluate_all(c, chunk), true) {
                break;
            }
        }
    } else {
        acc.absorb(graphs, &evaluate_all(c, graphs), false);
    }
    acc.report
}

struct Accumulator {
    report: ConjectureReport,
}

impl Accumulator {
    fn new(c: &Conjecture, dataset: &str) -> Accumulator {
        Accumulator {
            report: ConjectureReport {
                schema_version: REPORT_SCHEMA_VERSION,
                conjecture: c.name.clone(),
                statement: c.to_string(),
                dataset: dataset.to_string(),
                scanned: 0,
                stopped_early: false,
                totals: Totals::default(),
                touch_number: 0,
                counterexamples: Vec::new(),
                touch_set: Vec::new(),
            },
        }
    }

    /// Returns true when `stop_first` hit a failure.
    fn absorb(&mut self, graphs: &[Graph], evals: &[Evaluation], stop_first: bool) -> bool {
        let r = &mut self.report;
        for (g, e) in graphs.iter().zip(evals) {
            r.scanned += 1;
            r.totals.record(e.outcome);
            match e.outcome {
                Outcome::HoldsEqual => {
                    r.touch_number += 1;
                    r.touch_set.push(write_graph6(g));
                }
                Outcome::Fails => {
                    let (lhs, rhs) = e.sides.clone().expect("failures carry both sides");
                    r.counterexamples.push(Witness { graph6: write_graph6(g), lhs, rhs });
                    if stop_first {
                        r.stopped_early = true;
                        return true;
                    }
                }
                _ => {}
            }
        }
        false
    }
}

/// Exhaustive check over connected graphs of order `2..=n_max` passing `filter`.
pub fn hunt(
    c: &Conjecture,
    n_max: usize,
    filter: &FamilyFilter,
    stop_first: bool,
    budget: &EnumBudget,
) -> Result<ConjectureReport, GraphError> {
    let dataset = format!("connected {filter} graphs, 2 <= n <= {n_max}");
    let mut acc = Accumulator::new(c, &dataset);
    for n in 2..=n_max {
        let graphs = enumerate_connected(n, filter, budget)?;
        if stop_first {
            for chunk in graphs.chunks(STOP_FIRST_CHUNK) {
                if acc.absorb(chunk, &evaluate_all(c, chunk), true) {
                    return Ok(acc.report);
                }
            }
        } else {
            acc.absorb(&graphs, &evaluate_all(c, &graphs), false);
        }
    }
    Ok(acc.report)
}

/// Every graph attaining equality, with the common value on both sides.
pub fn mine_sharp(c: &Conjecture, graphs: &[Graph]) -> Vec<Witness> {
    graphs
        .iter()
        .zip(evaluate_all(c, graphs))
        .filter(|(_, e)| e.outcome == Outcome::HoldsEqual)
        .map(|(g, e)| {
            let (lhs, rhs) = e.sides.expect("touches carry both sides");
            Witness { graph6: write_graph6(g), lhs, rhs }
        })
        .collect()
}

const REGRESSION: [(&str, FamilyFilter); 4] = [
    ("alpha_le_mu_regular: connected & regular :: independence <= matching", FamilyFilter::ALL),
    ("z_le_2gamma_cubic: connected & cubic & not_iso(K4) :: zero_forcing <= 2 * domination", FamilyFilter::CUBIC),
    ("alpha_le_annihilation: connected :: independence <= annihilation", FamilyFilter::ALL),
    ("alpha_ge_residue: connected :: independence >= residue", FamilyFilter::ALL),
];

/// Proven inequalities; any failure is a bug in the invariants or the engine.
pub fn regression_theorems() -> Vec<(Conjecture, FamilyFilter)> {
    REGRESSION
        .iter()
        .map(|(text, f)| (parse_conjecture(text).expect("regression statements parse"), *f))
        .collect()
}
