use serde::Serialize;

use crate::Rational;

use super::Outcome;

/// Version of the JSON layout written by [`ConjectureReport`]'s `Serialize`.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Totals {
    pub hypothesis_not_met: usize,
    pub holds_strict: usize,
    pub holds_equal: usize,
    pub fails: usize,
    pub undefined: usize,
}

impl Totals {
    pub fn record(&mut self, o: Outcome) {
        match o {
            Outcome::HypothesisNotMet => self.hypothesis_not_met += 1,
            Outcome::HoldsStrict => self.holds_strict += 1,
            Outcome::HoldsEqual => self.holds_equal += 1,
            Outcome::Fails => self.fails += 1,
            Outcome::Undefined => self.undefined += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.hypothesis_not_met + self.holds_strict + self.holds_equal + self.fails + self.undefined
    }

    pub fn merge(&mut self, other: &Totals) {
        self.hypothesis_not_met += other.hypothesis_not_met;
        self.holds_strict += other.holds_strict;
        self.holds_equal += other.holds_equal;
        self.fails += other.fails;
        self.undefined += other.undefined;
    }
}

/// A graph together with the two evaluated sides.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Witness {
    pub graph6: String,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of one conjecture over one dataset.
///
/// JSON fields, in order: `schema_version`, `conjecture`, `statement`,
/// `dataset`, `scanned`, `stopped_early`, `totals`, `touch_number`,
/// `counterexamples` (objects with `graph6`, `lhs`, `rhs`; rationals as
/// `"p/q"` strings) and `touch_set` (graph6 strings). Lists follow input order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConjectureReport {
    pub schema_version: u32,
    pub conjecture: String,
    pub statement: String,
    pub dataset: String,
    pub scanned: usize,
    pub stopped_early: bool,
    pub totals: Totals,
    pub touch_number: usize,
    pub counterexamples: Vec<Witness>,
    pub touch_set: Vec<String>,
}

impl ConjectureReport {
    pub fn verified(&self) -> bool {
        self.totals.fails == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
