//! Lean 4 theorem statements with `sorry` bodies.
//!
//! Invariants and atoms map to opaque Lean identifiers applied to `G`:
//!
//! | DSL                    | Lean                                  |
//! |------------------------|---------------------------------------|
//! | `independence`         | `independence_number G`               |
//! | `matching`             | `matching_number G`                   |
//! | `min_maximal_matching` | `min_maximal_matching_number G`       |
//! | `independent_domination` | `independent_domination_number G`   |
//! | `domination`           | `domination_number G`                 |
//! | `zero_forcing`         | `zero_forcing_number G`               |
//! | `annihilation`         | `annihilation_number G`               |
//! | `residue`              | `residue G`                           |
//! | `harmonic`             | `harmonic_index G`                    |
//! | `connected`            | `connected G`                         |
//! | `nontrivial`           | `order G ≥ 2`                         |
//! | `regular`              | `max_degree G = min_degree G`         |
//! | `not_iso(K4)`          | `G ≠ K4`                              |
//!
//! Comparison operators are written `≤`, `≥`, `≠` rather than ASCII or TeX
//! escapes. Divisions are always parenthesized, as are compound operands.

use crate::dsl::{parse_conjecture, Atom, Compare, Conjecture, DslError, ErrorKind, Expr, Relation};
use crate::invariants::Invariant;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LeanError {
    #[error("no Lean identifier for `{0}`")]
    Unmapped(String),
    #[error(transparent)]
    Dsl(DslError),
}

pub fn lean_identifier(inv: Invariant) -> &'static str {
    match inv {
        Invariant::Order => "order",
        Invariant::Size => "size",
        Invariant::Independence => "independence_number",
        Invariant::Matching => "matching_number",
        Invariant::MinMaximalMatching => "min_maximal_matching_number",
        Invariant::IndependentDomination => "independent_domination_number",
        Invariant::Domination => "domination_number",
        Invariant::ZeroForcing => "zero_forcing_number",
        Invariant::Annihilation => "annihilation_number",
        Invariant::Residue => "residue",
        Invariant::Harmonic => "harmonic_index",
        Invariant::MaxDegree => "max_degree",
        Invariant::MinDegree => "min_degree",
    }
}

fn compare_symbol(c: Compare) -> &'static str {
    match c {
        Compare::Le => "≤",
        Compare::Lt => "<",
        Compare::Eq => "=",
        Compare::Ge => "≥",
        Compare::Gt => ">",
    }
}

fn relation_symbol(r: Relation) -> &'static str {
    match r {
        Relation::Le => "≤",
        Relation::Ge => "≥",
        Relation::Eq => "=",
    }
}

fn atom(a: &Atom) -> String {
    match a {
        Atom::Connected => "connected G".into(),
        Atom::Nontrivial => "order G ≥ 2".into(),
        Atom::Regular => "max_degree G = min_degree G".into(),
        Atom::RRegular(r) => format!("max_degree G = min_degree G ∧ max_degree G = {r}"),
        Atom::Cubic => "max_degree G = 3 ∧ min_degree G = 3".into(),
        Atom::Subcubic => "max_degree G ≤ 3".into(),
        Atom::ClawFree => "claw_free G".into(),
        Atom::Bipartite => "bipartite G".into(),
        Atom::KonigEgervary => "independence_number G + matching_number G = order G".into(),
        Atom::NotIso(g) => format!("G ≠ {}", g.lean_name()),
        Atom::Compare(term, cmp, k) => {
            format!("{} G {} {k}", term.keyword(), compare_symbol(*cmp))
        }
    }
}

fn expr(e: &Expr, top: bool) -> String {
    let (a, op, b) = match e {
        Expr::Var(i) => return format!("{} G", lean_identifier(*i)),
        Expr::Const(c) if c.is_integer() && !c.is_negative() => return c.to_string(),
        Expr::Const(c) if c.is_integer() => return format!("({c})"),
        Expr::Const(c) => return format!("({} / {})", c.numer(), c.denom()),
        Expr::Add(a, b) => (a, "+", b),
        Expr::Sub(a, b) => (a, "-", b),
        Expr::Mul(a, b) => (a, "*", b),
        Expr::Div(a, b) => return format!("({} / {})", expr(a, false), expr(b, false)),
    };
    let body = format!("{} {op} {}", expr(a, false), expr(b, false));
    if top {
        body
    } else {
        format!("({body})")
    }
}

/// One theorem block: hypotheses `h1..hk` in atom order, then the conclusion.
pub fn emit_lean(c: &Conjecture, name: &str) -> String {
    let mut out = format!("theorem {name} (G : SimpleGraph V)");
    for (i, a) in c.hypothesis.atoms.iter().enumerate() {
        out.push_str(&format!("\n    (h{} : {})", i + 1, atom(a)));
    }
    out.push_str(&format!(
        " : {} {} {} :=\nsorry\n",
        expr(&c.lhs, true),
        relation_symbol(c.relation),
        expr(&c.rhs, true)
    ));
    out
}

/// Parses `text` and emits it; unknown keywords are reported as unmapped.
pub fn emit_lean_source(text: &str, name: &str) -> Result<String, LeanError> {
    match parse_conjecture(text) {
        Ok(c) => Ok(emit_lean(&c, name)),
        Err(DslError { kind: ErrorKind::UnknownIdentifier(id), .. }) => Err(LeanError::Unmapped(id)),
        Err(e) => Err(LeanError::Dsl(e)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct LeanOptions {
    /// Require `order G ≥ 2` in the first theorem instead of `≥ 1`.
    pub nontrivial_order: bool,
}

const NAMES: [&str; 4] = ["conjecture_one", "conjecture_two", "conjecture_three", "conjecture_four"];

/// Hypotheses in their listed Lean form, which differs from the DSL builtins.
const LISTED: [&str; 4] = [
    "connected & order >= 1 :: independence >= (annihilation + residue) / max_degree",
    "connected & regular & max_degree = 3 & not_iso(K4) :: zero_forcing <= independence + 1",
    "connected & regular & min_degree >= 1 & order >= 1 :: independent_domination <= min_maximal_matching",
    "connected & order >= 1 :: min_maximal_matching <= harmonic",
];

/// The four statements in order, separated by blank lines.
pub fn emit_builtin_four(opts: LeanOptions) -> String {
    let mut blocks = Vec::new();
    for (i, text) in LISTED.iter().enumerate() {
        let mut c = parse_conjecture(text).expect("listed statements parse");
        let mut prefix = String::new();
        if i == 0 && opts.nontrivial_order {
            c.hypothesis.atoms[1] = Atom::Compare(crate::dsl::DegreeTerm::Order, Compare::Ge, 2);
            prefix.push_str("-- order G ≥ 2: with one vertex max_degree G = 0 and the bound divides by zero.\n");
        }
        blocks.push(prefix + &emit_lean(&c, NAMES[i]));
    }
    blocks.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::builtin_conjecture;

    #[test]
    fn builtin_blocks() {
        let one = emit_lean(&builtin_conjecture(1).unwrap(), "c1");
        assert_eq!(
            one,
            "theorem c1 (G : SimpleGraph V)\n    (h1 : connected G)\n    (h2 : order G ≥ 2) : \
             independence_number G ≥ ((annihilation_number G + residue G) / max_degree G) :=\nsorry\n"
        );
        let three = emit_lean(&builtin_conjecture(3).unwrap(), "c3");
        assert!(three.contains("independent_domination_number G ≤ min_maximal_matching_number G"));
    }

    #[test]
    fn expressions() {
        let c = parse_conjecture("true :: order - (size - 1/2) <= 2 * matching - -3").unwrap();
        assert_eq!(
            emit_lean(&c, "t"),
            "theorem t (G : SimpleGraph V) : order G - (size G - (1 / 2)) ≤ (2 * matching_number G) - (-3) :=\nsorry\n"
        );
    }

    #[test]
    fn unmapped_identifier() {
        assert_eq!(
            emit_lean_source("connected :: girth <= 3", "t"),
            Err(LeanError::Unmapped("girth".into()))
        );
    }

    #[test]
    fn four_blocks() {
        for opts in [LeanOptions::default(), LeanOptions { nontrivial_order: true }] {
            let text = emit_builtin_four(opts);
            assert_eq!(text.matches("theorem ").count(), 4);
            assert_eq!(text.matches("sorry").count(), 4);
            assert!(text.contains("(h4 : G ≠ K4)"));
            assert_eq!(text, emit_builtin_four(opts));
        }
        assert!(emit_builtin_four(LeanOptions { nontrivial_order: true }).contains("(h2 : order G ≥ 2)"));
    }
}
