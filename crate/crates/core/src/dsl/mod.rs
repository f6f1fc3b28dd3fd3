//! A small language for conjectures.
//!
//! ```text
//! file       = { line } ;                      (* one conjecture per line, '#' comments *)
//! conjecture = [ name [ "[" "sharp" "]" ] ":" ] hypothesis "::" expr relation expr ;
//! hypothesis = "true" | atom { "&" atom } ;
//! atom       = "connected" | "nontrivial" | "regular" | "cubic" | "subcubic"
//!            | "claw_free" | "bipartite" | "konig_egervary"
//!            | "r_regular" "(" integer ")" | "not_iso" "(" graph_name ")"
//!            | ( "max_degree" | "min_degree" | "order" ) compare integer ;
//! relation   = "<=" | ">=" | "=" ;
//! compare    = relation | "<" | ">" ;
//! expr       = term { ( "+" | "-" ) term } ;
//! term       = factor { ( "*" | "/" ) factor } ;
//! factor     = [ "-" ] literal | invariant | "(" expr ")" ;
//! literal    = digits [ "/" digits ] ;          (* no whitespace inside *)
//! ```
//!
//! Invariant keywords are those of [`Invariant`]. `nontrivial` means at least two
//! vertices and `regular` means maximum degree equals minimum degree.

mod builtin;
mod lexer;
mod parser;

use std::fmt;

use crate::graph::{is_isomorphic, named_graph, Graph, NamedGraph};
use crate::invariants::{Invariant, InvariantRecord};
use crate::Rational;

pub use builtin::{builtin_conjecture, builtin_conjectures, builtin_source};
pub use parser::{parse_conjecture, parse_conjecture_file};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub kind: ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ErrorKind {
    #[error("{0}")]
    Lexical(String),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("{0}")]
    Arity(String),
    #[error("expected {expected}, found {found}")]
    Syntax { expected: String, found: String },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Const(Rational),
    Var(Invariant),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Exact value, or `None` when some divisor is zero.
    pub fn evaluate(&self, rec: &InvariantRecord) -> Option<Rational> {
        Some(match self {
            Expr::Const(c) => c.clone(),
            Expr::Var(i) => i.value(rec),
            Expr::Add(a, b) => a.evaluate(rec)? + b.evaluate(rec)?,
            Expr::Sub(a, b) => a.evaluate(rec)? - b.evaluate(rec)?,
            Expr::Mul(a, b) => a.evaluate(rec)? * b.evaluate(rec)?,
            Expr::Div(a, b) => a.evaluate(rec)?.checked_div(&b.evaluate(rec)?)?,
        })
    }

    pub(crate) fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Const(c) if c.is_negative() => 3,
            Expr::Const(_) | Expr::Var(_) => 4,
        }
    }

    pub fn invariants(&self, out: &mut Vec<Invariant>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(i) => out.push(*i),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.invariants(out);
                b.invariants(out);
            }
        }
    }
}

/// Left-hand operands need parentheses below their operator's precedence,
/// right-hand operands at or below it, so the tree is reproduced exactly.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, op, b) = match self {
            Expr::Const(c) => return write!(f, "{c}"),
            Expr::Var(i) => return write!(f, "{i}"),
            Expr::Add(a, b) => (a, "+", b),
            Expr::Sub(a, b) => (a, "-", b),
            Expr::Mul(a, b) => (a, "*", b),
            Expr::Div(a, b) => (a, "/", b),
        };
        let p = self.precedence();
        if a.precedence() < p {
            write!(f, "({a})")?;
        } else {
            write!(f, "{a}")?;
        }
        write!(f, " {op} ")?;
        if b.precedence() <= p {
            write!(f, "({b})")
        } else {
            write!(f, "{b}")
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Compare {
    Le,
    Lt,
    Eq,
    Ge,
    Gt,
}

impl Compare {
    pub fn holds<T: Ord>(self, a: &T, b: &T) -> bool {
        match self {
            Compare::Le => a <= b,
            Compare::Lt => a < b,
            Compare::Eq => a == b,
            Compare::Ge => a >= b,
            Compare::Gt => a > b,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Compare::Le => "<=",
            Compare::Lt => "<",
            Compare::Eq => "=",
            Compare::Ge => ">=",
            Compare::Gt => ">",
        }
    }
}

/// The relation between the two sides of a conjecture.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DegreeTerm {
    MaxDegree,
    MinDegree,
    Order,
}

impl DegreeTerm {
    pub fn keyword(self) -> &'static str {
        match self {
            DegreeTerm::MaxDegree => "max_degree",
            DegreeTerm::MinDegree => "min_degree",
            DegreeTerm::Order => "order",
        }
    }

    fn of(self, g: &Graph) -> usize {
        match self {
            DegreeTerm::MaxDegree => g.max_degree(),
            DegreeTerm::MinDegree => g.min_degree(),
            DegreeTerm::Order => g.order(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Atom {
    Connected,
    Nontrivial,
    Regular,
    RRegular(usize),
    Cubic,
    Subcubic,
    ClawFree,
    Bipartite,
    KonigEgervary,
    NotIso(NamedGraph),
    Compare(DegreeTerm, Compare, usize),
}

impl Atom {
    /// Value when it can be decided from the graph alone.
    pub fn eval_structural(&self, g: &Graph) -> Option<bool> {
        Some(match self {
            Atom::Connected => g.is_connected(),
            Atom::Nontrivial => g.order() >= 2,
            Atom::Regular => g.is_regular().is_some(),
            Atom::RRegular(r) => g.is_regular() == Some(*r),
            Atom::Cubic => g.is_regular() == Some(3),
            Atom::Subcubic => g.max_degree() <= 3,
            Atom::ClawFree => g.is_claw_free(),
            Atom::Bipartite => g.is_bipartite(),
            Atom::KonigEgervary => return None,
            Atom::NotIso(name) => match named_graph(name) {
                Ok(h) => !is_isomorphic(g, &h),
                Err(_) => true,
            },
            Atom::Compare(term, cmp, k) => cmp.holds(&term.of(g), k),
        })
    }

    pub fn eval(&self, g: &Graph, rec: &InvariantRecord) -> bool {
        match self {
            Atom::KonigEgervary => rec.konig_egervary,
            other => other.eval_structural(g).expect("structural atom"),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Connected => f.write_str("connected"),
            Atom::Nontrivial => f.write_str("nontrivial"),
            Atom::Regular => f.write_str("regular"),
            Atom::RRegular(r) => write!(f, "r_regular({r})"),
            Atom::Cubic => f.write_str("cubic"),
            Atom::Subcubic => f.write_str("subcubic"),
            Atom::ClawFree => f.write_str("claw_free"),
            Atom::Bipartite => f.write_str("bipartite"),
            Atom::KonigEgervary => f.write_str("konig_egervary"),
            Atom::NotIso(g) => write!(f, "not_iso({g})"),
            Atom::Compare(t, c, k) => write!(f, "{} {} {k}", t.keyword(), c.symbol()),
        }
    }
}

/// A conjunction of atoms; empty means no restriction.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Hypothesis {
    pub atoms: Vec<Atom>,
}

impl Hypothesis {
    /// `Some(false)` as soon as a structural atom fails; `None` if only record atoms remain.
    pub fn eval_structural(&self, g: &Graph) -> Option<bool> {
        let mut decided = true;
        for atom in &self.atoms {
            match atom.eval_structural(g) {
                Some(false) => return Some(false),
                Some(true) => {}
                None => decided = false,
            }
        }
        decided.then_some(true)
    }

    pub fn eval(&self, g: &Graph, rec: &InvariantRecord) -> bool {
        self.atoms.iter().all(|a| a.eval(g, rec))
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("true");
        }
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Conjecture {
    pub name: String,
    /// The statement claims equality is attained; checked by sharp-example mining.
    pub sharp: bool,
    pub hypothesis: Hypothesis,
    pub lhs: Expr,
    pub relation: Relation,
    pub rhs: Expr,
}

impl Conjecture {
    /// Invariant keywords referenced by either side.
    pub fn invariants(&self) -> Vec<Invariant> {
        let mut out = Vec::new();
        self.lhs.invariants(&mut out);
        self.rhs.invariants(&mut out);
        out.sort();
        out.dedup();
        out
    }
}

/// Canonical text; parsing it reproduces the same tree.
pub fn format_conjecture(c: &Conjecture) -> String {
    c.to_string()
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if self.sharp {
            f.write_str(" [sharp]")?;
        }
        write!(f, ": {} :: {} {} {}", self.hypothesis, self.lhs, self.relation.symbol(), self.rhs)
    }
}
