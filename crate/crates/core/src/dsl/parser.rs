use crate::graph::NamedGraph;
use crate::invariants::Invariant;

use super::lexer::{tokenize, Spanned, Tok};
use super::{Atom, Compare, Conjecture, DegreeTerm, DslError, ErrorKind, Expr, Hypothesis, Relation};

/// Name used when a statement omits `name:`.
pub const DEFAULT_NAME: &str = "conjecture";

pub fn parse_conjecture(text: &str) -> Result<Conjecture, DslError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !is_blank(l));
    let Some((idx, line)) = lines.next() else {
        return Err(DslError {
            line: 1,
            col: 1,
            kind: ErrorKind::Syntax { expected: "a conjecture".into(), found: "end of input".into() },
        });
    };
    if let Some((extra, _)) = lines.next() {
        return Err(DslError {
            line: extra + 1,
            col: 1,
            kind: ErrorKind::Syntax { expected: "end of input".into(), found: "a second statement".into() },
        });
    }
    parse_line(line, idx + 1)
}

/// One conjecture per non-blank line; `#` starts a comment.
pub fn parse_conjecture_file(text: &str) -> Result<Vec<Conjecture>, DslError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !is_blank(l))
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

fn is_blank(line: &str) -> bool {
    let t = line.trim_start();
    t.is_empty() || t.starts_with('#')
}

fn parse_line(text: &str, line: usize) -> Result<Conjecture, DslError> {
    let toks = tokenize(text, line)?;
    let end_col = text.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, line, end_col };
    let c = p.conjecture()?;
    if let Some(t) = p.peek() {
        return Err(p.error_at(t, "end of line"));
    }
    Ok(c)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn peek_tok(&self) -> Option<&Tok> {
        self.peek().map(|s| &s.tok)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error_at(&self, t: &Spanned, expected: &str) -> DslError {
        DslError {
            line: t.line,
            col: t.col,
            kind: ErrorKind::Syntax { expected: expected.into(), found: t.tok.describe() },
        }
    }

    fn eof_error(&self, expected: &str) -> DslError {
        DslError {
            line: self.line,
            col: self.end_col,
            kind: ErrorKind::Syntax { expected: expected.into(), found: "end of line".into() },
        }
    }

    fn expect(&mut self, want: Tok, expected: &str) -> Result<Spanned, DslError> {
        match self.bump() {
            Some(t) if t.tok == want => Ok(t),
            Some(t) => Err(self.error_at(&t, expected)),
            None => Err(self.eof_error(expected)),
        }
    }

    fn conjecture(&mut self) -> Result<Conjecture, DslError> {
        let mut name = DEFAULT_NAME.to_string();
        let mut sharp = false;
        let named = matches!(
            (self.toks.first().map(|t| &t.tok), self.toks.get(1).map(|t| &t.tok)),
            (Some(Tok::Ident(_)), Some(Tok::Colon | Tok::LBracket))
        );
        if named {
            if let Some(Spanned { tok: Tok::Ident(n), .. }) = self.bump() {
                name = n;
            }
            if self.peek_tok() == Some(&Tok::LBracket) {
                self.bump();
                match self.bump() {
                    Some(Spanned { tok: Tok::Ident(a), .. }) if a == "sharp" => sharp = true,
                    Some(t) => return Err(self.error_at(&t, "`sharp`")),
                    None => return Err(self.eof_error("`sharp`")),
                }
                self.expect(Tok::RBracket, "`]`")?;
            }
            self.expect(Tok::Colon, "`:`")?;
        }
        let hypothesis = self.hypothesis()?;
        self.expect(Tok::DoubleColon, "`::`")?;
        let lhs = self.expr()?;
        let relation = match self.bump() {
            Some(Spanned { tok: Tok::Le, .. }) => Relation::Le,
            Some(Spanned { tok: Tok::Ge, .. }) => Relation::Ge,
            Some(Spanned { tok: Tok::Eq, .. }) => Relation::Eq,
            Some(t) => return Err(self.error_at(&t, "`<=`, `>=` or `=`")),
            None => return Err(self.eof_error("`<=`, `>=` or `=`")),
        };
        let rhs = self.expr()?;
        Ok(Conjecture { name, sharp, hypothesis, lhs, relation, rhs })
    }

    fn hypothesis(&mut self) -> Result<Hypothesis, DslError> {
        if matches!(self.peek_tok(), Some(Tok::Ident(s)) if s == "true") {
            self.bump();
            return Ok(Hypothesis::default());
        }
        let mut atoms = vec![self.atom()?];
        while self.peek_tok() == Some(&Tok::Amp) {
            self.bump();
            atoms.push(self.atom()?);
        }
        Ok(Hypothesis { atoms })
    }

    fn atom(&mut self) -> Result<Atom, DslError> {
        let t = self.bump().ok_or_else(|| self.eof_error("a hypothesis atom"))?;
        let Tok::Ident(word) = &t.tok else {
            return Err(self.error_at(&t, "a hypothesis atom"));
        };
        let simple = match word.as_str() {
            "connected" => Some(Atom::Connected),
            "nontrivial" => Some(Atom::Nontrivial),
            "regular" => Some(Atom::Regular),
            "cubic" => Some(Atom::Cubic),
            "subcubic" => Some(Atom::Subcubic),
            "claw_free" => Some(Atom::ClawFree),
            "bipartite" => Some(Atom::Bipartite),
            "konig_egervary" => Some(Atom::KonigEgervary),
            _ => None,
        };
        if let Some(atom) = simple {
            if self.peek_tok() == Some(&Tok::LParen) {
                return Err(arity(&t, format!("`{word}` takes no arguments")));
            }
            return Ok(atom);
        }
        match word.as_str() {
            "r_regular" => {
                if self.peek_tok() != Some(&Tok::LParen) {
                    return Err(arity(&t, "`r_regular` takes one degree argument".into()));
                }
                self.bump();
                let r = self.integer(&t, "`r_regular` takes one degree argument")?;
                self.close_args(&t, "`r_regular` takes one degree argument")?;
                Ok(Atom::RRegular(r))
            }
            "not_iso" => {
                if self.peek_tok() != Some(&Tok::LParen) {
                    return Err(arity(&t, "`not_iso` takes one graph name".into()));
                }
                self.bump();
                let g = self.graph_name(&t)?;
                self.close_args(&t, "`not_iso` takes one graph name")?;
                Ok(Atom::NotIso(g))
            }
            "max_degree" | "min_degree" | "order" => {
                let term = match word.as_str() {
                    "max_degree" => DegreeTerm::MaxDegree,
                    "min_degree" => DegreeTerm::MinDegree,
                    _ => DegreeTerm::Order,
                };
                let cmp = match self.bump() {
                    Some(Spanned { tok: Tok::Le, .. }) => Compare::Le,
                    Some(Spanned { tok: Tok::Lt, .. }) => Compare::Lt,
                    Some(Spanned { tok: Tok::Eq, .. }) => Compare::Eq,
                    Some(Spanned { tok: Tok::Ge, .. }) => Compare::Ge,
                    Some(Spanned { tok: Tok::Gt, .. }) => Compare::Gt,
                    Some(other) => return Err(self.error_at(&other, "a comparison")),
                    None => return Err(self.eof_error("a comparison")),
                };
                let k = self.integer(&t, "degree comparisons need an integer bound")?;
                Ok(Atom::Compare(term, cmp, k))
            }
            _ => Err(unknown(&t, word)),
        }
    }

    fn integer(&mut self, at: &Spanned, msg: &str) -> Result<usize, DslError> {
        match self.bump() {
            Some(Spanned { tok: Tok::Number(r), .. }) if r.is_integer() && !r.is_negative() => r
                .numer()
                .to_string()
                .parse()
                .map_err(|_| arity(at, msg.to_string())),
            Some(t) => Err(self.error_at(&t, "a nonnegative integer")),
            None => Err(self.eof_error("a nonnegative integer")),
        }
    }

    fn close_args(&mut self, at: &Spanned, msg: &str) -> Result<(), DslError> {
        match self.bump() {
            Some(Spanned { tok: Tok::RParen, .. }) => Ok(()),
            Some(Spanned { tok: Tok::Comma, .. }) => Err(arity(at, msg.to_string())),
            Some(t) => Err(self.error_at(&t, "`)`")),
            None => Err(self.eof_error("`)`")),
        }
    }

    fn graph_name(&mut self, at: &Spanned) -> Result<NamedGraph, DslError> {
        let t = self.bump().ok_or_else(|| self.eof_error("a graph name"))?;
        let Tok::Ident(word) = &t.tok else {
            return Err(self.error_at(&t, "a graph name"));
        };
        if word == "double_star" {
            self.expect(Tok::LParen, "`(`")?;
            let a = self.integer(at, "`double_star` takes two leaf counts")?;
            self.expect(Tok::Comma, "`,`")?;
            let b = self.integer(at, "`double_star` takes two leaf counts")?;
            self.close_args(at, "`double_star` takes two leaf counts")?;
            return Ok(NamedGraph::DoubleStar(a, b));
        }
        word.parse::<NamedGraph>().map_err(|_| unknown(&t, word))
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut e = self.term()?;
        loop {
            match self.peek_tok() {
                Some(Tok::Plus) => {
                    self.bump();
                    e = Expr::Add(Box::new(e), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    e = Expr::Sub(Box::new(e), Box::new(self.term()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut e = self.factor()?;
        loop {
            match self.peek_tok() {
                Some(Tok::Star) => {
                    self.bump();
                    e = Expr::Mul(Box::new(e), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    e = Expr::Div(Box::new(e), Box::new(self.factor()?));
                }
                _ => return Ok(e),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        let t = self.bump().ok_or_else(|| self.eof_error("an expression"))?;
        match &t.tok {
            Tok::Number(r) => Ok(Expr::Const(r.clone())),
            Tok::Minus => match self.bump() {
                Some(Spanned { tok: Tok::Number(r), .. }) => Ok(Expr::Const(-r)),
                Some(other) => Err(self.error_at(&other, "a number after unary `-`")),
                None => Err(self.eof_error("a number after unary `-`")),
            },
            Tok::Ident(word) => word.parse::<Invariant>().map(Expr::Var).map_err(|_| unknown(&t, word)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            _ => Err(self.error_at(&t, "an expression")),
        }
    }
}

fn unknown(t: &Spanned, word: &str) -> DslError {
    DslError { line: t.line, col: t.col, kind: ErrorKind::UnknownIdentifier(word.to_string()) }
}

fn arity(t: &Spanned, msg: String) -> DslError {
    DslError { line: t.line, col: t.col, kind: ErrorKind::Arity(msg) }
}
