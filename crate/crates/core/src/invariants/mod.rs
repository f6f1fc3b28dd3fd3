//! Exact invariants of a graph and the per-graph record that datasets are made of.

mod degree;
mod domination;
mod independence;
mod matching;
mod zero_forcing;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{canonical_form, write_graph6, Graph};
use crate::Rational;

pub use degree::{annihilation_number, harmonic_index, havel_hakimi_reduce, residue, HavelHakimi};
pub use domination::{domination_number, independent_domination};
pub use independence::independence_number;
pub use matching::{matching_number, min_maximal_matching};
pub use zero_forcing::{zero_forcing_closure, zero_forcing_number, BlueSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    /// Cannot happen for a degree sequence read off a real graph.
    #[error("degree sequence is not graphic (stuck at {0:?})")]
    NotGraphic(Vec<usize>),
}

/// Every invariant and structural flag of one graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InvariantRecord {
    pub id: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub mu: usize,
    pub mu_star: usize,
    pub indep_dom: usize,
    pub dom: usize,
    pub zero_forcing: usize,
    pub annihilation: usize,
    pub residue: usize,
    pub harmonic: Rational,
    pub max_deg: usize,
    pub min_deg: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub claw_free: bool,
    pub regular: Option<usize>,
    pub konig_egervary: bool,
}

/// The record of `g`, identified by its canonical form.
pub fn invariant_record(g: &Graph) -> Result<InvariantRecord, InvariantError> {
    invariant_record_with_id(g, canonical_form(g).as_str().to_string())
}

pub fn invariant_record_with_id(g: &Graph, id: String) -> Result<InvariantRecord, InvariantError> {
    let alpha = independence_number(g);
    let mu = matching_number(g);
    Ok(InvariantRecord {
        id,
        graph6: write_graph6(g),
        n: g.order(),
        m: g.size(),
        alpha,
        mu,
        mu_star: min_maximal_matching(g),
        indep_dom: independent_domination(g),
        dom: domination_number(g),
        zero_forcing: zero_forcing_number(g),
        annihilation: annihilation_number(&g.degree_sequence(), g.size()),
        residue: residue(g)?,
        harmonic: harmonic_index(g),
        max_deg: g.max_degree(),
        min_deg: g.min_degree(),
        connected: g.is_connected(),
        bipartite: g.is_bipartite(),
        claw_free: g.is_claw_free(),
        regular: g.is_regular(),
        konig_egervary: alpha + mu == g.order(),
    })
}

/// Records of all graphs, computed on the current rayon pool, in input order.
pub fn invariant_records(graphs: &[Graph]) -> Result<Vec<InvariantRecord>, InvariantError> {
    graphs.par_iter().map(invariant_record).collect()
}

/// Numeric fields of [`InvariantRecord`] addressable by keyword.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Invariant {
    Order,
    Size,
    Independence,
    Matching,
    MinMaximalMatching,
    IndependentDomination,
    Domination,
    ZeroForcing,
    Annihilation,
    Residue,
    Harmonic,
    MaxDegree,
    MinDegree,
}

impl Invariant {
    pub const ALL: [Invariant; 13] = [
        Invariant::Order,
        Invariant::Size,
        Invariant::Independence,
        Invariant::Matching,
        Invariant::MinMaximalMatching,
        Invariant::IndependentDomination,
        Invariant::Domination,
        Invariant::ZeroForcing,
        Invariant::Annihilation,
        Invariant::Residue,
        Invariant::Harmonic,
        Invariant::MaxDegree,
        Invariant::MinDegree,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Invariant::Order => "order",
            Invariant::Size => "size",
            Invariant::Independence => "independence",
            Invariant::Matching => "matching",
            Invariant::MinMaximalMatching => "min_maximal_matching",
            Invariant::IndependentDomination => "independent_domination",
            Invariant::Domination => "domination",
            Invariant::ZeroForcing => "zero_forcing",
            Invariant::Annihilation => "annihilation",
            Invariant::Residue => "residue",
            Invariant::Harmonic => "harmonic",
            Invariant::MaxDegree => "max_degree",
            Invariant::MinDegree => "min_degree",
        }
    }

    pub fn value(self, rec: &InvariantRecord) -> Rational {
        let int = |v: usize| Rational::from(v);
        match self {
            Invariant::Order => int(rec.n),
            Invariant::Size => int(rec.m),
            Invariant::Independence => int(rec.alpha),
            Invariant::Matching => int(rec.mu),
            Invariant::MinMaximalMatching => int(rec.mu_star),
            Invariant::IndependentDomination => int(rec.indep_dom),
            Invariant::Domination => int(rec.dom),
            Invariant::ZeroForcing => int(rec.zero_forcing),
            Invariant::Annihilation => int(rec.annihilation),
            Invariant::Residue => int(rec.residue),
            Invariant::Harmonic => rec.harmonic.clone(),
            Invariant::MaxDegree => int(rec.max_deg),
            Invariant::MinDegree => int(rec.min_deg),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown invariant `{0}`")]
pub struct UnknownInvariant(pub String);

impl FromStr for Invariant {
    type Err = UnknownInvariant;

    fn from_str(s: &str) -> Result<Invariant, UnknownInvariant> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.keyword() == s)
            .ok_or_else(|| UnknownInvariant(s.to_string()))
    }
}
