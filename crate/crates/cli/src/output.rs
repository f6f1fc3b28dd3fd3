use std::io::Write;

use gconj_core::engine::Witness;
use gconj_core::invariants::{invariant_records, Invariant, InvariantRecord};
use gconj_core::{Graph, Rational};

use crate::{CliError, CliResult};

/// Writes `bytes` to `path`, or to stdout when no path is given.
pub fn write(path: Option<&str>, bytes: &[u8]) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError(format!("{p}: {e}"))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn sorted_records(graphs: &[Graph]) -> CliResult<Vec<InvariantRecord>> {
    let mut recs = invariant_records(graphs)?;
    recs.sort_by(|a, b| (a.n, &a.id).cmp(&(b.n, &b.id)));
    Ok(recs)
}

const INVARIANT_HEADER: [&str; 21] = [
    "id",
    "graph6",
    "n",
    "m",
    "alpha",
    "mu",
    "mu_star",
    "indep_dom",
    "dom",
    "zero_forcing",
    "annihilation",
    "residue",
    "harmonic_num",
    "harmonic_den",
    "max_deg",
    "min_deg",
    "connected",
    "bipartite",
    "claw_free",
    "regular_r",
    "konig_egervary",
];

pub fn invariant_table(graphs: &[Graph]) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(INVARIANT_HEADER)?;
    for r in sorted_records(graphs)? {
        w.write_record([
            r.id.clone(),
            r.graph6.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.alpha.to_string(),
            r.mu.to_string(),
            r.mu_star.to_string(),
            r.indep_dom.to_string(),
            r.dom.to_string(),
            r.zero_forcing.to_string(),
            r.annihilation.to_string(),
            r.residue.to_string(),
            r.harmonic.numer().to_string(),
            r.harmonic.denom().to_string(),
            r.max_deg.to_string(),
            r.min_deg.to_string(),
            r.connected.to_string(),
            r.bipartite.to_string(),
            r.claw_free.to_string(),
            r.regular.map(|d| d.to_string()).unwrap_or_default(),
            r.konig_egervary.to_string(),
        ])?;
    }
    w.into_inner().map_err(|e| CliError(e.to_string()))
}

fn parts(q: &Rational) -> [String; 2] {
    [q.numer().to_string(), q.denom().to_string()]
}

pub fn plot_table(graphs: &[Graph], x: Invariant, y: Invariant) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["graph6", "x_num", "x_den", "y_num", "y_den", "equal"])?;
    for r in sorted_records(graphs)? {
        let (xv, yv) = (x.value(&r), y.value(&r));
        let [xn, xd] = parts(&xv);
        let [yn, yd] = parts(&yv);
        w.write_record([r.graph6.clone(), xn, xd, yn, yd, (xv == yv).to_string()])?;
    }
    w.into_inner().map_err(|e| CliError(e.to_string()))
}

pub fn sharp_table(touches: &[Witness]) -> CliResult<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["graph6", "value_num", "value_den"])?;
    for t in touches {
        let [num, den] = parts(&t.lhs);
        w.write_record([t.graph6.clone(), num, den])?;
    }
    w.into_inner().map_err(|e| CliError(e.to_string()))
}
