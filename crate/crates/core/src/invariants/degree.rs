//! Degree-sequence invariants: annihilation number, Havel–Hakimi residue, harmonic index.

use crate::graph::{DegreeSequence, Graph};
use crate::Rational;

/// Largest `j` such that the `j` smallest degrees sum to at most `m`.
pub fn annihilation_number(ds: &DegreeSequence, m: usize) -> usize {
    let mut total = 0;
    let mut j = 0;
    for &d in ds.as_slice().iter().rev() {
        total += d;
        if total > m {
            break;
        }
        j += 1;
    }
    j
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HavelHakimi {
    /// The all-zero sequence left at the end when graphic; the sequence at the
    /// failed step otherwise.
    pub final_sequence: Vec<usize>,
    pub graphic: bool,
}

/// Repeatedly sort descending, delete the largest entry `d` and decrement the next `d`.
pub fn havel_hakimi_reduce(seq: &[usize]) -> HavelHakimi {
    let mut s = seq.to_vec();
    loop {
        s.sort_unstable_by(|a, b| b.cmp(a));
        if s.iter().all(|&x| x == 0) {
            return HavelHakimi { final_sequence: s, graphic: true };
        }
        let d = s[0];
        if d > s.len() - 1 || s[d] == 0 {
            return HavelHakimi { final_sequence: s, graphic: false };
        }
        s.remove(0);
        for x in &mut s[..d] {
            *x -= 1;
        }
    }
}

/// R(G): zeros left by the Havel–Hakimi process on the degree sequence.
pub fn residue(g: &Graph) -> Result<usize, super::InvariantError> {
    let hh = havel_hakimi_reduce(g.degree_sequence().as_slice());
    if !hh.graphic {
        return Err(super::InvariantError::NotGraphic(hh.final_sequence));
    }
    Ok(hh.final_sequence.len())
}

/// H(G) = Σ over edges of 2 / (d(u) + d(v)), exactly.
pub fn harmonic_index(g: &Graph) -> Rational {
    g.edges()
        .map(|(u, v)| Rational::new(2, (g.degree(u) + g.degree(v)) as i64))
        .sum()
}
