use super::{parse_conjecture, Conjecture};

const BUILTIN: [&str; 4] = [
    "c1 [sharp]: connected & nontrivial :: independence >= (annihilation + residue) / max_degree",
    "c2 [sharp]: connected & max_degree <= 3 & not_iso(K4) :: zero_forcing <= independence + 1",
    "c3 [sharp]: connected & regular & min_degree >= 1 :: independent_domination <= min_maximal_matching",
    "c4 [sharp]: connected & nontrivial :: min_maximal_matching <= harmonic",
];

/// The four open conjectures, numbered 1 to 4.
pub fn builtin_conjecture(id: usize) -> Option<Conjecture> {
    let text = BUILTIN.get(id.checked_sub(1)?)?;
    Some(parse_conjecture(text).expect("builtin conjectures parse"))
}

pub fn builtin_conjectures() -> Vec<Conjecture> {
    (1..=BUILTIN.len()).filter_map(builtin_conjecture).collect()
}

/// Source text of builtin `id`.
pub fn builtin_source(id: usize) -> Option<&'static str> {
    BUILTIN.get(id.checked_sub(1)?).copied()
}
