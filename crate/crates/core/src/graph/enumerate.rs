//! Isomorph-free generation of connected graphs by vertex augmentation.
//!
//! Every connected graph has a vertex order whose prefixes induce connected
//! subgraphs, so level `k + 1` is obtained from level `k` by adding one vertex
//! adjacent to a nonempty subset and keeping one graph per canonical form.
//! Degree caps, claw-freeness and (for regular targets) the remaining-capacity
//! bound are hereditary along such orders and prune every level.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::canon::{canonical_rows, CanonicalForm};
use super::{canonical_form, full_mask, Bits, Graph, GraphError};

/// Largest order the enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    All,
    Cubic,
    /// Maximum degree at most three.
    Subcubic,
    Regular(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FamilyFilter {
    pub family: Family,
    pub claw_free: bool,
}

impl FamilyFilter {
    pub const ALL: FamilyFilter = FamilyFilter { family: Family::All, claw_free: false };
    pub const CUBIC: FamilyFilter = FamilyFilter { family: Family::Cubic, claw_free: false };
    pub const SUBCUBIC: FamilyFilter = FamilyFilter { family: Family::Subcubic, claw_free: false };

    pub fn regular(r: usize) -> FamilyFilter {
        FamilyFilter { family: Family::Regular(r), claw_free: false }
    }

    pub fn with_claw_free(self) -> FamilyFilter {
        FamilyFilter { claw_free: true, ..self }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let family_ok = match self.family {
            Family::All => true,
            Family::Cubic => g.is_regular() == Some(3),
            Family::Subcubic => g.max_degree() <= 3,
            Family::Regular(r) => g.is_regular() == Some(r),
        };
        family_ok && (!self.claw_free || g.is_claw_free())
    }

    fn degree_cap(&self, n: usize) -> usize {
        match self.family {
            Family::All => n.saturating_sub(1),
            Family::Cubic | Family::Subcubic => 3,
            Family::Regular(r) => r,
        }
    }

    fn target_degree(&self) -> Option<usize> {
        match self.family {
            Family::Cubic => Some(3),
            Family::Regular(r) => Some(r),
            Family::All | Family::Subcubic => None,
        }
    }
}

impl fmt::Display for FamilyFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::All => f.write_str("all")?,
            Family::Cubic => f.write_str("cubic")?,
            Family::Subcubic => f.write_str("subcubic")?,
            Family::Regular(r) => write!(f, "regular({r})")?,
        }
        if self.claw_free {
            f.write_str("+claw_free")?;
        }
        Ok(())
    }
}

impl FromStr for FamilyFilter {
    type Err = GraphError;

    /// Accepts `all`, `cubic`, `subcubic`, `regular(R)` or `regular:R`, each
    /// optionally joined with `claw_free` by `+`; `claw_free` alone means all.
    fn from_str(s: &str) -> Result<FamilyFilter, GraphError> {
        let bad = || GraphError::InvalidParameters(format!("unknown family `{s}`"));
        let mut filter = FamilyFilter::ALL;
        let mut family_set = false;
        for part in s.split('+').map(str::trim) {
            let part = part.to_ascii_lowercase().replace('-', "_");
            if part == "claw_free" {
                filter.claw_free = true;
                continue;
            }
            if family_set {
                return Err(bad());
            }
            family_set = true;
            filter.family = match part.as_str() {
                "all" => Family::All,
                "cubic" => Family::Cubic,
                "subcubic" => Family::Subcubic,
                other => {
                    let arg = other
                        .strip_prefix("regular(")
                        .and_then(|r| r.strip_suffix(')'))
                        .or_else(|| other.strip_prefix("regular:"))
                        .ok_or_else(bad)?;
                    Family::Regular(arg.parse().map_err(|_| bad())?)
                }
            };
        }
        Ok(filter)
    }
}

/// Caps the work of one enumeration run.
#[derive(Clone, Copy, Debug)]
pub struct EnumBudget {
    /// Maximum number of augmented graphs examined while building any one level.
    pub max_candidates: u64,
}

impl Default for EnumBudget {
    fn default() -> EnumBudget {
        EnumBudget { max_candidates: 60_000_000 }
    }
}

/// One representative per isomorphism class of connected graphs on `n` vertices
/// accepted by `filter`, each in canonical labelling, sorted by canonical form.
///
/// Work is spread over the current rayon pool; the output does not depend on its size.
pub fn enumerate_connected(n: usize, filter: &FamilyFilter, budget: &EnumBudget) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::InvalidParameters(format!(
            "enumeration supports at most {MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    if let Some(r) = filter.target_degree() {
        if n > 1 && (r == 0 || r >= n || r * n % 2 == 1) {
            return Ok(Vec::new());
        }
    }
    let cap = filter.degree_cap(n);
    let mut level: Vec<u128> = vec![0];
    for k in 1..n {
        let subsets: u64 = (1..=cap.min(k)).map(|s| binomial(k, s)).sum();
        let estimate = subsets.saturating_mul(level.len() as u64);
        if estimate > budget.max_candidates {
            return Err(GraphError::BudgetExceeded(format!(
                "level {} would examine about {estimate} graphs (cap {})",
                k + 1,
                budget.max_candidates
            )));
        }
        level = extend_level(&level, k, n, cap, filter);
    }
    let mut out: Vec<(CanonicalForm, Graph)> = level
        .into_iter()
        .map(|key| Graph::from_rows_unchecked(unpack(key, n)))
        .filter(|g| filter.accepts(g))
        .map(|g| (canonical_form(&g), g))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}

fn extend_level(level: &[u128], k: usize, n: usize, cap: usize, filter: &FamilyFilter) -> Vec<u128> {
    let target = filter.target_degree();
    let last = k + 1 == n;
    let mut children: Vec<u128> = level
        .par_iter()
        .flat_map_iter(|&key| {
            let parent = Graph::from_rows_unchecked(unpack(key, k));
            let open = (0..k).filter(|&v| parent.degree(v) < cap).fold(0u64, |acc, v| acc | 1 << v);
            let mut local = Vec::new();
            let mut sub = open;
            while sub != 0 {
                let s = sub;
                sub = (sub - 1) & open;
                if s.count_ones() as usize > cap {
                    continue;
                }
                let child = parent.with_vertex(s);
                if filter.claw_free
                    && (child.has_claw_at(k) || Bits(s).any(|v| child.has_claw_at(v)))
                {
                    continue;
                }
                if let Some(r) = target {
                    let deficit: usize = (0..=k).map(|v| r - child.degree(v)).sum();
                    let room = r * (n - k - 1);
                    if deficit > room || (last && deficit != 0) || (!last && deficit == 0) {
                        continue;
                    }
                }
                local.push(pack(&canonical_rows(&child)));
            }
            local.sort_unstable();
            local.dedup();
            local
        })
        .collect();
    children.par_sort_unstable();
    children.dedup();
    children
}

/// Column-major upper triangle: column `v` holds the bits of neighbours below `v`.
fn pack(rows: &[u64]) -> u128 {
    let mut key = 0u128;
    let mut offset = 0;
    for (v, &row) in rows.iter().enumerate() {
        key |= ((row & full_mask(v)) as u128) << offset;
        offset += v;
    }
    key
}

fn unpack(key: u128, n: usize) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let mut offset = 0;
    for v in 0..n {
        let col = ((key >> offset) as u64) & full_mask(v);
        rows[v] |= col;
        for u in Bits(col) {
            rows[u] |= 1 << v;
        }
        offset += v;
    }
    rows
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}
