//! Canonical labelling by equitable-partition refinement and individualization.
//!
//! Every branch of the search tree is explored except those proven equivalent by
//! an automorphism found at an earlier leaf, so the minimum leaf certificate is an
//! exact isomorphism invariant at any order.

use super::{write_graph6, Bits, Graph};

/// graph6 bytes of the canonical relabelling; equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(write_graph6(&canonical_graph(g)).into_bytes())
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    Graph::from_rows_unchecked(canonical_rows(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_rows(g) == canonical_rows(h)
}

/// Adjacency rows of the canonical relabelling.
pub(crate) fn canonical_rows(g: &Graph) -> Vec<u64> {
    let n = g.order();
    if n == 1 {
        return vec![0];
    }
    let mut search = Search {
        adj: g.rows(),
        best_key: Vec::new(),
        best_lab: Vec::new(),
        best_path: Vec::new(),
        autos: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.visit(vec![super::full_mask(n)], &mut prefix);
    search.best_key
}

struct Search<'a> {
    adj: &'a [u64],
    best_key: Vec<u64>,
    best_lab: Vec<usize>,
    /// Individualization sequence that produced the best leaf.
    best_path: Vec<usize>,
    /// Automorphisms found so far, as vertex maps.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the search should unwind to the node at `depth`:
    /// an automorphism maps the abandoned subtree onto one already explored there.
    fn visit(&mut self, mut cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        refine(self.adj, &mut cells);
        if cells.len() == self.adj.len() {
            return self.leaf(&cells, prefix);
        }
        let depth = prefix.len();
        let (target_idx, &target) = cells
            .iter()
            .enumerate()
            .find(|(_, c)| c.count_ones() > 1)
            .expect("non-discrete partition has a nontrivial cell");
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(target) {
            if !explored.is_empty() && self.shares_orbit(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            prefix.push(v);
            let unwind = self.visit(child, prefix);
            prefix.pop();
            match unwind {
                Some(d) if d < depth => return Some(d),
                _ => {}
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let key: Vec<u64> = lab
            .iter()
            .map(|&v| Bits(self.adj[v]).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        if self.best_key.is_empty() || key < self.best_key {
            self.best_key = key;
            self.best_lab = lab;
            self.best_path = path.to_vec();
            None
        } else if key == self.best_key {
            let mut sigma = vec![0usize; lab.len()];
            for (i, &v) in self.best_lab.iter().enumerate() {
                sigma[v] = lab[i];
            }
            self.autos.push(sigma);
            // sigma fixes the shared prefix and maps the best leaf's branch onto ours
            let common = path.iter().zip(&self.best_path).take_while(|(a, b)| a == b).count();
            Some(common)
        } else {
            None
        }
    }

    /// Whether some automorphism fixing `prefix` pointwise maps `v` into `explored`.
    fn shares_orbit(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| prefix.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let target: u64 = explored.iter().fold(0, |acc, &w| acc | 1 << w);
        let mut orbit = 1u64 << v;
        let mut frontier = orbit;
        while frontier != 0 {
            let mut next = 0u64;
            for x in Bits(frontier) {
                for a in &gens {
                    next |= 1 << a[x];
                }
            }
            frontier = next & !orbit;
            orbit |= next;
            if orbit & target != 0 {
                return true;
            }
        }
        false
    }
}

/// Splits cells by neighbour counts into other cells until the partition is equitable.
/// Sub-cells are ordered by increasing count, so the result depends only on structure.
pub(crate) fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut groups = [0u64; 65];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut c = 0;
            while c < cells.len() {
                let cell = cells[c];
                if cell & (cell - 1) == 0 {
                    c += 1;
                    continue;
                }
                let mut lo = 64;
                let mut hi = 0;
                for v in Bits(cell) {
                    let k = (adj[v] & splitter).count_ones() as usize;
                    groups[k] |= 1 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    groups[lo] = 0;
                    c += 1;
                    continue;
                }
                let parts: Vec<u64> = (lo..=hi)
                    .filter_map(|k| {
                        let p = std::mem::take(&mut groups[k]);
                        (p != 0).then_some(p)
                    })
                    .collect();
                let added = parts.len();
                cells.splice(c..=c, parts);
                c += added;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, NamedGraph};

    fn named(g: NamedGraph) -> Graph {
        named_graph(&g).unwrap()
    }

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c5 = named(NamedGraph::Cycle(5));
        let shuffled = c5.relabel(&[3, 0, 4, 1, 2]);
        assert_ne!(c5, shuffled);
        assert!(is_isomorphic(&c5, &shuffled));
        assert_eq!(canonical_form(&c5), canonical_form(&shuffled));
    }

    #[test]
    fn same_counts_not_isomorphic() {
        let star = named(NamedGraph::CompleteBipartite(1, 3));
        let p4 = named(NamedGraph::Path(4));
        assert_eq!((star.order(), star.size()), (p4.order(), p4.size()));
        assert!(!is_isomorphic(&star, &p4));
        let k4 = named(NamedGraph::Complete(4));
        let k4_minus = Graph::from_edges(4, k4.edges().skip(1)).unwrap();
        assert!(!is_isomorphic(&k4, &k4_minus));
    }

    #[test]
    fn symmetric_graphs_terminate() {
        for g in [
            named(NamedGraph::Complete(20)),
            named(NamedGraph::CompleteBipartite(8, 8)),
            named(NamedGraph::Petersen),
            Graph::empty(30).unwrap(),
        ] {
            let c = canonical_graph(&g);
            assert!(is_isomorphic(&c, &g));
            assert_eq!(canonical_graph(&c), c);
        }
    }

    #[test]
    fn refinement_is_equitable() {
        let g = named(NamedGraph::DoubleStar(2, 3));
        let mut cells = vec![crate::graph::full_mask(g.order())];
        refine(g.rows(), &mut cells);
        for &a in &cells {
            for &b in &cells {
                let counts: Vec<u32> = Bits(a).map(|v| (g.rows()[v] & b).count_ones()).collect();
                assert!(counts.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}
