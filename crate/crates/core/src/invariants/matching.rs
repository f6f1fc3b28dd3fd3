//! Matching number μ and minimum maximal matching μ*, by exact search on vertex bitsets.

use crate::graph::{Bits, Graph};

pub fn matching_number(g: &Graph) -> usize {
    let mut best = 0;
    max_matching(g.rows(), g.all_vertices().0, 0, &mut best);
    best
}

fn max_matching(adj: &[u64], mut free: u64, mut size: usize, best: &mut usize) {
    loop {
        // vertices that can still be matched
        let live = Bits(free).filter(|&v| adj[v] & free != 0).fold(0u64, |acc, v| acc | 1 << v);
        free = live;
        if size + free.count_ones() as usize / 2 <= *best {
            return;
        }
        if free == 0 {
            *best = size;
            return;
        }
        let v = Bits(free)
            .min_by_key(|&v| (adj[v] & free).count_ones())
            .expect("nonempty");
        let nbrs = adj[v] & free;
        if nbrs.count_ones() == 1 {
            // matching a leaf to its only neighbour is always safe
            free &= !(1 << v | nbrs);
            size += 1;
            continue;
        }
        for w in Bits(nbrs) {
            max_matching(adj, free & !(1 << v | 1 << w), size + 1, best);
        }
        free &= !(1 << v);
    }
}

/// μ*(G): the fewest edges in a matching that no edge can extend. Zero when edgeless.
pub fn min_maximal_matching(g: &Graph) -> usize {
    let adj = g.rows();
    let mut best = greedy_maximal(adj, g.all_vertices().0);
    min_maximal(adj, g.all_vertices().0, 0, &mut best);
    best
}

fn greedy_maximal(adj: &[u64], mut unmatched: u64) -> usize {
    let mut size = 0;
    for v in Bits(unmatched) {
        if unmatched >> v & 1 == 0 {
            continue;
        }
        if let Some(w) = Bits(adj[v] & unmatched).next() {
            unmatched &= !(1 << v | 1 << w);
            size += 1;
        }
    }
    size
}

fn min_maximal(adj: &[u64], unmatched: u64, size: usize, best: &mut usize) {
    // an edge with both ends unmatched must be blocked: choose the one with fewest blockers
    let mut pick: Option<(usize, usize, u32)> = None;
    for v in Bits(unmatched) {
        for w in Bits(adj[v] & unmatched & !((1u64 << v) | ((1u64 << v) - 1))) {
            let cost = (adj[v] & unmatched).count_ones() + (adj[w] & unmatched).count_ones();
            if pick.is_none_or(|(_, _, c)| cost < c) {
                pick = Some((v, w, cost));
            }
        }
    }
    let Some((v, w, _)) = pick else {
        *best = (*best).min(size);
        return;
    };
    if size + 1 >= *best {
        return;
    }
    for x in Bits(adj[v] & unmatched) {
        min_maximal(adj, unmatched & !(1 << v | 1 << x), size + 1, best);
    }
    for y in Bits(adj[w] & unmatched & !(1 << v)) {
        min_maximal(adj, unmatched & !(1 << w | 1 << y), size + 1, best);
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
    fn matching_numbers() {
        assert_eq!(matching_number(&named(NamedGraph::Complete(4))), 2);
        assert_eq!(matching_number(&named(NamedGraph::Path(4))), 2);
        assert_eq!(matching_number(&named(NamedGraph::Cycle(5))), 2);
        assert_eq!(matching_number(&named(NamedGraph::Petersen)), 5);
        assert_eq!(matching_number(&named(NamedGraph::CompleteBipartite(1, 5))), 1);
        assert_eq!(matching_number(&named(NamedGraph::Complete(15))), 7);
    }

    #[test]
    fn min_maximal_matchings() {
        assert_eq!(min_maximal_matching(&named(NamedGraph::Complete(4))), 2);
        assert_eq!(min_maximal_matching(&named(NamedGraph::Path(4))), 1);
        assert_eq!(min_maximal_matching(&named(NamedGraph::CompleteBipartite(3, 3))), 3);
        assert_eq!(min_maximal_matching(&named(NamedGraph::DoubleStar(2, 2))), 1);
        assert_eq!(min_maximal_matching(&Graph::empty(3).unwrap()), 0);
        assert_eq!(min_maximal_matching(&named(NamedGraph::Path(2))), 1);
    }
}
