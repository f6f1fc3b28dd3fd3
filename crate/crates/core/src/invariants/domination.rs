use crate::graph::{Bits, Graph};

/// i(G): smallest independent dominating set, i.e. smallest maximal independent set.
pub fn independent_domination(g: &Graph) -> usize {
    let closed = closed_neighborhoods(g);
    let mut best = g.order();
    dominate(&closed, g.all_vertices().0, 0, &mut best, true);
    best
}

/// γ(G): smallest dominating set.
pub fn domination_number(g: &Graph) -> usize {
    let closed = closed_neighborhoods(g);
    let mut best = greedy_dominating(&closed, g.all_vertices().0);
    dominate(&closed, g.all_vertices().0, 0, &mut best, false);
    best
}

fn closed_neighborhoods(g: &Graph) -> Vec<u64> {
    g.rows().iter().enumerate().map(|(v, &row)| row | 1 << v).collect()
}

fn greedy_dominating(closed: &[u64], mut undominated: u64) -> usize {
    let mut size = 0;
    while undominated != 0 {
        let w = (0..closed.len())
            .max_by_key(|&w| ((closed[w] & undominated).count_ones(), std::cmp::Reverse(w)))
            .expect("nonempty");
        undominated &= !closed[w];
        size += 1;
    }
    size
}

/// Some chosen vertex must cover the undominated vertex with the fewest options.
/// For independent domination a chosen vertex may not be dominated already.
fn dominate(closed: &[u64], undominated: u64, size: usize, best: &mut usize, independent: bool) {
    if undominated == 0 {
        *best = (*best).min(size);
        return;
    }
    let pool = if independent { undominated } else { u64::MAX };
    let mut max_cover = 0;
    let mut pick = (0, u32::MAX);
    for v in Bits(undominated) {
        let options = (closed[v] & pool).count_ones();
        if options < pick.1 {
            pick = (v, options);
        }
    }
    for w in Bits(pool & crate::graph::full_mask(closed.len())) {
        max_cover = max_cover.max((closed[w] & undominated).count_ones());
    }
    let needed = undominated.count_ones().div_ceil(max_cover.max(1)) as usize;
    if size + needed >= *best {
        return;
    }
    for w in Bits(closed[pick.0] & pool) {
        dominate(closed, undominated & !closed[w], size + 1, best, independent);
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
    fn independent_domination_values() {
        assert_eq!(independent_domination(&named(NamedGraph::CompleteBipartite(1, 3))), 1);
        assert_eq!(independent_domination(&named(NamedGraph::DoubleStar(2, 2))), 3);
        assert_eq!(independent_domination(&named(NamedGraph::Cycle(5))), 2);
        assert_eq!(independent_domination(&named(NamedGraph::Path(4))), 2);
        assert_eq!(independent_domination(&named(NamedGraph::CompleteBipartite(3, 3))), 3);
        assert_eq!(independent_domination(&Graph::empty(1).unwrap()), 1);
    }

    #[test]
    fn domination_values() {
        assert_eq!(domination_number(&named(NamedGraph::Complete(4))), 1);
        assert_eq!(domination_number(&named(NamedGraph::Cycle(5))), 2);
        assert_eq!(domination_number(&named(NamedGraph::Petersen)), 3);
        assert_eq!(domination_number(&named(NamedGraph::DoubleStar(2, 2))), 2);
    }
}
