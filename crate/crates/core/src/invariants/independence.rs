use crate::graph::{Bits, Graph};

/// α(G), by branch and bound over candidate bitsets.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    max_independent(g.rows(), g.all_vertices().0, 0, &mut best);
    best
}

/// Largest independent subset of `cand`, plus `size`, folded into `best`.
pub(crate) fn max_independent(adj: &[u64], mut cand: u64, mut size: usize, best: &mut usize) {
    loop {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let (mut low_v, mut low_d) = (0, u32::MAX);
        let (mut high_v, mut high_d) = (0, 0);
        for v in Bits(cand) {
            let d = (adj[v] & cand).count_ones();
            if d < low_d {
                (low_v, low_d) = (v, d);
            }
            if d > high_d {
                (high_v, high_d) = (v, d);
            }
        }
        if low_d <= 1 {
            // some maximum independent set contains a vertex of degree <= 1
            cand &= !(adj[low_v] | 1 << low_v);
            size += 1;
            continue;
        }
        max_independent(adj, cand & !(adj[high_v] | 1 << high_v), size + 1, best);
        cand &= !(1 << high_v);
    }
}
