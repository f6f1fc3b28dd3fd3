use crate::graph::{Bits, Graph, VertexSet};

/// Blue vertices of a zero forcing colouring.
pub type BlueSet = VertexSet;

/// Applies the colour-change rule until no blue vertex has exactly one white neighbour.
pub fn zero_forcing_closure(g: &Graph, blue: BlueSet) -> BlueSet {
    VertexSet(closure(g.rows(), blue.0))
}

fn closure(adj: &[u64], mut blue: u64) -> u64 {
    loop {
        let before = blue;
        for u in Bits(blue) {
            let white = adj[u] & !blue;
            if white != 0 && white & (white - 1) == 0 {
                blue |= white;
            }
        }
        if blue == before {
            return blue;
        }
    }
}

/// Z(G). Disconnected graphs get the sum over their components.
pub fn zero_forcing_number(g: &Graph) -> usize {
    if g.is_connected() {
        return connected_zero_forcing(g);
    }
    g.components()
        .into_iter()
        .map(|c| connected_zero_forcing(&g.induced_subgraph(c)))
        .sum()
}

fn connected_zero_forcing(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 {
        return 1;
    }
    let full = g.all_vertices().0;
    // the first force in any forcing process needs a vertex plus all but one neighbour blue
    for k in g.min_degree().max(1)..n {
        if subsets_of_size(n, k).any(|s| closure(g.rows(), s) == full) {
            return k;
        }
    }
    n
}

/// Words with exactly `k` of the low `n` bits set, in increasing order.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let in_range = move |x: u64| n >= 64 || x >> n == 0;
    let mut next = (k <= n).then(|| crate::graph::full_mask(k));
    std::iter::from_fn(move || {
        let cur = next?;
        if !in_range(cur) {
            return None;
        }
        if cur == 0 {
            next = None;
            return Some(0);
        }
        // Gosper's hack
        let low = cur & cur.wrapping_neg();
        let ripple = cur.wrapping_add(low);
        next = (ripple != 0).then(|| (((ripple ^ cur) >> 2) / low) | ripple);
        Some(cur)
    })
}
