use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError, MAX_VERTICES};

/// Attempts allowed per requested graph before giving up.
const RETRY_CAP: usize = 100_000;

/// `count` connected `r`-regular graphs on `n` vertices from the pairing model,
/// restarting on loops, repeated edges or disconnection. Same seed, same stream.
pub fn random_regular(r: usize, n: usize, count: usize, seed: u64) -> Result<Vec<Graph>, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    if r * n % 2 == 1 {
        return Err(GraphError::InvalidParameters(format!("r·n = {r}·{n} is odd")));
    }
    if r >= n && !(r == 0 && n == 1) {
        return Err(GraphError::InvalidParameters(format!("degree {r} needs more than {n} vertices")));
    }
    if r == 0 && n > 1 {
        return Err(GraphError::InvalidParameters("no connected 0-regular graph on more than one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut attempts = 0;
        let graph = loop {
            if attempts == RETRY_CAP {
                return Err(GraphError::GenerationFailed(RETRY_CAP));
            }
            attempts += 1;
            points.shuffle(&mut rng);
            if let Some(g) = pair_up(n, &points) {
                if g.is_connected() {
                    break g;
                }
            }
        };
        out.push(graph);
    }
    Ok(out)
}

fn pair_up(n: usize, points: &[usize]) -> Option<Graph> {
    let mut adj = vec![0u64; n];
    for pair in points.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v || adj[u] >> v & 1 == 1 {
            return None;
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    Some(Graph::from_rows_unchecked(adj))
}
