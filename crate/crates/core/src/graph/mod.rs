//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

mod canon;
mod edgelist;
mod enumerate;
mod graph6;
mod named;
mod random;

use std::fmt;

pub use canon::{canonical_form, canonical_graph, is_isomorphic, CanonicalForm};
pub use edgelist::parse_edge_list;
pub use enumerate::{enumerate_connected, EnumBudget, Family, FamilyFilter};
pub use graph6::{parse_graph6, write_graph6};
pub use named::{named_graph, NamedGraph};
pub use random::random_regular;

/// Hard cap on the vertex count; one adjacency row fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("adjacency is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("line graph needs one vertex per edge; {0} edges exceed 64")]
    TooManyEdges(usize),
    #[error("graph6 byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("invalid graph name `{0}`")]
    UnknownName(String),
    #[error("{0}")]
    InvalidParameters(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("random generation failed after {0} attempts")]
    GenerationFailed(usize),
}

/// A set of vertices packed into one machine word.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn full(n: usize) -> VertexSet {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> VertexSet {
        VertexSet(vertices.into_iter().fold(0, |acc, v| acc | 1 << v))
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Degrees in nonincreasing order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `degrees` into nonincreasing order.
    pub fn new(mut degrees: Vec<usize>) -> DegreeSequence {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degrees)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Immutable simple graph. Symmetry and the zero diagonal are checked on construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n], m: 0 })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Builds from adjacency rows, rejecting loops and asymmetric rows.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        check_order(n)?;
        let mask = full_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in Bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.iter().enumerate().all(|(u, &r)| r >> u & 1 == 0));
        let m = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n: adj.len(), adj, m }
    }

    /// Vertex count.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new((0..self.n).map(|v| self.degree(v)).collect())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `Some(r)` iff every vertex has degree `r`.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.max_degree();
        (d == self.min_degree()).then_some(d)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0) == full_mask(self.n)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = full_mask(self.n);
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize);
            out.push(VertexSet(c));
            rest &= !c;
        }
        out
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in Bits(self.adj[u]) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        stack.push(v);
                    } else if side[v] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff no vertex has three pairwise nonadjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|v| !self.has_claw_at(v))
    }

    pub(crate) fn has_claw_at(&self, center: usize) -> bool {
        let nbrs = self.adj[center];
        for a in Bits(nbrs) {
            let after_a = nbrs & !self.adj[a] & !full_mask(a + 1);
            for b in Bits(after_a) {
                if after_a & !self.adj[b] & !full_mask(b + 1) != 0 {
                    return true;
                }
            }
        }
        false
    }

    /// Subgraph induced by `vertices`, relabelled in increasing vertex order.
    pub fn induced_subgraph(&self, vertices: VertexSet) -> Graph {
        let keep: Vec<usize> = vertices.iter().collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| Bits(self.adj[v] & vertices.0).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        Graph::from_rows_unchecked(adj)
    }

    /// Relabels vertex `v` as `new_label[v]`; `new_label` must be a permutation.
    pub fn relabel(&self, new_label: &[usize]) -> Graph {
        assert_eq!(new_label.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, &row) in self.adj.iter().enumerate() {
            adj[new_label[u]] = Bits(row).fold(0u64, |acc, v| acc | 1 << new_label[v]);
        }
        Graph::from_rows_unchecked(adj)
    }

    /// One vertex per edge (lexicographic edge order), adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        if self.m > MAX_VERTICES {
            return Err(GraphError::TooManyEdges(self.m));
        }
        if self.m == 0 {
            return Err(GraphError::NoVertices);
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        // incident[v] = edge indices touching v
        let mut incident = vec![0u64; self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u] |= 1 << i;
            incident[v] |= 1 << i;
        }
        let adj = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (incident[u] | incident[v]) & !(1 << i))
            .collect();
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Adds a new vertex adjacent to `neighbors`.
    pub(crate) fn with_vertex(&self, neighbors: u64) -> Graph {
        let v = self.n;
        let mut adj = Vec::with_capacity(v + 1);
        adj.extend(
            self.adj
                .iter()
                .enumerate()
                .map(|(u, &row)| row | (neighbors >> u & 1) << v),
        );
        adj.push(neighbors);
        Graph { n: v + 1, adj, m: self.m + neighbors.count_ones() as usize }
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    match n {
        0 => Err(GraphError::NoVertices),
        n if n > MAX_VERTICES => Err(GraphError::TooManyVertices(n)),
        _ => Ok(()),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", write_graph6(self))
    }
}
