//! Immutable simple undirected graphs with stable edge indices.
//!
//! Vertices are dense ids `0..n`. Edges keep the index they were given at
//! construction, so a labeling is just a permutation indexed by edge id.

use std::collections::HashSet;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} is a loop at vertex {vertex}")]
    LoopEdge { index: usize, vertex: usize },
    #[error("edge {index} duplicates the unordered pair ({u}, {v})")]
    ParallelEdge { index: usize, u: usize, v: usize },
    #[error("edge {index} endpoint {vertex} is out of range for {n} vertices")]
    EndpointOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("minimum degree is undefined on an empty vertex set")]
    EmptyVertexSet,
    #[error("distance to an empty vertex set is undefined")]
    EmptyTargetSet,
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexSet {
    ids: Vec<usize>,
}

impl VertexSet {
    pub fn new(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut ids: Vec<usize> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        VertexSet { ids }
    }

    pub fn empty() -> Self {
        VertexSet { ids: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.ids.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.ids
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.ids.iter())
    }
}

/// Partition of a graph's vertices into maximal connected blocks.
///
/// The empty graph partitions into zero blocks, so `count()` is 0 there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<VertexSet>,
}

impl ComponentPartition {
    /// Number of connected components.
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.blocks.iter()
    }
}

/// An induced subgraph together with maps back to the host graph.
///
/// Vertices and edges of the subgraph are re-indexed densely; `parent_vertex`
/// and `parent_edge` recover host coordinates so results computed on the
/// subgraph can be reported against the original graph.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    graph: Graph,
    vertex_to_parent: Vec<usize>,
    edge_to_parent: Vec<usize>,
}

impl InducedSubgraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn parent_vertex(&self, v: usize) -> usize {
        self.vertex_to_parent[v]
    }

    pub fn parent_edge(&self, e: usize) -> usize {
        self.edge_to_parent[e]
    }

    /// Maps a set of subgraph vertex ids back to host ids.
    pub fn to_parent_set(&self, s: &VertexSet) -> VertexSet {
        VertexSet::new(s.iter().map(|v| self.vertex_to_parent[v]))
    }
}

/// Immutable simple undirected graph.
///
/// No loops, no parallel edges. Edge `e` keeps the position it had in the
/// construction list, and `incident_edges(v)` lists edge ids in ascending
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from `n` vertices and an ordered edge list.
    ///
    /// Rejects loops, parallel edges (as unordered pairs) and endpoints `>= n`;
    /// the error names the offending edge index.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for (index, (u, v)) in pairs.into_iter().enumerate() {
            if u == v {
                return Err(GraphError::LoopEdge { index, vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { index, vertex: w, n });
                }
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::ParallelEdge { index, u: key.0, v: key.1 });
            }
            adj[u].push(index);
            adj[v].push(index);
            edges.push((u, v));
        }
        let g = Graph { n, edges, adj };
        debug_assert_eq!(g.degree_sum(), 2 * g.edge_count());
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Edge ids incident with `v`, in ascending order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn degree_sum(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors(u).any(|w| w == v)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Minimum vertex degree. Undefined (an error) on the empty graph.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::EmptyVertexSet)
    }

    /// `Some(r)` if every vertex has degree exactly `r`, `None` otherwise.
    ///
    /// The empty graph has no common degree and yields `None`; a single
    /// isolated vertex is vacuously 0-regular.
    pub fn regularity(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let first = self.degree(0);
        (1..self.n)
            .all(|v| self.degree(v) == first)
            .then_some(first)
    }

    /// Partition into maximal connected blocks, ordered by smallest member.
    pub fn components(&self) -> ComponentPartition {
        let mut seen = vec![false; self.n];
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut block = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                block.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            blocks.push(VertexSet::new(block));
        }
        ComponentPartition { blocks }
    }

    /// Subgraph induced by `s`: vertex set `s`, plus every edge with both
    /// endpoints in `s`. Edges keep their relative order from the host.
    pub fn induced(&self, s: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, v) in s.iter().enumerate() {
            new_id[v] = i;
        }
        let mut pairs = Vec::new();
        let mut edge_to_parent = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
                pairs.push((new_id[u], new_id[v]));
                edge_to_parent.push(e);
            }
        }
        let graph = Graph::new(s.len(), pairs).expect("induced edges inherit simplicity");
        Ok(InducedSubgraph {
            graph,
            vertex_to_parent: s.iter().collect(),
            edge_to_parent,
        })
    }

    /// Shortest-path hop count between `x` and `y`; `None` across components.
    pub fn distance(&self, x: usize, y: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        Ok(self.bfs_first_hit(x, |v| v == y))
    }

    /// Minimum over `y in s` of `distance(x, y)`; 0 iff `x` is a member.
    pub fn distance_to_set(&self, x: usize, s: &VertexSet) -> Result<Option<usize>, GraphError> {
        self.check_vertex(x)?;
        if s.is_empty() {
            return Err(GraphError::EmptyTargetSet);
        }
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        Ok(self.bfs_first_hit(x, |v| s.contains(v)))
    }

    fn bfs_first_hit(&self, start: usize, hit: impl Fn(usize) -> bool) -> Option<usize> {
        if hit(start) {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    if hit(w) {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// True iff every connected component is a simple path.
    ///
    /// Equivalent to acyclic with maximum degree at most 2; an isolated
    /// vertex counts as a trivial path. Acyclicity is tested through the
    /// forest rank identity `m = n - (number of components)`.
    pub fn is_path_forest(&self) -> bool {
        let max_deg = (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0);
        max_deg <= 2 && self.edge_count() + self.components().count() == self.n
    }
}
