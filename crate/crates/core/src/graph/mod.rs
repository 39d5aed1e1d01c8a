//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted so
//! that set comparisons (twins, containment checks) are plain slice
//! comparisons and every traversal is deterministic.

mod io;
mod structure;

pub use io::{parse_graph, write_graph, ParseError};
pub use structure::{
    classify, component_labels, connected_components, is_connected, is_connected_subset,
    max_matching_forest, twin_classes, Classification, TwinKind,
};

use thiserror::Error;

/// Errors raised when building graphs or when an operation needs a
/// particular graph class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("edges share endpoint {0}; not a matching")]
    NotAMatching(usize),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph is not a tree")]
    NotATree,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let pos = self.adj[v].partition_point(|&w| w < v);
        out.extend_from_slice(&self.adj[v][..pos]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][pos..]);
        out
    }

    /// A vertex is universal when N[v] = V.
    #[inline]
    pub fn is_universal(&self, v: usize) -> bool {
        self.adj[v].len() + 1 == self.n()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices` (which must be distinct and in range),
    /// relabelled to `0..vertices.len()` in the given order. The second
    /// value maps local ids back to ids of `self`.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m2 = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX {
                    adj[i].push(j);
                    if j > i {
                        m2 += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        (Graph { adj, m: m2 }, vertices.to_vec())
    }
}

/// Ordered set of distinct vertex ids with constant-time membership.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl VertexSet {
    /// Builds a set over the universe `0..n`. Ids are kept in ascending order.
    pub fn new(n: usize, ids: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut mask = vec![false; n];
        let mut members = Vec::new();
        for v in ids {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if mask[v] {
                return Err(GraphError::DuplicateVertex(v));
            }
            mask[v] = true;
            members.push(v);
        }
        members.sort_unstable();
        Ok(VertexSet { members, mask })
    }

    pub(crate) fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
            .collect();
        VertexSet { members, mask }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Smallest contained id, if any.
    pub fn first(&self) -> Option<usize> {
        self.members.first().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

/// A set of pairwise disjoint edges `(u, v)`, `u < v`, of some graph.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that every edge is in `g` and no endpoint repeats. Edges
    /// are normalized to `u < v` and sorted.
    pub fn new(g: &Graph, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut used = vec![false; g.n()];
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (u, v) = (a.min(b), a.max(b));
            if !g.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u, v));
            }
            for w in [u, v] {
                if used[w] {
                    return Err(GraphError::NotAMatching(w));
                }
                used[w] = true;
            }
            out.push((u, v));
        }
        out.sort_unstable();
        Ok(Matching { edges: out })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_sorts_and_counts() {
        let g = Graph::from_edges(4, &[(2, 1), (0, 1), (3, 2)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.closed_neighbors(2), vec![1, 2, 3]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (h, map) = g.induced(&[3, 2, 4]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 2);
        assert_eq!(h.neighbors(0), &[1, 2]);
        assert_eq!(map, vec![3, 2, 4]);
    }

    #[test]
    fn vertex_set_rejects_duplicates() {
        assert_eq!(
            VertexSet::new(3, [0, 2, 0]),
            Err(GraphError::DuplicateVertex(0))
        );
        let s = VertexSet::new(4, [3, 1]).unwrap();
        assert_eq!(s.as_slice(), &[1, 3]);
        assert!(s.contains(3) && !s.contains(2) && !s.contains(99));
    }

    #[test]
    fn matching_validation() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(Matching::new(&p4, &[(3, 2), (0, 1)]).is_ok());
        assert_eq!(
            Matching::new(&p4, &[(0, 1), (1, 2)]),
            Err(GraphError::NotAMatching(1))
        );
        assert_eq!(
            Matching::new(&p4, &[(0, 2)]),
            Err(GraphError::MissingEdge(0, 2))
        );
    }
}
