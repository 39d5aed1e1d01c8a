use std::collections::{BTreeMap, VecDeque};

use super::{Graph, GraphError, Matching, VertexSet};

/// Component index of every vertex, components numbered by smallest
/// contained id. Returns the labels and the component count.
pub fn component_labels(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    queue.push_back(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Maximal connected vertex sets, ordered by smallest contained id.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let (label, count) = component_labels(g);
    let mut masks = vec![vec![false; g.n()]; count];
    for (v, &c) in label.iter().enumerate() {
        masks[c][v] = true;
    }
    masks.into_iter().map(VertexSet::from_mask).collect()
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || component_labels(g).1 == 1
}

/// Whether `vertices` induces a connected subgraph. The empty set counts
/// as connected.
pub fn is_connected_subset(g: &Graph, vertices: &[usize]) -> bool {
    let Some(&start) = vertices.first() else {
        return true;
    };
    let mut inside = vec![false; g.n()];
    for &v in vertices {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut reached = 1;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == vertices.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub is_tree: bool,
    pub is_forest: bool,
    /// A tree on at least two vertices with a vertex adjacent to all others.
    pub is_star: bool,
    pub isolated_vertices: VertexSet,
    pub universal_vertices: VertexSet,
}

pub fn classify(g: &Graph) -> Classification {
    let n = g.n();
    let components = component_labels(g).1;
    // A graph is acyclic iff m = n - c.
    let is_forest = g.m() + components == n;
    let is_tree = is_forest && components == 1;
    let universal = VertexSet::from_mask((0..n).map(|v| g.is_universal(v)).collect());
    let is_star = is_tree && n >= 2 && !universal.is_empty();
    Classification {
        is_tree,
        is_forest,
        is_star,
        isolated_vertices: VertexSet::from_mask((0..n).map(|v| g.degree(v) == 0).collect()),
        universal_vertices: universal,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    /// Equal closed neighborhoods, N[u] = N[v].
    True,
    /// Equal open neighborhoods, N(u) = N(v).
    False,
}

/// Equivalence classes of the twin relation, singletons included, ordered
/// by smallest member.
pub fn twin_classes(g: &Graph, kind: TwinKind) -> Vec<VertexSet> {
    let mut by_key: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        let key = match kind {
            TwinKind::True => g.closed_neighbors(v),
            TwinKind::False => g.neighbors(v).to_vec(),
        };
        by_key.entry(key).or_default().push(v);
    }
    let mut classes: Vec<VertexSet> = by_key
        .into_values()
        .map(|members| VertexSet::new(g.n(), members).expect("classes are disjoint"))
        .collect();
    classes.sort_by_key(|c| c.first());
    classes
}

/// Maximum matching of a forest by leaf stripping.
///
/// Each component is rooted at its smallest vertex and scanned in reverse
/// BFS order, so every vertex is seen after all of its children: an
/// unmatched vertex whose parent is also unmatched is a leaf of the
/// remaining forest and gets matched to its parent.
pub fn max_matching_forest(g: &Graph) -> Result<Matching, GraphError> {
    if !classify(g).is_forest {
        return Err(GraphError::NotAForest);
    }
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    order.push(w);
                }
            }
        }
    }
    let mut matched = vec![false; n];
    let mut edges = Vec::new();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX && !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            edges.push((v.min(p), v.max(p)));
        }
    }
    Ok(Matching::new(g, &edges).expect("leaf stripping yields a matching"))
}
