//! Connected community structures in trees and forests.
//!
//! The core routine is the improvement algorithm: starting from any
//! connected k-partition of a tree, repeatedly take the first unsatisfied
//! vertex `v in C_i` (against `C_j`), split off the largest component
//! `T_v` of `C_i - v`, and replace `C_i, C_j` by `B = T_v` and
//! `A = (C_i - T_v) + C_j`. The ascending size tuple grows strictly in
//! lexicographic order with each step, which bounds the number of steps
//! by [`iteration_bound`].

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{
    classify, component_labels, connected_components, max_matching_forest, Graph, GraphError,
    Matching,
};
use crate::verifier::{
    communities_connected, first_violation, size_tuple, Partition, PartitionError, SizeTuple,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a forest")]
    NotAForest,
    #[error("cannot form {k} communities from {n} vertices")]
    TooFewVertices { n: usize, k: usize },
    #[error("need at least 2 communities, got {0}")]
    TooFewCommunities(usize),
    #[error("invalid matching: {0}")]
    NotAMatching(GraphError),
    #[error(
        "vertex {vertex} in community {community} is satisfied with respect to community {other}"
    )]
    VertexSatisfied {
        vertex: usize,
        community: usize,
        other: usize,
    },
    #[error("some community does not induce a connected subgraph")]
    NotConnected,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A partition whose communities are known to induce connected subgraphs
/// of the graph it was checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedKPartition {
    partition: Partition,
}

impl ConnectedKPartition {
    pub fn new(g: &Graph, partition: Partition) -> Result<Self, TreeError> {
        if partition.n() != g.n() {
            return Err(PartitionError::VertexCount {
                expected: g.n(),
                found: partition.n(),
            }
            .into());
        }
        if partition.k() < 2 {
            return Err(TreeError::TooFewCommunities(partition.k()));
        }
        if !communities_connected(g, &partition) {
            return Err(TreeError::NotConnected);
        }
        Ok(ConnectedKPartition { partition })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn k(&self) -> usize {
        self.partition.k()
    }
}

/// One application of the improvement step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub vertex: usize,
    /// Community of `vertex` before the step; it keeps the moved component.
    pub from: usize,
    /// Community that absorbs the rest of `from`, including `vertex`.
    pub to: usize,
    /// Vertices of the split-off component `T_v`, ascending.
    pub moved: Vec<usize>,
    pub tuple: SizeTuple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImprovementTrace {
    pub initial: SizeTuple,
    pub steps: Vec<TraceStep>,
}

impl ImprovementTrace {
    /// Length of the tuple sequence, the initial tuple included.
    pub fn sequence_len(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn tuples(&self) -> impl Iterator<Item = &SizeTuple> {
        std::iter::once(&self.initial).chain(self.steps.iter().map(|s| &s.tuple))
    }
}

/// Upper bound `1 + (k + 1) n / 2` (integer division) on the length of a
/// strictly increasing sequence of 2-changes of `(k, n)`-tuples.
pub fn iteration_bound(k: usize, n: usize) -> usize {
    1 + (k + 1) * n / 2
}

fn require_tree(t: &Graph) -> Result<(), TreeError> {
    if classify(t).is_tree {
        Ok(())
    } else {
        Err(TreeError::NotATree)
    }
}

fn require_forest(f: &Graph) -> Result<(), TreeError> {
    if classify(f).is_forest {
        Ok(())
    } else {
        Err(TreeError::NotAForest)
    }
}

fn require_sizes(n: usize, k: usize) -> Result<(), TreeError> {
    if k < 2 {
        return Err(TreeError::TooFewCommunities(k));
    }
    if n < k {
        return Err(TreeError::TooFewVertices { n, k });
    }
    Ok(())
}

/// Deletes the `k - 1` lexicographically smallest edges of `t`; the
/// resulting components, numbered by smallest id, are the communities.
pub fn initial_partition_edges(t: &Graph, k: usize) -> Result<ConnectedKPartition, TreeError> {
    require_tree(t)?;
    require_sizes(t.n(), k)?;
    let kept: Vec<_> = t.edges().skip(k - 1).collect();
    let forest = Graph::from_edges(t.n(), &kept).expect("subgraph of a simple graph");
    let (labels, count) = component_labels(&forest);
    debug_assert_eq!(count, k);
    Ok(ConnectedKPartition {
        partition: Partition::new(labels, k)?,
    })
}

/// Seeds community `c` with the endpoints of the `c`-th matching edge and
/// grows all communities by a simultaneous breadth-first search.
pub fn initial_partition_matching(
    t: &Graph,
    mm: &Matching,
) -> Result<ConnectedKPartition, TreeError> {
    require_tree(t)?;
    let mm = Matching::new(t, mm.edges()).map_err(TreeError::NotAMatching)?;
    if mm.len() < 2 {
        return Err(TreeError::TooFewCommunities(mm.len()));
    }
    let mut label = vec![usize::MAX; t.n()];
    let mut queue = VecDeque::new();
    for (c, &(u, v)) in mm.edges().iter().enumerate() {
        for w in [u, v] {
            label[w] = c;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if label[w] == usize::MAX {
                label[w] = label[v];
                queue.push_back(w);
            }
        }
    }
    Ok(ConnectedKPartition {
        partition: Partition::new(label, mm.len())?,
    })
}

/// Each vertex has at most one neighbor in every community other than its
/// own. Holds for every connected partition of a forest.
pub fn at_most_one_neighbor_outside(g: &Graph, p: &Partition) -> bool {
    let mut seen = vec![usize::MAX; p.k()];
    (0..g.n()).all(|v| {
        let own = p.community_of(v);
        g.neighbors(v).iter().all(|&w| {
            let c = p.community_of(w);
            if c == own {
                return true;
            }
            let fresh = seen[c] != v;
            seen[c] = v;
            fresh
        })
    })
}

/// The improvement step without precondition checks. Returns the moved
/// component.
fn improve(t: &Graph, p: &Partition, v: usize, i: usize, j: usize) -> (Partition, Vec<usize>) {
    let n = t.n();
    // Components of C_i - v, found from each neighbor of v inside C_i.
    let mut comp = vec![usize::MAX; n];
    let mut best: Option<Vec<usize>> = None;
    let mut stack = Vec::new();
    for &start in t.neighbors(v) {
        if p.community_of(start) != i || comp[start] != usize::MAX {
            continue;
        }
        comp[start] = start;
        let mut members = vec![start];
        stack.push(start);
        while let Some(x) = stack.pop() {
            for &y in t.neighbors(x) {
                if y != v && p.community_of(y) == i && comp[y] == usize::MAX {
                    comp[y] = start;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        let better = match &best {
            None => true,
            Some(b) => members.len() > b.len() || (members.len() == b.len() && members[0] < b[0]),
        };
        if better {
            best = Some(members);
        }
    }
    let moved = best.unwrap_or_default();
    let mut assign = p.assignment().to_vec();
    for a in assign.iter_mut() {
        if *a == i {
            *a = j;
        }
    }
    for &x in &moved {
        assign[x] = i;
    }
    let next = Partition::new(assign, p.k()).expect("both new communities are nonempty");
    (next, moved)
}

/// Number of neighbors of `v` in community `c`.
fn neighbors_in(t: &Graph, p: &Partition, v: usize, c: usize) -> u64 {
    t.neighbors(v)
        .iter()
        .filter(|&&w| p.community_of(w) == c)
        .count() as u64
}

/// Applies the improvement step to an unsatisfied `v in C_i` against `C_j`.
pub fn improvement_step(
    t: &Graph,
    p: &ConnectedKPartition,
    v: usize,
    i: usize,
    j: usize,
) -> Result<ConnectedKPartition, TreeError> {
    require_tree(t)?;
    let part = p.partition();
    if part.n() != t.n() {
        return Err(PartitionError::VertexCount {
            expected: t.n(),
            found: part.n(),
        }
        .into());
    }
    if !communities_connected(t, part) {
        return Err(TreeError::NotConnected);
    }
    let satisfied = || TreeError::VertexSatisfied {
        vertex: v,
        community: i,
        other: j,
    };
    if v >= t.n() || i == j || j >= part.k() || part.community_of(v) != i {
        return Err(satisfied());
    }
    let lhs = neighbors_in(t, part, v, i) * part.size(j) as u64;
    let rhs = neighbors_in(t, part, v, j) * (part.size(i) as u64 - 1);
    if lhs >= rhs {
        return Err(satisfied());
    }
    let (next, _) = improve(t, part, v, i, j);
    Ok(ConnectedKPartition { partition: next })
}

/// Runs improvement steps until every vertex is satisfied. The result is
/// a connected generalized k-community structure of `t`.
pub fn improvement_algorithm(
    t: &Graph,
    p0: &ConnectedKPartition,
) -> Result<(ConnectedKPartition, ImprovementTrace), TreeError> {
    require_tree(t)?;
    if p0.partition().n() != t.n() {
        return Err(PartitionError::VertexCount {
            expected: t.n(),
            found: p0.partition().n(),
        }
        .into());
    }
    if !communities_connected(t, p0.partition()) {
        return Err(TreeError::NotConnected);
    }
    let mut current = p0.partition().clone();
    let mut trace = ImprovementTrace {
        initial: size_tuple(&current),
        steps: Vec::new(),
    };
    while let Some(x) = first_violation(t, &current) {
        let (next, moved) = improve(t, &current, x.vertex, x.community, x.other);
        current = next;
        trace.steps.push(TraceStep {
            vertex: x.vertex,
            from: x.community,
            to: x.other,
            moved,
            tuple: size_tuple(&current),
        });
    }
    Ok((ConnectedKPartition { partition: current }, trace))
}

/// Connected generalized k-community structure of a tree on at least `k`
/// vertices.
pub fn solve_tree_generalized(t: &Graph, k: usize) -> Result<ConnectedKPartition, TreeError> {
    let p0 = initial_partition_edges(t, k)?;
    Ok(improvement_algorithm(t, &p0)?.0)
}

/// Connected k-community structure of a tree, which exists exactly when
/// the tree has a matching of size `k`.
pub fn solve_tree_strict(t: &Graph, k: usize) -> Result<Option<ConnectedKPartition>, TreeError> {
    require_tree(t)?;
    if k < 2 {
        return Err(TreeError::TooFewCommunities(k));
    }
    let mm = max_matching_forest(t).expect("trees are forests");
    if mm.len() < k {
        return Ok(None);
    }
    let seeds = Matching::new(t, &mm.edges()[..k]).expect("subset of a matching");
    let p0 = initial_partition_matching(t, &seeds)?;
    Ok(Some(improvement_algorithm(t, &p0)?.0))
}

/// Runs `solve` on the subgraph induced by `component` and writes the
/// resulting communities into `assign`, numbered from `offset`.
fn solve_component(
    f: &Graph,
    component: &[usize],
    offset: usize,
    assign: &mut [usize],
    solve: impl FnOnce(&Graph) -> Result<Option<ConnectedKPartition>, TreeError>,
) -> Result<usize, TreeError> {
    let (sub, map) = f.induced(component);
    let local = solve(&sub)?.expect("component has a large enough matching");
    for (lv, &c) in local.partition().assignment().iter().enumerate() {
        assign[map[lv]] = offset + c;
    }
    Ok(local.k())
}

/// Generalized k-community structure of a forest on at least `k` vertices.
pub fn solve_forest_generalized(f: &Graph, k: usize) -> Result<Partition, TreeError> {
    require_forest(f)?;
    require_sizes(f.n(), k)?;
    let comps = connected_components(f);
    let mut assign = vec![usize::MAX; f.n()];
    if comps.len() >= k {
        for (c, comp) in comps.iter().enumerate() {
            for v in comp.iter() {
                assign[v] = c.min(k - 1);
            }
        }
        return Ok(Partition::new(assign, k)?);
    }

    // Every component gets one community; the remaining budget goes to
    // the non-singleton components in order, each up to its size.
    let mut budget: Vec<usize> = vec![1; comps.len()];
    let mut left = k - comps.len();
    for (b, comp) in budget.iter_mut().zip(&comps) {
        let extra = left.min(comp.len() - 1);
        *b += extra;
        left -= extra;
    }
    debug_assert_eq!(left, 0);

    let mut next = 0;
    for (comp, &b) in comps.iter().zip(&budget) {
        if b == 1 {
            for v in comp.iter() {
                assign[v] = next;
            }
            next += 1;
        } else {
            next += solve_component(f, comp.as_slice(), next, &mut assign, |sub| {
                solve_tree_generalized(sub, b).map(Some)
            })?;
        }
    }
    Ok(Partition::new(assign, k)?)
}

/// k-community structure of a forest, which exists exactly when a maximum
/// matching `M` and the isolated vertices `I` satisfy
/// `|M| + floor(|I| / 2) >= k`. Communities need not be connected.
pub fn solve_forest_strict(f: &Graph, k: usize) -> Result<Option<Partition>, TreeError> {
    require_forest(f)?;
    if k < 2 {
        return Err(TreeError::TooFewCommunities(k));
    }
    let n = f.n();
    let isolated: Vec<usize> = (0..n).filter(|&v| f.degree(v) == 0).collect();
    let pairs = isolated.len() / 2;
    let mm = max_matching_forest(f).expect("checked forest");
    if mm.len() + pairs < k {
        return Ok(None);
    }

    let mut assign = vec![usize::MAX; n];
    if k <= pairs {
        for (c, pair) in isolated.chunks(2).take(k).enumerate() {
            for &v in pair {
                assign[v] = c;
            }
        }
        for a in assign.iter_mut().filter(|a| **a == usize::MAX) {
            *a = 0;
        }
        return Ok(Some(Partition::new(assign, k)?));
    }

    if pairs >= 1 {
        for (c, pair) in isolated.chunks(2).enumerate() {
            for &v in pair {
                // An odd vertex out joins the first pair.
                assign[v] = if c < pairs { c } else { 0 };
            }
        }
    }

    // Matched edges per non-trivial component.
    let (labels, _) = component_labels(f);
    let comps: Vec<Vec<usize>> = connected_components(f)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| c.as_slice().to_vec())
        .collect();
    let comp_index = |v: usize| {
        comps
            .iter()
            .position(|c| labels[c[0]] == labels[v])
            .unwrap()
    };
    let mut chosen: Vec<Vec<(usize, usize)>> = vec![Vec::new(); comps.len()];
    for &(u, v) in &mm.edges()[..k - pairs] {
        chosen[comp_index(u)].push((u, v));
    }

    // With no component holding exactly one matched edge, an unmatched
    // component would have nowhere safe to go: move one edge into it.
    let has_single = chosen.iter().any(|c| c.len() == 1);
    if let (false, Some(empty)) = (has_single, chosen.iter().position(|c| c.is_empty())) {
        let donor = (0..comps.len())
            .max_by_key(|&c| (chosen[c].len(), std::cmp::Reverse(c)))
            .expect("some component holds matched edges");
        chosen[donor].pop();
        let (u, v) = f
            .edges()
            .find(|&(u, _)| labels[u] == labels[comps[empty][0]])
            .expect("non-trivial component has an edge");
        chosen[empty].push((u, v));
    }

    let mut next = pairs;
    let mut single_home = None;
    for (comp, edges) in comps.iter().zip(&chosen) {
        match edges.len() {
            0 => {}
            1 => {
                for &v in comp {
                    assign[v] = next;
                }
                single_home.get_or_insert(next);
                next += 1;
            }
            p => {
                next +=
                    solve_component(f, comp, next, &mut assign, |sub| solve_tree_strict(sub, p))?;
            }
        }
    }
    debug_assert_eq!(next, k);

    let home = if pairs >= 1 { Some(0) } else { single_home };
    let leftovers: Vec<usize> = (0..n).filter(|&v| assign[v] == usize::MAX).collect();
    match home {
        Some(h) => leftovers.iter().for_each(|&v| assign[v] = h),
        None => {
            // Only a lone isolated vertex can be left; it joins a smallest
            // community, the lowest index among ties.
            let mut sizes = vec![0usize; k];
            for &a in assign.iter().filter(|&&a| a != usize::MAX) {
                sizes[a] += 1;
            }
            let smallest = (0..k).min_by_key(|&c| (sizes[c], c)).unwrap();
            leftovers.iter().for_each(|&v| assign[v] = smallest);
        }
    }
    Ok(Some(Partition::new(assign, k)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::{is_2_change, verify_partition, Mode};
    use proptest::prelude::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        g(n, &e)
    }

    fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        g(leaves + 1, &e)
    }

    fn blocks(p: &Partition) -> Vec<Vec<usize>> {
        p.blocks()
    }

    fn valid(h: &Graph, p: &Partition, mode: Mode) -> bool {
        verify_partition(h, p, mode).unwrap().valid
    }

    #[test]
    fn bound_values() {
        assert_eq!(iteration_bound(2, 4), 7);
        assert_eq!(iteration_bound(3, 10), 21);
        assert_eq!(iteration_bound(2, 2), 4);
    }

    #[test]
    fn edge_seeded_partitions() {
        let p = initial_partition_edges(&path(4), 2).unwrap();
        assert_eq!(blocks(p.partition()), vec![vec![0], vec![1, 2, 3]]);
        let p = initial_partition_edges(&path(4), 4).unwrap();
        assert_eq!(p.partition().sizes(), &[1, 1, 1, 1]);
        let p = initial_partition_edges(&star(3), 2).unwrap();
        assert_eq!(blocks(p.partition()), vec![vec![0, 2, 3], vec![1]]);
        assert_eq!(
            initial_partition_edges(&path(3), 4),
            Err(TreeError::TooFewVertices { n: 3, k: 4 })
        );
        assert_eq!(
            initial_partition_edges(&g(3, &[(0, 1)]), 2),
            Err(TreeError::NotATree)
        );
    }

    #[test]
    fn matching_seeded_partitions() {
        let p4 = path(4);
        let mm = Matching::new(&p4, &[(0, 1), (2, 3)]).unwrap();
        let p = initial_partition_matching(&p4, &mm).unwrap();
        assert_eq!(blocks(p.partition()), vec![vec![0, 1], vec![2, 3]]);

        let p5 = path(5);
        let mm = Matching::new(&p5, &[(0, 1), (3, 4)]).unwrap();
        let p = initial_partition_matching(&p5, &mm).unwrap();
        assert_eq!(blocks(p.partition()), vec![vec![0, 1, 2], vec![3, 4]]);

        // Spider: center 0, legs 1-2, 3-4, 5-6.
        let spider = g(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let mm = Matching::new(&spider, &[(1, 2), (3, 4)]).unwrap();
        let p = initial_partition_matching(&spider, &mm).unwrap();
        assert_eq!(blocks(p.partition()), vec![vec![0, 1, 2, 5, 6], vec![3, 4]]);
        assert!(communities_connected(&spider, p.partition()));

        let not_in_p4 = Matching::new(&path(5), &[(0, 1), (3, 4)]).unwrap();
        assert!(matches!(
            initial_partition_matching(&p4, &not_in_p4),
            Err(TreeError::NotAMatching(_))
        ));
    }

    #[test]
    fn single_step_on_path() {
        let p7 = path(7);
        let p =
            ConnectedKPartition::new(&p7, Partition::new(vec![0, 1, 1, 1, 1, 1, 1], 2).unwrap())
                .unwrap();
        // Vertex 1 has one neighbor on each side: 1*1 < 1*5.
        let next = improvement_step(&p7, &p, 1, 1, 0).unwrap();
        assert_eq!(
            blocks(next.partition()),
            vec![vec![0, 1], vec![2, 3, 4, 5, 6]]
        );
        assert!(size_tuple(p.partition()) < size_tuple(next.partition()));
        assert!(matches!(
            improvement_step(&p7, &p, 3, 1, 0),
            Err(TreeError::VertexSatisfied { .. })
        ));
    }

    #[test]
    fn star_partitions_are_fixed_points() {
        // A connected partition of a star is the center's community plus
        // singleton leaves, and the center always balances them.
        let s4 = star(4);
        let p =
            ConnectedKPartition::new(&s4, Partition::new(vec![0, 0, 0, 1, 2], 3).unwrap()).unwrap();
        assert_eq!(first_violation(&s4, p.partition()), None);
        assert!(matches!(
            improvement_step(&s4, &p, 0, 0, 1),
            Err(TreeError::VertexSatisfied { .. })
        ));
    }

    #[test]
    fn three_way_step() {
        // Path 0..8 with C_0 = {0}, C_1 = {1..7}, C_2 = {8}.
        let p9 = path(9);
        let part = Partition::new(vec![0, 1, 1, 1, 1, 1, 1, 1, 2], 3).unwrap();
        let p = ConnectedKPartition::new(&p9, part).unwrap();
        let next = improvement_step(&p9, &p, 1, 1, 0).unwrap();
        let q = next.partition();
        assert_eq!(blocks(q), vec![vec![0, 1], vec![2, 3, 4, 5, 6, 7], vec![8]]);
        assert!(is_2_change(&size_tuple(p.partition()), &size_tuple(q))
            .unwrap()
            .is_some());
    }

    #[test]
    fn fixed_point_is_untouched() {
        let p4 = path(4);
        let p =
            ConnectedKPartition::new(&p4, Partition::new(vec![0, 0, 1, 1], 2).unwrap()).unwrap();
        let (out, trace) = improvement_algorithm(&p4, &p).unwrap();
        assert_eq!(out, p);
        assert!(trace.steps.is_empty());
        assert_eq!(trace.sequence_len(), 1);
    }

    #[test]
    fn tree_solvers() {
        let s4 = star(4);
        let out = solve_tree_generalized(&s4, 3).unwrap();
        assert!(valid(&s4, out.partition(), Mode::generalized().connected()));

        let p4 = path(4);
        let out = solve_tree_generalized(&p4, 2).unwrap();
        assert!(valid(&p4, out.partition(), Mode::generalized().connected()));
        let out = solve_tree_generalized(&p4, 4).unwrap();
        assert_eq!(out.partition().sizes(), &[1, 1, 1, 1]);

        assert_eq!(solve_tree_strict(&star(3), 2).unwrap(), None);
        let out = solve_tree_strict(&p4, 2).unwrap().unwrap();
        assert_eq!(blocks(out.partition()), vec![vec![0, 1], vec![2, 3]]);
        let p7 = path(7);
        let out = solve_tree_strict(&p7, 3).unwrap().unwrap();
        assert!(valid(&p7, out.partition(), Mode::strict().connected()));
        assert_eq!(solve_tree_strict(&p7, 4).unwrap(), None);
    }

    #[test]
    fn forest_generalized_examples() {
        let three = Graph::empty(3);
        let p = solve_forest_generalized(&three, 2).unwrap();
        assert_eq!(blocks(&p), vec![vec![0], vec![1, 2]]);

        let two_p3 = g(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]);
        let p = solve_forest_generalized(&two_p3, 3).unwrap();
        assert!(valid(&two_p3, &p, Mode::generalized()));
        let whole = p.blocks().iter().filter(|b| b.len() == 3).count();
        assert_eq!(whole, 1);

        let p5 = path(5);
        let p = solve_forest_generalized(&p5, 3).unwrap();
        assert_eq!(p, solve_tree_generalized(&p5, 3).unwrap().into_partition());
    }

    #[test]
    fn forest_strict_examples() {
        let four = Graph::empty(4);
        let p = solve_forest_strict(&four, 2).unwrap().unwrap();
        assert_eq!(blocks(&p), vec![vec![0, 1], vec![2, 3]]);

        let h = g(6, &[(0, 1), (1, 2), (2, 3)]);
        let p = solve_forest_strict(&h, 3).unwrap().unwrap();
        assert_eq!(blocks(&p), vec![vec![4, 5], vec![0, 1], vec![2, 3]]);
        assert!(valid(&h, &p, Mode::strict()));

        // P_3 plus an isolated vertex has |M| + floor(|I|/2) = 1.
        let h = g(4, &[(0, 1), (1, 2)]);
        assert_eq!(solve_forest_strict(&h, 2).unwrap(), None);

        // The lone isolated vertex joins a smallest community.
        let h = g(5, &[(0, 1), (1, 2), (2, 3)]);
        let p = solve_forest_strict(&h, 2).unwrap().unwrap();
        assert_eq!(blocks(&p), vec![vec![0, 1, 4], vec![2, 3]]);
        assert!(valid(&h, &p, Mode::strict()));
    }

    #[test]
    fn forest_rebalancing() {
        // P_4 and P_2 with k = 2: the first two matched edges both sit in
        // the P_4, leaving the P_2 without a home unless one moves over.
        let h = g(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]);
        let p = solve_forest_strict(&h, 2).unwrap().unwrap();
        assert!(valid(&h, &p, Mode::strict()));
        assert_eq!(blocks(&p), vec![vec![0, 1, 2, 3], vec![4, 5]]);
    }

    fn tree_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
        (2..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |par| {
                let e: Vec<_> = par
                    .iter()
                    .enumerate()
                    .map(|(i, ix)| (ix.index(i + 1), i + 1))
                    .collect();
                Graph::from_edges(n, &e).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn improvement_invariants(t in tree_strategy(60), k_raw in 2usize..=6) {
            let k = k_raw.min(t.n());
            prop_assume!(k >= 2);
            let p0 = initial_partition_edges(&t, k).unwrap();
            let (out, trace) = improvement_algorithm(&t, &p0).unwrap();
            prop_assert!(valid(&t, out.partition(), Mode::generalized().connected()));
            prop_assert!(trace.sequence_len() <= iteration_bound(k, t.n()));
            let tuples: Vec<_> = trace.tuples().collect();
            for w in tuples.windows(2) {
                prop_assert!(w[0] < w[1]);
                prop_assert!(is_2_change(w[0], w[1]).unwrap().is_some());
                prop_assert!(w[0].entries()[0] <= w[1].entries()[0]);
            }
            prop_assert!(at_most_one_neighbor_outside(&t, out.partition()));
        }

        #[test]
        fn strict_tree_outputs_verify(t in tree_strategy(30), k in 2usize..=5) {
            let mm = max_matching_forest(&t).unwrap().len();
            match solve_tree_strict(&t, k).unwrap() {
                None => prop_assert!(mm < k),
                Some(out) => {
                    prop_assert!(mm >= k);
                    prop_assert!(valid(&t, out.partition(), Mode::strict().connected()));
                }
            }
        }
    }
}
