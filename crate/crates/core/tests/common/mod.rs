#![allow(dead_code)]

use community_kit::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Uniform random labeled tree on `n >= 1` vertices from a Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return Graph::from_edges(n, &edges).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

/// Random forest: a random tree with each edge kept with probability
/// `keep`, then relabeled.
pub fn random_forest<R: Rng>(n: usize, keep: f64, rng: &mut R) -> Graph {
    let t = random_tree(n, rng);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = t
        .edges()
        .filter(|_| rng.gen_bool(keep))
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}
