//! Exhaustive ground truth for small graphs.
//!
//! * [`brute_force_2cs`] walks the 2-partitions with vertex 0 on side 0 in
//!   lexicographic order of the assignment string, so the first witness is
//!   the lexicographically smallest valid assignment. With pruning on, the
//!   forced-assignment rules and vertex tests cut only branches without a
//!   valid completion, so the witness does not change.
//! * [`brute_force_kcs`] walks restricted-growth strings with exactly `k`
//!   blocks, again returning the lexicographically first valid one.
//! * Graph classes up to isomorphism are generated by vertex extension and
//!   deduplicated by a canonical code; trees use a center-rooted canonical
//!   string instead.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{classify, is_connected, write_graph, Graph};
use crate::verifier::{verify_partition, Deducer, Mode, PartialAssignment, Partition, Variant};

/// Default vertex cap for exhaustive searches.
pub const DEFAULT_CAP: usize = 24;

/// Largest `n` accepted by the enumerators.
pub const MAX_ENUM_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the search cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("n = {n} is above the enumeration limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("need at least 2 communities, got {0}")]
    TooFewCommunities(usize),
    #[error("invalid range {n_min}..={n_max}")]
    InvalidRange { n_min: usize, n_max: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: Mode,
    /// Apply the forced-assignment rules and vertex tests.
    pub prune: bool,
    pub cap: usize,
}

impl SearchConfig {
    pub fn new(mode: Mode) -> Self {
        SearchConfig {
            mode,
            prune: true,
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_prune(self, prune: bool) -> Self {
        SearchConfig { prune, ..self }
    }

    pub fn with_cap(self, cap: usize) -> Self {
        SearchConfig { cap, ..self }
    }
}

fn check_cap(g: &Graph, cfg: &SearchConfig) -> Result<(), OracleError> {
    if g.n() > cfg.cap {
        Err(OracleError::CapExceeded {
            n: g.n(),
            cap: cfg.cap,
        })
    } else {
        Ok(())
    }
}

fn accepts(g: &Graph, p: &Partition, mode: Mode) -> bool {
    verify_partition(g, p, mode).is_ok_and(|r| r.valid)
}

/// First valid 2-community structure (strict or generalized per
/// `cfg.mode`) in lexicographic order of assignment strings.
pub fn brute_force_2cs(g: &Graph, cfg: &SearchConfig) -> Result<Option<Partition>, OracleError> {
    check_cap(g, cfg)?;
    if g.n() < 2 {
        return Ok(None);
    }
    let deducer = cfg.prune.then(|| Deducer::new(g, cfg.mode.variant));
    let mut pa = PartialAssignment::new(g.n());
    pa.set(0, 0).expect("vertex 0 exists");
    Ok(search_2cs(g, deducer.as_ref(), cfg.mode, pa))
}

fn search_2cs(
    g: &Graph,
    deducer: Option<&Deducer>,
    mode: Mode,
    mut pa: PartialAssignment,
) -> Option<Partition> {
    if let Some(d) = deducer {
        d.run_with_tests(&mut pa).ok()?;
    }
    let Some(v) = pa.unassigned().next() else {
        return pa.to_partition().filter(|p| accepts(g, p, mode));
    };
    (0..2).find_map(|side| {
        let mut next = pa.clone();
        next.set(v, side).expect("valid side");
        search_2cs(g, deducer, mode, next)
    })
}

/// First valid structure with exactly `k` communities in lexicographic
/// order of restricted-growth strings.
pub fn brute_force_kcs(
    g: &Graph,
    k: usize,
    cfg: &SearchConfig,
) -> Result<Option<Partition>, OracleError> {
    if k < 2 {
        return Err(OracleError::TooFewCommunities(k));
    }
    check_cap(g, cfg)?;
    let n = g.n();
    if n < k {
        return Ok(None);
    }
    // Vertices whose closed neighborhood is fully assigned once `v` is.
    let mut complete_at = vec![Vec::new(); n];
    for w in 0..n {
        let last = g.neighbors(w).last().map_or(w, |&x| x.max(w));
        complete_at[last].push(w);
    }
    let mut search = KSearch {
        g,
        k,
        mode: cfg.mode,
        prune: cfg.prune,
        floor: cfg.mode.variant.size_floor(),
        complete_at,
        assign: vec![usize::MAX; n],
        sizes: vec![0; k],
    };
    Ok(search.run(0, 0))
}

struct KSearch<'g> {
    g: &'g Graph,
    k: usize,
    mode: Mode,
    prune: bool,
    floor: usize,
    complete_at: Vec<Vec<usize>>,
    assign: Vec<usize>,
    sizes: Vec<usize>,
}

impl KSearch<'_> {
    /// Blocks still short of the size floor, or unopened, must be
    /// fillable by the `remaining` vertices.
    fn feasible(&self, opened: usize, remaining: usize) -> bool {
        let short: usize = self.sizes[..opened]
            .iter()
            .map(|&s| self.floor.saturating_sub(s))
            .sum();
        short + self.floor * (self.k - opened) <= remaining
    }

    /// In a strict structure a vertex with neighbors but none in its own
    /// community is never satisfied.
    fn isolated_in_block(&self, w: usize) -> bool {
        let nb = self.g.neighbors(w);
        !nb.is_empty() && nb.iter().all(|&x| self.assign[x] != self.assign[w])
    }

    fn run(&mut self, v: usize, opened: usize) -> Option<Partition> {
        let n = self.g.n();
        if v == n {
            if opened < self.k {
                return None;
            }
            let p = Partition::new(self.assign.clone(), self.k).expect("all blocks opened");
            return accepts(self.g, &p, self.mode).then_some(p);
        }
        let top = opened.min(self.k - 1);
        for c in 0..=top {
            let now_open = opened.max(c + 1);
            self.assign[v] = c;
            self.sizes[c] += 1;
            let ok = self.feasible(now_open, n - v - 1)
                && !(self.prune
                    && self.mode.variant == Variant::Strict
                    && self.complete_at[v]
                        .iter()
                        .any(|&w| self.isolated_in_block(w)));
            let found = if ok { self.run(v + 1, now_open) } else { None };
            self.sizes[c] -= 1;
            if found.is_some() {
                self.assign[v] = usize::MAX;
                return found;
            }
        }
        self.assign[v] = usize::MAX;
        None
    }
}

/// Every labeled graph on `n` vertices (optionally only connected ones),
/// in order of the edge-subset bitmask over lexicographically ordered
/// vertex pairs.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, OracleError> {
    if n > MAX_ENUM_N {
        return Err(OracleError::TooLarge { n, max: MAX_ENUM_N });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("distinct pairs");
        (!connected_only || is_connected(&g)).then_some(g)
    }))
}

/// Color classes from iterated neighborhood refinement, as ranks. The
/// colors depend only on the isomorphism type of `(g, v)`.
fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = sigs
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        color = sigs.iter().map(|s| ranks[s]).collect();
        if ranks.len() == classes {
            return color;
        }
        classes = ranks.len();
    }
}

/// Canonical code of `g`: the smallest adjacency bit string (rows of the
/// lower triangle, in position order) over all vertex orders that list the
/// refined color classes in increasing color order. Returns the code and
/// the minimizing order (`order[position] = vertex`).
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let color = refined_colors(g);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| (color[v], v));
    let cell_of_pos: Vec<usize> = by_color.iter().map(|&v| color[v]).collect();

    struct Canon<'a> {
        g: &'a Graph,
        color: Vec<usize>,
        cell_of_pos: Vec<usize>,
        total_bits: u32,
        best: Option<(u64, Vec<usize>)>,
        order: Vec<usize>,
        used: Vec<bool>,
    }
    impl Canon<'_> {
        fn go(&mut self, code: u64, bits: u32) {
            let pos = self.order.len();
            if let Some((best, _)) = &self.best {
                let prefix = best >> (self.total_bits - bits);
                if code > prefix {
                    return;
                }
            }
            if pos == self.g.n() {
                if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                    self.best = Some((code, self.order.clone()));
                }
                return;
            }
            let cell = self.cell_of_pos[pos];
            for x in 0..self.g.n() {
                if self.used[x] || self.color[x] != cell {
                    continue;
                }
                let mut next = code;
                for &y in &self.order {
                    next = next << 1 | u64::from(self.g.has_edge(x, y));
                }
                self.used[x] = true;
                self.order.push(x);
                self.go(next, bits + pos as u32);
                self.order.pop();
                self.used[x] = false;
            }
        }
    }
    let mut c = Canon {
        g,
        color,
        cell_of_pos,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        best: None,
        order: Vec::with_capacity(n),
        used: vec![false; n],
    };
    c.go(0, 0);
    c.best.expect("at least one order")
}

/// `g` relabelled so that position `i` of `order` becomes vertex `i`.
fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<_> = g.edges().map(|(u, v)| (pos[u], pos[v])).collect();
    Graph::from_edges(g.n(), &edges).expect("relabelling keeps the graph simple")
}

/// One canonically labelled representative per isomorphism class of
/// graphs on `n` vertices, sorted by canonical code.
pub fn nonisomorphic_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>, OracleError> {
    if n > MAX_ENUM_N {
        return Err(OracleError::TooLarge { n, max: MAX_ENUM_N });
    }
    // Every graph on m + 1 vertices arises from one on m vertices by adding
    // a vertex with some neighborhood.
    let mut classes: BTreeMap<u64, Graph> = BTreeMap::new();
    classes.insert(0, Graph::empty(n.min(1)));
    for m in 1..n {
        let mut next = BTreeMap::new();
        for base in classes.values() {
            let base_edges: Vec<_> = base.edges().collect();
            for mask in 0u32..1 << m {
                let mut edges = base_edges.clone();
                edges.extend((0..m).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m)));
                let h = Graph::from_edges(m + 1, &edges).expect("new vertex adds fresh pairs");
                let (code, order) = canonical_form(&h);
                next.entry(code).or_insert_with(|| relabel(&h, &order));
            }
        }
        classes = next;
    }
    Ok(classes
        .into_values()
        .filter(|g| !connected_only || is_connected(g))
        .collect())
}

/// Canonical string of a tree rooted at `root`.
fn rooted_code(t: &Graph, root: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(root)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, root))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Canonical string of a tree, rooted at its center (the smaller code of
/// the two when there are two centers).
pub fn tree_code(t: &Graph) -> String {
    let n = t.n();
    if n == 0 {
        return String::new();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
        .iter()
        .map(|&c| rooted_code(t, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut classes: BTreeMap<String, Graph> = BTreeMap::new();
    classes.insert(tree_code(&Graph::empty(1)), Graph::empty(1));
    for m in 1..n {
        let mut next = BTreeMap::new();
        for base in classes.values() {
            let base_edges: Vec<_> = base.edges().collect();
            for v in 0..m {
                let mut edges = base_edges.clone();
                edges.push((v, m));
                let t = Graph::from_edges(m + 1, &edges).expect("leaf edge is new");
                next.entry(tree_code(&t)).or_insert(t);
            }
        }
        classes = next;
    }
    classes.into_values().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    /// Connected isomorphism classes, stars included.
    pub examined: usize,
    pub stars: usize,
    pub admitting: usize,
    pub counterexamples: Vec<Graph>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub mode: Mode,
    pub rows: Vec<CensusRow>,
}

impl CensusReport {
    pub fn total_counterexamples(&self) -> usize {
        self.rows.iter().map(|r| r.counterexamples.len()).sum()
    }

    /// One line `n examined stars admitting counterexamples` per size,
    /// each followed by the edge lists of its counterexamples.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!(
                "{} {} {} {} {}\n",
                r.n,
                r.examined,
                r.stars,
                r.admitting,
                r.counterexamples.len()
            ));
            for g in &r.counterexamples {
                out.push_str(&write_graph(g));
            }
        }
        out
    }
}

/// Classifies every connected graph with `n_min <= n <= n_max` vertices,
/// up to isomorphism, by whether it admits a 2-community structure under
/// `mode`. Stars are counted but not searched. The work is split over
/// `workers` threads; the report does not depend on the split.
pub fn census(
    n_min: usize,
    n_max: usize,
    mode: Mode,
    workers: usize,
) -> Result<CensusReport, OracleError> {
    if n_min < 2 || n_min > n_max {
        return Err(OracleError::InvalidRange { n_min, n_max });
    }
    if n_max > MAX_ENUM_N {
        return Err(OracleError::TooLarge {
            n: n_max,
            max: MAX_ENUM_N,
        });
    }
    let workers = workers.max(1);
    let cfg = SearchConfig::new(mode).with_cap(MAX_ENUM_N);
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let graphs = nonisomorphic_graphs(n, true)?;
        let stars: Vec<bool> = graphs.iter().map(|g| classify(g).is_star).collect();
        let mut found = vec![true; graphs.len()];
        std::thread::scope(|scope| {
            let chunk = graphs.len().div_ceil(workers).max(1);
            for (slots, (gs, st)) in found
                .chunks_mut(chunk)
                .zip(graphs.chunks(chunk).zip(stars.chunks(chunk)))
            {
                scope.spawn(move || {
                    for ((slot, g), &star) in slots.iter_mut().zip(gs).zip(st) {
                        if !star {
                            *slot = brute_force_2cs(g, &cfg).expect("below the cap").is_some();
                        }
                    }
                });
            }
        });
        let n_stars = stars.iter().filter(|&&s| s).count();
        let counterexamples: Vec<Graph> = graphs
            .iter()
            .zip(&stars)
            .zip(&found)
            .filter(|((_, &s), &f)| !s && !f)
            .map(|((g, _), _)| g.clone())
            .collect();
        rows.push(CensusRow {
            n,
            examined: graphs.len(),
            stars: n_stars,
            admitting: graphs.len() - n_stars - counterexamples.len(),
            counterexamples,
        });
    }
    Ok(CensusReport { mode, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn strict() -> SearchConfig {
        SearchConfig::new(Mode::strict())
    }

    #[test]
    fn two_community_examples() {
        assert_eq!(brute_force_2cs(&star(3), &strict()).unwrap(), None);
        let p = brute_force_2cs(&path(4), &strict()).unwrap().unwrap();
        assert_eq!(p.assignment(), &[0, 0, 1, 1]);
        let p = brute_force_2cs(&path(4), &strict().with_prune(false))
            .unwrap()
            .unwrap();
        assert_eq!(p.assignment(), &[0, 0, 1, 1]);
        assert_eq!(
            brute_force_2cs(&path(30), &strict()),
            Err(OracleError::CapExceeded {
                n: 30,
                cap: DEFAULT_CAP
            })
        );
        assert_eq!(brute_force_2cs(&Graph::empty(1), &strict()).unwrap(), None);
    }

    #[test]
    fn k_community_examples() {
        let p = brute_force_kcs(&path(7), 3, &strict()).unwrap().unwrap();
        assert!(
            verify_partition(&path(7), &p, Mode::strict())
                .unwrap()
                .valid
        );
        assert_eq!(brute_force_kcs(&path(4), 3, &strict()).unwrap(), None);
        let gen = SearchConfig::new(Mode::generalized());
        let p = brute_force_kcs(&path(4), 4, &gen).unwrap().unwrap();
        assert_eq!(p.assignment(), &[0, 1, 2, 3]);
        assert_eq!(
            brute_force_kcs(&path(4), 1, &gen),
            Err(OracleError::TooFewCommunities(1))
        );
        assert_eq!(brute_force_kcs(&path(3), 4, &gen).unwrap(), None);
    }

    #[test]
    fn labeled_enumeration() {
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, false).unwrap().count(), 64);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 38);
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn class_counts() {
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 1, 2, 6, 21, 112];
        for n in 0..=6 {
            assert_eq!(
                nonisomorphic_graphs(n, false).unwrap().len(),
                all[n],
                "n={n}"
            );
            assert_eq!(
                nonisomorphic_graphs(n, true).unwrap().len(),
                connected[n],
                "n={n}"
            );
        }
    }

    #[test]
    fn classes_match_labeled_orbits() {
        // Labeled graphs on 5 vertices grouped by canonical code.
        let codes: BTreeSet<u64> = enumerate_graphs(5, true)
            .unwrap()
            .map(|h| canonical_form(&h).0)
            .collect();
        assert_eq!(codes.len(), 21);
    }

    #[test]
    fn tree_counts() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &c) in expected.iter().enumerate() {
            let trees = nonisomorphic_trees(i + 1);
            assert_eq!(trees.len(), c, "n={}", i + 1);
            assert!(trees.iter().all(|t| classify(t).is_tree));
        }
    }

    #[test]
    fn small_census() {
        let r = census(4, 6, Mode::strict(), 3).unwrap();
        assert_eq!(r.total_counterexamples(), 0);
        assert_eq!(r.rows[2].examined, 112);
        for row in &r.rows {
            assert_eq!(
                row.examined,
                row.admitting + row.stars + row.counterexamples.len()
            );
            assert_eq!(row.stars, 1);
        }
        assert_eq!(r, census(4, 6, Mode::strict(), 1).unwrap());
        assert_eq!(r.to_text(), "4 6 1 5 0\n5 21 1 20 0\n6 112 1 111 0\n");

        let gen = census(4, 4, Mode::generalized(), 2).unwrap();
        assert_eq!(gen.total_counterexamples(), 0);

        // K_3 cannot be split into two parts of size two.
        let r3 = census(3, 3, Mode::strict(), 1).unwrap();
        assert_eq!(r3.rows[0].counterexamples.len(), 1);
        assert!(r3.to_text().starts_with("3 2 1 0 1\n3 3\n"));
        assert!(census(1, 3, Mode::strict(), 1).is_err());
        assert!(census(4, 9, Mode::strict(), 1).is_err());
    }

    fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut e = Vec::new();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            e.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, &e).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn pruning_keeps_the_witness(h in graph_strategy(8), generalized in any::<bool>(), connected in any::<bool>()) {
            let mut mode = if generalized { Mode::generalized() } else { Mode::strict() };
            if connected {
                mode = mode.connected();
            }
            let cfg = SearchConfig::new(mode);
            let pruned = brute_force_2cs(&h, &cfg).unwrap();
            let plain = brute_force_2cs(&h, &cfg.with_prune(false)).unwrap();
            prop_assert_eq!(&pruned, &plain);
            if let Some(p) = &pruned {
                prop_assert!(verify_partition(&h, p, mode).unwrap().valid);
            }
            if generalized && pruned.is_none() {
                let strict_mode = Mode { variant: Variant::Strict, ..mode };
                prop_assert_eq!(brute_force_2cs(&h, &SearchConfig::new(strict_mode)).unwrap(), None);
            }
        }

        #[test]
        fn k_search_pruning_keeps_the_witness(h in graph_strategy(8), k in 2usize..=4) {
            let cfg = strict();
            let pruned = brute_force_kcs(&h, k, &cfg).unwrap();
            prop_assert_eq!(&pruned, &brute_force_kcs(&h, k, &cfg.with_prune(false)).unwrap());
            if k == 2 {
                prop_assert_eq!(pruned.is_some(), brute_force_2cs(&h, &cfg).unwrap().is_some());
            }
        }

        #[test]
        fn canonical_codes_ignore_labels(h in graph_strategy(8), seed in any::<u64>()) {
            let n = h.n();
            let mut order: Vec<usize> = (0..n).collect();
            // Deterministic shuffle from the seed.
            let mut s = seed | 1;
            for i in (1..n).rev() {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                order.swap(i, (s % (i as u64 + 1)) as usize);
            }
            let shuffled = relabel(&h, &order);
            prop_assert_eq!(canonical_form(&h).0, canonical_form(&shuffled).0);
        }
    }
}
