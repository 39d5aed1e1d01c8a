//! Threshold graphs: recognition, the clique/stable ordering, and
//! 2-community constructions.
//!
//! A threshold graph splits into a clique `Q = v_1..v_q` and a stable set
//! `S = w_1..w_s` with nested neighborhoods. Here `Q` is ordered by
//! decreasing and `S` by increasing degree (ties by id), so each `N(w_i)`
//! is the prefix `v_1..v_d(w_i)` of `Q`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{is_connected, Graph};
use crate::oracle::{brute_force_2cs, OracleError, SearchConfig};
use crate::verifier::{Mode, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThresholdError {
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("decomposition is not normalized (need s >= 1 and d(w_s) = q)")]
    NotNormalized,
    #[error("decomposition does not describe this graph")]
    InvalidDecomposition,
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("graph is connected")]
    GraphConnected,
    #[error("graph is disconnected")]
    GraphDisconnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CreationStep {
    Isolated,
    Universal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdDecomposition {
    clique_order: Vec<usize>,
    stable_order: Vec<usize>,
    creation_sequence: Vec<(usize, CreationStep)>,
}

impl ThresholdDecomposition {
    /// Builds a decomposition from explicit orders, checking that `Q` is a
    /// clique, `S` a stable set, and that both orders have the nesting
    /// described in the module docs. No normalization is applied.
    pub fn from_orders(
        g: &Graph,
        clique_order: Vec<usize>,
        stable_order: Vec<usize>,
    ) -> Result<Self, ThresholdError> {
        let creation_sequence = recognize_threshold(g)
            .ok_or(ThresholdError::NotThreshold)?
            .creation_sequence;
        let d = ThresholdDecomposition {
            clique_order,
            stable_order,
            creation_sequence,
        };
        d.validate(g)?;
        Ok(d)
    }

    /// `v_1..v_q`.
    pub fn clique_order(&self) -> &[usize] {
        &self.clique_order
    }

    /// `w_1..w_s`.
    pub fn stable_order(&self) -> &[usize] {
        &self.stable_order
    }

    /// Vertices in the order they are added; the first entry is the
    /// starting vertex.
    pub fn creation_sequence(&self) -> &[(usize, CreationStep)] {
        &self.creation_sequence
    }

    pub fn q(&self) -> usize {
        self.clique_order.len()
    }

    pub fn s(&self) -> usize {
        self.stable_order.len()
    }

    /// `s >= 1` and `d(w_s) = q`.
    pub fn is_normalized(&self, g: &Graph) -> bool {
        self.stable_order
            .last()
            .is_some_and(|&w| g.degree(w) == self.q())
    }

    fn validate(&self, g: &Graph) -> Result<(), ThresholdError> {
        let bad = Err(ThresholdError::InvalidDecomposition);
        let n = g.n();
        let mut side = vec![None; n];
        for (&v, is_q) in self
            .clique_order
            .iter()
            .map(|v| (v, true))
            .chain(self.stable_order.iter().map(|v| (v, false)))
        {
            if v >= n || side[v].is_some() {
                return bad;
            }
            side[v] = Some(is_q);
        }
        if side.iter().any(Option::is_none) {
            return bad;
        }
        let mut pos = vec![0; n];
        for (i, &v) in self.clique_order.iter().enumerate() {
            pos[v] = i;
            if g.degree(v) < self.q() - 1 {
                return bad;
            }
        }
        let degs = |o: &[usize]| o.iter().map(|&v| g.degree(v)).collect::<Vec<_>>();
        if degs(&self.clique_order).windows(2).any(|w| w[0] < w[1])
            || degs(&self.stable_order).windows(2).any(|w| w[0] > w[1])
        {
            return bad;
        }
        // Each stable vertex sees exactly a prefix of the clique order.
        for &w in &self.stable_order {
            let d = g.degree(w);
            if !g
                .neighbors(w)
                .iter()
                .all(|&x| side[x] == Some(true) && pos[x] < d)
            {
                return bad;
            }
        }
        // Clique: every v_i has all other clique vertices as neighbors.
        for &v in &self.clique_order {
            let inside = g
                .neighbors(v)
                .iter()
                .filter(|&&x| side[x] == Some(true))
                .count();
            if inside + 1 != self.q() {
                return bad;
            }
        }
        Ok(())
    }
}

/// Recognizes threshold graphs by repeatedly removing a vertex that is
/// isolated (joins `S`) or dominating (joins `Q`) in what remains; the last
/// vertex joins `S`. Returns a normalized decomposition.
pub fn recognize_threshold(g: &Graph) -> Option<ThresholdDecomposition> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut by_deg: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removal = Vec::with_capacity(n);
    let (mut clique, mut stable) = (Vec::new(), Vec::new());
    while let Some(&(low, lv)) = by_deg.first() {
        let rem = by_deg.len();
        let (v, step) = if low == 0 {
            (lv, CreationStep::Isolated)
        } else {
            let &(high, hv) = by_deg.last().expect("nonempty");
            if high + 1 != rem {
                return None;
            }
            (hv, CreationStep::Universal)
        };
        by_deg.remove(&(deg[v], v));
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                by_deg.remove(&(deg[w], w));
                deg[w] -= 1;
                by_deg.insert((deg[w], w));
            }
        }
        match step {
            CreationStep::Isolated => stable.push(v),
            CreationStep::Universal => clique.push(v),
        }
        removal.push((v, step));
    }
    removal.reverse();
    clique.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    stable.sort_by_key(|&v| (g.degree(v), v));
    let d = ThresholdDecomposition {
        clique_order: clique,
        stable_order: stable,
        creation_sequence: removal,
    };
    Some(normalize(g, &d))
}

/// Moves `v_q` to `S` while `S` is empty or `d(w_s) < q`. When that holds,
/// `v_q` has no neighbor in `S` and behaves like a stable vertex seeing
/// all of `Q - v_q`.
pub fn normalize(g: &Graph, d: &ThresholdDecomposition) -> ThresholdDecomposition {
    let mut out = d.clone();
    while out.q() >= 1 && !out.is_normalized(g) {
        let v = out.clique_order.pop().expect("q >= 1");
        out.stable_order.push(v);
        out.stable_order.sort_by_key(|&w| (g.degree(w), w));
    }
    out
}

/// Threshold graph built by adding vertex `i` as `steps[i]`; the first
/// step only creates vertex 0.
pub fn graph_from_creation_sequence(steps: &[CreationStep]) -> Graph {
    let mut edges = Vec::new();
    for (i, step) in steps.iter().enumerate().skip(1) {
        if *step == CreationStep::Universal {
            edges.extend((0..i).map(|j| (j, i)));
        }
    }
    Graph::from_edges(steps.len(), &edges).expect("each pair is added once")
}

/// All `2^(n-1)` creation sequences of length `n >= 1`, starting with an
/// isolated vertex.
pub fn creation_sequences(n: usize) -> impl Iterator<Item = Vec<CreationStep>> {
    let count = if n == 0 { 0 } else { 1u64 << (n - 1) };
    (0..count).map(move |mask| {
        (0..n)
            .map(|i| {
                if i > 0 && mask >> (i - 1) & 1 == 1 {
                    CreationStep::Universal
                } else {
                    CreationStep::Isolated
                }
            })
            .collect()
    })
}

/// `max { i : i * d(w_i) <= n - 1 }`.
pub fn kappa(g: &Graph, d: &ThresholdDecomposition) -> usize {
    let n = g.n();
    d.stable_order
        .iter()
        .enumerate()
        .filter(|&(i, &w)| (i + 1) * g.degree(w) < n)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0)
}

/// 2-community structure of a connected threshold graph on `n >= 4`
/// vertices, or `None` for stars, the only connected threshold graphs
/// without one. Community 0 is `{v_1, w_1..w_kappa}`; when `kappa = s`
/// the graph is a clique and community 0 is `{v_1, w_1}`.
pub fn solve_threshold_strict_connected(
    g: &Graph,
    d: &ThresholdDecomposition,
) -> Result<Option<Partition>, ThresholdError> {
    let n = g.n();
    if n < 4 {
        return Err(ThresholdError::TooFewVertices { n, min: 4 });
    }
    if !is_connected(g) {
        return Err(ThresholdError::GraphDisconnected);
    }
    d.validate(g)?;
    if !d.is_normalized(g) {
        return Err(ThresholdError::NotNormalized);
    }
    if d.q() < 2 {
        return Ok(None);
    }
    let k = kappa(g, d);
    let first: &[usize] = if k == d.s() {
        &d.stable_order[..1]
    } else {
        &d.stable_order[..k]
    };
    let mut assign = vec![1; n];
    assign[d.clique_order[0]] = 0;
    for &w in first {
        assign[w] = 0;
    }
    Ok(Some(
        Partition::new(assign, 2).expect("both sides nonempty"),
    ))
}

/// `{{w_1}, V - w_1}`, a generalized 2-community structure because every
/// neighbor of `w_1` is universal.
pub fn solve_threshold_generalized(
    g: &Graph,
    d: &ThresholdDecomposition,
) -> Result<Partition, ThresholdError> {
    let n = g.n();
    if n < 2 {
        return Err(ThresholdError::TooFewVertices { n, min: 2 });
    }
    d.validate(g)?;
    let &w1 = d
        .stable_order
        .first()
        .ok_or(ThresholdError::NotNormalized)?;
    let mut assign = vec![1; n];
    assign[w1] = 0;
    Ok(Partition::new(assign, 2).expect("both sides nonempty"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisconnectedOutcome {
    Solved(Partition),
    /// The exhaustive search finished without a structure.
    NoStructure,
    /// The graph is larger than the search cap.
    UnknownCapped,
}

/// Strict 2-community structures of disconnected threshold graphs. Two
/// isolated vertices form a community on their own; with exactly one
/// isolated vertex the answer comes from exhaustive search below `cap`.
pub fn solve_threshold_disconnected(
    g: &Graph,
    cap: usize,
) -> Result<DisconnectedOutcome, ThresholdError> {
    let n = g.n();
    if is_connected(g) {
        return Err(ThresholdError::GraphConnected);
    }
    if n < 4 {
        return Err(ThresholdError::TooFewVertices { n, min: 4 });
    }
    recognize_threshold(g).ok_or(ThresholdError::NotThreshold)?;
    let isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    if let [a, b, ..] = isolated[..] {
        let mut assign = vec![1; n];
        assign[a] = 0;
        assign[b] = 0;
        return Ok(DisconnectedOutcome::Solved(
            Partition::new(assign, 2).expect("both sides nonempty"),
        ));
    }
    let cfg = SearchConfig::new(Mode::strict()).with_cap(cap);
    match brute_force_2cs(g, &cfg) {
        Ok(Some(p)) => Ok(DisconnectedOutcome::Solved(p)),
        Ok(None) => Ok(DisconnectedOutcome::NoStructure),
        Err(OracleError::CapExceeded { .. }) => Ok(DisconnectedOutcome::UnknownCapped),
        Err(e) => unreachable!("2-community search only fails on the cap: {e}"),
    }
}
