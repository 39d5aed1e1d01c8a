//! The proportional-density predicate and everything that checks it.
//!
//! A vertex `v` in community `C_i` is satisfied when, for every other
//! community `C_j`,
//!
//! ```text
//! |N_Ci(v)| * |C_j|  >=  |N_Cj(v)| * (|C_i| - 1)
//! ```
//!
//! This cross-multiplied form is used for both the strict and the
//! generalized variant; the variants differ only in the minimum community
//! size (2 and 1). Members of singleton communities are satisfied because
//! the right-hand side vanishes. All arithmetic is exact on `u64`.

mod deduce;
mod partition;
mod tuple;

pub(crate) use deduce::Deducer;
pub use deduce::{deduce_forced, test_vertex_on, DeduceError, PartialAssignment};
pub use partition::{parse_partition, write_partition, Partition, PartitionError};
pub use tuple::{is_2_change, prefix_weight, size_tuple, SizeTuple, TupleError, TwoChange};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// Every community has at least two vertices.
    Strict,
    /// Singleton communities allowed.
    Generalized,
}

impl Variant {
    /// Smallest admissible community size.
    pub fn size_floor(self) -> usize {
        match self {
            Variant::Strict => 2,
            Variant::Generalized => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mode {
    pub variant: Variant,
    pub require_connected: bool,
}

impl Mode {
    pub const fn strict() -> Self {
        Mode {
            variant: Variant::Strict,
            require_connected: false,
        }
    }

    pub const fn generalized() -> Self {
        Mode {
            variant: Variant::Generalized,
            require_connected: false,
        }
    }

    pub const fn connected(self) -> Self {
        Mode {
            require_connected: true,
            ..self
        }
    }
}

/// One failed inequality: `lhs < rhs` for `vertex` in `community` against
/// `other`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: usize,
    pub community: usize,
    pub other: usize,
    pub lhs: u64,
    pub rhs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Every failed (vertex, other community) pair, by vertex then community.
    pub violations: Vec<Violation>,
    pub size_ok: bool,
    /// True when connectivity was not requested.
    pub connectivity_ok: bool,
}

/// Errors from [`verify_partition`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    InvalidPartition(#[from] PartitionError),
}

/// Fills `counts` with the number of neighbors of `v` per community;
/// `touched` receives the communities with a nonzero count.
fn neighbor_counts(
    g: &Graph,
    p: &Partition,
    v: usize,
    counts: &mut [u64],
    touched: &mut Vec<usize>,
) {
    touched.clear();
    for &w in g.neighbors(v) {
        let c = p.community_of(w);
        if counts[c] == 0 {
            touched.push(c);
        }
        counts[c] += 1;
    }
}

fn check_vertex(
    g: &Graph,
    p: &Partition,
    v: usize,
    counts: &mut [u64],
    touched: &mut Vec<usize>,
    mut on_violation: impl FnMut(Violation),
) {
    neighbor_counts(g, p, v, counts, touched);
    let i = p.community_of(v);
    let own = counts[i];
    let own_size = p.size(i) as u64;
    touched.sort_unstable();
    // Communities with no neighbor of v give rhs = 0 and always hold.
    for &j in touched.iter() {
        if j == i {
            continue;
        }
        let lhs = own * p.size(j) as u64;
        let rhs = counts[j] * (own_size - 1);
        if lhs < rhs {
            on_violation(Violation {
                vertex: v,
                community: i,
                other: j,
                lhs,
                rhs,
            });
        }
    }
    for &c in touched.iter() {
        counts[c] = 0;
    }
}

/// Whether `v` is satisfied with respect to `p`. The predicate is the same
/// for both variants.
pub fn vertex_satisfied(g: &Graph, p: &Partition, v: usize) -> bool {
    let mut counts = vec![0; p.k()];
    let mut touched = Vec::new();
    let mut ok = true;
    check_vertex(g, p, v, &mut counts, &mut touched, |_| ok = false);
    ok
}

/// First unsatisfied `(vertex, community, other)` triple scanning vertices
/// in increasing id order and, per vertex, other communities in increasing
/// index order.
pub fn first_violation(g: &Graph, p: &Partition) -> Option<Violation> {
    let mut counts = vec![0; p.k()];
    let mut touched = Vec::new();
    for v in 0..g.n() {
        let mut found = None;
        check_vertex(g, p, v, &mut counts, &mut touched, |x| {
            found.get_or_insert(x);
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Checks `p` against `mode` in `O(k + n + m)` time, collecting every
/// violation.
pub fn verify_partition(g: &Graph, p: &Partition, mode: Mode) -> Result<VerifyReport, VerifyError> {
    if p.n() != g.n() {
        return Err(PartitionError::VertexCount {
            expected: g.n(),
            found: p.n(),
        }
        .into());
    }
    if p.k() < 2 {
        return Err(PartitionError::TooFewCommunities(p.k()).into());
    }
    let floor = mode.variant.size_floor();
    let size_ok = p.sizes().iter().all(|&s| s >= floor);

    let mut violations = Vec::new();
    let mut counts = vec![0; p.k()];
    let mut touched = Vec::new();
    for v in 0..g.n() {
        check_vertex(g, p, v, &mut counts, &mut touched, |x| violations.push(x));
    }

    let connectivity_ok = !mode.require_connected || communities_connected(g, p);
    Ok(VerifyReport {
        valid: size_ok && connectivity_ok && violations.is_empty(),
        violations,
        size_ok,
        connectivity_ok,
    })
}

/// Whether every community induces a connected subgraph.
pub fn communities_connected(g: &Graph, p: &Partition) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut started = vec![false; p.k()];
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let c = p.community_of(s);
        if started[c] {
            // A second search inside the same community.
            return false;
        }
        started[c] = true;
        seen[s] = true;
        stack.push(s);
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] && p.community_of(w) == c {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    true
}

/// Whether `{{u}, V \ {u}}` is a generalized 2-community structure, which
/// holds exactly when every neighbor of `u` is universal.
pub fn singleton_ok(g: &Graph, u: usize) -> bool {
    g.n() >= 2 && g.neighbors(u).iter().all(|&w| g.is_universal(w))
}
