//! Forced-assignment rules for 2-community searches.
//!
//! Every rule here is a necessary condition: if a partial assignment can be
//! completed into a valid structure, the completion also satisfies whatever
//! the rules fix. A [`DeduceError::Conflict`] therefore proves that no
//! completion exists.
//!
//! Rules, for sides `s` and `1 - s`:
//! * neighbor side: a vertex of positive degree whose neighbors are all
//!   fixed to `s` joins `s`. In the generalized variant this needs some
//!   other vertex fixed to `1 - s`, since otherwise `{v}` could be a
//!   singleton community.
//! * closed-neighborhood containment: if every non-neighbor of `v` (and
//!   there is one) is fixed to `s`, then `v` joins `1 - s`.
//! * twins: non-universal true twins share a side.
//! * size floor: a side short of the minimum size takes all unassigned
//!   vertices when they are exactly enough or must move as one block.

use thiserror::Error;

use super::{Partition, Variant};
use crate::graph::{twin_classes, Graph, TwinKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DeduceError {
    #[error("no completion exists (conflict at {vertex:?})")]
    Conflict { vertex: Option<usize> },
    #[error("vertex {0} is already assigned")]
    VertexAlreadyAssigned(usize),
    #[error("side {0} has no fixed vertex")]
    EmptySide(usize),
    #[error("side must be 0 or 1, got {0}")]
    InvalidSide(usize),
    #[error("assignment covers {found} vertices, graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
}

fn conflict(v: usize) -> DeduceError {
    DeduceError::Conflict { vertex: Some(v) }
}

/// Per-vertex optional side (0 or 1) of a 2-community search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialAssignment {
    fixed: Vec<Option<usize>>,
    counts: [usize; 2],
}

impl PartialAssignment {
    pub fn new(n: usize) -> Self {
        PartialAssignment {
            fixed: vec![None; n],
            counts: [0, 0],
        }
    }

    pub fn from_sides(n: usize, side0: &[usize], side1: &[usize]) -> Result<Self, DeduceError> {
        let mut pa = Self::new(n);
        for (side, list) in [(0, side0), (1, side1)] {
            for &v in list {
                if pa.get(v).is_some() {
                    return Err(DeduceError::VertexAlreadyAssigned(v));
                }
                pa.set(v, side)?;
            }
        }
        Ok(pa)
    }

    pub fn len(&self) -> usize {
        self.fixed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixed.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.fixed[v]
    }

    /// Fixes (or re-fixes) `v` to `side`.
    pub fn set(&mut self, v: usize, side: usize) -> Result<(), DeduceError> {
        if side > 1 {
            return Err(DeduceError::InvalidSide(side));
        }
        if v >= self.fixed.len() {
            return Err(DeduceError::SizeMismatch {
                expected: self.fixed.len(),
                found: v + 1,
            });
        }
        self.unset(v);
        self.fixed[v] = Some(side);
        self.counts[side] += 1;
        Ok(())
    }

    pub fn unset(&mut self, v: usize) {
        if let Some(s) = self.fixed[v].take() {
            self.counts[s] -= 1;
        }
    }

    /// Number of vertices fixed to `side`.
    pub fn count(&self, side: usize) -> usize {
        self.counts[side]
    }

    pub fn unassigned(&self) -> impl Iterator<Item = usize> + '_ {
        self.fixed
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.is_none().then_some(v))
    }

    pub fn is_complete(&self) -> bool {
        self.counts[0] + self.counts[1] == self.fixed.len()
    }

    /// The 2-partition, once every vertex is fixed and both sides are used.
    pub fn to_partition(&self) -> Option<Partition> {
        let assign = self.fixed.iter().copied().collect::<Option<Vec<_>>>()?;
        Partition::new(assign, 2).ok()
    }

    /// Fixes `v` to `side`; `Ok(true)` if this changed anything.
    fn force(&mut self, v: usize, side: usize) -> Result<bool, DeduceError> {
        match self.fixed[v] {
            Some(s) if s == side => Ok(false),
            Some(_) => Err(conflict(v)),
            None => {
                self.fixed[v] = Some(side);
                self.counts[side] += 1;
                Ok(true)
            }
        }
    }
}

/// Rule engine with the graph-dependent precomputation (twin groups)
/// done once.
pub(crate) struct Deducer<'g> {
    g: &'g Graph,
    variant: Variant,
    twin_groups: Vec<Vec<usize>>,
    group_of: Vec<usize>,
}

impl<'g> Deducer<'g> {
    pub(crate) fn new(g: &'g Graph, variant: Variant) -> Self {
        let twin_groups: Vec<Vec<usize>> = twin_classes(g, TwinKind::True)
            .into_iter()
            .filter(|c| c.len() >= 2 && !g.is_universal(c.as_slice()[0]))
            .map(|c| c.as_slice().to_vec())
            .collect();
        let mut group_of = vec![usize::MAX; g.n()];
        for (i, grp) in twin_groups.iter().enumerate() {
            for &v in grp {
                group_of[v] = i;
            }
        }
        Deducer {
            g,
            variant,
            twin_groups,
            group_of,
        }
    }

    /// Applies all rules until nothing changes.
    pub(crate) fn run(&self, pa: &mut PartialAssignment) -> Result<(), DeduceError> {
        let mut mark = vec![usize::MAX; self.g.n()];
        while self.pass(pa, &mut mark)? {}
        Ok(())
    }

    /// Like [`Deducer::run`], additionally testing every unassigned vertex
    /// on both sides; a failed test fixes the vertex to the other side.
    pub(crate) fn run_with_tests(&self, pa: &mut PartialAssignment) -> Result<(), DeduceError> {
        loop {
            self.run(pa)?;
            if pa.count(0) == 0 || pa.count(1) == 0 {
                return Ok(());
            }
            let mut changed = false;
            let unassigned: Vec<usize> = pa.unassigned().collect();
            for v in unassigned {
                if pa.get(v).is_some() {
                    continue;
                }
                let ok0 = hypothetical_satisfied(self.g, pa, v, 0);
                let ok1 = hypothetical_satisfied(self.g, pa, v, 1);
                match (ok0, ok1) {
                    (true, true) => {}
                    (false, false) => return Err(conflict(v)),
                    (true, false) => changed |= pa.force(v, 0)?,
                    (false, true) => changed |= pa.force(v, 1)?,
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn pass(&self, pa: &mut PartialAssignment, mark: &mut [usize]) -> Result<bool, DeduceError> {
        let g = self.g;
        let n = g.n();
        let mut changed = false;

        for v in 0..n {
            let nb = g.neighbors(v);
            let Some(&first) = nb.first() else { continue };
            let Some(s) = pa.get(first) else { continue };
            if !nb.iter().all(|&w| pa.get(w) == Some(s)) {
                continue;
            }
            let fire = match self.variant {
                Variant::Strict => true,
                Variant::Generalized => {
                    let others = pa.count(1 - s) - usize::from(pa.get(v) == Some(1 - s));
                    others > 0
                }
            };
            if fire {
                changed |= pa.force(v, s)?;
            }
        }

        for v in 0..n {
            mark[v] = v;
            for &w in g.neighbors(v) {
                mark[w] = v;
            }
            let mut side = None;
            let mut uniform = true;
            for u in (0..n).filter(|&u| mark[u] != v) {
                match (pa.get(u), side) {
                    (None, _) => uniform = false,
                    (Some(s), None) => side = Some(s),
                    (Some(s), Some(t)) => uniform &= s == t,
                }
                if !uniform {
                    break;
                }
            }
            if let (true, Some(j)) = (uniform, side) {
                changed |= pa.force(v, 1 - j)?;
            }
        }
        mark.fill(usize::MAX);

        for grp in &self.twin_groups {
            let mut side = None;
            for &u in grp {
                match (pa.get(u), side) {
                    (Some(s), None) => side = Some(s),
                    (Some(s), Some(t)) if s != t => return Err(conflict(u)),
                    _ => {}
                }
            }
            if let Some(s) = side {
                for &u in grp {
                    changed |= pa.force(u, s)?;
                }
            }
        }

        let floor = self.variant.size_floor();
        let free: Vec<usize> = pa.unassigned().collect();
        let mut blocks: Vec<usize> = free
            .iter()
            .map(|&v| match self.group_of[v] {
                usize::MAX => v,
                gi => n + gi,
            })
            .collect();
        blocks.sort_unstable();
        blocks.dedup();
        for s in 0..2 {
            let have = pa.count(s);
            if have >= floor {
                continue;
            }
            let need = floor - have;
            if free.len() < need {
                return Err(DeduceError::Conflict { vertex: None });
            }
            if free.len() == need || blocks.len() == 1 {
                for &v in &free {
                    changed |= pa.force(v, s)?;
                }
                // The other side is re-examined on the next pass.
                break;
            }
        }

        Ok(changed)
    }
}

/// Fixed point of the forced-assignment rules for `variant`, or a conflict
/// proving `pa` has no valid completion.
pub fn deduce_forced(
    g: &Graph,
    pa: &PartialAssignment,
    variant: Variant,
) -> Result<PartialAssignment, DeduceError> {
    if pa.len() != g.n() {
        return Err(DeduceError::SizeMismatch {
            expected: g.n(),
            found: pa.len(),
        });
    }
    let mut out = pa.clone();
    Deducer::new(g, variant).run(&mut out)?;
    Ok(out)
}

/// Satisfaction of `v` in the completion where `side` receives `v` and
/// its unassigned neighbors and the other side every other unassigned
/// vertex.
fn hypothetical_satisfied(g: &Graph, pa: &PartialAssignment, v: usize, side: usize) -> bool {
    let other = 1 - side;
    let mut own_nb = 0u64;
    let mut other_nb = 0u64;
    let mut free_nb = 0u64;
    for &w in g.neighbors(v) {
        match pa.get(w) {
            Some(s) if s == side => own_nb += 1,
            Some(_) => other_nb += 1,
            None => free_nb += 1,
        }
    }
    let free_total = (pa.len() - pa.count(0) - pa.count(1)) as u64;
    // v itself is free and lands on `side`.
    let own_size = pa.count(side) as u64 + free_nb + 1;
    let other_size = pa.count(other) as u64 + free_total - free_nb - 1;
    (own_nb + free_nb) * other_size >= other_nb * (own_size - 1)
}

/// Tests `v` on `side`: `false` means no generalized 2-community structure
/// extends `pa` with `v` on `side`.
pub fn test_vertex_on(
    g: &Graph,
    pa: &PartialAssignment,
    v: usize,
    side: usize,
) -> Result<bool, DeduceError> {
    if pa.len() != g.n() {
        return Err(DeduceError::SizeMismatch {
            expected: g.n(),
            found: pa.len(),
        });
    }
    if side > 1 {
        return Err(DeduceError::InvalidSide(side));
    }
    if pa.get(v).is_some() {
        return Err(DeduceError::VertexAlreadyAssigned(v));
    }
    for s in 0..2 {
        if pa.count(s) == 0 {
            return Err(DeduceError::EmptySide(s));
        }
    }
    Ok(hypothetical_satisfied(g, pa, v, side))
}
