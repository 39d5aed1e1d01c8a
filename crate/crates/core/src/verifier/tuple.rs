//! Size tuples and the 2-change machinery behind the improvement bound.
//!
//! Tuple positions in this module are 1-based, matching the usual
//! statement of prefix sums `w_j(t) = t[1] + ... + t[j]`.

use thiserror::Error;

use super::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("tuples have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("tuples have different sums ({0} and {1})")]
    SumMismatch(usize, usize),
    #[error("prefix index {j} outside 1..={k}")]
    IndexOutOfRange { j: usize, k: usize },
}

/// Community sizes in ascending order. The derived ordering is the
/// lexicographic one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SizeTuple(Vec<usize>);

impl SizeTuple {
    pub fn new(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable();
        SizeTuple(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn size_tuple(p: &Partition) -> SizeTuple {
    SizeTuple::new(p.sizes().to_vec())
}

/// Witness that `t2` is an `(x, y)`-change of `t` of order `delta`:
/// `t[x], t[y]` replaced by `t[x] + delta, t[y] - delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoChange {
    pub x: usize,
    pub y: usize,
    pub delta: usize,
}

/// Recognizes 2-changes. The witness uses the normalized order
/// `delta <= (t[y] - t[x]) / 2`, the largest position holding `t[x]` and
/// the smallest position holding `t[y]`.
pub fn is_2_change(t: &SizeTuple, t2: &SizeTuple) -> Result<Option<TwoChange>, TupleError> {
    if t.k() != t2.k() {
        return Err(TupleError::LengthMismatch(t.k(), t2.k()));
    }
    if t.n() != t2.n() {
        return Err(TupleError::SumMismatch(t.n(), t2.n()));
    }
    // Multiset differences of two sorted sequences.
    let (a, b) = (t.entries(), t2.entries());
    let (mut removed, mut added) = (Vec::new(), Vec::new());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(&x), Some(&y)) if x < y => {
                removed.push(x);
                i += 1;
            }
            (Some(_), Some(&y)) => {
                added.push(y);
                j += 1;
            }
            (Some(&x), None) => {
                removed.push(x);
                i += 1;
            }
            (None, Some(&y)) => {
                added.push(y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let (&[low, high], &[new_low, _]) = (removed.as_slice(), added.as_slice()) else {
        return Ok(None);
    };
    // Equal sums make new_high = high - delta.
    if new_low <= low {
        return Ok(None);
    }
    let x = a.iter().rposition(|&e| e == low).expect("removed from t") + 1;
    let y = a.iter().position(|&e| e == high).expect("removed from t") + 1;
    Ok(Some(TwoChange {
        x,
        y,
        delta: new_low - low,
    }))
}

/// Sum of the first `j` entries, `1 <= j <= k`.
pub fn prefix_weight(t: &SizeTuple, j: usize) -> Result<usize, TupleError> {
    if j == 0 || j > t.k() {
        return Err(TupleError::IndexOutOfRange { j, k: t.k() });
    }
    Ok(t.entries()[..j].iter().sum())
}
