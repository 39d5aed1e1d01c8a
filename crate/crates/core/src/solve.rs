//! Picks a solver for a graph: the tree and forest algorithms, the
//! threshold constructions for `k = 2`, and exhaustive search otherwise.
//! Every structure returned has been re-verified in the requested mode.

use std::fmt;

use crate::graph::{classify, is_connected, max_matching_forest, Graph};
use crate::oracle::{brute_force_2cs, brute_force_kcs, OracleError, SearchConfig};
use crate::threshold::{
    recognize_threshold, solve_threshold_disconnected, solve_threshold_generalized,
    solve_threshold_strict_connected, DisconnectedOutcome,
};
use crate::tree::{
    solve_forest_generalized, solve_forest_strict, solve_tree_generalized, solve_tree_strict,
};
use crate::verifier::{verify_partition, Mode, Partition, Variant};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Tree,
    Forest,
    Threshold,
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Tree => "tree",
            Method::Forest => "forest",
            Method::Threshold => "threshold",
            Method::BruteForce => "brute-force",
        })
    }
}

/// Why no structure exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoStructure {
    TooFewVertices {
        n: usize,
        k: usize,
        floor: usize,
    },
    /// Tree or forest whose maximum matching plus paired isolated vertices
    /// falls short of `k`.
    MatchingTooSmall {
        matching: usize,
        isolated_pairs: usize,
        k: usize,
    },
    Star,
    Exhaustive,
}

impl fmt::Display for NoStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            NoStructure::TooFewVertices { n, k, floor } => {
                write!(
                    f,
                    "{n} vertices cannot hold {k} communities of size at least {floor}"
                )
            }
            NoStructure::MatchingTooSmall {
                matching,
                isolated_pairs,
                k,
            } => write!(
                f,
                "maximum matching has {matching} edges and {isolated_pairs} isolated pairs, \
                 fewer than k = {k}"
            ),
            NoStructure::Star => write!(f, "graph is a star"),
            NoStructure::Exhaustive => write!(f, "exhaustive search found no structure"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(Partition),
    NoStructure(NoStructure),
    /// Exhaustive search was needed but the graph exceeds the cap.
    UnknownCapped {
        n: usize,
        cap: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub outcome: Outcome,
    pub method: Method,
}

fn valid(g: &Graph, p: &Partition, mode: Mode) -> bool {
    verify_partition(g, p, mode).is_ok_and(|r| r.valid)
}

fn brute_force(g: &Graph, k: usize, mode: Mode, cap: usize) -> Result<Solution, Error> {
    let cfg = SearchConfig::new(mode).with_cap(cap);
    let found = if k == 2 {
        brute_force_2cs(g, &cfg)
    } else {
        brute_force_kcs(g, k, &cfg)
    };
    let outcome = match found {
        Ok(Some(p)) => Outcome::Found(p),
        Ok(None) => Outcome::NoStructure(NoStructure::Exhaustive),
        Err(OracleError::CapExceeded { n, cap }) => Outcome::UnknownCapped { n, cap },
        Err(e) => return Err(e.into()),
    };
    Ok(Solution {
        outcome,
        method: Method::BruteForce,
    })
}

/// Finds a k-community structure of `g` in `mode`, using exhaustive search
/// (limited to `cap` vertices) only when no structural algorithm applies
/// or when a structural answer fails the connectivity requirement.
pub fn solve(g: &Graph, k: usize, mode: Mode, cap: usize) -> Result<Solution, Error> {
    if k < 2 {
        return Err(OracleError::TooFewCommunities(k).into());
    }
    let n = g.n();
    let floor = mode.variant.size_floor();
    if n < k * floor {
        return Ok(Solution {
            outcome: Outcome::NoStructure(NoStructure::TooFewVertices { n, k, floor }),
            method: Method::BruteForce,
        });
    }
    let fast = if classify(g).is_forest {
        Some(solve_forest(g, k, mode)?)
    } else if k == 2 {
        solve_threshold(g, mode, cap)?
    } else {
        None
    };
    match fast {
        Some(Solution {
            outcome: Outcome::Found(p),
            method,
        }) => {
            if valid(g, &p, mode) {
                Ok(Solution {
                    outcome: Outcome::Found(p),
                    method,
                })
            } else {
                brute_force(g, k, mode, cap)
            }
        }
        Some(s) => Ok(s),
        None => brute_force(g, k, mode, cap),
    }
}

fn solve_forest(g: &Graph, k: usize, mode: Mode) -> Result<Solution, Error> {
    let tree = is_connected(g);
    let method = if tree { Method::Tree } else { Method::Forest };
    let found = match (mode.variant, tree) {
        (Variant::Strict, true) => solve_tree_strict(g, k)?.map(|c| c.into_partition()),
        (Variant::Strict, false) => solve_forest_strict(g, k)?,
        (Variant::Generalized, true) => Some(solve_tree_generalized(g, k)?.into_partition()),
        (Variant::Generalized, false) => Some(solve_forest_generalized(g, k)?),
    };
    let outcome = match found {
        Some(p) => Outcome::Found(p),
        None => {
            let matching = max_matching_forest(g)?.len();
            let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
            Outcome::NoStructure(NoStructure::MatchingTooSmall {
                matching,
                isolated_pairs: isolated / 2,
                k,
            })
        }
    };
    Ok(Solution { outcome, method })
}

fn solve_threshold(g: &Graph, mode: Mode, cap: usize) -> Result<Option<Solution>, Error> {
    let Some(d) = recognize_threshold(g) else {
        return Ok(None);
    };
    let outcome = match mode.variant {
        Variant::Generalized => Outcome::Found(solve_threshold_generalized(g, &d)?),
        Variant::Strict if is_connected(g) => match solve_threshold_strict_connected(g, &d)? {
            Some(p) => Outcome::Found(p),
            None => Outcome::NoStructure(NoStructure::Star),
        },
        Variant::Strict => match solve_threshold_disconnected(g, cap)? {
            DisconnectedOutcome::Solved(p) => Outcome::Found(p),
            DisconnectedOutcome::NoStructure => Outcome::NoStructure(NoStructure::Exhaustive),
            DisconnectedOutcome::UnknownCapped => Outcome::UnknownCapped { n: g.n(), cap },
        },
    };
    Ok(Some(Solution {
        outcome,
        method: Method::Threshold,
    }))
}
