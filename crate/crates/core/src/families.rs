//! Generators for stars and the two impossibility families, with frozen
//! vertex layouts.
//!
//! `G_abs(a, b, s)`: clique `Q = A + B` with `A = 0..a`, `B = a..a+b`,
//! stable set `S = a+b..a+b+s` complete to `A` only, and an isolated
//! vertex `u = a+b+s`.
//!
//! `G_pl(p, l)`: `u = 0`, `v_0..v_4 = 1..=5`, a clique `T = 6..6+p` and an
//! independent set `F = 6+p..6+p+l`. `u` sees everything except `v_0`;
//! the path edges are `v0v1, v1v2, v1v3, v2v4` plus the chosen dotted
//! edges among `v2v3, v3v4`; `T` is complete to `F + {u, v1, v3}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::verifier::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter {name} = {value} is below the minimum {min}")]
    ParamTooSmall {
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error("unknown edge choice {0:?} (expected v2v3, v3v4, both or neither)")]
    InvalidEdgeChoice(String),
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        Err(FamilyError::ParamTooSmall { name, value, min })
    } else {
        Ok(())
    }
}

/// Which of the dotted edges of `G_pl` are present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeChoice {
    V2V3,
    V3V4,
    Both,
    Neither,
}

impl FromStr for EdgeChoice {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "v2v3" => Ok(EdgeChoice::V2V3),
            "v3v4" => Ok(EdgeChoice::V3V4),
            "both" => Ok(EdgeChoice::Both),
            "neither" => Ok(EdgeChoice::Neither),
            other => Err(FamilyError::InvalidEdgeChoice(other.to_string())),
        }
    }
}

impl fmt::Display for EdgeChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeChoice::V2V3 => "v2v3",
            EdgeChoice::V3V4 => "v3v4",
            EdgeChoice::Both => "both",
            EdgeChoice::Neither => "neither",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    Star {
        n: usize,
    },
    Abs {
        a: usize,
        b: usize,
        s: usize,
    },
    Pl {
        p: usize,
        l: usize,
        edge: EdgeChoice,
    },
}

impl FamilyParams {
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilyParams::Star { n } => gen_star(n),
            FamilyParams::Abs { a, b, s } => gen_g_abs(a, b, s),
            FamilyParams::Pl { p, l, edge } => gen_g_pl(p, l, edge),
        }
    }
}

/// The star `S_n`: center 0, leaves `1..=n`.
pub fn gen_star(n: usize) -> Result<Graph, FamilyError> {
    at_least("n", n, 1)?;
    let edges: Vec<_> = (1..=n).map(|leaf| (0, leaf)).collect();
    Ok(Graph::from_edges(n + 1, &edges).expect("star edges are distinct"))
}

pub fn gen_g_abs(a: usize, b: usize, s: usize) -> Result<Graph, FamilyError> {
    at_least("a", a, 1)?;
    at_least("b", b, 1)?;
    at_least("s", s, 1)?;
    let q = a + b;
    let mut edges = Vec::new();
    for x in 0..q {
        edges.extend((x + 1..q).map(|y| (x, y)));
    }
    for x in 0..a {
        edges.extend((q..q + s).map(|w| (x, w)));
    }
    Ok(Graph::from_edges(q + s + 1, &edges).expect("layout edges are distinct"))
}

/// `b < (a + s) / s`, the range in which `G_abs` has no 2-community
/// structure.
pub fn g_abs_excluded(a: usize, b: usize, s: usize) -> bool {
    b * s < a + s
}

/// Vertex ids of `G_pl`.
pub mod gpl {
    use std::ops::Range;

    pub const U: usize = 0;

    /// `v_i` for `i` in `0..=4`.
    pub const fn v(i: usize) -> usize {
        1 + i
    }

    pub fn t(p: usize) -> Range<usize> {
        6..6 + p
    }

    pub fn f(p: usize, l: usize) -> Range<usize> {
        6 + p..6 + p + l
    }
}

pub fn gen_g_pl(p: usize, l: usize, edge: EdgeChoice) -> Result<Graph, FamilyError> {
    use gpl::{f, t, v, U};
    at_least("p", p, 1)?;
    at_least("l", l, 1)?;
    let n = 6 + p + l;
    let mut edges = vec![(v(0), v(1)), (v(1), v(2)), (v(1), v(3)), (v(2), v(4))];
    if matches!(edge, EdgeChoice::V2V3 | EdgeChoice::Both) {
        edges.push((v(2), v(3)));
    }
    if matches!(edge, EdgeChoice::V3V4 | EdgeChoice::Both) {
        edges.push((v(3), v(4)));
    }
    edges.extend((1..n).filter(|&x| x != v(0)).map(|x| (U, x)));
    for a in t(p) {
        edges.extend((a + 1..t(p).end).map(|b| (a, b)));
        edges.extend(f(p, l).map(|b| (a, b)));
        edges.extend([v(1), v(3)].map(|b| (b, a)));
    }
    Ok(Graph::from_edges(n, &edges).expect("layout edges are distinct"))
}

/// `G_{p, ceil(p/2)}` with the `v2v3` edge.
pub fn family_member_of_g_cal(p: usize) -> Result<Graph, FamilyError> {
    at_least("p", p, 3)?;
    gen_g_pl(p, p.div_ceil(2), EdgeChoice::V2V3)
}

/// `{v_0..v_4}` against everything else, a 2-community structure of the
/// variant with both dotted edges.
pub fn g_pl_both_witness(p: usize, l: usize) -> Partition {
    let n = 6 + p + l;
    let assign = (0..n)
        .map(|x| usize::from(!(gpl::v(0)..=gpl::v(4)).contains(&x)))
        .collect();
    Partition::new(assign, 2).expect("both sides nonempty")
}

/// `{u, v_2, v_4}` against everything else, a 2-community structure of
/// the variant with neither dotted edge.
pub fn g_pl_neither_witness(p: usize, l: usize) -> Partition {
    let n = 6 + p + l;
    let assign = (0..n)
        .map(|x| usize::from(![gpl::U, gpl::v(2), gpl::v(4)].contains(&x)))
        .collect();
    Partition::new(assign, 2).expect("both sides nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, twin_classes, TwinKind};
    use crate::verifier::{verify_partition, Mode};

    #[test]
    fn stars() {
        let s = gen_star(3).unwrap();
        assert_eq!((s.n(), s.m()), (4, 3));
        let s = gen_star(1).unwrap();
        assert_eq!((s.n(), s.m()), (2, 1));
        assert_eq!(gen_star(5).unwrap().degree(0), 5);
        assert!(classify(&gen_star(5).unwrap()).is_star);
        assert!(gen_star(0).is_err());
    }

    #[test]
    fn g_abs_layout() {
        let h = gen_g_abs(1, 1, 1).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(h.degree(3), 0);

        let h = gen_g_abs(2, 1, 2).unwrap();
        assert_eq!(h.degree(0), 4);
        assert_eq!(h.degree(1), 4);
        assert_eq!(h.degree(2), 2);
        assert!(g_abs_excluded(1, 1, 1));
        assert!(!g_abs_excluded(1, 2, 1));
        assert_eq!(
            gen_g_abs(0, 1, 1),
            Err(FamilyError::ParamTooSmall {
                name: "a",
                value: 0,
                min: 1
            })
        );
    }

    #[test]
    fn g_pl_layout() {
        let h = gen_g_pl(3, 2, EdgeChoice::V2V3).unwrap();
        assert_eq!(h.n(), 11);
        assert!(!h.has_edge(gpl::U, gpl::v(0)));
        assert!(h.has_edge(gpl::v(2), gpl::v(3)));
        assert!(!h.has_edge(gpl::v(3), gpl::v(4)));
        let trues = twin_classes(&h, TwinKind::True);
        assert!(trues.iter().any(|c| c.as_slice() == [6, 7, 8]));
        let falses = twin_classes(&h, TwinKind::False);
        assert!(falses.iter().any(|c| c.as_slice() == [9, 10]));

        let h = gen_g_pl(3, 2, EdgeChoice::V3V4).unwrap();
        assert!(h.has_edge(gpl::v(3), gpl::v(4)) && !h.has_edge(gpl::v(2), gpl::v(3)));
        assert_eq!("both".parse::<EdgeChoice>(), Ok(EdgeChoice::Both));
        assert!("v1v2".parse::<EdgeChoice>().is_err());
        assert_eq!(EdgeChoice::Neither.to_string(), "neither");
    }

    #[test]
    fn g_cal_sizes() {
        assert_eq!(family_member_of_g_cal(3).unwrap().n(), 11);
        assert_eq!(family_member_of_g_cal(4).unwrap().n(), 12);
        assert_eq!(family_member_of_g_cal(5).unwrap().n(), 14);
        assert_eq!(family_member_of_g_cal(7).unwrap().n(), 17);
        assert!(family_member_of_g_cal(2).is_err());
    }

    #[test]
    fn variant_witnesses() {
        for p in 3usize..=7 {
            let l = p.div_ceil(2);
            let h = gen_g_pl(p, l, EdgeChoice::Both).unwrap();
            let w = g_pl_both_witness(p, l);
            assert!(
                verify_partition(&h, &w, Mode::strict()).unwrap().valid,
                "p={p}"
            );
            let h = gen_g_pl(p, l, EdgeChoice::Neither).unwrap();
            let w = g_pl_neither_witness(p, l);
            assert!(
                verify_partition(&h, &w, Mode::strict()).unwrap().valid,
                "p={p}"
            );
        }
        assert_eq!(
            g_pl_neither_witness(3, 2).assignment(),
            &[0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1]
        );
    }
}
