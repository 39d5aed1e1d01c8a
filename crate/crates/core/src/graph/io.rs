//! Edge-list text format.
//!
//! ```text
//! # optional comment lines, anywhere
//! n m
//! u v      (exactly m lines, 0 <= u, v < n, u != v)
//! ```
//!
//! Every line, including the last, is terminated by `\n`. Fields are
//! separated by a single space. Duplicate edges in either orientation are
//! rejected.

use super::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is empty")]
    Empty,
    #[error("input is not ASCII text")]
    NotText,
    #[error("input must end with a newline")]
    MissingTrailingNewline,
    #[error("line {line}: expected header \"n m\"")]
    BadHeader { line: usize },
    #[error("line {line}: expected edge \"u v\"")]
    BadEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

/// Parses a strict decimal field: ASCII digits only, no sign, no padding.
fn field(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn pair(line: &str) -> Option<(usize, usize)> {
    let (a, b) = line.split_once(' ')?;
    Some((field(a)?, field(b)?))
}

pub fn parse_graph(bytes: &[u8]) -> Result<Graph, ParseError> {
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if !bytes.is_ascii() {
        return Err(ParseError::NotText);
    }
    // ASCII is valid UTF-8.
    let text = std::str::from_utf8(bytes).map_err(|_| ParseError::NotText)?;
    let body = text
        .strip_suffix('\n')
        .ok_or(ParseError::MissingTrailingNewline)?;

    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    for (idx, line) in body.split('\n').enumerate() {
        let lineno = idx + 1;
        if line.starts_with('#') {
            continue;
        }
        match header {
            None => header = Some(pair(line).ok_or(ParseError::BadHeader { line: lineno })?),
            Some((n, _)) => {
                let (u, v) = pair(line).ok_or(ParseError::BadEdge { line: lineno })?;
                for w in [u, v] {
                    if w >= n {
                        return Err(ParseError::VertexOutOfRange {
                            line: lineno,
                            vertex: w,
                            n,
                        });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop {
                        line: lineno,
                        vertex: u,
                    });
                }
                edges.push((u, v));
                edge_lines.push(lineno);
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::BadHeader { line: 1 })?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edges(n, &edges).map_err(|e| match e {
        GraphError::DuplicateEdge(u, v) => {
            // Report the second occurrence.
            let line = edges
                .iter()
                .zip(&edge_lines)
                .filter(|(&(a, b), _)| (a.min(b), a.max(b)) == (u, v))
                .nth(1)
                .map_or(0, |(_, &l)| l);
            ParseError::DuplicateEdge { line, u, v }
        }
        // Range and loop checks already ran above.
        _ => unreachable!("unexpected graph construction error: {e}"),
    })
}

/// Canonical form: header, then edges `u v` with `u < v` in lexicographic
/// order, no comments.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_path() {
        let g = parse_graph(b"4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn parses_single_vertex() {
        let g = parse_graph(b"1 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn comments_anywhere() {
        let g = parse_graph(b"# head\n3 2\n# mid\n0 1\n1 2\n# tail\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            parse_graph(b"3 1\n0 0\n"),
            Err(ParseError::SelfLoop { line: 2, vertex: 0 })
        );
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(parse_graph(b""), Err(ParseError::Empty));
        assert_eq!(
            parse_graph(b"2 1\n0 1"),
            Err(ParseError::MissingTrailingNewline)
        );
        assert_eq!(parse_graph(b"2\n"), Err(ParseError::BadHeader { line: 1 }));
        assert_eq!(
            parse_graph(b"2 1\n0  1\n"),
            Err(ParseError::BadEdge { line: 2 })
        );
        assert_eq!(
            parse_graph(b"2 1\n0 -1\n"),
            Err(ParseError::BadEdge { line: 2 })
        );
        assert_eq!(
            parse_graph(b"2 1\n0 2\n"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 2,
                n: 2
            })
        );
        assert_eq!(
            parse_graph(b"3 2\n0 1\n"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph(b"3 2\n0 1\n1 0\n"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            parse_graph(b"3 1\n\n0 1\n"),
            Err(ParseError::BadEdge { line: 2 })
        );
    }

    fn canonical_text() -> impl Strategy<Value = String> {
        (1usize..9).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&mask)
                    .filter_map(|(&e, &b)| b.then_some(e))
                    .collect();
                let mut s = format!("{} {}\n", n, edges.len());
                for (u, v) in edges {
                    s.push_str(&format!("{u} {v}\n"));
                }
                s
            })
        })
    }

    proptest! {
        #[test]
        fn canonical_files_round_trip(text in canonical_text()) {
            let g = parse_graph(text.as_bytes()).unwrap();
            prop_assert_eq!(write_graph(&g), text);
        }
    }
}
