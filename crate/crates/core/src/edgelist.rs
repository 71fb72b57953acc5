//! Plain edge-list text: a header line `n m`, then `m` lines `u v` with
//! 0-based vertices. Blank lines and lines starting with `#` are skipped.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, EdgeListError> {
        let tok = it.next().ok_or_else(|| EdgeListError::Syntax {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| EdgeListError::Syntax {
            line,
            msg: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(EdgeListError::Syntax {
            line,
            msg: "trailing tokens".into(),
        });
    }
    Ok(pair)
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(hline, header)?;
    let edges = lines
        .map(|(i, l)| parse_pair(i, l))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let g = parse("4 3\n0 1\n1 2\n# comment\n2 3\n").unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(write(&g), "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse(&write(&g)).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(parse(""), Err(EdgeListError::MissingHeader));
        assert!(matches!(
            parse("3 1\n0 x\n"),
            Err(EdgeListError::Syntax { line: 2, .. })
        ));
        assert_eq!(
            parse("3 2\n0 1\n"),
            Err(EdgeListError::EdgeCount {
                declared: 2,
                found: 1
            })
        );
        assert_eq!(
            parse("3 1\n1 1\n"),
            Err(EdgeListError::Graph(GraphError::SelfLoop(1)))
        );
    }
}
