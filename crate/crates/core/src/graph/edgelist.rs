//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//! Lines starting with `#` and blank lines are ignored.

use super::{Graph, GraphBuilder, GraphError};

/// Result of parsing an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    /// Number of edge lines that repeated an earlier edge.
    pub duplicates: usize,
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize), GraphError> {
    let mut it = line.split_whitespace();
    let mut field = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Parse {
            line: line_no,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Parse {
            line: line_no,
            message: format!("{what} {tok:?} is not a non-negative integer"),
        })
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if let Some(extra) = it.next() {
        return Err(GraphError::Parse {
            line: line_no,
            message: format!("unexpected trailing token {extra:?}"),
        });
    }
    Ok((a, b))
}

pub(super) fn parse(text: &str) -> Result<ParsedEdgeList, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, declared) = parse_pair(header, header_line)?;
    let mut builder = GraphBuilder::new(n)?;
    let mut seen = 0usize;
    let mut duplicates = 0usize;
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        let (u, v) = parse_pair(line, line_no)?;
        seen += 1;
        if seen > declared {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("more than the declared {declared} edges"),
            });
        }
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        if !builder.add_edge(u, v)? {
            duplicates += 1;
        }
    }
    if seen < declared {
        return Err(GraphError::Parse {
            line: last_line,
            message: format!("declared {declared} edges but found {seen}"),
        });
    }
    Ok(ParsedEdgeList {
        graph: builder.build(),
        duplicates,
    })
}

pub(super) fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_list() {
        let p = Graph::parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!((p.graph.n(), p.graph.m(), p.duplicates), (4, 4, 0));
        assert!(p.graph.has_edge(0, 3));
    }

    #[test]
    fn single_edge() {
        let p = Graph::parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!((p.graph.n(), p.graph.m()), (2, 1));
    }

    #[test]
    fn duplicates_collapse() {
        let p = Graph::parse_edge_list("3 3\n0 1\n0 1\n1 2\n").unwrap();
        assert_eq!((p.graph.m(), p.duplicates), (2, 1));
        let p = Graph::parse_edge_list("3 2\n0 1\n1 0\n").unwrap();
        assert_eq!((p.graph.m(), p.duplicates), (1, 1));
    }

    #[test]
    fn comments_skipped() {
        let p = Graph::parse_edge_list("# a path\n3 2\n# first\n0 1\n\n1 2\n").unwrap();
        assert_eq!(p.graph.m(), 2);
    }

    #[test]
    fn error_paths() {
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n1 x\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 3\n"),
            Err(GraphError::VertexRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Graph::parse_edge_list("3 1\n1 1\n"), Err(GraphError::Loop { vertex: 1 })));
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1 7\n0 1\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(Graph::parse_edge_list("# nothing\n").is_err());
    }

    #[test]
    fn write_then_parse() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 2), (2, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "5 3\n0 4\n1 2\n2 3\n");
        assert_eq!(Graph::parse_edge_list(&text).unwrap().graph, g);
    }
}
