use super::{Graph, Vertex};
use crate::error::{Error, Result};
use std::fmt::Write;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses DIMACS edge format (1-based ids).
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match tok.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(perr(lno, "duplicate p-line"));
                }
                if tok.next() != Some("edge") {
                    return Err(perr(lno, "expected 'p edge n m'"));
                }
                let nv = parse_num(tok.next(), lno)?;
                let _m = parse_num(tok.next(), lno)?;
                if tok.next().is_some() {
                    return Err(perr(lno, "trailing tokens on p-line"));
                }
                n = Some(nv);
            }
            Some("e") => {
                let nv = n.ok_or_else(|| perr(lno, "edge before p-line"))?;
                let u = parse_num(tok.next(), lno)?;
                let v = parse_num(tok.next(), lno)?;
                if tok.next().is_some() {
                    return Err(perr(lno, "trailing tokens on e-line"));
                }
                for x in [u, v] {
                    if x == 0 || x > nv {
                        return Err(Error::VertexOutOfRange(x));
                    }
                }
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(perr(lno, format!("unknown line type '{other}'"))),
            None => unreachable!(),
        }
    }
    let n = n.ok_or_else(|| perr(0, "missing p-line"))?;
    Graph::from_edges(n, &edges)
}

fn parse_num(tok: Option<&str>, lno: usize) -> Result<usize> {
    let t = tok.ok_or_else(|| perr(lno, "missing number"))?;
    t.parse()
        .map_err(|_| perr(lno, format!("bad number '{t}'")))
}

/// Writes "p edge n m" followed by sorted 1-based "e u v" lines with u < v.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        let g = parse_dimacs("p edge 2 1\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(parse_dimacs("p edge 2 1\ne 1 1\n"), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("c only comment\n").is_err());
        assert!(parse_dimacs("p edge 2 1\np edge 2 1\n").is_err());
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(Error::VertexOutOfRange(3))
        );
        assert!(parse_dimacs("p edge 2 1\ne 1 x\n").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_dimacs("c hello\n\np edge 3 1\nc mid\ne 3 1\n").unwrap();
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn writer_sorted() {
        let g = Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(write_dimacs(&g), "p edge 3 2\ne 1 2\ne 2 3\n");
    }
}
