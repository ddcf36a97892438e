//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut rows =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = rows.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line, row) in rows {
        pairs.push(parse_pair(line, row).map(|[u, v]| (u, v))?);
    }
    if pairs.len() != m {
        return Err(Error::Parse { line: hline, msg: format!("header announces {m} edges, found {}", pairs.len()) });
    }
    Graph::new(n, &pairs).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
}

fn parse_pair(line: usize, row: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = row.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line, msg: format!("expected two integers, got {row:?}") });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f.parse().map_err(|_| Error::Parse { line, msg: format!("not a nonnegative integer: {f:?}") })?;
    }
    Ok(out)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_graph("# c4\n4 4\n0 1\n1 2\n\n# mid\n2 3\n3 0\n").unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.endpoints(3), (0, 3));
        assert_eq!(write_graph(&g), "4 4\n0 1\n1 2\n2 3\n0 3\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n1 1\n"), Err(Error::Parse { .. })));
    }
}
