//! Edge-list text files.
//!
//! ```text
//! # comment
//! n 4
//! 1 3
//! 1 4
//! ```

use super::{Graph, GraphError};

fn bad(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::MalformedEdgeList { line, reason: reason.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(bad(line_no, "expected header `n <count>`"));
                }
                let count = fields[1]
                    .parse()
                    .map_err(|_| bad(line_no, format!("bad vertex count `{}`", fields[1])))?;
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(bad(line_no, "expected `i j`"));
                }
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| bad(line_no, format!("bad vertex `{s}`")))
                };
                let (i, j) = (parse(fields[0])?, parse(fields[1])?);
                if i < 1 || j < 1 || i > count || j > count {
                    return Err(bad(line_no, format!("vertex out of range 1..={count}")));
                }
                if i == j {
                    return Err(bad(line_no, format!("loop at vertex {i}")));
                }
                pairs.push((i, j));
            }
        }
    }
    let n = n.ok_or_else(|| bad(0, "missing `n <count>` header"))?;
    Graph::from_edge_list(n, pairs)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
