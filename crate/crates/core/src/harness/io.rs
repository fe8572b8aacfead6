//! Plain-text graph files.
//!
//! ```text
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! w i value  (optional, default weight 1)
//! ```
//!
//! Blank lines are ignored; anything else is an error.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Weights};
use crate::harness::Instance;

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found `{tok}`"),
    })
}

pub fn parse_instance(text: &str, name: &str) -> Result<Instance<u64>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    if header.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: "header must be `n m`".into(),
        });
    }
    let n: usize = parse_num(header[0], hline, "vertex count")?;
    let m: usize = parse_num(header[1], hline, "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut weights = vec![1u64; n];
    for (line, toks) in lines {
        match toks.as_slice() {
            ["w", i, value] => {
                let i: usize = parse_num(i, line, "vertex")?;
                if i >= n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex {i} out of range"),
                    });
                }
                weights[i] = parse_num(value, line, "weight")?;
            }
            [u, v] => {
                let (u, v): (usize, usize) = (parse_num(u, line, "vertex")?, parse_num(v, line, "vertex")?);
                if u >= v || v >= n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("edge `{u} {v}` must satisfy u < v < n"),
                    });
                }
                if edges.contains(&(u, v)) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("duplicate edge `{u} {v}`"),
                    });
                }
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unrecognized line `{}`", toks.join(" ")),
                })
            }
        }
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    Ok(Instance {
        graph: Graph::from_edges(n, edges)?,
        weights: Weights::new(weights)?,
        name: name.to_string(),
    })
}

/// Inverse of [`parse_instance`]; unit weights are omitted.
pub fn write_instance(inst: &Instance<u64>) -> String {
    let g = &inst.graph;
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    for (i, &w) in inst.weights.as_slice().iter().enumerate() {
        if w != 1 {
            writeln!(out, "w {i} {w}").unwrap();
        }
    }
    out
}
