//! Text formats: graphs (`n <count>` header, one `u v` edge per line) and
//! weight files (one "u v w" triple per line, covering every edge exactly
//! once). `#` starts a comment; parse failures carry line numbers.

use crate::error::{Error, Result};
use crate::graph::{Graph, WeightFunction};

fn content_of(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => line[..pos].trim(),
        None => line.trim(),
    }
}

fn parse_fields<const K: usize>(line: &str, lineno: usize, what: &str) -> Result<[usize; K]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != K {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("expected {what}, got {} fields", fields.len()),
        });
    }
    let mut out = [0usize; K];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("'{field}' is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content_of(l)))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty graph file".into(),
    })?;
    let mut parts = header.split_whitespace();
    let n = match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("'{count}' is not a vertex count"),
        })?,
        _ => {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected header 'n <count>'".into(),
            })
        }
    };
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let [u, v] = parse_fields::<2>(line, lineno, "an edge 'u v'")?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("bad edge {u} {v} for n={n}"),
            });
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_weights(text: &str, g: &Graph) -> Result<WeightFunction> {
    let mut triples = Vec::new();
    for (lineno, line) in text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content_of(l)))
        .filter(|(_, l)| !l.is_empty())
    {
        let [u, v, w] = parse_fields::<3>(line, lineno, "a weighted edge 'u v w'")?;
        if g.edge_index(u, v).is_none() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("{{{u},{v}}} is not an edge of the graph"),
            });
        }
        if w == 0 {
            return Err(Error::Parse {
                line: lineno,
                msg: "weights must be positive".into(),
            });
        }
        triples.push((u, v, w as u32));
    }
    WeightFunction::from_triples(g, &triples)
}

pub fn write_weights(g: &Graph, w: &WeightFunction) -> String {
    let mut out = String::new();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        out.push_str(&format!("{u} {v} {}\n", w.get(i)));
    }
    out
}
