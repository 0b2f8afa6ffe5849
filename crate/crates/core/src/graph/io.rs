//! Plain-text graph format.
//!
//! ```text
//! # comment
//! 4 5
//! # @cycle outer 0 1 2 3
//! 0 1 3
//! 1 2 -1
//! ...
//! ```
//!
//! The first non-comment line holds `n m`; each of the next `m` lines holds
//! `u v` or `u v w`. Weights are either present on every edge or on none.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub weights: Option<Vec<i64>>,
    /// `# @cycle <name> <nodes...>` annotations.
    pub cycles: Vec<(String, Vec<usize>)>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile {
            graph,
            weights: None,
            cycles: Vec::new(),
        }
    }

    /// Weights, defaulting to 1 on every edge.
    pub fn weights_or_unit(&self) -> Vec<i64> {
        self.weights
            .clone()
            .unwrap_or_else(|| vec![1; self.graph.edge_count()])
    }

    pub fn cycle(&self, name: &str) -> Option<&[usize]> {
        self.cycles
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.as_slice())
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a number, found {tok:?}")))
}

pub fn parse_graph_text(text: &str) -> Result<GraphFile> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs = Vec::new();
    let mut weights: Vec<Option<i64>> = Vec::new();
    let mut cycles = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix('#') {
            let mut toks = rest.split_whitespace();
            if toks.next() == Some("@cycle") {
                let name = toks
                    .next()
                    .ok_or_else(|| parse_err(lineno, "@cycle needs a name"))?;
                let nodes = toks.map(|t| num(t, lineno)).collect::<Result<Vec<usize>>>()?;
                cycles.push((name.to_string(), nodes));
            }
            continue;
        }
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if toks.len() != 2 {
                    return Err(parse_err(lineno, "header must be `n m`"));
                }
                header = Some((num(toks[0], lineno)?, num(toks[1], lineno)?));
            }
            Some((_, m)) => {
                if pairs.len() == m {
                    return Err(parse_err(lineno, format!("more than {m} edge lines")));
                }
                if !(2..=3).contains(&toks.len()) {
                    return Err(parse_err(lineno, "edge line must be `u v` or `u v w`"));
                }
                pairs.push((num(toks[0], lineno)?, num(toks[1], lineno)?));
                weights.push(toks.get(2).map(|t| num(t, lineno)).transpose()?);
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    if pairs.len() != m {
        return Err(parse_err(0, format!("expected {m} edges, found {}", pairs.len())));
    }
    let weighted = weights.iter().filter(|w| w.is_some()).count();
    let weights = match weighted {
        0 => None,
        k if k == m => Some(weights.into_iter().map(|w| w.expect("checked")).collect()),
        _ => return Err(parse_err(0, "weights must be given on every edge or on none")),
    };
    let graph = Graph::new(n, &pairs)?;
    for (name, c) in &cycles {
        super::cycle_edges(&graph, c)
            .map_err(|e| parse_err(0, format!("cycle {name:?}: {e}")))?;
    }
    Ok(GraphFile {
        graph,
        weights,
        cycles,
    })
}

pub fn write_graph_text(file: &GraphFile) -> String {
    let g = &file.graph;
    let mut out = format!("{} {}\n", g.node_count(), g.edge_count());
    for (name, c) in &file.cycles {
        let nodes: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "# @cycle {name} {}", nodes.join(" "));
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        match &file.weights {
            Some(w) => {
                let _ = writeln!(out, "{u} {v} {}", w[i]);
            }
            None => {
                let _ = writeln!(out, "{u} {v}");
            }
        }
    }
    out
}
