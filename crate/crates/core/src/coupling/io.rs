// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fmt::Write;

use super::{Graph, GraphError};

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse { line, message: message.into() }
}

fn number(line: usize, tok: Option<&str>, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

pub(super) fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut num_nodes = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        match toks.next() {
            Some("nodes") => {
                if num_nodes.is_some() {
                    return Err(parse_err(line, "repeated `nodes` header"));
                }
                num_nodes = Some(number(line, toks.next(), "node count")?);
            }
            Some("edge") => {
                let n = num_nodes.ok_or_else(|| parse_err(line, "`edge` before `nodes` header"))?;
                let a = number(line, toks.next(), "endpoint")?;
                let b = number(line, toks.next(), "endpoint")?;
                if a >= n || b >= n {
                    return Err(parse_err(line, format!("edge ({a}, {b}) outside 0..{n}")));
                }
                edges.push((line, a, b));
            }
            Some(other) => return Err(parse_err(line, format!("unknown directive {other:?}"))),
            None => unreachable!(),
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected token {extra:?}")));
        }
    }
    let n = num_nodes.ok_or_else(|| parse_err(1, "missing `nodes` header"))?;
    // Re-validate edge by edge so duplicate/self-loop errors carry the line.
    let mut seen = std::collections::HashSet::new();
    for &(line, a, b) in &edges {
        if a == b {
            return Err(parse_err(line, format!("self-loop on node {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(parse_err(line, format!("duplicate edge ({a}, {b})")));
        }
    }
    Graph::new(n, edges.into_iter().map(|(_, a, b)| (a, b)))
}

pub(super) fn format_graph(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "nodes {}", graph.num_nodes()).unwrap();
    for &(a, b) in graph.edges() {
        writeln!(out, "edge {a} {b}").unwrap();
    }
    out
}
