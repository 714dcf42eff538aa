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

//! Swap plans and their text form:
//!
//! ```text
//! init 0:4 1:5 2:6 3:10
//! swap 6 10
//! swap 5 6
//! ```

use std::fmt::{self, Write};

use thiserror::Error;

use super::{Placement, PlacementError};
use crate::coupling::Node;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Placement(#[from] PlacementError),
}

/// An initial placement followed by edge swaps, applied in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapPlan {
    pub initial: Placement,
    pub swaps: Vec<(Node, Node)>,
}

impl SwapPlan {
    pub fn new(initial: Placement, swaps: Vec<(Node, Node)>) -> Self {
        SwapPlan { initial, swaps }
    }

    /// SWAP gates in the plan.
    pub fn len(&self) -> usize {
        self.swaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.swaps.is_empty()
    }

    /// Parses a plan whose placement targets a graph with `num_nodes` nodes.
    pub fn parse(text: &str, num_nodes: usize) -> Result<Self, PlanError> {
        let perr = |line: usize, message: String| PlanError::Parse { line, message };
        let mut initial: Option<Vec<(usize, u32)>> = None;
        let mut swaps = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut toks = content.split_whitespace();
            match toks.next() {
                Some("init") => {
                    if initial.is_some() {
                        return Err(perr(line, "repeated `init` line".into()));
                    }
                    let mut pairs = Vec::new();
                    for tok in toks {
                        let parsed = tok
                            .split_once(':')
                            .and_then(|(q, n)| Some((q.parse::<usize>().ok()?, n.parse::<u32>().ok()?)));
                        pairs.push(parsed.ok_or_else(|| perr(line, format!("bad assignment {tok:?}")))?);
                    }
                    initial = Some(pairs);
                }
                Some("swap") => {
                    if initial.is_none() {
                        return Err(perr(line, "`swap` before `init`".into()));
                    }
                    let rest: Vec<&str> = toks.collect();
                    let [a, b] = rest.as_slice() else {
                        return Err(perr(line, "expected `swap <a> <b>`".into()));
                    };
                    let node = |t: &str| t.parse::<u32>().map(Node).map_err(|_| perr(line, format!("bad node {t:?}")));
                    swaps.push((node(a)?, node(b)?));
                }
                Some(other) => return Err(perr(line, format!("unknown directive {other:?}"))),
                None => unreachable!(),
            }
        }
        let mut pairs = initial.ok_or_else(|| perr(1, "missing `init` line".into()))?;
        pairs.sort_unstable();
        let mut nodes = Vec::with_capacity(pairs.len());
        for (expected, (q, n)) in pairs.into_iter().enumerate() {
            if q != expected {
                return Err(perr(1, format!("init must assign qubits 0..n exactly once; missing {expected}")));
            }
            nodes.push(Node(n));
        }
        Ok(SwapPlan { initial: Placement::new(nodes, num_nodes)?, swaps })
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SwapPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut line = String::from("init");
        for (q, n) in self.initial.nodes().iter().enumerate() {
            write!(line, " {q}:{n}")?;
        }
        writeln!(f, "{line}")?;
        for (a, b) in &self.swaps {
            writeln!(f, "swap {a} {b}")?;
        }
        Ok(())
    }
}
