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

use sha2::{Digest, Sha256};

use super::GadgetError;
use crate::circuit::Circuit;
use crate::coupling::CouplingGraph;

/// A QCM instance `(circuit, graph, budget)` built by a named construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub circuit: Circuit,
    pub graph: CouplingGraph,
    pub budget: usize,
    pub construction: String,
    /// SHA-256 of the source instance, hex.
    pub source_digest: String,
}

impl ReductionInstance {
    pub(super) fn new(circuit: Circuit, graph: CouplingGraph, budget: usize, construction: &str, source: &str) -> Self {
        let digest = Sha256::digest(format!("{construction}\n{source}").as_bytes());
        ReductionInstance {
            circuit,
            graph,
            budget,
            construction: construction.to_string(),
            source_digest: format!("{digest:x}"),
        }
    }

    /// `budget <k> construction <name> source <digest>`
    pub fn header_line(&self) -> String {
        format!("budget {} construction {} source {}\n", self.budget, self.construction, self.source_digest)
    }

    /// Reassembles an instance from its circuit, graph and header texts.
    pub fn from_texts(circuit: &str, graph: &str, header: &str) -> Result<Self, GadgetError> {
        let (budget, construction, source_digest) = parse_header(header)?;
        Ok(ReductionInstance {
            circuit: Circuit::parse(circuit)?,
            graph: CouplingGraph::parse(graph)?,
            budget,
            construction,
            source_digest,
        })
    }
}

/// `(budget, construction, digest)` from the first non-comment line.
pub fn parse_header(text: &str) -> Result<(usize, String, String), GadgetError> {
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: &str| GadgetError::Parse { line: idx + 1, message: message.to_string() };
        let toks: Vec<&str> = content.split_whitespace().collect();
        let ["budget", k, "construction", name, "source", digest] = toks.as_slice() else {
            return Err(err("expected `budget <k> construction <name> source <digest>`"));
        };
        let budget = k.parse().map_err(|_| err("budget is not a count"))?;
        return Ok((budget, name.to_string(), digest.to_string()));
    }
    Err(GadgetError::Parse { line: 1, message: "missing header line".into() })
}
