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

use std::collections::{HashMap, VecDeque};

use super::{executable, OracleError};
use crate::circuit::Circuit;
use crate::coupling::CouplingGraph;
use crate::mapper::Cost;

/// Instance-size guards; the state space is `b!/(b-n)! * 2^gates`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteLimits {
    pub max_qubits: usize,
    pub max_nodes: usize,
    /// All gates, single-qubit ones included. At most 64.
    pub max_gates: usize,
    pub strict_swaps: bool,
}

impl Default for BruteLimits {
    fn default() -> Self {
        BruteLimits { max_qubits: 4, max_nodes: 5, max_gates: 8, strict_swaps: false }
    }
}

pub fn brute_force_g(circuit: &Circuit, graph: &CouplingGraph) -> Result<Cost, OracleError> {
    brute_force_g_with(circuit, graph, &BruteLimits::default())
}

/// 0-1 breadth-first search over `(placement, executed gates)`: running one
/// executable gate costs 0, swapping along an edge costs 1, starting from
/// every injective placement with nothing executed.
pub fn brute_force_g_with(circuit: &Circuit, graph: &CouplingGraph, limits: &BruteLimits) -> Result<Cost, OracleError> {
    let (n, b, m) = (circuit.num_qubits(), graph.num_nodes(), circuit.len());
    let guard = |what, value, limit| {
        if value > limit {
            Err(OracleError::GuardExceeded { what, value, limit })
        } else {
            Ok(())
        }
    };
    guard("qubit count", n, limits.max_qubits)?;
    guard("node count", b, limits.max_nodes)?;
    guard("gate count", m, limits.max_gates.min(64))?;
    if n > b {
        return Ok(Cost::Infinite);
    }
    let all: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };

    let mut dist: HashMap<(Vec<usize>, u64), usize> = HashMap::new();
    let mut queue: VecDeque<(Vec<usize>, u64)> = VecDeque::new();
    for start in injections(n, b) {
        dist.insert((start.clone(), 0), 0);
        queue.push_back((start, 0));
    }
    while let Some(state) = queue.pop_front() {
        let d = dist[&state];
        let (node_of, done_mask) = &state;
        if *done_mask == all {
            return Ok(Cost::Finite(d));
        }
        let done: Vec<bool> = (0..m).map(|i| done_mask >> i & 1 == 1).collect();
        let adjacent = |x: usize, y: usize| graph.graph().has_edge(node_of[x], node_of[y]);
        for i in 0..m {
            if !done[i] && executable(circuit, &done, i, adjacent) {
                let next = (node_of.clone(), done_mask | 1 << i);
                if dist.get(&next).is_none_or(|&old| old > d) {
                    dist.insert(next.clone(), d);
                    queue.push_front(next);
                }
            }
        }
        for &(x, y) in graph.edges() {
            let mut moved = node_of.clone();
            let mut hits = 0;
            for v in moved.iter_mut() {
                if *v == x {
                    *v = y;
                    hits += 1;
                } else if *v == y {
                    *v = x;
                    hits += 1;
                }
            }
            if limits.strict_swaps && hits < 2 {
                continue;
            }
            let next = (moved, *done_mask);
            if dist.get(&next).is_none_or(|&old| old > d + 1) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    Ok(Cost::Infinite)
}

fn injections(n: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut longer = Vec::new();
        for p in &out {
            for v in (0..b).filter(|v| !p.contains(v)) {
                let mut q = p.clone();
                q.push(v);
                longer.push(q);
            }
        }
        out = longer;
    }
    out
}
