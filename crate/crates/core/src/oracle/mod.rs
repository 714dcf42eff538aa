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

//! Independent ground truth for the mapper and the reductions.
//!
//! Nothing here reuses the mapper's reduce, frontier or minimization code:
//! executability is re-derived from gate order on each qubit line, so
//! agreement between the two is meaningful.

mod brute;
mod graphs;
mod verify;

use thiserror::Error;

pub use brute::{brute_force_g, brute_force_g_with, BruteLimits};
pub use graphs::{directed_reachable, ham_cycle, ham_path, max_clique_at_least, shortest_path, GRAPH_ORACLE_LIMIT};
pub use verify::{verify_plan, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {value}, above the oracle limit of {limit}")]
    GuardExceeded { what: &'static str, value: usize, limit: usize },
    #[error(transparent)]
    Placement(#[from] crate::mapper::PlacementError),
    #[error("swap {step} uses ({a}, {b}), which is not a coupling edge")]
    InvalidSwap { step: usize, a: u32, b: u32 },
}

/// Whether gate `i` may run: every earlier gate sharing a qubit with it has
/// run, and a two-qubit gate's operands sit on adjacent nodes.
fn executable(
    circuit: &crate::circuit::Circuit,
    done: &[bool],
    i: usize,
    adjacent: impl Fn(usize, usize) -> bool,
) -> bool {
    let gate = &circuit.gates()[i];
    let qubits: Vec<usize> = gate.qubits().map(|q| q.index()).collect();
    let blocked = circuit.gates()[..i]
        .iter()
        .enumerate()
        .any(|(j, earlier)| !done[j] && earlier.qubits().any(|q| qubits.contains(&q.index())));
    !blocked && (qubits.len() == 1 || adjacent(qubits[0], qubits[1]))
}
