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

use super::{executable, OracleError};
use crate::circuit::Circuit;
use crate::coupling::CouplingGraph;
use crate::mapper::SwapPlan;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// Every gate ran by the end of the plan.
    pub accepted: bool,
    /// Swaps applied before the last gate ran; the full plan length when
    /// rejected.
    pub swaps_used: usize,
    /// `(step, reason)` for a rejected plan; step is the number of swaps
    /// applied.
    pub failure: Option<(usize, String)>,
}

/// Runs every executable gate, repeatedly, under the current placement.
fn run_all(circuit: &Circuit, graph: &CouplingGraph, node_of: &[usize], done: &mut [bool]) {
    let adjacent = |a: usize, b: usize| graph.graph().has_edge(node_of[a], node_of[b]);
    loop {
        let mut progressed = false;
        for i in 0..circuit.len() {
            if !done[i] && executable(circuit, done, i, adjacent) {
                done[i] = true;
                progressed = true;
            }
        }
        if !progressed {
            return;
        }
    }
}

/// Simulates `plan`: run what can run, then after each swap run again.
/// Accepts once no gate is left, at or before the end of the plan.
pub fn verify_plan(
    circuit: &Circuit,
    graph: &CouplingGraph,
    plan: &SwapPlan,
) -> Result<VerificationReport, OracleError> {
    plan.initial.check_shape(circuit.num_qubits(), graph.num_nodes())?;
    for (step, &(a, b)) in plan.swaps.iter().enumerate() {
        if a.index() >= graph.num_nodes() || b.index() >= graph.num_nodes() || !graph.has_edge(a, b) {
            return Err(OracleError::InvalidSwap { step, a: a.0, b: b.0 });
        }
    }
    let mut node_of: Vec<usize> = plan.initial.nodes().iter().map(|n| n.index()).collect();
    let mut done = vec![false; circuit.len()];
    run_all(circuit, graph, &node_of, &mut done);
    let mut used = 0;
    for &(a, b) in &plan.swaps {
        if done.iter().all(|&d| d) {
            break;
        }
        for v in node_of.iter_mut() {
            if *v == a.index() {
                *v = b.index();
            } else if *v == b.index() {
                *v = a.index();
            }
        }
        used += 1;
        run_all(circuit, graph, &node_of, &mut done);
    }
    if done.iter().all(|&d| d) {
        return Ok(VerificationReport { accepted: true, swaps_used: used, failure: None });
    }
    let left = done.iter().filter(|&&d| !d).count();
    let first = done.iter().position(|&d| !d).unwrap();
    let gate = &circuit.gates()[first];
    let operands: Vec<String> = gate.qubits().map(|q| format!("q{}@{}", q, node_of[q.index()])).collect();
    Ok(VerificationReport {
        accepted: false,
        swaps_used: plan.len(),
        failure: Some((
            plan.len(),
            format!("{left} gates left; gate {first} ({}) on {} cannot run", gate.label(), operands.join(", ")),
        )),
    })
}
