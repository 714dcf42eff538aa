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

use qcm_core::oracle::{brute_force_g, verify_plan};
use qcm_core::{solve_exact, upper_bound, Circuit, CouplingGraph, Family};
use rand::Rng;

use crate::support::{random_circuit, random_connected_graph, rng};
use crate::{ensure, Outcome};

/// CNOT sequences of length `t` on at most `n` qubits, one per relabelling
/// class: qubits are numbered in order of first appearance.
fn canonical_sequences(n: usize, t: usize) -> Vec<Vec<(u32, u32)>> {
    fn extend(n: u32, t: usize, used: u32, seq: &mut Vec<(u32, u32)>, out: &mut Vec<Vec<(u32, u32)>>) {
        if seq.len() == t {
            out.push(seq.clone());
            return;
        }
        for a in 0..=used.min(n - 1) {
            let after_a = used.max(a + 1);
            for b in 0..=after_a.min(n - 1) {
                if a != b {
                    seq.push((a, b));
                    extend(n, t, after_a.max(b + 1), seq, out);
                    seq.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    extend(n as u32, t, 0, &mut Vec::new(), &mut out);
    out
}

fn small_graphs(qubits: usize) -> Vec<CouplingGraph> {
    let mut out = Vec::new();
    for b in qubits.max(2)..=4 {
        out.push(CouplingGraph::generate(&Family::Linear(b)).unwrap());
        if b >= 3 {
            out.push(CouplingGraph::generate(&Family::Cycle(b)).unwrap());
            out.push(CouplingGraph::generate(&Family::Clique(b)).unwrap());
        }
    }
    out
}

fn agree(c: &Circuit, g: &CouplingGraph) -> Result<(), String> {
    let fast = solve_exact(c, g).map_err(|e| e.to_string())?.cost;
    let slow = brute_force_g(c, g).map_err(|e| e.to_string())?;
    ensure!(fast == slow, "solver {fast} vs oracle {slow} on\n{}{}", c.to_text(), g.to_text());
    Ok(())
}

pub fn oracle_equivalence() -> Outcome {
    let mut exhaustive = 0;
    for n in 2..=3 {
        let graphs = small_graphs(n);
        for t in 1..=5 {
            for seq in canonical_sequences(n, t) {
                let c = seq.iter().fold(Circuit::builder(n), |b, &(x, y)| b.cx(x, y)).build().unwrap();
                for g in &graphs {
                    agree(&c, g)?;
                    exhaustive += 1;
                }
            }
        }
    }
    let mut r = rng(0xace1);
    for _ in 0..200 {
        let g = random_connected_graph(4, 0.4, &mut r);
        let t = r.random_range(1..=8);
        agree(&random_circuit(4, t, 1.0, &mut r), &g)?;
    }
    Ok(format!("{exhaustive} exhaustive + 200 random instances, 0 mismatches"))
}

/// The 500 instances shared by the soundness and bound criteria:
/// 2 to 4 qubits, up to 6 nodes, up to 8 gates, some single-qubit.
fn soundness_instances() -> Vec<(Circuit, CouplingGraph)> {
    let mut r = rng(0x5eed);
    (0..500)
        .map(|_| {
            let n = r.random_range(2..=4);
            let b = r.random_range(n..=6);
            let g = random_connected_graph(b, r.random_range(0.0..0.3), &mut r);
            let t = r.random_range(1..=8);
            let frac = if r.random_bool(0.5) { 1.0 } else { 0.7 };
            (random_circuit(n, t, frac, &mut r), g)
        })
        .collect()
}

pub fn plan_soundness() -> Outcome {
    let mut total_swaps = 0;
    for (c, g) in soundness_instances() {
        let result = solve_exact(&c, &g).map_err(|e| e.to_string())?;
        let cost = result.cost.finite().ok_or("infinite cost on a feasible instance")?;
        let plan = result.plan.ok_or("finite cost without a plan")?;
        let report = verify_plan(&c, &g, &plan).map_err(|e| e.to_string())?;
        ensure!(report.accepted, "plan rejected: {:?}\n{}{}{plan}", report.failure, c.to_text(), g.to_text());
        ensure!(report.swaps_used == cost, "plan uses {} swaps, cost is {cost}", report.swaps_used);
        total_swaps += cost;
    }
    Ok(format!("500 plans verified, {total_swaps} swaps in total"))
}

pub fn upper_bound_holds() -> Outcome {
    let mut tight = 0;
    for (c, g) in soundness_instances() {
        let cost = solve_exact(&c, &g).map_err(|e| e.to_string())?.cost.finite().ok_or("infinite cost")?;
        let bound = c.two_qubit_count() * g.diameter().saturating_sub(1);
        ensure!(bound == upper_bound(&c, &g).unwrap(), "upper_bound disagrees with t * (dia - 1)");
        ensure!(cost <= bound, "cost {cost} above bound {bound} on\n{}{}", c.to_text(), g.to_text());
        tight += (cost == bound && bound > 0) as usize;
    }
    Ok(format!("500 instances within t * (dia - 1), {tight} tight"))
}
