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

use itertools::Itertools;
use qcm_core::gadgets::{
    build_usp_gadget, fixed_k_constructive_plan, reduce_clique_to_qcm, reduce_hamcycle_to_fixed_k,
    reduce_hamcycle_to_hampath_qcm, reduce_hamcycle_to_qcm, reduce_usp_to_qcm, usp_constructive_plan, Digraph,
    ReductionInstance,
};
use qcm_core::oracle::{directed_reachable, ham_cycle, max_clique_at_least, shortest_path, verify_plan};
use qcm_core::{decide, CouplingGraph, Node, Placement, SolveOptions, SwapPlan};
use rand::Rng;

use crate::support::{connected_graphs, random_bounded_graph, random_connected_graph, rng};
use crate::{ensure, Outcome};

fn decided(inst: &ReductionInstance) -> Result<bool, String> {
    decide(&inst.circuit, &inst.graph, inst.budget, &SolveOptions::default()).map_err(|e| e.to_string())
}

/// Checks every applicable reduction on `g`; returns the number of checks.
fn check_graph(g: &CouplingGraph) -> Result<usize, String> {
    let mut checks = 0;
    let err = |e: qcm_core::gadgets::GadgetError| e.to_string();
    if g.num_nodes() >= 3 {
        let hamiltonian = ham_cycle(g.graph()).map_err(|e| e.to_string())?.is_some();
        let got = decided(&reduce_hamcycle_to_qcm(g).map_err(err)?)?;
        ensure!(got == hamiltonian, "hamcycle: decide {got}, oracle {hamiltonian} on\n{}", g.to_text());
        checks += 1;
        if g.max_degree() <= 3 {
            let got = decided(&reduce_hamcycle_to_hampath_qcm(g).map_err(err)?)?;
            ensure!(got == hamiltonian, "hampath: decide {got}, oracle {hamiltonian} on\n{}", g.to_text());
            checks += 1;
        }
    }
    for n in 2..=5 {
        let clique = max_clique_at_least(g.graph(), n).map_err(|e| e.to_string())?;
        let got = decided(&reduce_clique_to_qcm(g, n).map_err(err)?)?;
        ensure!(got == clique, "clique {n}: decide {got}, oracle {clique} on\n{}", g.to_text());
        checks += 1;
    }
    Ok(checks)
}

pub fn reductions_match_oracles() -> Outcome {
    let mut checks = 0;
    let mut classes = 0;
    for n in 1..=6 {
        for g in connected_graphs(n) {
            checks += check_graph(&CouplingGraph::from_graph(g).unwrap())?;
            classes += 1;
        }
    }
    let mut r = rng(0x6a);
    for _ in 0..300 {
        let nodes = r.random_range(3..=8);
        // sparse graphs exercise the degree-3 hampath construction too
        let g = if r.random_bool(0.5) {
            random_bounded_graph(nodes, r.random_range(0.1..0.8), 3, &mut r)
        } else {
            random_connected_graph(nodes, r.random_range(0.0..0.7), &mut r)
        };
        checks += check_graph(&g)?;
    }
    Ok(format!("{classes} graph classes up to 6 nodes + 300 random graphs, {checks} checks, 0 mismatches"))
}

/// An accepted plan of at most `budget` swaps.
fn check_plan(inst: &ReductionInstance, plan: &SwapPlan) -> Result<(), String> {
    let report = verify_plan(&inst.circuit, &inst.graph, plan).map_err(|e| e.to_string())?;
    ensure!(report.accepted, "{} plan rejected: {:?}", inst.construction, report.failure);
    ensure!(
        report.swaps_used <= inst.budget,
        "{} plan uses {} > {}",
        inst.construction,
        report.swaps_used,
        inst.budget
    );
    Ok(())
}

/// The fixed-k instance of a claw: every plan with the clique qubits on the
/// 5-clique, the cycle qubits anywhere else, and at most one swap, fails.
fn claw_has_no_cheap_plan() -> Result<usize, String> {
    let claw = CouplingGraph::from_edge_list(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let inst = reduce_hamcycle_to_fixed_k(&claw, 1).map_err(|e| e.to_string())?;
    let b = inst.graph.num_nodes();
    let clique_nodes: Vec<usize> = (4..9).collect();
    let others: Vec<usize> = (0..b).filter(|v| !clique_nodes.contains(v)).collect();
    let mut plans = vec![Vec::new()];
    plans.extend(inst.graph.edges().iter().map(|&(a, b)| vec![(Node(a as u32), Node(b as u32))]));
    let mut tried = 0;
    for clique in clique_nodes.iter().permutations(5) {
        for cycle in others.iter().permutations(4) {
            let nodes: Vec<Node> = clique.iter().chain(&cycle).map(|&&v| Node(v as u32)).collect();
            let initial = Placement::new(nodes, b).unwrap();
            for swaps in &plans {
                let plan = SwapPlan::new(initial.clone(), swaps.clone());
                let report = verify_plan(&inst.circuit, &inst.graph, &plan).map_err(|e| e.to_string())?;
                ensure!(!report.accepted, "claw instance accepted\n{plan}");
                tried += 1;
            }
        }
    }
    Ok(tried)
}

pub fn usp_gadget_structure() -> Outcome {
    let mut r = rng(0x05b);
    let mut reachable = 0;
    for _ in 0..50 {
        let m = r.random_range(2..=6);
        let density = r.random_range(0.1..0.5);
        let arcs: Vec<(usize, usize)> =
            (0..m).cartesian_product(0..m).filter(|&(x, y)| x != y && r.random_bool(density)).collect();
        let h = Digraph::new(m, arcs.iter().copied()).unwrap();
        let (s, t) = loop {
            let (s, t) = (r.random_range(0..m), r.random_range(0..m));
            if s != t {
                break (s, t);
            }
        };
        let gadget = build_usp_gadget(&h, s, t).map_err(|e| e.to_string())?;
        ensure!(gadget.graph.max_degree() <= 3, "gadget degree {}", gadget.graph.max_degree());
        gadget.check(&h).map_err(|e| format!("{e} for arcs {arcs:?}"))?;
        let expected = directed_reachable(m, &arcs, s, t);
        let dist = gadget.distance(gadget.source, gadget.sink);
        ensure!(
            expected == (dist == Some(gadget.target)),
            "reachable {expected} but distance {dist:?}, target {} for arcs {arcs:?}",
            gadget.target
        );
        reachable += expected as usize;
    }

    // constructive directions, checked by the plan verifier
    let mut plans = 0;
    for _ in 0..20 {
        let nodes = r.random_range(3..=6);
        let g = random_bounded_graph(nodes, 0.4, 3, &mut r);
        let (s, t) = (0, nodes - 1);
        let dist = shortest_path(g.graph(), s, t).unwrap();
        let inst = reduce_usp_to_qcm(&g, s, t, dist).map_err(|e| e.to_string())?;
        check_plan(&inst, &usp_constructive_plan(&g, s, t).map_err(|e| e.to_string())?)?;
        plans += 1;
    }
    let hamiltonian = [
        CouplingGraph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        CouplingGraph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        CouplingGraph::from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap(),
    ];
    for h in &hamiltonian {
        let cycle = ham_cycle(h.graph()).map_err(|e| e.to_string())?.ok_or("expected a Hamiltonian cycle")?;
        for k in 1..=3 {
            let inst = reduce_hamcycle_to_fixed_k(h, k).map_err(|e| e.to_string())?;
            check_plan(&inst, &fixed_k_constructive_plan(h, k, &cycle).map_err(|e| e.to_string())?)?;
            plans += 1;
        }
    }
    let rejected = claw_has_no_cheap_plan()?;
    Ok(format!(
        "50 gadgets ({reachable} reachable) checked, {plans} constructive plans verified, {rejected} claw plans rejected"
    ))
}
