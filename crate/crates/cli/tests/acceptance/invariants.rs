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
use qcm_core::circuit::{minimize, CircuitType};
use qcm_core::gadgets::circuit_from_degree_bounded_graph;
use qcm_core::{solve_exact, Circuit, CouplingGraph, Graph, Node, Placement, Subcircuit};
use rand::seq::IndexedRandom;
use rand::Rng;

use crate::support::{random_circuit, random_connected_graph, rng};
use crate::{ensure, Outcome};

fn all_subcircuits(c: &Circuit) -> Vec<Subcircuit<'_>> {
    (0u32..1 << c.len())
        .filter_map(|mask| Subcircuit::from_remaining(c, (0..c.len()).filter(|&g| mask >> g & 1 == 1)).ok())
        .collect()
}

fn remaining(s: &Subcircuit<'_>) -> Vec<usize> {
    s.remaining().collect()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The membership conditions, restated over the raw grid.
fn in_type_set(t: &CircuitType) -> bool {
    let (n, m) = (t.rows(), t.cols());
    let black = |i: usize, j: usize| t.is_black(i, j);
    let first_column = (0..n).any(|i| black(i, 0));
    let rows_stay_black = (0..n).all(|i| (1..m).all(|j| !black(i, j - 1) || black(i, j)));
    let columns_grow = (1..m).all(|j| (0..n).any(|i| black(i, j) && !black(i, j - 1)));
    (1..=n).contains(&m) && first_column && rows_stay_black && columns_grow
}

fn random_placement(r: &mut impl Rng, qubits: usize, nodes: usize) -> Placement {
    let all: Vec<u32> = (0..nodes as u32).collect();
    let chosen: Vec<Node> = all.choose_multiple(r, qubits).map(|&v| Node(v)).collect();
    Placement::new(chosen, nodes).unwrap()
}

fn subcircuit_properties(counts: &mut [usize; 4]) -> Result<(), String> {
    let mut r = rng(0x7);
    for _ in 0..120 {
        let n = r.random_range(2..=3);
        let t = r.random_range(1..=7);
        let c = random_circuit(n, t, 0.8, &mut r);
        let subs = all_subcircuits(&c);
        let g = random_connected_graph(r.random_range(n..=4), 0.3, &mut r);
        let p = random_placement(&mut r, n, g.num_nodes());

        let bound = factorial(n) * (2 * c.depth()).pow(n as u32);
        ensure!(subs.len() <= bound, "{} subcircuits above {bound}", subs.len());
        let stats = solve_exact(&c, &g).map_err(|e| e.to_string())?.stats;
        ensure!(stats.max_fragments <= bound, "{} fragments in one set, above {bound}", stats.max_fragments);

        let mut descriptors = std::collections::HashSet::new();
        for s in &subs {
            let reduced = s.reduce(&p, &g);
            ensure!(reduced.reduce(&p, &g) == reduced, "reduce not idempotent on {:?}", remaining(s));
            let d = s.descriptor();
            ensure!(d.restore(&c).map_err(|e| e.to_string())? == *s, "descriptor round trip on {:?}", remaining(s));
            ensure!(descriptors.insert(d), "two subcircuits share a descriptor");
            if !s.is_empty() {
                let ty = s.circuit_type();
                ensure!(in_type_set(&ty) && ty.is_well_formed(), "type outside the set for {:?}", remaining(s));
            }
        }
        for (a, b) in subs.iter().cartesian_product(&subs) {
            if a.is_smaller(b).unwrap() {
                ensure!(a.reduce(&p, &g).is_smaller(&b.reduce(&p, &g)).unwrap(), "reduce not monotone");
            }
        }
        for _ in 0..5 {
            let pick: Vec<Subcircuit<'_>> =
                (0..r.random_range(1..=8)).map(|_| subs.choose(&mut r).unwrap().clone()).collect();
            let min = minimize(&pick);
            for (i, x) in min.iter().enumerate() {
                for y in &min[i + 1..] {
                    ensure!(!x.is_smaller(y).unwrap() && !y.is_smaller(x).unwrap(), "minimize output comparable");
                }
            }
            ensure!(
                pick.iter().all(|s| min.iter().any(|m| m.is_smaller(s).unwrap())),
                "minimize dropped an element with nothing below it"
            );
        }
        counts[0] += 1;
        counts[1] += subs.len();
    }
    Ok(())
}

fn depth_degree(counts: &mut [usize; 4]) -> Result<(), String> {
    let mut r = rng(0x6);
    for _ in 0..100 {
        let nodes = r.random_range(2..=9);
        let p = r.random_range(0.1..0.7);
        let edges: Vec<(usize, usize)> = (0..nodes).tuple_combinations().filter(|_| r.random_bool(p)).collect();
        let h = Graph::new(nodes, edges).unwrap();
        let d = h.max_degree();
        let c = circuit_from_degree_bounded_graph(&h, d).map_err(|e| e.to_string())?;
        ensure!(c.depth() <= d + 1, "depth {} above {}", c.depth(), d + 1);
        ensure!(c.topology_graph().to_graph().edges() == h.edges(), "topology graph differs from input");

        let c = random_circuit(r.random_range(2..=6), r.random_range(1..=12), 0.7, &mut r);
        let deg = c.topology_graph().to_graph().max_degree();
        ensure!(deg <= c.depth(), "topology degree {deg} above depth {}", c.depth());
        counts[2] += 1;
    }
    Ok(())
}

fn cost_invariance(counts: &mut [usize; 4]) -> Result<(), String> {
    let mut r = rng(0x5);
    let cost = |c: &Circuit, g: &CouplingGraph| solve_exact(c, g).map(|m| m.cost).map_err(|e| e.to_string());
    for _ in 0..60 {
        let n = r.random_range(2..=4);
        let g = random_connected_graph(r.random_range(n..=5), 0.3, &mut r);
        let c = random_circuit(n, r.random_range(1..=8), 0.6, &mut r);
        ensure!(cost(&c, &g)? == cost(&c.without_single_qubit_gates(), &g)?, "single-qubit gates changed cost");
        counts[3] += 1;
    }
    for _ in 0..12 {
        let n = r.random_range(2..=3);
        let b = r.random_range(n.max(3)..=5);
        let g = random_connected_graph(b, 0.3, &mut r);
        let c = random_circuit(n, r.random_range(2..=6), 1.0, &mut r);
        let base = cost(&c, &g)?;
        for perm in (0..b).permutations(b) {
            let h = CouplingGraph::from_graph(g.graph().relabel(&perm)).unwrap();
            ensure!(cost(&c, &h)? == base, "cost changed under node relabelling {perm:?}");
        }
        for perm in (0..n).permutations(n) {
            ensure!(cost(&c.relabel_qubits(&perm), &g)? == base, "cost changed under qubit relabelling");
        }
        counts[3] += 1;
    }
    Ok(())
}

pub fn structural_invariants() -> Outcome {
    let mut counts = [0; 4];
    subcircuit_properties(&mut counts)?;
    depth_degree(&mut counts)?;
    cost_invariance(&mut counts)?;
    Ok(format!(
        "{} circuits / {} subcircuits for reduce, minimize, descriptors, counts and types; \
         {} depth-degree pairs; {} cost-invariance instances",
        counts[0], counts[1], counts[2], counts[3]
    ))
}
