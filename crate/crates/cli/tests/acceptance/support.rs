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
use qcm_core::experiment::{gen_random_circuit, RandomCircuitSpec};
use qcm_core::{Circuit, CouplingGraph, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random spanning tree over a shuffled order, plus each remaining pair with
/// probability `p`.
pub fn random_connected_graph(nodes: usize, p: f64, rng: &mut ChaCha8Rng) -> CouplingGraph {
    let mut order: Vec<usize> = (0..nodes).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..nodes).map(|i| (order[rng.random_range(0..i)], order[i])).collect();
    for (a, b) in (0..nodes).tuple_combinations() {
        if !edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a)) && rng.random_bool(p) {
            edges.push((a, b));
        }
    }
    CouplingGraph::from_edge_list(nodes, edges).expect("spanning tree keeps it connected")
}

/// Like [`random_connected_graph`] but rejects extra edges that would push a
/// degree above `max_degree`. Trees are drawn until one fits.
pub fn random_bounded_graph(nodes: usize, p: f64, max_degree: usize, rng: &mut ChaCha8Rng) -> CouplingGraph {
    loop {
        let g = random_connected_graph(nodes, 0.0, rng);
        if g.max_degree() > max_degree {
            continue;
        }
        let mut edges = g.edges().to_vec();
        let mut deg = vec![0; nodes];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        for (a, b) in (0..nodes).tuple_combinations() {
            if deg[a] < max_degree && deg[b] < max_degree && !g.graph().has_edge(a, b) && rng.random_bool(p) {
                edges.push((a, b));
                deg[a] += 1;
                deg[b] += 1;
            }
        }
        return CouplingGraph::from_edge_list(nodes, edges).unwrap();
    }
}

pub fn random_circuit(qubits: usize, gates: usize, frac: f64, rng: &mut ChaCha8Rng) -> Circuit {
    gen_random_circuit(&RandomCircuitSpec { qubits, gates, two_qubit_fraction: frac, seed: rng.random() }).unwrap()
}

/// Every connected simple graph on `n` nodes, one per isomorphism class,
/// each in its lexicographically least edge-mask labelling.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        if n > 0 && !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| edges.iter().fold(0u32, |acc, &(a, b)| acc | 1 << index(p[a], p[b])))
            .min()
            .unwrap_or(0);
        seen.insert(canon);
    }
    seen.into_iter()
        .map(|mask| Graph::new(n, (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i])).unwrap())
        .collect()
}
