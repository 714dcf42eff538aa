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

use std::collections::VecDeque;

use super::circuits::{gen_clique_circuit, gen_cycle_circuit, gen_path_circuit, parallel_bridge, repeat_circuit};
use super::{invalid, GadgetError, ReductionInstance};
use crate::coupling::{CouplingGraph, Graph, Node};
use crate::mapper::{Placement, SwapPlan};

fn degree_at_most(construction: &'static str, g: &CouplingGraph, limit: usize) -> Result<(), GadgetError> {
    if g.max_degree() > limit {
        return Err(GadgetError::DegreeBound { construction, found: g.max_degree(), limit });
    }
    Ok(())
}

fn complete_on(nodes: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    nodes.iter().enumerate().flat_map(move |(i, &a)| nodes[i + 1..].iter().map(move |&b| (a, b)))
}

/// `(clique circuit on n qubits, g, 0)`: zero swaps iff `g` has an `n`-clique.
pub fn reduce_clique_to_qcm(g: &CouplingGraph, n: usize) -> Result<ReductionInstance, GadgetError> {
    let circuit = gen_clique_circuit(n)?;
    Ok(ReductionInstance::new(circuit, g.clone(), 0, "clique", &format!("n {n}\n{}", g.to_text())))
}

/// `(cycle circuit on every node, g, 0)`: zero swaps iff `g` is Hamiltonian.
pub fn reduce_hamcycle_to_qcm(g: &CouplingGraph) -> Result<ReductionInstance, GadgetError> {
    if g.num_nodes() < 3 {
        return Err(invalid("hamcycle", "graph needs at least 3 nodes"));
    }
    let circuit = gen_cycle_circuit(g.num_nodes())?;
    Ok(ReductionInstance::new(circuit, g.clone(), 0, "hamcycle", &g.to_text()))
}

/// Hamiltonian cycle in `g` (degree at most 3) to a Hamiltonian path between
/// two new pendant nodes of `H`, mapped with a path circuit and no swaps.
///
/// With a degree-2 node `a`, pendants go on `a` and on its smallest
/// neighbour (`|H| = n + 2`, construction `hampath-2`). Otherwise a pendant
/// goes on node 0 and a new edge `(b, c)` has `b` joined to every neighbour
/// of node 0 (`|H| = n + 3`, construction `hampath-3`).
pub fn reduce_hamcycle_to_hampath_qcm(g: &CouplingGraph) -> Result<ReductionInstance, GadgetError> {
    degree_at_most("hampath", g, 3)?;
    let n = g.num_nodes();
    if n < 3 {
        return Err(invalid("hampath", "graph needs at least 3 nodes"));
    }
    let base = g.graph();
    let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
    let name = match (0..n).find(|&v| base.degree(v) == 2) {
        Some(a) => {
            let x = base.neighbors(a)[0];
            edges.extend([(a, n), (x, n + 1)]);
            "hampath-2"
        }
        None => {
            let (b, c) = (n + 1, n + 2);
            edges.extend([(0, n), (b, c)]);
            edges.extend(base.neighbors(0).iter().map(|&y| (y, b)));
            "hampath-3"
        }
    };
    let size = if name == "hampath-2" { n + 2 } else { n + 3 };
    let h = CouplingGraph::from_edge_list(size, edges)?;
    if h.max_degree() > 4 {
        return Err(GadgetError::CheckFailed(format!("H has degree {}", h.max_degree())));
    }
    let circuit = gen_path_circuit(size)?;
    Ok(ReductionInstance::new(circuit, h, 0, name, &g.to_text()))
}

/// Both endpoints must differ; `g` gains a 4-clique fully joined to `s`
/// (nodes `b..b+4`) and another to `t` (`b+4..b+8`).
fn usp_graph(g: &CouplingGraph, s: usize, t: usize) -> Result<CouplingGraph, GadgetError> {
    degree_at_most("usp", g, 3)?;
    let b = g.num_nodes();
    if s >= b || t >= b || s == t {
        return Err(invalid("usp", format!("endpoints ({s}, {t}) must be distinct nodes of 0..{b}")));
    }
    let mut edges = g.edges().to_vec();
    for (anchor, first) in [(s, b), (t, b + 4)] {
        let block: Vec<usize> = std::iter::once(anchor).chain(first..first + 4).collect();
        edges.extend(complete_on(&block));
    }
    Ok(CouplingGraph::from_edge_list(b + 8, edges)?)
}

/// `(two bridged copies of the clique circuit repeated |V(g)| times, g with a
/// 4-clique at s and at t, k - 1)`.
pub fn reduce_usp_to_qcm(g: &CouplingGraph, s: usize, t: usize, k: usize) -> Result<ReductionInstance, GadgetError> {
    if k == 0 {
        return Err(invalid("usp", "k must be at least 1"));
    }
    let graph = usp_graph(g, s, t)?;
    let copy = repeat_circuit(&gen_clique_circuit(5)?, g.num_nodes())?;
    let circuit = parallel_bridge(&copy, &copy)?;
    let source = format!("s {s} t {t} k {k}\n{}", g.to_text());
    Ok(ReductionInstance::new(circuit, graph, k - 1, "usp", &source))
}

/// Nodes of a shortest `s`-`t` path; the first-found BFS parent wins.
fn bfs_path(g: &Graph, s: usize, t: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.num_nodes()];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if parent[t] == usize::MAX {
        return None;
    }
    let mut path = vec![t];
    while *path.last().unwrap() != s {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

/// Both clique copies on the cliques at `s` and `t` (first qubits on the
/// anchors), then the first qubit walks towards `t`: `dist(s, t) - 1` swaps.
pub fn usp_constructive_plan(g: &CouplingGraph, s: usize, t: usize) -> Result<SwapPlan, GadgetError> {
    let graph = usp_graph(g, s, t)?;
    let b = g.num_nodes();
    let nodes: Vec<Node> =
        [s].into_iter().chain(b..b + 4).chain([t]).chain(b + 4..b + 8).map(|v| Node(v as u32)).collect();
    let initial = Placement::new(nodes, graph.num_nodes()).expect("distinct nodes");
    let path = bfs_path(g.graph(), s, t).expect("coupling graphs are connected");
    let swaps = path[..path.len() - 1].windows(2).map(|w| (Node(w[0] as u32), Node(w[1] as u32))).collect();
    Ok(SwapPlan::new(initial, swaps))
}

/// `h` plus a 5-clique on `n..n+5` whose node `n` reaches node 0 of `h`
/// through `k` new path nodes `n+5..n+5+k`.
fn fixed_k_graph(h: &CouplingGraph, k: usize) -> Result<CouplingGraph, GadgetError> {
    degree_at_most("fixed-k", h, 3)?;
    let n = h.num_nodes();
    if n < 3 {
        return Err(invalid("fixed-k", "graph needs at least 3 nodes"));
    }
    if k == 0 {
        return Err(invalid("fixed-k", "k must be at least 1"));
    }
    let clique: Vec<usize> = (n..n + 5).collect();
    let mut edges = h.edges().to_vec();
    edges.extend(complete_on(&clique));
    let chain: Vec<usize> = std::iter::once(n).chain(n + 5..n + 5 + k).chain([0]).collect();
    edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    Ok(CouplingGraph::from_edge_list(n + 5 + k, edges)?)
}

/// `(clique circuit x 2k bridged to cycle circuit x 2k, h + pendant K5 path, k)`.
pub fn reduce_hamcycle_to_fixed_k(h: &CouplingGraph, k: usize) -> Result<ReductionInstance, GadgetError> {
    let graph = fixed_k_graph(h, k)?;
    let cliques = repeat_circuit(&gen_clique_circuit(5)?, 2 * k)?;
    let cycles = repeat_circuit(&gen_cycle_circuit(h.num_nodes())?, 2 * k)?;
    let circuit = parallel_bridge(&cliques, &cycles)?;
    Ok(ReductionInstance::new(circuit, graph, k, "fixed-k", &format!("k {k}\n{}", h.to_text())))
}

/// Clique qubits on the 5-clique, cycle qubit `i` on `cycle[i]` (rotated so
/// node 0 comes first), then the first clique qubit walks the `k` path
/// nodes to sit next to node 0.
pub fn fixed_k_constructive_plan(h: &CouplingGraph, k: usize, cycle: &[usize]) -> Result<SwapPlan, GadgetError> {
    let graph = fixed_k_graph(h, k)?;
    let n = h.num_nodes();
    let mut seen = vec![false; n];
    let valid = cycle.len() == n
        && cycle.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && (0..n).all(|i| h.graph().has_edge(cycle[i], cycle[(i + 1) % n]));
    if !valid {
        return Err(invalid("fixed-k", "not a Hamiltonian cycle of h"));
    }
    let start = cycle.iter().position(|&v| v == 0).unwrap();
    let order = cycle[start..].iter().chain(&cycle[..start]);
    let nodes: Vec<Node> = (n..n + 5).chain(order.copied()).map(|v| Node(v as u32)).collect();
    let initial = Placement::new(nodes, graph.num_nodes()).expect("distinct nodes");
    let walk: Vec<usize> = std::iter::once(n).chain(n + 5..n + 5 + k).collect();
    let swaps = walk.windows(2).map(|w| (Node(w[0] as u32), Node(w[1] as u32))).collect();
    Ok(SwapPlan::new(initial, swaps))
}
