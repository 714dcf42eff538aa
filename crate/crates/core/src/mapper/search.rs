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

//! Level-synchronous search over `(placement, minimal frontier set)` states.
//!
//! Level `L` holds, for every placement reachable with `L` swaps, the minimal
//! set of subcircuits that can remain after those swaps. A level is built by
//! applying every edge swap to every state of the previous one and reducing
//! each fragment under the new placement. The first level containing a fully
//! executed fragment is the optimum for the initial placement.
//!
//! Fragments are also checked against everything seen for the same placement
//! in earlier levels; one that is not strictly better than some earlier
//! fragment can only lead to plans that the earlier one reaches sooner. This
//! makes an empty level a proof that the remaining gates can never run.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use indexmap::IndexMap;
use rayon::prelude::*;
use smallvec::SmallVec;
use thiserror::Error;

use super::{Placement, PlacementError, SwapPlan};
use crate::circuit::{Circuit, Frontier, Qubit};
use crate::coupling::{CouplingGraph, Node};

/// `key[q]` is the node of qubit `q`.
type Key = SmallVec<[u16; 8]>;

/// Largest group generated from symmetry generators before giving up.
const MAX_GROUP_ORDER: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cost {
    Finite(usize),
    /// No swap sequence runs the whole circuit.
    Infinite,
}

impl Cost {
    pub fn finite(self) -> Option<usize> {
        match self {
            Cost::Finite(k) => Some(k),
            Cost::Infinite => None,
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(k) => write!(f, "{k}"),
            Cost::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("level {level} holds {states} states, above the cap of {cap}")]
    TooManyStates { level: usize, states: usize, cap: usize },
    #[error(transparent)]
    Placement(#[from] PlacementError),
    #[error("invalid symmetry: {0}")]
    Symmetry(String),
    #[error("circuit needs {qubits} qubits but the graph has {nodes} nodes")]
    Infeasible { qubits: usize, nodes: usize },
    #[error("graph has {0} nodes; at most 65535 are supported")]
    GraphTooLarge(usize),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Worker threads; `None` uses the ambient rayon pool. The result does
    /// not depend on this.
    pub threads: Option<usize>,
    /// Abort with [`SolveError::TooManyStates`] when a single level of one
    /// initial placement holds more placements than this.
    pub state_cap: Option<usize>,
    /// Only swap edges whose endpoints both hold a qubit.
    pub strict_swaps: bool,
    /// Node permutations generating a group of graph automorphisms. Only the
    /// lexicographically least initial placement of each orbit is searched.
    pub symmetry: Vec<Vec<u32>>,
}

/// Counters for one solve. Apart from `placements`, values for parallel runs
/// depend on scheduling because searches stop early once beaten.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Initial placements searched.
    pub placements: usize,
    /// Deepest level built.
    pub levels: usize,
    /// States (placement with its fragments) created.
    pub states: usize,
    /// Largest fragment set held by a single state.
    pub max_fragments: usize,
}

impl SearchStats {
    fn merge(&mut self, other: &SearchStats) {
        self.placements += other.placements;
        self.levels = self.levels.max(other.levels);
        self.states += other.states;
        self.max_fragments = self.max_fragments.max(other.max_fragments);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapResult {
    pub cost: Cost,
    /// Present exactly when `cost` is finite.
    pub plan: Option<SwapPlan>,
    pub stats: SearchStats,
}

/// `t * (diameter - 1)` for `t` two-qubit gates: each gate can be made
/// nearest-neighbour by walking one operand towards the other.
pub fn upper_bound(circuit: &Circuit, graph: &CouplingGraph) -> Result<usize, SolveError> {
    if circuit.num_qubits() > graph.num_nodes() {
        return Err(SolveError::Infeasible { qubits: circuit.num_qubits(), nodes: graph.num_nodes() });
    }
    Ok(circuit.two_qubit_count() * graph.diameter().saturating_sub(1))
}

pub fn solve_exact(circuit: &Circuit, graph: &CouplingGraph) -> Result<MapResult, SolveError> {
    solve_with(circuit, graph, &SolveOptions::default())
}

/// Minimum over all initial placements. Ties go to the lexicographically
/// first placement, and within it to the first plan discovered.
pub fn solve_with(circuit: &Circuit, graph: &CouplingGraph, opts: &SolveOptions) -> Result<MapResult, SolveError> {
    if circuit.num_qubits() > graph.num_nodes() {
        return Ok(MapResult { cost: Cost::Infinite, plan: None, stats: SearchStats::default() });
    }
    let searcher = Searcher::new(circuit, graph, opts)?;
    let starts = initial_placements(circuit.num_qubits(), graph, &opts.symmetry)?;
    let limit = AtomicUsize::new(searcher.bound);
    let never = AtomicBool::new(false);
    let run = |i: usize, key: &Key| -> Result<(usize, Outcome, SearchStats), SolveError> {
        let mut stats = SearchStats { placements: 1, ..Default::default() };
        let outcome = searcher.run(key, &limit, &never, &mut stats)?;
        if let Outcome::Found { cost, .. } = outcome {
            limit.fetch_min(cost, Ordering::Relaxed);
        }
        Ok((i, outcome, stats))
    };
    let results: Vec<_> = in_pool(opts.threads, || {
        if opts.threads == Some(1) {
            starts.iter().enumerate().map(|(i, k)| run(i, k)).collect::<Result<Vec<_>, _>>()
        } else {
            starts.par_iter().enumerate().map(|(i, k)| run(i, k)).collect::<Result<Vec<_>, _>>()
        }
    })??;

    let mut stats = SearchStats::default();
    let mut best: Option<(usize, usize, Vec<u32>)> = None;
    for (i, outcome, s) in results {
        stats.merge(&s);
        if let Outcome::Found { cost, swaps } = outcome {
            if best.as_ref().is_none_or(|(bc, bi, _)| (cost, i) < (*bc, *bi)) {
                best = Some((cost, i, swaps));
            }
        }
    }
    Ok(match best {
        Some((cost, i, swaps)) => {
            MapResult { cost: Cost::Finite(cost), plan: Some(searcher.plan(&starts[i], &swaps)), stats }
        }
        None => MapResult { cost: Cost::Infinite, plan: None, stats },
    })
}

/// Optimum for one fixed initial placement.
pub fn solve_from(
    circuit: &Circuit,
    graph: &CouplingGraph,
    initial: &Placement,
    opts: &SolveOptions,
) -> Result<MapResult, SolveError> {
    initial.check_shape(circuit.num_qubits(), graph.num_nodes())?;
    let searcher = Searcher::new(circuit, graph, opts)?;
    let key: Key = initial.nodes().iter().map(|n| n.0 as u16).collect();
    let mut stats = SearchStats { placements: 1, ..Default::default() };
    let outcome = searcher.run(&key, &AtomicUsize::new(searcher.bound), &AtomicBool::new(false), &mut stats)?;
    Ok(match outcome {
        Outcome::Found { cost, swaps } => {
            MapResult { cost: Cost::Finite(cost), plan: Some(searcher.plan(&key, &swaps)), stats }
        }
        Outcome::Exhausted => MapResult { cost: Cost::Infinite, plan: None, stats },
        Outcome::Cutoff => unreachable!("no placement needs more swaps than the bound"),
    })
}

/// Whether some initial placement runs the circuit with at most `k` swaps.
pub fn decide(circuit: &Circuit, graph: &CouplingGraph, k: usize, opts: &SolveOptions) -> Result<bool, SolveError> {
    if circuit.num_qubits() > graph.num_nodes() {
        return Ok(false);
    }
    if k == 0 {
        return Ok(zero_swap_placement(circuit, graph).is_some());
    }
    let searcher = Searcher::new(circuit, graph, opts)?;
    if k >= searcher.bound {
        return Ok(true);
    }
    let starts = initial_placements(circuit.num_qubits(), graph, &opts.symmetry)?;
    let limit = AtomicUsize::new(k);
    let stop = AtomicBool::new(false);
    let run = |key: &Key| -> Result<bool, SolveError> {
        if stop.load(Ordering::Relaxed) {
            return Ok(true);
        }
        let mut stats = SearchStats::default();
        let found = matches!(searcher.run(key, &limit, &stop, &mut stats)?, Outcome::Found { .. });
        if found {
            stop.store(true, Ordering::Relaxed);
        }
        Ok(found)
    };
    in_pool(opts.threads, || {
        if opts.threads == Some(1) {
            starts.iter().map(run).try_fold(false, |acc, r| r.map(|f| acc || f))
        } else {
            starts.par_iter().map(run).try_reduce(|| false, |a, b| Ok(a || b))
        }
    })?
}

/// A placement under which every two-qubit gate already acts on adjacent
/// nodes, found by backtracking over the circuit's interaction graph.
pub fn zero_swap_placement(circuit: &Circuit, graph: &CouplingGraph) -> Option<Placement> {
    let n = circuit.num_qubits();
    let b = graph.num_nodes();
    if n > b {
        return None;
    }
    let topo = circuit.topology_graph().to_graph();
    // most-constrained-first: next qubit has the most already-ordered neighbours
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let next = (0..n)
            .filter(|&q| !placed[q])
            .max_by_key(|&q| {
                let back = topo.neighbors(q).iter().filter(|&&r| placed[r]).count();
                (back, topo.degree(q), std::cmp::Reverse(q))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut node_of = vec![usize::MAX; n];
    let mut used = vec![false; b];

    fn extend(
        depth: usize,
        order: &[usize],
        topo: &crate::coupling::Graph,
        graph: &CouplingGraph,
        node_of: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&q) = order.get(depth) else {
            return true;
        };
        for v in 0..graph.num_nodes() {
            if used[v] || graph.graph().degree(v) < topo.degree(q) {
                continue;
            }
            let fits =
                topo.neighbors(q).iter().all(|&r| node_of[r] == usize::MAX || graph.graph().has_edge(node_of[r], v));
            if !fits {
                continue;
            }
            node_of[q] = v;
            used[v] = true;
            if extend(depth + 1, order, topo, graph, node_of, used) {
                return true;
            }
            node_of[q] = usize::MAX;
            used[v] = false;
        }
        false
    }

    extend(0, &order, &topo, graph, &mut node_of, &mut used).then(|| {
        Placement::new(node_of.iter().map(|&v| Node(v as u32)).collect(), b).expect("backtracking keeps injectivity")
    })
}

fn in_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R, SolveError> {
    match threads {
        None | Some(1) => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| SolveError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Injective placements in lexicographic order, keeping only orbit minima
/// under the symmetry group when generators are given.
fn initial_placements(n: usize, graph: &CouplingGraph, generators: &[Vec<u32>]) -> Result<Vec<Key>, SolveError> {
    let b = graph.num_nodes();
    let group = symmetry_group(graph, generators)?;
    let mut out = Vec::new();
    let mut key: Key = SmallVec::with_capacity(n);
    let mut used = vec![false; b];

    fn rec(n: usize, b: usize, key: &mut Key, used: &mut [bool], group: &[Vec<u16>], out: &mut Vec<Key>) {
        if key.len() == n {
            let is_min = group.iter().all(|sigma| {
                let image: Key = key.iter().map(|&v| sigma[v as usize]).collect();
                image >= *key
            });
            if is_min {
                out.push(key.clone());
            }
            return;
        }
        for v in 0..b {
            if !used[v] {
                used[v] = true;
                key.push(v as u16);
                rec(n, b, key, used, group, out);
                key.pop();
                used[v] = false;
            }
        }
    }

    rec(n, b, &mut key, &mut used, &group, &mut out);
    Ok(out)
}

/// Every non-identity element of the group generated by `generators`.
fn symmetry_group(graph: &CouplingGraph, generators: &[Vec<u32>]) -> Result<Vec<Vec<u16>>, SolveError> {
    let b = graph.num_nodes();
    let mut gens: Vec<Vec<u16>> = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.len() != b {
            return Err(SolveError::Symmetry(format!("generator {i} has length {}, expected {b}", g.len())));
        }
        let mut seen = vec![false; b];
        for &v in g {
            if v as usize >= b || std::mem::replace(&mut seen[v as usize], true) {
                return Err(SolveError::Symmetry(format!("generator {i} is not a permutation")));
            }
        }
        if let Some(&(x, y)) =
            graph.edges().iter().find(|&&(x, y)| !graph.graph().has_edge(g[x] as usize, g[y] as usize))
        {
            return Err(SolveError::Symmetry(format!("generator {i} maps edge ({x}, {y}) to a non-edge")));
        }
        gens.push(g.iter().map(|&v| v as u16).collect());
    }
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let identity: Vec<u16> = (0..b as u16).collect();
    let mut index: IndexMap<Vec<u16>, ()> = IndexMap::new();
    index.insert(identity.clone(), ());
    let mut cursor = 0;
    while cursor < index.len() {
        let elem = index.get_index(cursor).unwrap().0.clone();
        cursor += 1;
        for g in &gens {
            let composed: Vec<u16> = elem.iter().map(|&v| g[v as usize]).collect();
            if !index.contains_key(&composed) {
                if index.len() >= MAX_GROUP_ORDER {
                    return Err(SolveError::Symmetry(format!("group order exceeds {MAX_GROUP_ORDER}")));
                }
                index.insert(composed, ());
            }
        }
    }
    Ok(index.into_keys().filter(|p| *p != identity).collect())
}

enum Outcome {
    /// Edge indices of an optimal swap sequence.
    Found { cost: usize, swaps: Vec<u32> },
    /// Every reachable state explored without finishing.
    Exhausted,
    /// Stopped at the shared limit.
    Cutoff,
}

struct Fragment {
    frontier: Frontier,
    trace: u32,
}

struct Searcher<'a> {
    circuit: &'a Circuit,
    num_nodes: usize,
    adjacent: Vec<bool>,
    edges: Vec<(u16, u16)>,
    strict: bool,
    cap: Option<usize>,
    /// Deepest level worth building.
    bound: usize,
}

impl<'a> Searcher<'a> {
    fn new(circuit: &'a Circuit, graph: &CouplingGraph, opts: &SolveOptions) -> Result<Self, SolveError> {
        let b = graph.num_nodes();
        if b > u16::MAX as usize {
            return Err(SolveError::GraphTooLarge(b));
        }
        let mut adjacent = vec![false; b * b];
        for &(x, y) in graph.edges() {
            adjacent[x * b + y] = true;
            adjacent[y * b + x] = true;
        }
        // the walking argument behind the bound needs free passage through empty nodes
        let bound = if opts.strict_swaps { usize::MAX } else { upper_bound(circuit, graph)? };
        Ok(Searcher {
            circuit,
            num_nodes: b,
            adjacent,
            edges: graph.edges().iter().map(|&(x, y)| (x as u16, y as u16)).collect(),
            strict: opts.strict_swaps,
            cap: opts.state_cap,
            bound,
        })
    }

    fn advance(&self, frontier: &mut Frontier, key: &Key) {
        let b = self.num_nodes;
        frontier.advance(self.circuit, |x: Qubit, y: Qubit| {
            self.adjacent[key[x.index()] as usize * b + key[y.index()] as usize]
        });
    }

    fn plan(&self, start: &Key, swaps: &[u32]) -> SwapPlan {
        let initial = Placement::new(start.iter().map(|&v| Node(v as u32)).collect(), self.num_nodes)
            .expect("search keys are injective");
        let swaps = swaps
            .iter()
            .map(|&e| {
                let (x, y) = self.edges[e as usize];
                (Node(x as u32), Node(y as u32))
            })
            .collect();
        SwapPlan::new(initial, swaps)
    }

    fn run(
        &self,
        start: &Key,
        limit: &AtomicUsize,
        stop: &AtomicBool,
        stats: &mut SearchStats,
    ) -> Result<Outcome, SolveError> {
        let mut f0 = Frontier::start(self.circuit);
        self.advance(&mut f0, start);
        stats.states += 1;
        stats.max_fragments = stats.max_fragments.max(1);
        if f0.is_complete(self.circuit) {
            return Ok(Outcome::Found { cost: 0, swaps: Vec::new() });
        }
        // (parent trace, edge) per kept fragment; entry 0 is the root
        let mut traces: Vec<(u32, u32)> = vec![(u32::MAX, u32::MAX)];
        let mut archive: HashMap<Key, Vec<Frontier>> = HashMap::new();
        archive.insert(start.clone(), vec![f0.clone()]);
        let mut level: IndexMap<Key, Vec<Fragment>> = IndexMap::new();
        level.insert(start.clone(), vec![Fragment { frontier: f0, trace: 0 }]);

        for depth in 1usize.. {
            if depth > limit.load(Ordering::Relaxed) || stop.load(Ordering::Relaxed) {
                return Ok(Outcome::Cutoff);
            }
            stats.levels = stats.levels.max(depth);
            let mut next: IndexMap<Key, Vec<Fragment>> = IndexMap::new();
            let mut held = 0usize;
            for (key, frags) in &level {
                for (ei, &(x, y)) in self.edges.iter().enumerate() {
                    let mut moved = key.clone();
                    let (mut occ_x, mut occ_y) = (false, false);
                    for v in moved.iter_mut() {
                        if *v == x {
                            *v = y;
                            occ_x = true;
                        } else if *v == y {
                            *v = x;
                            occ_y = true;
                        }
                    }
                    if self.strict && !(occ_x && occ_y) {
                        continue;
                    }
                    let earlier = archive.get(&moved);
                    let slot = next.entry(moved.clone()).or_default();
                    for frag in frags {
                        let mut f = frag.frontier.clone();
                        self.advance(&mut f, &moved);
                        if f.is_complete(self.circuit) {
                            let mut swaps = vec![ei as u32];
                            let mut t = frag.trace;
                            while t != 0 {
                                let (parent, edge) = traces[t as usize];
                                swaps.push(edge);
                                t = parent;
                            }
                            swaps.reverse();
                            return Ok(Outcome::Found { cost: depth, swaps });
                        }
                        if earlier.is_some_and(|e| e.iter().any(|g| g.dominates(&f)))
                            || slot.iter().any(|g| g.frontier.dominates(&f))
                        {
                            continue;
                        }
                        if slot.is_empty() {
                            held += 1;
                        }
                        slot.retain(|g| !f.dominates(&g.frontier));
                        traces.push((frag.trace, ei as u32));
                        slot.push(Fragment { frontier: f, trace: (traces.len() - 1) as u32 });
                    }
                    if let Some(cap) = self.cap {
                        if held > cap {
                            return Err(SolveError::TooManyStates { level: depth, states: held, cap });
                        }
                    }
                }
            }
            next.retain(|_, v| !v.is_empty());
            if next.is_empty() {
                return Ok(Outcome::Exhausted);
            }
            for (key, frags) in &next {
                stats.states += 1;
                stats.max_fragments = stats.max_fragments.max(frags.len());
                let seen = archive.entry(key.clone()).or_default();
                seen.retain(|h| !frags.iter().any(|f| f.frontier.dominates(h)));
                seen.extend(frags.iter().map(|f| f.frontier.clone()));
            }
            level = next;
        }
        unreachable!()
    }
}
