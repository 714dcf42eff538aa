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

//! Circuits and the structures derived from them.
//!
//! A [`Circuit`] is an ordered gate list over `n` logical qubits. Gates carry
//! no unitary semantics; only their arity and operands matter for routing.
//! Derived views are the [`DependencyGraph`] (edges between consecutive gates
//! on each qubit line), the ASAP [`LayerPartition`], the [`TopologyGraph`],
//! and [`Subcircuit`]s, the upward-closed gate sets left to execute.

mod frontier;
mod io;
mod subcircuit;
mod summary;

use std::fmt;

use thiserror::Error;

use crate::coupling::Graph;

pub use frontier::Frontier;
pub use subcircuit::{minimize, Subcircuit};
pub use summary::{CircuitType, SubcircuitDescriptor};

/// A logical qubit of a circuit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Qubit(pub u32);

impl Qubit {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Qubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GateKind {
    Single,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operands {
    Single(Qubit),
    Two(Qubit, Qubit),
}

impl Operands {
    pub fn kind(&self) -> GateKind {
        match self {
            Operands::Single(_) => GateKind::Single,
            Operands::Two(..) => GateKind::Two,
        }
    }

    pub fn qubits(&self) -> impl Iterator<Item = Qubit> {
        let (a, b) = match *self {
            Operands::Single(a) => (a, None),
            Operands::Two(a, b) => (a, Some(b)),
        };
        std::iter::once(a).chain(b)
    }

    fn map(self, f: impl Fn(Qubit) -> Qubit) -> Operands {
        match self {
            Operands::Single(a) => Operands::Single(f(a)),
            Operands::Two(a, b) => Operands::Two(f(a), f(b)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gate {
    id: usize,
    operands: Operands,
    label: String,
}

impl Gate {
    /// Position in the circuit's gate sequence.
    pub fn id(&self) -> usize {
        self.id
    }

    pub fn operands(&self) -> Operands {
        self.operands
    }

    pub fn kind(&self) -> GateKind {
        self.operands.kind()
    }

    pub fn is_two_qubit(&self) -> bool {
        self.kind() == GateKind::Two
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn qubits(&self) -> impl Iterator<Item = Qubit> {
        self.operands.qubits()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("gate {gate} uses qubit {qubit} but the circuit has {num_qubits} qubits")]
    QubitOutOfRange { gate: usize, qubit: u32, num_qubits: usize },
    #[error("two-qubit gate {gate} uses qubit {qubit} twice")]
    RepeatedOperand { gate: usize, qubit: u32 },
    #[error("subcircuits belong to different circuits")]
    DifferentParents,
    #[error("gate set is not a subcircuit: gate {gate} remains but its successor {successor} does not")]
    NotUpwardClosed { gate: usize, successor: usize },
    #[error("gate {0} does not exist")]
    UnknownGate(usize),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Immutable circuit with cached per-qubit gate chains and ASAP layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
    // chains[q]: ids of the gates acting on q, in execution order
    chains: Vec<Vec<usize>>,
    // chain_pos[g][k]: index of gate g inside the chain of its k-th operand
    chain_pos: Vec<[u32; 2]>,
    layer_of: Vec<usize>,
    depth: usize,
}

impl Circuit {
    pub fn new(num_qubits: usize, gates: impl IntoIterator<Item = (String, Operands)>) -> Result<Self, CircuitError> {
        let mut chains = vec![Vec::new(); num_qubits];
        let mut out = Vec::new();
        let mut chain_pos = Vec::new();
        let mut layer_of = Vec::new();
        // ASAP: one past the last occupied layer of every qubit line
        let mut line_free = vec![0usize; num_qubits];
        let mut depth = 0;
        for (id, (label, operands)) in gates.into_iter().enumerate() {
            for q in operands.qubits() {
                if q.index() >= num_qubits {
                    return Err(CircuitError::QubitOutOfRange { gate: id, qubit: q.0, num_qubits });
                }
            }
            if let Operands::Two(a, b) = operands {
                if a == b {
                    return Err(CircuitError::RepeatedOperand { gate: id, qubit: a.0 });
                }
            }
            let mut pos = [0u32; 2];
            let mut layer = 0;
            for (k, q) in operands.qubits().enumerate() {
                pos[k] = chains[q.index()].len() as u32;
                chains[q.index()].push(id);
                layer = layer.max(line_free[q.index()]);
            }
            for q in operands.qubits() {
                line_free[q.index()] = layer + 1;
            }
            depth = depth.max(layer + 1);
            chain_pos.push(pos);
            layer_of.push(layer);
            out.push(Gate { id, operands, label });
        }
        Ok(Circuit { num_qubits, gates: out, chains, chain_pos, layer_of, depth })
    }

    pub fn builder(num_qubits: usize) -> CircuitBuilder {
        CircuitBuilder { num_qubits, gates: Vec::new() }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn gate(&self, id: usize) -> &Gate {
        &self.gates[id]
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Number of two-qubit gates.
    pub fn two_qubit_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_two_qubit()).count()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// ASAP layer (0-based) of a gate.
    pub fn layer_of(&self, gate: usize) -> usize {
        self.layer_of[gate]
    }

    /// Gates acting on `q`, in execution order.
    pub fn chain(&self, q: Qubit) -> &[usize] {
        &self.chains[q.index()]
    }

    pub(crate) fn chain_position(&self, gate: usize, operand: usize) -> usize {
        self.chain_pos[gate][operand] as usize
    }

    /// Immediate predecessors of a gate: the previous gate on each operand line.
    pub fn predecessors(&self, gate: usize) -> impl Iterator<Item = usize> + '_ {
        let g = &self.gates[gate];
        let mut preds: [Option<usize>; 2] = [None; 2];
        for (k, q) in g.qubits().enumerate() {
            let p = self.chain_pos[gate][k] as usize;
            if p > 0 {
                preds[k] = Some(self.chains[q.index()][p - 1]);
            }
        }
        if preds[0] == preds[1] {
            preds[1] = None;
        }
        preds.into_iter().flatten()
    }

    /// Immediate successors: the next gate on each operand line.
    pub fn successors(&self, gate: usize) -> impl Iterator<Item = usize> + '_ {
        let g = &self.gates[gate];
        let mut succs: [Option<usize>; 2] = [None; 2];
        for (k, q) in g.qubits().enumerate() {
            let p = self.chain_pos[gate][k] as usize;
            succs[k] = self.chains[q.index()].get(p + 1).copied();
        }
        if succs[0] == succs[1] {
            succs[1] = None;
        }
        succs.into_iter().flatten()
    }

    pub fn dependency_graph(&self) -> DependencyGraph {
        let mut edges: Vec<(usize, usize)> =
            (0..self.len()).flat_map(|g| self.predecessors(g).map(move |p| (p, g))).collect();
        edges.sort_unstable();
        DependencyGraph { num_gates: self.len(), edges }
    }

    pub fn layers(&self) -> LayerPartition {
        let mut layers = vec![Vec::new(); self.depth];
        for (g, &l) in self.layer_of.iter().enumerate() {
            layers[l].push(g);
        }
        LayerPartition { layers }
    }

    pub fn topology_graph(&self) -> TopologyGraph {
        let mut edges: Vec<(Qubit, Qubit)> = self
            .gates
            .iter()
            .filter_map(|g| match g.operands {
                Operands::Two(a, b) => Some(if a < b { (a, b) } else { (b, a) }),
                Operands::Single(_) => None,
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        TopologyGraph { num_qubits: self.num_qubits, edges }
    }

    /// The same circuit with every single-qubit gate dropped.
    pub fn without_single_qubit_gates(&self) -> Circuit {
        self.filtered(|g| g.is_two_qubit())
    }

    /// Keeps the gates matching `keep`, in order, on the same qubit set.
    pub fn filtered(&self, keep: impl Fn(&Gate) -> bool) -> Circuit {
        Circuit::new(self.num_qubits, self.gates.iter().filter(|g| keep(g)).map(|g| (g.label.clone(), g.operands)))
            .expect("a filtered valid circuit is valid")
    }

    /// Renames qubit `q` to `perm[q]`.
    pub fn relabel_qubits(&self, perm: &[usize]) -> Circuit {
        assert_eq!(perm.len(), self.num_qubits, "permutation length mismatch");
        Circuit::new(
            self.num_qubits,
            self.gates.iter().map(|g| (g.label.clone(), g.operands.map(|q| Qubit(perm[q.index()] as u32)))),
        )
        .expect("relabeling by a permutation keeps the circuit valid")
    }

    /// Gate list with qubits shifted by `offset` (used to place circuits side by side).
    pub(crate) fn shifted_gates(&self, offset: u32) -> impl Iterator<Item = (String, Operands)> + '_ {
        self.gates.iter().map(move |g| (g.label.clone(), g.operands.map(|q| Qubit(q.0 + offset))))
    }

    pub fn parse(text: &str) -> Result<Self, CircuitError> {
        io::parse_circuit(text)
    }

    pub fn to_text(&self) -> String {
        io::format_circuit(self)
    }
}

/// Incremental construction; validation happens in [`CircuitBuilder::build`].
#[derive(Clone, Debug)]
pub struct CircuitBuilder {
    num_qubits: usize,
    gates: Vec<(String, Operands)>,
}

impl CircuitBuilder {
    pub fn cx(mut self, control: u32, target: u32) -> Self {
        self.gates.push(("cx".into(), Operands::Two(Qubit(control), Qubit(target))));
        self
    }

    pub fn single(mut self, label: &str, q: u32) -> Self {
        self.gates.push((label.into(), Operands::Single(Qubit(q))));
        self
    }

    pub fn gate(mut self, label: &str, operands: Operands) -> Self {
        self.gates.push((label.into(), operands));
        self
    }

    pub fn build(self) -> Result<Circuit, CircuitError> {
        Circuit::new(self.num_qubits, self.gates)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyGraph {
    num_gates: usize,
    edges: Vec<(usize, usize)>,
}

impl DependencyGraph {
    pub fn num_gates(&self) -> usize {
        self.num_gates
    }

    /// Sorted `(from, to)` pairs; `to` consumes an output of `from`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Whether there is a directed path from `from` to `to`.
    pub fn depends(&self, from: usize, to: usize) -> bool {
        let mut reach = vec![false; self.num_gates];
        reach[from] = true;
        // edges are sorted by source and always point forward
        for &(a, b) in &self.edges {
            if reach[a] {
                reach[b] = true;
            }
        }
        from != to && reach[to]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerPartition {
    layers: Vec<Vec<usize>>,
}

impl LayerPartition {
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologyGraph {
    num_qubits: usize,
    edges: Vec<(Qubit, Qubit)>,
}

impl TopologyGraph {
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Normalized `(lo, hi)` qubit pairs, sorted.
    pub fn edges(&self) -> &[(Qubit, Qubit)] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.num_qubits, self.edges.iter().map(|&(a, b)| (a.index(), b.index())))
            .expect("topology edges are simple")
    }
}
