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

use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use super::{Circuit, CircuitError, CircuitType, Frontier, Operands, Qubit, SubcircuitDescriptor};
use crate::coupling::CouplingGraph;
use crate::mapper::Placement;

/// The gates of a parent circuit that are still to be executed.
///
/// The remaining set is upward closed under dependency: if a gate remains,
/// so does every gate that depends on it. The empty set is the fully
/// executed circuit.
#[derive(Clone, Debug)]
pub struct Subcircuit<'c> {
    circuit: &'c Circuit,
    remaining: FixedBitSet,
}

impl PartialEq for Subcircuit<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.circuit, other.circuit) && self.remaining == other.remaining
    }
}

impl Eq for Subcircuit<'_> {}

impl Hash for Subcircuit<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.remaining.hash(state);
    }
}

impl<'c> Subcircuit<'c> {
    pub fn full(circuit: &'c Circuit) -> Self {
        let mut remaining = FixedBitSet::with_capacity(circuit.len());
        remaining.insert_range(..);
        Subcircuit { circuit, remaining }
    }

    pub fn empty(circuit: &'c Circuit) -> Self {
        Subcircuit { circuit, remaining: FixedBitSet::with_capacity(circuit.len()) }
    }

    /// Checks upward closure before accepting the set.
    pub fn from_remaining(circuit: &'c Circuit, gates: impl IntoIterator<Item = usize>) -> Result<Self, CircuitError> {
        let mut remaining = FixedBitSet::with_capacity(circuit.len());
        for g in gates {
            if g >= circuit.len() {
                return Err(CircuitError::UnknownGate(g));
            }
            remaining.insert(g);
        }
        for g in remaining.ones() {
            if let Some(successor) = circuit.successors(g).find(|&s| !remaining.contains(s)) {
                return Err(CircuitError::NotUpwardClosed { gate: g, successor });
            }
        }
        Ok(Subcircuit { circuit, remaining })
    }

    pub(crate) fn from_bits_unchecked(circuit: &'c Circuit, remaining: FixedBitSet) -> Self {
        Subcircuit { circuit, remaining }
    }

    pub fn parent(&self) -> &'c Circuit {
        self.circuit
    }

    pub fn remaining(&self) -> impl Iterator<Item = usize> + '_ {
        self.remaining.ones()
    }

    pub fn remaining_set(&self) -> &FixedBitSet {
        &self.remaining
    }

    pub fn contains(&self, gate: usize) -> bool {
        self.remaining.contains(gate)
    }

    pub fn len(&self) -> usize {
        self.remaining.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.remaining.is_clear()
    }

    /// Remaining gates with no remaining dependency predecessor.
    pub fn front_gates(&self) -> Vec<usize> {
        self.remaining.ones().filter(|&g| self.circuit.predecessors(g).all(|p| !self.remaining.contains(p))).collect()
    }

    /// Repeatedly removes front gates that are single-qubit or act on
    /// adjacent nodes under `placement`, until none is left to remove.
    pub fn reduce(&self, placement: &Placement, graph: &CouplingGraph) -> Subcircuit<'c> {
        assert!(placement.num_qubits() >= self.circuit.num_qubits(), "placement does not cover every circuit qubit");
        self.reduce_with(|a, b| graph.has_edge(placement.node_of(a), placement.node_of(b)))
    }

    /// [`Subcircuit::reduce`] with an arbitrary adjacency predicate on logical qubits.
    pub fn reduce_with(&self, mut adjacent: impl FnMut(Qubit, Qubit) -> bool) -> Subcircuit<'c> {
        let mut remaining = self.remaining.clone();
        loop {
            let executable: Vec<usize> = remaining
                .ones()
                .filter(|&g| self.circuit.predecessors(g).all(|p| !remaining.contains(p)))
                .filter(|&g| match self.circuit.gate(g).operands() {
                    Operands::Single(_) => true,
                    Operands::Two(a, b) => adjacent(a, b),
                })
                .collect();
            if executable.is_empty() {
                break;
            }
            for g in executable {
                remaining.remove(g);
            }
        }
        Subcircuit { circuit: self.circuit, remaining }
    }

    /// `self` is smaller than `other` when its remaining gates are a subset of
    /// `other`'s.
    pub fn is_smaller(&self, other: &Subcircuit<'_>) -> Result<bool, CircuitError> {
        if !std::ptr::eq(self.circuit, other.circuit) {
            return Err(CircuitError::DifferentParents);
        }
        Ok(self.remaining.is_subset(&other.remaining))
    }

    /// The remaining gates as a standalone circuit on the same qubits.
    pub fn to_circuit(&self) -> Circuit {
        self.circuit.filtered(|g| self.remaining.contains(g.id()))
    }

    pub fn frontier(&self) -> Frontier {
        Frontier::from_subcircuit(self)
    }

    pub fn circuit_type(&self) -> CircuitType {
        CircuitType::of(self)
    }

    pub fn descriptor(&self) -> SubcircuitDescriptor {
        SubcircuitDescriptor::of(self)
    }
}

/// Keeps only the minimal subcircuits of `set`; duplicates collapse to their
/// first occurrence.
///
/// # Panics
///
/// If the subcircuits do not share a parent circuit.
pub fn minimize<'c>(set: &[Subcircuit<'c>]) -> Vec<Subcircuit<'c>> {
    let mut out: Vec<Subcircuit<'c>> = Vec::new();
    for (i, s) in set.iter().enumerate() {
        let dominated = set.iter().enumerate().any(|(j, t)| {
            let smaller = t.is_smaller(s).expect("minimize needs a common parent");
            smaller && (t.remaining != s.remaining || j < i)
        });
        if !dominated {
            out.push(s.clone());
        }
    }
    out
}
