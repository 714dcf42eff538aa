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

use thiserror::Error;

use crate::circuit::Qubit;
use crate::coupling::Node;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlacementError {
    #[error("qubit {qubit} is placed on node {node}, outside 0..{num_nodes}")]
    NodeOutOfRange { qubit: usize, node: u32, num_nodes: usize },
    #[error("node {0} holds more than one qubit")]
    NotInjective(u32),
    #[error("placement covers {got} qubits, expected {expected}")]
    WrongQubitCount { expected: usize, got: usize },
    #[error("placement targets {got} nodes, graph has {expected}")]
    WrongNodeCount { expected: usize, got: usize },
}

/// Injective assignment of logical qubits to physical nodes, with the
/// inverse occupancy table kept in sync.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    to_node: Vec<Node>,
    to_qubit: Vec<Option<Qubit>>,
}

impl Placement {
    /// `nodes[q]` is the node holding logical qubit `q`.
    pub fn new(nodes: Vec<Node>, num_nodes: usize) -> Result<Self, PlacementError> {
        let mut to_qubit = vec![None; num_nodes];
        for (q, &node) in nodes.iter().enumerate() {
            let slot = to_qubit.get_mut(node.index()).ok_or(PlacementError::NodeOutOfRange {
                qubit: q,
                node: node.0,
                num_nodes,
            })?;
            if slot.is_some() {
                return Err(PlacementError::NotInjective(node.0));
            }
            *slot = Some(Qubit(q as u32));
        }
        Ok(Placement { to_node: nodes, to_qubit })
    }

    /// Qubit `q` on node `q`.
    pub fn identity(num_qubits: usize, num_nodes: usize) -> Result<Self, PlacementError> {
        Self::new((0..num_qubits as u32).map(Node).collect(), num_nodes)
    }

    pub fn num_qubits(&self) -> usize {
        self.to_node.len()
    }

    pub fn num_nodes(&self) -> usize {
        self.to_qubit.len()
    }

    #[inline]
    pub fn node_of(&self, q: Qubit) -> Node {
        self.to_node[q.index()]
    }

    pub fn qubit_at(&self, node: Node) -> Option<Qubit> {
        self.to_qubit[node.index()]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.to_node
    }

    /// Exchanges the contents of two nodes; either may be empty.
    pub fn swap_nodes(&mut self, a: Node, b: Node) {
        let (qa, qb) = (self.to_qubit[a.index()], self.to_qubit[b.index()]);
        if let Some(q) = qa {
            self.to_node[q.index()] = b;
        }
        if let Some(q) = qb {
            self.to_node[q.index()] = a;
        }
        self.to_qubit.swap(a.index(), b.index());
    }

    pub(crate) fn check_shape(&self, num_qubits: usize, num_nodes: usize) -> Result<(), PlacementError> {
        if self.num_qubits() != num_qubits {
            return Err(PlacementError::WrongQubitCount { expected: num_qubits, got: self.num_qubits() });
        }
        if self.num_nodes() != num_nodes {
            return Err(PlacementError::WrongNodeCount { expected: num_nodes, got: self.num_nodes() });
        }
        Ok(())
    }
}
