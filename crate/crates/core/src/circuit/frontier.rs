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

use fixedbitset::FixedBitSet;
use smallvec::{smallvec, SmallVec};

use super::{Circuit, Operands, Qubit, Subcircuit};

/// Per-qubit execution progress: entry `q` counts the executed gates at the
/// start of `q`'s chain.
///
/// Because dependency edges only join consecutive gates of a qubit line, the
/// executed part of a circuit is a prefix of every chain, so this vector
/// identifies a [`Subcircuit`] exactly. Componentwise `>=` on progress is
/// `is_smaller` on the remaining sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frontier(SmallVec<[u32; 8]>);

impl Frontier {
    /// Nothing executed.
    pub fn start(circuit: &Circuit) -> Self {
        Frontier(smallvec![0; circuit.num_qubits()])
    }

    pub fn from_subcircuit(s: &Subcircuit<'_>) -> Self {
        let c = s.parent();
        Frontier(
            (0..c.num_qubits())
                .map(|q| c.chain(Qubit(q as u32)).iter().take_while(|&&g| !s.contains(g)).count() as u32)
                .collect(),
        )
    }

    pub fn to_subcircuit<'c>(&self, circuit: &'c Circuit) -> Subcircuit<'c> {
        let mut remaining = FixedBitSet::with_capacity(circuit.len());
        for (q, &done) in self.0.iter().enumerate() {
            for &g in &circuit.chain(Qubit(q as u32))[done as usize..] {
                remaining.insert(g);
            }
        }
        Subcircuit::from_bits_unchecked(circuit, remaining)
    }

    pub fn progress(&self) -> &[u32] {
        &self.0
    }

    /// Every gate executed.
    pub fn is_complete(&self, circuit: &Circuit) -> bool {
        self.0.iter().enumerate().all(|(q, &done)| done as usize == circuit.chain(Qubit(q as u32)).len())
    }

    /// `self` is smaller than or equal to `other` as a subcircuit.
    #[inline]
    pub fn dominates(&self, other: &Frontier) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    /// In-place reduce: executes front gates that are single-qubit or whose
    /// operands satisfy `adjacent`, until a fixpoint.
    pub fn advance(&mut self, circuit: &Circuit, mut adjacent: impl FnMut(Qubit, Qubit) -> bool) {
        let n = self.0.len();
        loop {
            let mut moved = false;
            for q in 0..n {
                let chain = circuit.chain(Qubit(q as u32));
                while let Some(&g) = chain.get(self.0[q] as usize) {
                    match circuit.gate(g).operands() {
                        Operands::Single(_) => self.0[q] += 1,
                        Operands::Two(a, b) => {
                            // the gate is at the front only if both lines reached it
                            let (other, k) = if a.index() == q { (b, 1) } else { (a, 0) };
                            if self.0[other.index()] as usize != circuit.chain_position(g, k) || !adjacent(a, b) {
                                break;
                            }
                            self.0[a.index()] += 1;
                            self.0[b.index()] += 1;
                        }
                    }
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
    }
}
