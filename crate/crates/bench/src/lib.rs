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

//! Seeded instances shared by the benchmarks.

use qcm_core::experiment::{gen_random_circuit, sample_seed, RandomCircuitSpec};
use qcm_core::Circuit;

/// `count` all-CNOT circuits, reproducible from `seed`.
pub fn random_circuits(qubits: usize, gates: usize, count: usize, seed: u64) -> Vec<Circuit> {
    (0..count as u64)
        .map(|i| {
            let spec =
                RandomCircuitSpec { qubits, gates, two_qubit_fraction: 1.0, seed: sample_seed(seed, gates as u64, i) };
            gen_random_circuit(&spec).expect("valid spec")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn circuits_are_reproducible() {
        let a = super::random_circuits(4, 10, 3, 1);
        assert_eq!(a, super::random_circuits(4, 10, 3, 1));
        assert!(a.iter().all(|c| c.len() == 10));
    }
}
