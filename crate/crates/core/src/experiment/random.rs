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

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ExperimentError;
use crate::circuit::{Circuit, Operands, Qubit};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomCircuitSpec {
    pub qubits: usize,
    pub gates: usize,
    /// Probability that a gate is a CNOT rather than a single-qubit gate.
    pub two_qubit_fraction: f64,
    pub seed: u64,
}

/// Each gate independently: a CNOT on a uniform ordered pair of distinct
/// qubits with probability `two_qubit_fraction`, else `h` on a uniform qubit.
pub fn gen_random_circuit(spec: &RandomCircuitSpec) -> Result<Circuit, ExperimentError> {
    if spec.qubits < 2 || spec.gates == 0 {
        return Err(ExperimentError::Invalid(format!(
            "random circuit needs at least 2 qubits and 1 gate, got {} and {}",
            spec.qubits, spec.gates
        )));
    }
    if !(0.0..=1.0).contains(&spec.two_qubit_fraction) {
        return Err(ExperimentError::Invalid(format!("two-qubit fraction {} outside [0, 1]", spec.two_qubit_fraction)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.qubits as u32;
    let gates = (0..spec.gates).map(|_| {
        if rng.random_bool(spec.two_qubit_fraction) {
            let a = rng.random_range(0..n);
            let mut b = rng.random_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            ("cx".to_string(), Operands::Two(Qubit(a), Qubit(b)))
        } else {
            ("h".to_string(), Operands::Single(Qubit(rng.random_range(0..n))))
        }
    });
    Ok(Circuit::new(spec.qubits, gates.collect::<Vec<_>>()).expect("generated operands are in range and distinct"))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Independent per-sample seed, so results do not depend on scheduling.
pub fn sample_seed(seed: u64, gates: u64, sample: u64) -> u64 {
    splitmix64(splitmix64(splitmix64(seed) ^ gates) ^ sample)
}
