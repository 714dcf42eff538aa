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

use super::{invalid, GadgetError};
use crate::circuit::{Circuit, Operands, Qubit};

fn cx(a: usize, b: usize) -> (String, Operands) {
    ("cx".to_string(), Operands::Two(Qubit(a as u32), Qubit(b as u32)))
}

/// A CNOT on every pair of `n` qubits. For `n = 5` gates follow the
/// reference ten-gate layout; otherwise pairs come in lexicographic order.
pub fn gen_clique_circuit(n: usize) -> Result<Circuit, GadgetError> {
    if n < 2 {
        return Err(invalid("clique circuit", "n must be at least 2"));
    }
    let pairs: Vec<(usize, usize)> = if n == 5 {
        vec![(0, 1), (2, 3), (0, 2), (3, 4), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]
    } else {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    };
    Ok(Circuit::new(n, pairs.into_iter().map(|(a, b)| cx(a, b)))?)
}

/// Gate `i` acts on `(i, i + 1)`; gates with even `i` come first so the
/// depth is 2 (1 for `n = 2`).
pub fn gen_path_circuit(n: usize) -> Result<Circuit, GadgetError> {
    if n < 2 {
        return Err(invalid("path circuit", "n must be at least 2"));
    }
    Ok(Circuit::new(n, path_gates(n))?)
}

fn path_gates(n: usize) -> impl Iterator<Item = (String, Operands)> {
    (0..n - 1).step_by(2).chain((1..n - 1).step_by(2)).map(|i| cx(i, i + 1))
}

/// The path circuit closed by a CNOT on `(0, n - 1)`: depth 2 for even `n`,
/// 3 for odd `n`.
pub fn gen_cycle_circuit(n: usize) -> Result<Circuit, GadgetError> {
    if n < 3 {
        return Err(invalid("cycle circuit", "n must be at least 3"));
    }
    Ok(Circuit::new(n, path_gates(n).chain([cx(0, n - 1)]))?)
}

/// `h` consecutive copies on the same qubits.
pub fn repeat_circuit(c: &Circuit, h: usize) -> Result<Circuit, GadgetError> {
    if h == 0 {
        return Err(invalid("repeat", "h must be at least 1"));
    }
    Ok(Circuit::new(c.num_qubits(), (0..h).flat_map(|_| c.shifted_gates(0)))?)
}

/// `c1` on qubits `0..n1`, `c2` on `n1..n1+n2`, then a CNOT on `(0, n1)`.
pub fn parallel_bridge(c1: &Circuit, c2: &Circuit) -> Result<Circuit, GadgetError> {
    if c1.num_qubits() == 0 || c2.num_qubits() == 0 {
        return Err(invalid("parallel bridge", "both circuits need at least one qubit"));
    }
    let n1 = c1.num_qubits();
    let gates = c1.shifted_gates(0).chain(c2.shifted_gates(n1 as u32)).chain([cx(0, n1)]);
    Ok(Circuit::new(n1 + c2.num_qubits(), gates)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coupling::Graph;

    fn topology(c: &Circuit) -> Graph {
        c.topology_graph().to_graph()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    #[test]
    fn clique_circuits() {
        let c5 = gen_clique_circuit(5).unwrap();
        assert_eq!(c5.len(), 10);
        assert_eq!(topology(&c5), complete(5));
        assert_eq!(gen_clique_circuit(2).unwrap().len(), 1);
        let c4 = gen_clique_circuit(4).unwrap();
        assert_eq!(c4.len(), 6);
        assert_eq!(topology(&c4), complete(4));
        assert!(gen_clique_circuit(1).is_err());
    }

    #[test]
    fn path_and_cycle_depths() {
        for n in 3..10 {
            let p = gen_path_circuit(n).unwrap();
            assert_eq!(p.depth(), 2);
            assert_eq!(topology(&p), Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap());
            let c = gen_cycle_circuit(n).unwrap();
            assert_eq!(c.depth(), if n % 2 == 0 { 2 } else { 3 }, "n = {n}");
            assert_eq!(topology(&c), Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap());
        }
        assert_eq!(gen_path_circuit(2).unwrap().depth(), 1);
        assert!(gen_cycle_circuit(2).is_err());
    }

    #[test]
    fn repeat_and_bridge_sizes() {
        let c5 = gen_clique_circuit(5).unwrap();
        assert_eq!(repeat_circuit(&c5, 1).unwrap(), c5);
        assert_eq!(repeat_circuit(&c5, 2).unwrap().len(), 20);
        for h in 1..4 {
            let rep = repeat_circuit(&c5, h).unwrap();
            let both = parallel_bridge(&rep, &rep).unwrap();
            assert_eq!((both.num_qubits(), both.len()), (10, 20 * h + 1));
            let last = both.gates().last().unwrap();
            assert_eq!(last.qubits().collect::<Vec<_>>(), vec![Qubit(0), Qubit(5)]);
        }
        assert!(repeat_circuit(&c5, 0).is_err());
    }
}
