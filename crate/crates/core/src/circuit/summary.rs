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

//! Compact summaries of a subcircuit over its parent's layer grid.
//!
//! Row `q` of the qubit-by-layer grid turns black at the parent layer of the
//! first remaining gate on `q` and stays black. Dropping the all-white
//! leading columns and merging equal neighbouring columns gives the
//! [`CircuitType`]; recording, for each merged column, the first parent layer
//! it came from gives the [`SubcircuitDescriptor`].

use fixedbitset::FixedBitSet;

use super::{Circuit, CircuitError, Qubit, Subcircuit};

/// First parent layer with a remaining gate, per qubit.
fn start_layers(s: &Subcircuit<'_>) -> Vec<Option<usize>> {
    let c = s.parent();
    (0..c.num_qubits())
        .map(|q| c.chain(Qubit(q as u32)).iter().find(|&&g| s.contains(g)).map(|&g| c.layer_of(g)))
        .collect()
}

/// `(first layer, black rows)` for every distinct non-empty column.
fn columns(s: &Subcircuit<'_>) -> Vec<(usize, Vec<Qubit>)> {
    let starts = start_layers(s);
    let mut cols: Vec<(usize, Vec<Qubit>)> = Vec::new();
    for layer in 0..s.parent().depth() {
        let black: Vec<Qubit> = starts
            .iter()
            .enumerate()
            .filter(|(_, st)| st.is_some_and(|st| st <= layer))
            .map(|(q, _)| Qubit(q as u32))
            .collect();
        if black.is_empty() || cols.last().is_some_and(|(_, prev)| *prev == black) {
            continue;
        }
        cols.push((layer, black));
    }
    cols
}

/// Row-monotone black/white grid, `rows` qubits by `cols` merged columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircuitType {
    rows: usize,
    cols: usize,
    black: Vec<bool>,
}

impl CircuitType {
    pub(super) fn of(s: &Subcircuit<'_>) -> Self {
        let rows = s.parent().num_qubits();
        let cols = columns(s);
        let mut black = vec![false; rows * cols.len()];
        for (j, (_, set)) in cols.iter().enumerate() {
            for q in set {
                black[q.index() * cols.len() + j] = true;
            }
        }
        CircuitType { rows, cols: cols.len(), black }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_black(&self, row: usize, col: usize) -> bool {
        self.black[row * self.cols + col]
    }

    /// Membership in the set of `rows x m` types, `1 <= m <= rows`: a black
    /// first column, black rows stay black to the right, and every later
    /// column turns at least one row black.
    pub fn is_well_formed(&self) -> bool {
        if self.cols == 0 || self.cols > self.rows {
            return false;
        }
        if !(0..self.rows).any(|i| self.is_black(i, 0)) {
            return false;
        }
        for i in 0..self.rows {
            for j in 1..self.cols {
                if self.is_black(i, j - 1) && !self.is_black(i, j) {
                    return false;
                }
            }
        }
        (1..self.cols).all(|j| (0..self.rows).any(|i| self.is_black(i, j) && !self.is_black(i, j - 1)))
    }
}

/// `[(l_1, Q_1), ..., (l_m, Q_m)]`: parent layer where each merged column
/// starts, and the qubits black in it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubcircuitDescriptor {
    entries: Vec<(usize, Vec<Qubit>)>,
}

impl SubcircuitDescriptor {
    pub(super) fn of(s: &Subcircuit<'_>) -> Self {
        SubcircuitDescriptor { entries: columns(s) }
    }

    pub fn new(entries: Vec<(usize, Vec<Qubit>)>) -> Self {
        SubcircuitDescriptor { entries }
    }

    pub fn entries(&self) -> &[(usize, Vec<Qubit>)] {
        &self.entries
    }

    /// Rebuilds the subcircuit: qubit `q` keeps every gate at or after the
    /// layer of the first entry containing it.
    pub fn restore<'c>(&self, circuit: &'c Circuit) -> Result<Subcircuit<'c>, CircuitError> {
        let bad = |msg: String| Err(CircuitError::InvalidDescriptor(msg));
        let n = circuit.num_qubits();
        let mut start: Vec<Option<usize>> = vec![None; n];
        let mut prev: Option<(usize, usize)> = None;
        for (layer, set) in &self.entries {
            if *layer >= circuit.depth() {
                return bad(format!("layer {layer} exceeds depth {}", circuit.depth()));
            }
            if let Some((pl, plen)) = prev {
                if *layer <= pl {
                    return bad(format!("layer {layer} does not increase past {pl}"));
                }
                if set.len() <= plen {
                    return bad(format!("column at layer {layer} adds no qubit"));
                }
            } else if set.is_empty() {
                return bad("first column is empty".into());
            }
            let mut seen = FixedBitSet::with_capacity(n);
            for q in set {
                if q.index() >= n {
                    return bad(format!("qubit {q} outside 0..{n}"));
                }
                if seen.put(q.index()) {
                    return bad(format!("qubit {q} listed twice at layer {layer}"));
                }
                if start[q.index()].is_none() {
                    start[q.index()] = Some(*layer);
                    let first_here = circuit.chain(*q).iter().any(|&g| circuit.layer_of(g) == *layer);
                    if !first_here {
                        return bad(format!("qubit {q} has no gate in layer {layer}"));
                    }
                }
            }
            let carried = start.iter().filter(|s| s.is_some()).count();
            if carried != set.len() {
                return bad(format!("column at layer {layer} drops a qubit"));
            }
            prev = Some((*layer, set.len()));
        }
        let mut remaining = FixedBitSet::with_capacity(circuit.len());
        for g in circuit.gates() {
            let layer = circuit.layer_of(g.id());
            let mut keep = g.qubits().map(|q| start[q.index()].is_some_and(|s| layer >= s));
            let first = keep.next().unwrap();
            if keep.next().is_some_and(|second| second != first) {
                return bad(format!("gate {} is kept on one operand line only", g.id()));
            }
            remaining.set(g.id(), first);
        }
        Ok(Subcircuit::from_bits_unchecked(circuit, remaining))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::fixtures::running_example;

    fn type_from_rows(rows: &[&str]) -> Vec<Vec<bool>> {
        rows.iter().map(|r| r.chars().map(|ch| ch == 'B').collect()).collect()
    }

    fn grid(t: &CircuitType) -> Vec<Vec<bool>> {
        (0..t.rows()).map(|i| (0..t.cols()).map(|j| t.is_black(i, j)).collect()).collect()
    }

    #[test]
    fn staircase_example_type() {
        // cx 0 1; cx 1 2; cx 2 1; cx 3 2 -> one gate per layer
        let c = Circuit::builder(4).cx(0, 1).cx(1, 2).cx(2, 1).cx(3, 2).build().unwrap();
        assert_eq!(c.depth(), 4);
        let t = Subcircuit::full(&c).circuit_type();
        assert_eq!((t.rows(), t.cols()), (4, 3));
        assert_eq!(grid(&t), type_from_rows(&["BBB", "BBB", "WBB", "WWB"]));
        assert!(t.is_well_formed());
    }

    #[test]
    fn running_example_type() {
        let c = running_example();
        // starts: q0 -> 0, q1 -> 1, q2 -> 0, q3 -> 1; columns {0,2}, {0,1,2,3}
        let t = Subcircuit::full(&c).circuit_type();
        assert_eq!(grid(&t), type_from_rows(&["BB", "WB", "BB", "WB"]));
        assert!(t.is_well_formed());
    }

    #[test]
    fn empty_subcircuit_has_no_columns() {
        let c = running_example();
        let e = Subcircuit::empty(&c);
        assert_eq!(e.circuit_type().cols(), 0);
        assert!(e.descriptor().entries().is_empty());
        assert_eq!(e.descriptor().restore(&c).unwrap(), e);
    }

    #[test]
    fn descriptor_round_trips() {
        let c = running_example();
        let s = Subcircuit::from_remaining(&c, [2, 4, 5, 6]).unwrap();
        let d = s.descriptor();
        assert_eq!(d.entries(), &[(1, vec![Qubit(0), Qubit(1)]), (2, vec![Qubit(0), Qubit(1), Qubit(3)])]);
        assert_eq!(d.restore(&c).unwrap(), s);
        let full = Subcircuit::full(&c);
        assert_eq!(full.descriptor().restore(&c).unwrap(), full);
    }

    #[test]
    fn restore_rejects_inconsistent_descriptors() {
        let c = running_example();
        let q = |i| Qubit(i);
        let cases = vec![
            vec![(7, vec![q(0)])],
            vec![(1, vec![q(0)]), (1, vec![q(0), q(1)])],
            vec![(0, vec![])],
            vec![(0, vec![q(9)])],
            // q1 first acts in layer 1
            vec![(0, vec![q(1)])],
            // cx 0 1 at layer 1 kept on q0 only
            vec![(1, vec![q(0)])],
            vec![(0, vec![q(0), q(2)]), (1, vec![q(0), q(1), q(3)])],
        ];
        for entries in cases {
            let d = SubcircuitDescriptor::new(entries.clone());
            assert!(matches!(d.restore(&c), Err(CircuitError::InvalidDescriptor(_))), "{entries:?}");
        }
    }
}
