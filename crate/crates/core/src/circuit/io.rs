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

//! Line-based circuit text format:
//!
//! ```text
//! qubits 3
//! h 0
//! cx 0 1   # comment
//! ```

use std::fmt::Write;

use super::{Circuit, CircuitError, Operands, Qubit};

fn parse_err(line: usize, message: impl Into<String>) -> CircuitError {
    CircuitError::Parse { line, message: message.into() }
}

fn qubit(line: usize, tok: &str, num_qubits: usize) -> Result<Qubit, CircuitError> {
    let q: u32 = tok.parse().map_err(|_| parse_err(line, format!("bad qubit index {tok:?}")))?;
    if q as usize >= num_qubits {
        return Err(parse_err(line, format!("qubit {q} outside 0..{num_qubits}")));
    }
    Ok(Qubit(q))
}

pub(super) fn parse_circuit(text: &str) -> Result<Circuit, CircuitError> {
    let mut num_qubits = None;
    let mut gates = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks[0] == "qubits" {
            if num_qubits.is_some() {
                return Err(parse_err(line, "repeated `qubits` header"));
            }
            if toks.len() != 2 {
                return Err(parse_err(line, "expected `qubits <n>`"));
            }
            let n = toks[1].parse().map_err(|_| parse_err(line, format!("bad qubit count {:?}", toks[1])))?;
            num_qubits = Some(n);
            continue;
        }
        let n = num_qubits.ok_or_else(|| parse_err(line, "gate before `qubits` header"))?;
        let operands = match toks.as_slice() {
            [_, a] => Operands::Single(qubit(line, a, n)?),
            [_, a, b] => {
                let (a, b) = (qubit(line, a, n)?, qubit(line, b, n)?);
                if a == b {
                    return Err(parse_err(line, format!("two-qubit gate repeats qubit {a}")));
                }
                Operands::Two(a, b)
            }
            _ => return Err(parse_err(line, "expected `<label> <q>` or `<label> <q1> <q2>`")),
        };
        gates.push((toks[0].to_string(), operands));
    }
    let n = num_qubits.ok_or_else(|| parse_err(1, "missing `qubits` header"))?;
    Circuit::new(n, gates)
}

pub(super) fn format_circuit(c: &Circuit) -> String {
    let mut out = String::new();
    writeln!(out, "qubits {}", c.num_qubits()).unwrap();
    for g in c.gates() {
        match g.operands() {
            Operands::Single(a) => writeln!(out, "{} {a}", g.label()).unwrap(),
            Operands::Two(a, b) => writeln!(out, "{} {a} {b}", g.label()).unwrap(),
        }
    }
    out
}
