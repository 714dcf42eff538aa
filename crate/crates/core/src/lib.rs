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

//! Exact SWAP-count computation for qubit routing on coupling graphs.
//!
//! The [`mapper`] finds the minimum number of SWAP gates that lets every
//! two-qubit gate of a [`Circuit`] act on adjacent nodes of a
//! [`CouplingGraph`]. The [`gadgets`] build mapping instances from graph
//! problems, and the [`oracle`] module holds independent brute-force checks.

pub mod circuit;
pub mod coupling;
pub mod experiment;
pub mod gadgets;
pub mod mapper;
pub mod oracle;

pub use circuit::{Circuit, CircuitError, Gate, Operands, Qubit, Subcircuit};
pub use coupling::{CouplingGraph, Family, Graph, GraphError, Node};
pub use mapper::{
    decide, solve_exact, solve_with, upper_bound, Cost, MapResult, Placement, SolveError, SolveOptions, SwapPlan,
};
