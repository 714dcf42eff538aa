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

//! Circuit and graph constructions from the hardness reductions, each with a
//! checker for the structure it is supposed to have.

mod circuits;
mod coloring;
mod instance;
mod reductions;
mod usp;

use thiserror::Error;

pub use circuits::{gen_clique_circuit, gen_cycle_circuit, gen_path_circuit, parallel_bridge, repeat_circuit};
pub use coloring::{circuit_from_degree_bounded_graph, edge_coloring};
pub use instance::{parse_header, ReductionInstance};
pub use reductions::{
    fixed_k_constructive_plan, reduce_clique_to_qcm, reduce_hamcycle_to_fixed_k, reduce_hamcycle_to_hampath_qcm,
    reduce_hamcycle_to_qcm, reduce_usp_to_qcm, usp_constructive_plan,
};
pub use usp::{build_usp_gadget, Digraph, UspGadget};

use crate::circuit::CircuitError;
use crate::coupling::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("{construction}: {reason}")]
    InvalidInput { construction: &'static str, reason: String },
    #[error("{construction}: maximum degree {found} exceeds {limit}")]
    DegreeBound { construction: &'static str, found: usize, limit: usize },
    #[error("gadget check failed: {0}")]
    CheckFailed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

fn invalid(construction: &'static str, reason: impl Into<String>) -> GadgetError {
    GadgetError::InvalidInput { construction, reason: reason.into() }
}
