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

//! Exact qubit mapping: minimum number of SWAPs needed to run a circuit on a
//! coupling graph, with a witness plan.

mod placement;
mod plan;
mod search;

pub use placement::{Placement, PlacementError};
pub use plan::{PlanError, SwapPlan};
pub use search::{
    decide, solve_exact, solve_from, solve_with, upper_bound, zero_swap_placement, Cost, MapResult, SearchStats,
    SolveError, SolveOptions,
};
