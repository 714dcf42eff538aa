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

//! Random-circuit sweeps on linear coupling graphs, with CSV output.

mod random;
mod rows;
mod stats;

use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

pub use random::{gen_random_circuit, sample_seed, RandomCircuitSpec};
pub use rows::{emit_csv, parse_csv, ExperimentRow, CSV_HEADER};
pub use stats::spearman;

use crate::coupling::{CouplingGraph, Family, GraphError};
use crate::mapper::{solve_with, Cost, SolveError, SolveOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExperimentError {
    #[error("invalid experiment: {0}")]
    Invalid(String),
    #[error("line {line}: {message}")]
    Csv { line: usize, message: String },
    #[error("sample {sample} at {gates} gates has no finite cost")]
    Infinite { gates: usize, sample: usize },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One sweep: for every gate count, `samples` random circuits solved exactly
/// on a linear graph.
#[derive(Clone, Debug)]
pub struct Table2Config {
    pub qubits: usize,
    pub gates: RangeInclusive<usize>,
    pub samples: usize,
    pub seed: u64,
    pub two_qubit_fraction: f64,
    /// Linear graph size; defaults to `qubits`.
    pub graph_nodes: Option<usize>,
    /// Worker threads for the sweep; each solve runs single-threaded.
    pub threads: Option<usize>,
    pub state_cap: Option<usize>,
    pub strict_swaps: bool,
}

impl Table2Config {
    pub fn new(qubits: usize, gates: RangeInclusive<usize>, samples: usize, seed: u64) -> Self {
        Table2Config {
            qubits,
            gates,
            samples,
            seed,
            two_qubit_fraction: 1.0,
            graph_nodes: None,
            threads: None,
            state_cap: None,
            strict_swaps: false,
        }
    }
}

/// Rows in gate-count order. `gt_add` depends only on the configuration;
/// `time` is the mean wall time of the exact solve alone.
pub fn run_table2(config: &Table2Config) -> Result<Vec<ExperimentRow>, ExperimentError> {
    if config.samples == 0 {
        return Err(ExperimentError::Invalid("samples must be at least 1".into()));
    }
    let graph = CouplingGraph::generate(&Family::Linear(config.graph_nodes.unwrap_or(config.qubits)))?;
    let opts = SolveOptions {
        threads: Some(1),
        state_cap: config.state_cap,
        strict_swaps: config.strict_swaps,
        symmetry: Vec::new(),
    };
    let one = |gates: usize, sample: usize| -> Result<(u64, f64), ExperimentError> {
        let spec = RandomCircuitSpec {
            qubits: config.qubits,
            gates,
            two_qubit_fraction: config.two_qubit_fraction,
            seed: sample_seed(config.seed, gates as u64, sample as u64),
        };
        let circuit = gen_random_circuit(&spec)?;
        let start = Instant::now();
        let result = solve_with(&circuit, &graph, &opts)?;
        let elapsed = start.elapsed().as_secs_f64();
        match result.cost {
            Cost::Finite(k) => Ok((k as u64, elapsed)),
            Cost::Infinite => Err(ExperimentError::Infinite { gates, sample }),
        }
    };
    let sweep = || {
        config
            .gates
            .clone()
            .map(|gates| {
                let per_sample: Vec<(u64, f64)> =
                    (0..config.samples).into_par_iter().map(|i| one(gates, i)).collect::<Result<_, _>>()?;
                // exact integer sum first so the mean is order independent
                let total: u64 = per_sample.iter().map(|p| p.0).sum();
                let time: f64 = per_sample.iter().map(|p| p.1).sum::<f64>() / config.samples as f64;
                Ok(ExperimentRow::new(
                    gates,
                    config.qubits,
                    total as f64 / config.samples as f64,
                    time,
                    config.samples,
                    config.seed,
                ))
            })
            .collect::<Result<Vec<_>, ExperimentError>>()
    };
    match config.threads {
        None => sweep(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| ExperimentError::Invalid(format!("thread pool: {e}")))?
            .install(sweep),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_is_deterministic_across_thread_counts() {
        let mut cfg = Table2Config::new(3, 3..=6, 40, 11);
        cfg.threads = Some(1);
        let a = run_table2(&cfg).unwrap();
        cfg.threads = Some(3);
        let b = run_table2(&cfg).unwrap();
        let strip =
            |rows: &[ExperimentRow]| rows.iter().map(|r| (r.gt, r.qt, r.gt_add, r.samples, r.seed)).collect::<Vec<_>>();
        assert_eq!(strip(&a), strip(&b));
        assert!(a.iter().all(|r| r.gt_add >= 0.0 && r.time >= 0.0));
    }

    #[test]
    fn no_two_qubit_gates_costs_nothing() {
        let mut cfg = Table2Config::new(4, 5..=5, 10, 3);
        cfg.two_qubit_fraction = 0.0;
        assert_eq!(run_table2(&cfg).unwrap()[0].gt_add, 0.0);
    }

    #[test]
    fn three_cnots_on_three_qubits() {
        // cost is 1 exactly when the three gates use three different pairs
        let cfg = Table2Config::new(3, 3..=3, 3000, 5);
        let mean = run_table2(&cfg).unwrap()[0].gt_add;
        assert!((mean - 6.0 / 27.0).abs() < 0.03, "{mean}");
    }

    #[test]
    fn rejects_zero_samples() {
        assert!(run_table2(&Table2Config::new(3, 3..=3, 0, 1)).is_err());
    }
}
