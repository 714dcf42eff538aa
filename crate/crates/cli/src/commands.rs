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

use std::fs;
use std::path::{Path, PathBuf};

use qcm_core::experiment::{emit_csv, gen_random_circuit, run_table2, RandomCircuitSpec, Table2Config};
use qcm_core::gadgets::{
    fixed_k_constructive_plan, gen_clique_circuit, gen_cycle_circuit, gen_path_circuit, reduce_clique_to_qcm,
    reduce_hamcycle_to_fixed_k, reduce_hamcycle_to_hampath_qcm, reduce_hamcycle_to_qcm, reduce_usp_to_qcm,
    repeat_circuit, usp_constructive_plan, ReductionInstance,
};
use qcm_core::oracle::{ham_cycle, verify_plan, GRAPH_ORACLE_LIMIT};
use qcm_core::{decide, solve_with, Circuit, Cost, CouplingGraph, Family, SolveOptions, SwapPlan};

use crate::{CircuitKind, CliError, Command, Problem, SearchArgs};

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Writes to `out`, or stdout when absent.
fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_circuit(path: &Path) -> Result<Circuit> {
    Circuit::parse(&read(path)?).map_err(|e| CliError::in_file(path, e))
}

fn load_graph(path: &Path) -> Result<CouplingGraph> {
    CouplingGraph::parse(&read(path)?).map_err(|e| CliError::in_file(path, e))
}

fn options(search: &SearchArgs) -> SolveOptions {
    SolveOptions {
        threads: search.threads,
        state_cap: search.state_cap,
        strict_swaps: search.strict_swaps,
        symmetry: Vec::new(),
    }
}

/// Verifies `plan` against the instance and writes it; nothing is written
/// for a plan that fails.
fn write_verified_plan(circuit: &Circuit, graph: &CouplingGraph, plan: &SwapPlan, path: &Path) -> Result<()> {
    let report = verify_plan(circuit, graph, plan)?;
    if !report.accepted {
        return Err(CliError::Internal(format!("generated plan rejected: {:?}", report.failure)));
    }
    write(path, &plan.to_text())
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn require(value: Option<usize>, flag: &str, problem: &str) -> Result<usize> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for {problem}")))
}

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Solve { circuit, graph, plan, search } => {
            let (c, g) = (load_circuit(&circuit)?, load_graph(&graph)?);
            let result = solve_with(&c, &g, &options(&search))?;
            println!("cost {}", result.cost);
            match (result.cost, result.plan, plan) {
                (Cost::Infinite, _, _) => Ok(1),
                (_, Some(p), Some(path)) => write_verified_plan(&c, &g, &p, &path).map(|_| 0),
                _ => Ok(0),
            }
        }
        Command::Decide { circuit, graph, instance, k, search } => {
            let (c, g, k) = match instance {
                Some(prefix) => {
                    let paths = ["qc", "cg", "hdr"].map(|ext| with_suffix(&prefix, ext));
                    let inst = ReductionInstance::from_texts(&read(&paths[0])?, &read(&paths[1])?, &read(&paths[2])?)
                        .map_err(|e| CliError::in_file(&prefix, e))?;
                    let k = k.unwrap_or(inst.budget);
                    (inst.circuit, inst.graph, k)
                }
                None => {
                    let c = load_circuit(circuit.as_deref().expect("clap requires --circuit"))?;
                    let g = load_graph(graph.as_deref().expect("clap requires --graph"))?;
                    (c, g, k.expect("clap requires --k"))
                }
            };
            let yes = decide(&c, &g, k, &options(&search))?;
            println!("{}", if yes { "yes" } else { "no" });
            Ok(if yes { 0 } else { 1 })
        }
        Command::Verify { circuit, graph, plan } => {
            let (c, g) = (load_circuit(&circuit)?, load_graph(&graph)?);
            let p = SwapPlan::parse(&read(&plan)?, g.num_nodes()).map_err(|e| CliError::in_file(&plan, e))?;
            let report = verify_plan(&c, &g, &p)?;
            match report.failure {
                None => {
                    println!("accepted swaps_used {}", report.swaps_used);
                    Ok(0)
                }
                Some((step, reason)) => {
                    println!("rejected after {step} swaps: {reason}");
                    Ok(1)
                }
            }
        }
        Command::GenCircuit { kind, qubits, gates, frac, seed, repeat, out } => {
            let base = match kind {
                CircuitKind::Random => {
                    let gates =
                        gates.ok_or_else(|| CliError::Usage("--gates is required for random circuits".into()))?;
                    gen_random_circuit(&RandomCircuitSpec { qubits, gates, two_qubit_fraction: frac, seed })?
                }
                CircuitKind::Clique => gen_clique_circuit(qubits)?,
                CircuitKind::Path => gen_path_circuit(qubits)?,
                CircuitKind::Cycle => gen_cycle_circuit(qubits)?,
            };
            let c = if repeat == 1 { base } else { repeat_circuit(&base, repeat)? };
            emit(out.as_deref(), &c.to_text()).map(|_| 0)
        }
        Command::GenGraph { family, out } => {
            let family: Family = family.parse().map_err(CliError::Usage)?;
            let g = CouplingGraph::generate(&family)?;
            emit(out.as_deref(), &g.to_text()).map(|_| 0)
        }
        Command::Reduce { problem, input, out, n, s, t, k } => {
            let g = load_graph(&input)?;
            let (inst, plan) = match problem {
                Problem::Clique => (reduce_clique_to_qcm(&g, require(n, "n", "clique")?)?, None),
                Problem::Hamcycle => (reduce_hamcycle_to_qcm(&g)?, None),
                Problem::Hampath => (reduce_hamcycle_to_hampath_qcm(&g)?, None),
                Problem::Usp => {
                    let (s, t) = (require(s, "s", "usp")?, require(t, "t", "usp")?);
                    let inst = reduce_usp_to_qcm(&g, s, t, require(k, "k", "usp")?)?;
                    (inst, Some(usp_constructive_plan(&g, s, t)?))
                }
                Problem::FixedK => {
                    let k = require(k, "k", "fixed-k")?;
                    let inst = reduce_hamcycle_to_fixed_k(&g, k)?;
                    // a plan exists when the source has a Hamiltonian cycle
                    let cycle = if g.num_nodes() <= GRAPH_ORACLE_LIMIT { ham_cycle(g.graph())? } else { None };
                    let plan = cycle.map(|cyc| fixed_k_constructive_plan(&g, k, &cyc)).transpose()?;
                    (inst, plan)
                }
            };
            write(&with_suffix(&out, "qc"), &inst.circuit.to_text())?;
            write(&with_suffix(&out, "cg"), &inst.graph.to_text())?;
            write(&with_suffix(&out, "hdr"), &inst.header_line())?;
            if let Some(plan) = plan {
                write_verified_plan(&inst.circuit, &inst.graph, &plan, &with_suffix(&out, "plan"))?;
            }
            println!("{}", inst.header_line().trim_end());
            Ok(0)
        }
        Command::Bench { qubits, gates, samples, seed, frac, graph_nodes, out, search } => {
            let config = Table2Config {
                qubits,
                gates,
                samples,
                seed,
                two_qubit_fraction: frac,
                graph_nodes,
                threads: search.threads,
                state_cap: search.state_cap,
                strict_swaps: search.strict_swaps,
            };
            let rows = run_table2(&config)?;
            emit(out.as_deref(), &emit_csv(&rows)).map(|_| 0)
        }
    }
}
