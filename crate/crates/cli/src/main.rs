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

//! `qcm`: exact qubit mapping from the command line.
//!
//! Exit status: 0 success or "yes", 1 "no", 2 usage or input error,
//! 3 resource guard tripped.

mod commands;
mod error;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliError;

#[derive(Parser)]
#[command(name = "qcm", version, about = "Exact qubit mapping with minimal SWAP insertion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct SearchArgs {
    /// Worker threads; results do not depend on this.
    #[arg(long)]
    threads: Option<usize>,
    /// Abort (exit 3) when one search level holds more states than this.
    #[arg(long)]
    state_cap: Option<usize>,
    /// Only swap edges whose endpoints both hold a qubit.
    #[arg(long)]
    strict_swaps: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum SWAP count for a circuit on a coupling graph.
    Solve {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        /// Write the witness plan here (verified first).
        #[arg(long)]
        plan: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Whether k SWAPs suffice; exit 0 for yes, 1 for no.
    Decide {
        #[arg(long, required_unless_present = "instance")]
        circuit: Option<PathBuf>,
        #[arg(long, required_unless_present = "instance")]
        graph: Option<PathBuf>,
        /// Reduction instance prefix: reads PREFIX.qc, PREFIX.cg, PREFIX.hdr.
        #[arg(long, conflicts_with_all = ["circuit", "graph"])]
        instance: Option<PathBuf>,
        /// Swap budget; defaults to the instance budget.
        #[arg(long, required_unless_present = "instance")]
        k: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Checks a swap plan; exit 0 if it runs the whole circuit, 1 if not.
    Verify {
        #[arg(long)]
        circuit: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        plan: PathBuf,
    },
    /// Writes a circuit file.
    GenCircuit {
        #[arg(long, value_enum, default_value_t = CircuitKind::Random)]
        kind: CircuitKind,
        #[arg(long)]
        qubits: usize,
        /// Gate count (random circuits only).
        #[arg(long)]
        gates: Option<usize>,
        /// Probability of a CNOT per gate (random circuits only).
        #[arg(long, default_value_t = 1.0)]
        frac: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Concatenate this many copies.
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Writes a coupling graph from a family such as `linear:5`,
    /// `grid_square:3x3` or `tokyo`.
    GenGraph {
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Builds a QCM instance from a graph problem; writes PREFIX.qc,
    /// PREFIX.cg and PREFIX.hdr, plus PREFIX.plan when a constructive plan
    /// is available.
    Reduce {
        #[arg(long, value_enum)]
        problem: Problem,
        /// Source graph in the graph text format.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Clique size (clique).
        #[arg(long)]
        n: Option<usize>,
        /// Endpoints (usp).
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Path-length bound (usp) or fixed swap count (fixed-k).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Random-circuit sweep on a linear graph, as CSV.
    Bench {
        #[arg(long)]
        qubits: usize,
        /// Gate counts, `lo:hi` inclusive or a single value.
        #[arg(long, value_parser = parse_range)]
        gates: RangeInclusive<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        frac: f64,
        /// Linear graph size; defaults to the qubit count.
        #[arg(long)]
        graph_nodes: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CircuitKind {
    Random,
    Clique,
    Path,
    Cycle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Problem {
    Clique,
    Hamcycle,
    Hampath,
    Usp,
    FixedK,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = s.split_once(':').unwrap_or((s, s));
    let lo: usize = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok(lo..=hi)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("qcm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
