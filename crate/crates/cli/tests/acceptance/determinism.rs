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

use std::path::Path;
use std::process::Command;

use crate::{ensure, Outcome};

fn qcm(dir: &Path, args: &[&str]) -> Result<String, String> {
    let out =
        Command::new(env!("CARGO_BIN_EXE_qcm")).current_dir(dir).args(args).output().map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "qcm {} failed: {}", args.join(" "), String::from_utf8_lossy(&out.stderr));
    Ok(String::from_utf8(out.stdout).unwrap())
}

/// CSV text with the time column removed.
fn without_time(csv: &str) -> String {
    csv.lines()
        .map(|l| l.split(',').enumerate().filter(|(i, _)| *i != 3).map(|(_, f)| f).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cli_is_deterministic() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    let mut reference: Option<(String, String, String)> = None;
    for threads in ["1", "2", "4"] {
        let csv = qcm(
            d,
            &["bench", "--qubits", "4", "--gates", "3:12", "--samples", "200", "--seed", "7", "--threads", threads],
        )?;
        let circuit =
            qcm(d, &["gen-circuit", "--qubits", "5", "--gates", "14", "--frac", "0.8", "--seed", "9", "--out", "c.qc"])
                .and_then(|_| std::fs::read_to_string(d.join("c.qc")).map_err(|e| e.to_string()))?;
        qcm(d, &["gen-graph", "--family", "grid_square:2x3", "--out", "g.cg"])?;
        let plan_file = format!("p{threads}.plan");
        qcm(d, &["solve", "--circuit", "c.qc", "--graph", "g.cg", "--plan", &plan_file, "--threads", threads])?;
        let plan = std::fs::read_to_string(d.join(&plan_file)).map_err(|e| e.to_string())?;
        let current = (without_time(&csv), circuit, plan);
        match &reference {
            None => reference = Some(current),
            Some(first) => {
                ensure!(first.0 == current.0, "CSV differs with --threads {threads}");
                ensure!(first.1 == current.1, "generated circuit differs");
                ensure!(first.2 == current.2, "plan differs with --threads {threads}");
            }
        }
    }
    Ok("CSV, circuit and plan identical for 1, 2 and 4 threads".into())
}
