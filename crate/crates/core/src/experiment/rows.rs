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

use super::ExperimentError;

pub const CSV_HEADER: [&str; 6] = ["gt", "qt", "gt_add", "time", "samples", "seed"];

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub gt: usize,
    pub qt: usize,
    /// Mean SWAP count, rounded to the three decimals written to CSV.
    pub gt_add: f64,
    /// Mean solve time in seconds, rounded to five significant digits.
    pub time: f64,
    pub samples: usize,
    pub seed: u64,
}

impl ExperimentRow {
    pub fn new(gt: usize, qt: usize, mean_swaps: f64, time: f64, samples: usize, seed: u64) -> Self {
        let time = format!("{time:.4e}").parse().expect("formatted float parses");
        ExperimentRow { gt, qt, gt_add: (mean_swaps * 1000.0).round() / 1000.0, time, samples, seed }
    }
}

pub fn emit_csv(rows: &[ExperimentRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("writing to memory");
    for r in rows {
        w.write_record([
            r.gt.to_string(),
            r.qt.to_string(),
            format!("{:.3}", r.gt_add),
            format!("{:.4e}", r.time),
            r.samples.to_string(),
            r.seed.to_string(),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

pub fn parse_csv(text: &str) -> Result<Vec<ExperimentRow>, ExperimentError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let err = |line: u64, message: String| ExperimentError::Csv { line: line as usize, message };
    let header = reader.headers().map_err(|e| err(1, e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(err(1, format!("expected header {}", CSV_HEADER.join(","))));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| err(e.position().map_or(0, |p| p.line()), e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| record.get(i).unwrap_or("");
        fn num<T: std::str::FromStr>(s: &str, name: &str, line: u64) -> Result<T, ExperimentError> {
            s.parse().map_err(|_| ExperimentError::Csv { line: line as usize, message: format!("bad {name} {s:?}") })
        }
        rows.push(ExperimentRow {
            gt: num(field(0), "gt", line)?,
            qt: num(field(1), "qt", line)?,
            gt_add: num(field(2), "gt_add", line)?,
            time: num(field(3), "time", line)?,
            samples: num(field(4), "samples", line)?,
            seed: num(field(5), "seed", line)?,
        });
    }
    Ok(rows)
}
