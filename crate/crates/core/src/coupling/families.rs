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

use std::fmt;
use std::str::FromStr;

use super::{CouplingGraph, GraphError};

/// Generated device families.
///
/// Grid extents count nodes, numbered row-major: node `(r, c)` is `r * cols + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Linear(usize),
    Cycle(usize),
    Clique(usize),
    /// Square lattice, 4-neighbourhood.
    GridSquare {
        rows: usize,
        cols: usize,
    },
    /// Honeycomb lattice in brick-wall form: every horizontal edge, and the
    /// vertical edge below `(r, c)` only when `r + c` is even.
    GridHex {
        rows: usize,
        cols: usize,
    },
    /// Triangular lattice in axial coordinates: right, down and down-right.
    GridTriangle {
        rows: usize,
        cols: usize,
    },
    /// IBM QX20 Tokyo, nodes `Q0..Q19`.
    Tokyo,
    /// Rigetti 16Q-Aspen, node `i` is `Q(i+1)`.
    Aspen,
}

const TOKYO_EDGES: [(usize, usize); 43] = [
    (0, 1),
    (0, 5),
    (1, 2),
    (1, 6),
    (1, 7),
    (2, 3),
    (2, 7),
    (2, 6),
    (3, 4),
    (3, 8),
    (3, 9),
    (4, 9),
    (4, 8),
    (5, 6),
    (5, 10),
    (5, 11),
    (6, 7),
    (6, 11),
    (6, 10),
    (7, 8),
    (7, 12),
    (7, 13),
    (8, 9),
    (8, 13),
    (8, 12),
    (9, 14),
    (10, 11),
    (10, 15),
    (11, 12),
    (11, 16),
    (11, 17),
    (12, 13),
    (12, 17),
    (12, 16),
    (13, 14),
    (13, 18),
    (13, 19),
    (14, 19),
    (14, 18),
    (15, 16),
    (16, 17),
    (17, 18),
    (18, 19),
];

// Q-indices from the device drawing, shifted down by one.
const ASPEN_EDGES: [(usize, usize); 18] = [
    (1, 2),
    (1, 5),
    (2, 6),
    (3, 4),
    (3, 7),
    (4, 8),
    (5, 9),
    (6, 7),
    (6, 10),
    (7, 11),
    (8, 12),
    (9, 13),
    (10, 11),
    (10, 14),
    (11, 15),
    (12, 16),
    (13, 14),
    (15, 16),
];

fn invalid(family: &'static str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidSize { family, reason: reason.into() }
}

fn grid_dims(family: &'static str, rows: usize, cols: usize) -> Result<(), GraphError> {
    if rows == 0 || cols == 0 {
        return Err(invalid(family, "rows and cols must be at least 1"));
    }
    Ok(())
}

pub(super) fn generate(family: &Family) -> Result<CouplingGraph, GraphError> {
    fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<CouplingGraph, GraphError> {
        CouplingGraph::from_edge_list(n, edges)
    }
    match *family {
        Family::Linear(n) => {
            if n == 0 {
                return Err(invalid("linear", "n must be at least 1"));
            }
            build(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle", "n must be at least 3"));
            }
            build(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Clique(n) => {
            if n == 0 {
                return Err(invalid("clique", "n must be at least 1"));
            }
            build(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
        }
        Family::GridSquare { rows, cols } => {
            grid_dims("grid_square", rows, cols)?;
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            build(rows * cols, edges)
        }
        Family::GridHex { rows, cols } => {
            grid_dims("grid_hex", rows, cols)?;
            if rows > 1 && cols < 2 {
                return Err(invalid("grid_hex", "a multi-row honeycomb needs at least 2 columns"));
            }
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows && (r + c) % 2 == 0 {
                        edges.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
            build(rows * cols, edges)
        }
        Family::GridTriangle { rows, cols } => {
            grid_dims("grid_triangle", rows, cols)?;
            let id = |r: usize, c: usize| r * cols + c;
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        edges.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        edges.push((id(r, c), id(r + 1, c)));
                        if c + 1 < cols {
                            edges.push((id(r, c), id(r + 1, c + 1)));
                        }
                    }
                }
            }
            build(rows * cols, edges)
        }
        Family::Tokyo => build(20, TOKYO_EDGES),
        Family::Aspen => build(16, ASPEN_EDGES.iter().map(|&(a, b)| (a - 1, b - 1))),
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Linear(n) => write!(f, "linear:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Clique(n) => write!(f, "clique:{n}"),
            Family::GridSquare { rows, cols } => write!(f, "grid_square:{rows}x{cols}"),
            Family::GridHex { rows, cols } => write!(f, "grid_hex:{rows}x{cols}"),
            Family::GridTriangle { rows, cols } => write!(f, "grid_triangle:{rows}x{cols}"),
            Family::Tokyo => f.write_str("tokyo"),
            Family::Aspen => f.write_str("aspen"),
        }
    }
}

/// Parses `linear:5`, `grid_hex:3x4`, `tokyo`, ...
impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let count = || -> Result<usize, String> {
            arg.ok_or_else(|| format!("{name} needs a size, e.g. {name}:5"))?
                .parse()
                .map_err(|e| format!("bad size for {name}: {e}"))
        };
        let dims = || -> Result<(usize, usize), String> {
            let arg = arg.ok_or_else(|| format!("{name} needs an extent, e.g. {name}:3x3"))?;
            let (r, c) = arg.split_once('x').ok_or_else(|| format!("bad extent {arg:?}, expected RxC"))?;
            let r = r.parse().map_err(|e| format!("bad rows: {e}"))?;
            let c = c.parse().map_err(|e| format!("bad cols: {e}"))?;
            Ok((r, c))
        };
        match name {
            "linear" => Ok(Family::Linear(count()?)),
            "cycle" => Ok(Family::Cycle(count()?)),
            "clique" => Ok(Family::Clique(count()?)),
            "grid_square" => dims().map(|(rows, cols)| Family::GridSquare { rows, cols }),
            "grid_hex" => dims().map(|(rows, cols)| Family::GridHex { rows, cols }),
            "grid_triangle" => dims().map(|(rows, cols)| Family::GridTriangle { rows, cols }),
            "tokyo" => Ok(Family::Tokyo),
            "aspen" => Ok(Family::Aspen),
            other => Err(format!("unknown graph family {other:?}")),
        }
    }
}
