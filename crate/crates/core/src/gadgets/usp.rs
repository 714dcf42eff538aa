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

//! Degree-3 shortest-path gadget over an `m x m` grid of anchor nodes.
//!
//! Row `i` connects to row `i + 1` through binary trees: anchor `a(i, j)`
//! roots an out-tree, `a(i + 1, j')` roots an in-tree, and one leaf of each
//! is merged when `j = j'` or the source has an arc `j -> j'`. Every anchor
//! hangs one edge above its tree root and all leaves sit at depth `d`, so a
//! merged pair is exactly `2d + 2` apart.

use super::{invalid, GadgetError};
use crate::coupling::{Graph, Node};

/// Simple directed graph: no self-loops or repeated arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    num_nodes: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(num_nodes: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GadgetError> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (x, y) in arcs {
            if x >= num_nodes || y >= num_nodes {
                return Err(invalid("digraph", format!("arc ({x}, {y}) outside 0..{num_nodes}")));
            }
            if x == y {
                return Err(invalid("digraph", format!("self-loop at {x}")));
            }
            if list.contains(&(x, y)) {
                return Err(invalid("digraph", format!("repeated arc ({x}, {y})")));
            }
            list.push((x, y));
        }
        list.sort_unstable();
        Ok(Digraph { num_nodes, arcs: list })
    }

    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    /// Sorted arc list.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.arcs.binary_search(&(x, y)).is_ok()
    }

    /// Maximum over nodes of outdegree and indegree.
    pub fn max_degree(&self) -> usize {
        let mut out = vec![0; self.num_nodes];
        let mut inn = vec![0; self.num_nodes];
        for &(x, y) in &self.arcs {
            out[x] += 1;
            inn[y] += 1;
        }
        out.into_iter().chain(inn).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct UspGadget {
    /// Disconnected when no arc leaves a column.
    pub graph: Graph,
    /// `a(1, 1)`, the anchor of `s` in the first row.
    pub source: Node,
    /// `a(m, m)`, the anchor of `t` in the last row.
    pub sink: Node,
    /// `(m - 1)(2d + 2)`.
    pub target: usize,
    pub depth: usize,
    /// `columns[j]` is the source node shown in column `j`: `s` first, `t`
    /// last, the rest ascending.
    pub columns: Vec<usize>,
}

impl UspGadget {
    pub fn rows(&self) -> usize {
        self.columns.len()
    }

    pub fn anchor(&self, row: usize, col: usize) -> Node {
        Node((row * self.columns.len() + col) as u32)
    }

    /// Hop distance between two nodes, `None` across components.
    pub fn distance(&self, a: Node, b: Node) -> Option<usize> {
        self.graph.bfs_distances(a.index())[b.index()]
    }

    /// Whether `a(1,1)` and `a(m,m)` are within `target`.
    pub fn within_target(&self) -> bool {
        self.distance(self.source, self.sink).is_some_and(|d| d <= self.target)
    }

    /// Maximum degree at most 3, and consecutive-row anchors are `2d + 2`
    /// apart exactly when their columns are equal or joined by a source arc.
    pub fn check(&self, h: &Digraph) -> Result<(), GadgetError> {
        if self.graph.max_degree() > 3 {
            return Err(GadgetError::CheckFailed(format!("maximum degree {}", self.graph.max_degree())));
        }
        let m = self.rows();
        let step = 2 * self.depth + 2;
        for i in 0..m - 1 {
            for j in 0..m {
                let from = self.graph.bfs_distances(self.anchor(i, j).index());
                for jj in 0..m {
                    let linked = j == jj || h.has_arc(self.columns[j], self.columns[jj]);
                    let dist = from[self.anchor(i + 1, jj).index()].unwrap_or(usize::MAX);
                    if (dist == step) != linked || dist < step {
                        return Err(GadgetError::CheckFailed(format!(
                            "a({i},{j}) to a({},{jj}) is {:?} apart, linked = {linked}",
                            i + 1,
                            from[self.anchor(i + 1, jj).index()]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `ceil(log2(x))` for `x >= 1`.
fn ceil_log2(x: usize) -> usize {
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

struct Builder {
    edges: Vec<(usize, usize)>,
    next: usize,
    depth: usize,
}

impl Builder {
    fn fresh(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    /// Hangs a left-filled tree with `leaves` leaves below `anchor`. Leaves
    /// are fresh nodes unless `given` supplies them, left to right.
    fn tree(&mut self, anchor: usize, leaves: usize, given: Option<&[usize]>) -> Vec<usize> {
        let mut out = Vec::with_capacity(leaves);
        let root = self.subtree(0, leaves, given, &mut out);
        self.edges.push((anchor, root));
        out
    }

    fn subtree(&mut self, level: usize, leaves: usize, given: Option<&[usize]>, out: &mut Vec<usize>) -> usize {
        if level == self.depth {
            debug_assert_eq!(leaves, 1);
            let leaf = match given {
                Some(ids) => ids[out.len()],
                None => self.fresh(),
            };
            out.push(leaf);
            return leaf;
        }
        let node = self.fresh();
        let half = 1usize << (self.depth - level - 1);
        let left = leaves.min(half);
        for count in [left, leaves - left] {
            if count > 0 {
                let child = self.subtree(level + 1, count, given, out);
                self.edges.push((node, child));
            }
        }
        node
    }
}

/// Builds the gadget for source `h` with endpoints `s` and `t`: `h` has an
/// `s -> t` path iff `a(1,1)` and `a(m,m)` are at most `target` apart.
pub fn build_usp_gadget(h: &Digraph, s: usize, t: usize) -> Result<UspGadget, GadgetError> {
    let m = h.num_nodes();
    if m < 2 {
        return Err(invalid("usp gadget", "source graph needs at least 2 nodes"));
    }
    if s >= m || t >= m || s == t {
        return Err(invalid("usp gadget", format!("endpoints ({s}, {t}) must be distinct nodes of 0..{m}")));
    }
    let columns: Vec<usize> = std::iter::once(s).chain((0..m).filter(|&v| v != s && v != t)).chain([t]).collect();
    let mut col_of = vec![0; m];
    for (j, &v) in columns.iter().enumerate() {
        col_of[v] = j;
    }
    // arcs between columns, sorted so leaf order is canonical
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut in_arcs: Vec<Vec<usize>> = vec![Vec::new(); m];
    for &(x, y) in h.arcs() {
        out_arcs[col_of[x]].push(col_of[y]);
        in_arcs[col_of[y]].push(col_of[x]);
    }
    for list in out_arcs.iter_mut().chain(in_arcs.iter_mut()) {
        list.sort_unstable();
    }
    let depth = ceil_log2(h.max_degree() + 1);
    let mut b = Builder { edges: Vec::new(), next: m * m, depth };
    let anchor = |i: usize, j: usize| i * m + j;
    for i in 0..m - 1 {
        // leaf 0 is the vertical merge, leaf r + 1 the r-th outgoing arc
        let out_leaves: Vec<Vec<usize>> = (0..m).map(|j| b.tree(anchor(i, j), out_arcs[j].len() + 1, None)).collect();
        for jj in 0..m {
            let mut ids = vec![out_leaves[jj][0]];
            for &j in &in_arcs[jj] {
                let rank = out_arcs[j].binary_search(&jj).expect("arc lists agree");
                ids.push(out_leaves[j][rank + 1]);
            }
            b.tree(anchor(i + 1, jj), ids.len(), Some(&ids));
        }
    }
    let graph = Graph::new(b.next, b.edges)?;
    Ok(UspGadget {
        graph,
        source: Node(anchor(0, 0) as u32),
        sink: Node(anchor(m - 1, m - 1) as u32),
        target: (m - 1) * (2 * depth + 2),
        depth,
        columns,
    })
}
