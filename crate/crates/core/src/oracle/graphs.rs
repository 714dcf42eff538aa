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

use std::collections::VecDeque;

use super::OracleError;
use crate::coupling::Graph;

/// Node limit for the exponential oracles below.
pub const GRAPH_ORACLE_LIMIT: usize = 16;

fn guard(g: &Graph) -> Result<(), OracleError> {
    if g.num_nodes() > GRAPH_ORACLE_LIMIT {
        return Err(OracleError::GuardExceeded { what: "node count", value: g.num_nodes(), limit: GRAPH_ORACLE_LIMIT });
    }
    Ok(())
}

/// Extends `path` to visit every node; `close` additionally requires the last
/// node to neighbour the first; `end` fixes the last node.
fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool], close: bool, end: Option<usize>) -> bool {
    let last = *path.last().unwrap();
    if path.len() == g.num_nodes() {
        return (!close || g.has_edge(last, path[0])) && end.is_none_or(|e| e == last);
    }
    for &v in g.neighbors(last) {
        // the fixed endpoint may only be taken as the final node
        if used[v] || (end == Some(v) && path.len() + 1 != g.num_nodes()) {
            continue;
        }
        used[v] = true;
        path.push(v);
        if extend(g, path, used, close, end) {
            return true;
        }
        path.pop();
        used[v] = false;
    }
    false
}

/// A Hamiltonian cycle as a node order starting at 0. Graphs with fewer than
/// three nodes have none.
pub fn ham_cycle(g: &Graph) -> Result<Option<Vec<usize>>, OracleError> {
    guard(g)?;
    let n = g.num_nodes();
    if n < 3 {
        return Ok(None);
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut path = vec![0];
    Ok(extend(g, &mut path, &mut used, true, None).then_some(path))
}

/// A Hamiltonian path, optionally between the given endpoints.
pub fn ham_path(g: &Graph, endpoints: Option<(usize, usize)>) -> Result<Option<Vec<usize>>, OracleError> {
    guard(g)?;
    let n = g.num_nodes();
    if n == 0 {
        return Ok(None);
    }
    let (starts, end): (Vec<usize>, Option<usize>) = match endpoints {
        Some((s, t)) if s >= n || t >= n || (s == t && n > 1) => return Ok(None),
        Some((s, t)) => (vec![s], Some(t)),
        None => ((0..n).collect(), None),
    };
    for s in starts {
        let mut used = vec![false; n];
        used[s] = true;
        let mut path = vec![s];
        if extend(g, &mut path, &mut used, false, end) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Whether `g` has a clique on `k` nodes.
pub fn max_clique_at_least(g: &Graph, k: usize) -> Result<bool, OracleError> {
    guard(g)?;
    fn grow(g: &Graph, clique: &mut Vec<usize>, from: usize, k: usize) -> bool {
        if clique.len() == k {
            return true;
        }
        for v in from..g.num_nodes() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                if grow(g, clique, v + 1, k) {
                    return true;
                }
                clique.pop();
            }
        }
        false
    }
    Ok(grow(g, &mut Vec::new(), 0, k))
}

/// Hop distance, `None` when `t` is unreachable from `s`.
pub fn shortest_path(g: &Graph, s: usize, t: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.num_nodes()];
    let mut queue = VecDeque::from([s]);
    dist[s] = 0;
    while let Some(u) = queue.pop_front() {
        if u == t {
            return Some(dist[u]);
        }
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    None
}

/// Directed reachability over an arc list.
pub fn directed_reachable(num_nodes: usize, arcs: &[(usize, usize)], s: usize, t: usize) -> bool {
    let mut seen = vec![false; num_nodes];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(u) = stack.pop() {
        if u == t {
            return true;
        }
        for &(x, y) in arcs {
            if x == u && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}
