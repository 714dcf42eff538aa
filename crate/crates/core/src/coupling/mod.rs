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

//! Physical device model.
//!
//! [`Graph`] is a plain simple undirected graph (possibly disconnected) used by
//! the gadget builders and oracles. [`CouplingGraph`] wraps a connected
//! [`Graph`] together with its all-pairs hop distances and diameter.

mod families;
mod io;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use families::Family;

/// A physical qubit, i.e. a node of a coupling graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node(pub u32);

impl Node {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({a}, {b}) references a node outside 0..{num_nodes}")]
    NodeOutOfRange { a: usize, b: usize, num_nodes: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no nodes")]
    Empty,
    #[error("invalid size for {family}: {reason}")]
    InvalidSize { family: &'static str, reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. Edges are stored normalized as `(min, max)` and sorted.
    pub fn new(num_nodes: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); num_nodes];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= num_nodes || b >= num_nodes {
                return Err(GraphError::NodeOutOfRange { a, b, num_nodes });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            list.push((lo, hi));
            adj[lo].push(hi);
            adj[hi].push(lo);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { adj, edges: list })
    }

    pub fn num_nodes(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(lo, hi)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.adj.len() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Two-colors the graph component by component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.num_nodes();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Hop distances from `source`; `None` marks unreachable nodes.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.num_nodes()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.num_nodes() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// The graph with node `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.num_nodes(), "permutation length mismatch");
        Graph::new(self.num_nodes(), self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
            .expect("relabeling by a permutation keeps the graph simple")
    }
}

/// Connected device graph with precomputed hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouplingGraph {
    graph: Graph,
    dist: Vec<u32>,
    diameter: usize,
}

impl CouplingGraph {
    /// Validates the edge list and runs one BFS per node.
    pub fn from_edge_list(
        num_nodes: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        Self::from_graph(Graph::new(num_nodes, edges)?)
    }

    pub fn from_graph(graph: Graph) -> Result<Self, GraphError> {
        let n = graph.num_nodes();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut dist = vec![0u32; n * n];
        let mut diameter = 0;
        for s in 0..n {
            for (t, d) in graph.bfs_distances(s).into_iter().enumerate() {
                let d = d.ok_or(GraphError::Disconnected)?;
                dist[s * n + t] = d as u32;
                diameter = diameter.max(d);
            }
        }
        Ok(CouplingGraph { graph, dist, diameter })
    }

    pub fn generate(family: &Family) -> Result<Self, GraphError> {
        families::generate(family)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn num_nodes(&self) -> usize {
        self.graph.num_nodes()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        self.graph.edges()
    }

    pub fn has_edge(&self, a: Node, b: Node) -> bool {
        self.graph.has_edge(a.index(), b.index())
    }

    pub fn distance(&self, a: Node, b: Node) -> usize {
        self.dist[a.index() * self.num_nodes() + b.index()] as usize
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn max_degree(&self) -> usize {
        self.graph.max_degree()
    }

    pub fn is_bipartite(&self) -> bool {
        self.graph.is_bipartite()
    }

    /// Parses the `nodes <b>` / `edge <a> <b>` text format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        Self::from_graph(io::parse_graph(text)?)
    }

    /// Renders the text format accepted by [`CouplingGraph::parse`].
    pub fn to_text(&self) -> String {
        io::format_graph(&self.graph)
    }
}

impl Graph {
    /// Parses the graph text format without requiring connectivity.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        io::parse_graph(text)
    }

    pub fn to_text(&self) -> String {
        io::format_graph(self)
    }
}
