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

//! Proper edge colouring with at most `max_degree + 1` colours
//! (Misra and Gries), and the shallow circuit it induces.

use super::GadgetError;
use crate::circuit::{Circuit, Operands, Qubit};
use crate::coupling::Graph;

struct Colouring {
    colour: Vec<Vec<Option<usize>>>,
    adj: Vec<Vec<usize>>,
}

impl Colouring {
    fn is_free(&self, x: usize, c: usize) -> bool {
        self.adj[x].iter().all(|&y| self.colour[x][y] != Some(c))
    }

    fn free_colour(&self, x: usize, palette: usize) -> usize {
        (0..palette).find(|&c| self.is_free(x, c)).expect("degree + 1 colours leave one free")
    }

    fn set(&mut self, x: usize, y: usize, c: Option<usize>) {
        self.colour[x][y] = c;
        self.colour[y][x] = c;
    }

    /// `fan[0] = v` with `(u, v)` uncoloured; each later `(u, fan[i])` has a
    /// colour free on `fan[i - 1]`.
    fn maximal_fan(&self, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self.adj[u]
                .iter()
                .copied()
                .find(|&w| !fan.contains(&w) && self.colour[u][w].is_some_and(|c| self.is_free(last, c)));
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swaps colours `c` and `d` along the maximal path from `u` that starts
    /// with a `d` edge.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = vec![u];
        let mut want = d;
        loop {
            let at = *path.last().unwrap();
            let prev = path.len().checked_sub(2).map(|i| path[i]);
            let step = self.adj[at].iter().copied().find(|&w| Some(w) != prev && self.colour[at][w] == Some(want));
            match step {
                Some(w) => {
                    path.push(w);
                    want = if want == d { c } else { d };
                }
                None => break,
            }
        }
        for w in path.windows(2) {
            let flipped = if self.colour[w[0]][w[1]] == Some(c) { d } else { c };
            self.set(w[0], w[1], Some(flipped));
        }
    }

    fn is_fan(&self, u: usize, fan: &[usize]) -> bool {
        fan.windows(2).all(|w| self.colour[u][w[1]].is_some_and(|c| self.is_free(w[0], c)))
    }
}

/// Colour of every edge of `g`, in `g.edges()` order, using colours
/// `0..=max_degree`.
pub fn edge_coloring(g: &Graph) -> Vec<usize> {
    let n = g.num_nodes();
    let palette = g.max_degree() + 1;
    let mut col = Colouring { colour: vec![vec![None; n]; n], adj: (0..n).map(|v| g.neighbors(v).to_vec()).collect() };
    for &(u, v) in g.edges() {
        let fan = col.maximal_fan(u, v);
        let c = col.free_colour(u, palette);
        let d = col.free_colour(*fan.last().unwrap(), palette);
        if c != d {
            col.invert_path(u, c, d);
        }
        let w = (0..fan.len())
            .find(|&i| col.is_free(fan[i], d) && col.is_fan(u, &fan[..=i]))
            .expect("a fan prefix ending where d is free exists after the inversion");
        for i in 0..w {
            let next = col.colour[u][fan[i + 1]];
            col.set(u, fan[i], next);
        }
        col.set(u, fan[w], Some(d));
    }
    g.edges().iter().map(|&(u, v)| col.colour[u][v].expect("every edge coloured")).collect()
}

/// One CNOT per edge of `h`, grouped by colour class so each class is one
/// layer: depth at most `d + 1`, topology graph exactly `h`.
pub fn circuit_from_degree_bounded_graph(h: &Graph, d: usize) -> Result<Circuit, GadgetError> {
    if h.max_degree() > d {
        return Err(GadgetError::DegreeBound {
            construction: "degree-bounded circuit",
            found: h.max_degree(),
            limit: d,
        });
    }
    let colours = edge_coloring(h);
    let mut edges: Vec<((usize, usize), usize)> = h.edges().iter().copied().zip(colours).collect();
    edges.sort_by_key(|&(e, c)| (c, e));
    let gates =
        edges.into_iter().map(|((a, b), _)| ("cx".to_string(), Operands::Two(Qubit(a as u32), Qubit(b as u32))));
    Ok(Circuit::new(h.num_nodes(), gates)?)
}
