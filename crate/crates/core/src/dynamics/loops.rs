//! Closed walks of a Markov graph and the non-repetitive ones among them.
//!
//! A loop is identified up to rotation. It is non-repetitive when its
//! vertex word is not a proper power `u^r`, `r >= 2`, of a shorter word.
//!
//! [`find_nonrepetitive_loop`] is a depth-first search pruned by Boolean
//! reachability: a successor is only entered if a walk of the remaining
//! length leads back to the start. The search is still exponential in `m`
//! in the worst case; for the graphs of cycles of degree up to ~20 and
//! periods up to ~20 it finishes quickly. [`has_nonrepetitive_loop`]
//! counts primitive closed walks with Möbius inversion over traces of
//! adjacency powers and only falls back to the search if `u128` overflows.

use alloc::vec;
use alloc::vec::Vec;

use super::markov::MarkovGraph;
use crate::error::{Error, Result};

/// A closed walk `k_0 -> k_1 -> ... -> k_{m-1} -> k_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Loop {
    vertices: Vec<usize>,
}

impl Loop {
    /// Checks every consecutive pair, including the wrap-around, is an edge.
    pub fn new(vertices: Vec<usize>, graph: &MarkovGraph) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidLoop);
        }
        let m = vertices.len();
        let closed = (0..m).all(|i| graph.has_edge(vertices[i], vertices[(i + 1) % m]));
        if !closed {
            return Err(Error::InvalidLoop);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_non_repetitive(&self) -> bool {
        is_primitive_word(&self.vertices)
    }
}

/// True when no proper rotation by a divisor of the length fixes the word.
pub fn is_primitive_word(word: &[usize]) -> bool {
    let m = word.len();
    (1..m)
        .filter(|d| m % d == 0)
        .all(|d| (0..m).any(|i| word[i] != word[(i + d) % m]))
}

/// `reach[r][u][v]`: a walk of exactly `r` steps goes from `u` to `v`.
struct Reach {
    v: usize,
    levels: Vec<Vec<bool>>,
}

impl Reach {
    fn new(graph: &MarkovGraph, max_len: usize) -> Self {
        let v = graph.vertex_count();
        let adj = graph.adjacency();
        let mut levels = Vec::with_capacity(max_len + 1);
        let mut identity = vec![false; v * v];
        for i in 0..v {
            identity[i * v + i] = true;
        }
        levels.push(identity);
        for r in 1..=max_len {
            let prev = &levels[r - 1];
            let mut next = vec![false; v * v];
            for a in 0..v {
                for b in (0..v).filter(|&b| adj[a * v + b]) {
                    for c in 0..v {
                        if prev[b * v + c] {
                            next[a * v + c] = true;
                        }
                    }
                }
            }
            levels.push(next);
        }
        Self { v, levels }
    }

    fn get(&self, r: usize, from: usize, to: usize) -> bool {
        self.levels[r][(from - 1) * self.v + (to - 1)]
    }
}

/// Whether any closed walk of length `m` exists at all (diagonal of `A^m`).
pub fn has_closed_walk(graph: &MarkovGraph, m: usize) -> bool {
    let reach = Reach::new(graph, m);
    (1..=graph.vertex_count()).any(|s| reach.get(m, s, s))
}

/// The lexicographically least non-repetitive loop of length `m`: least
/// starting vertex first, then least successor at every step.
pub fn find_nonrepetitive_loop(graph: &MarkovGraph, m: usize) -> Option<Loop> {
    if m == 0 || graph.vertex_count() == 0 {
        return None;
    }
    let reach = Reach::new(graph, m);
    let mut path = Vec::with_capacity(m);
    for start in 1..=graph.vertex_count() {
        if !reach.get(m, start, start) {
            continue;
        }
        path.clear();
        path.push(start);
        if search(graph, &reach, m, start, &mut path) {
            return Some(Loop { vertices: path });
        }
    }
    None
}

fn search(
    graph: &MarkovGraph,
    reach: &Reach,
    m: usize,
    start: usize,
    path: &mut Vec<usize>,
) -> bool {
    let here = *path.last().expect("path starts non-empty");
    if path.len() == m {
        return graph.has_edge(here, start) && is_primitive_word(path);
    }
    let remaining = m - path.len();
    for next in graph.successors(here) {
        if !reach.get(remaining, next, start) {
            continue;
        }
        path.push(next);
        if search(graph, reach, m, start, path) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn has_nonrepetitive_loop(graph: &MarkovGraph, m: usize) -> bool {
    if m == 0 {
        return false;
    }
    match primitive_closed_walk_count(graph, m) {
        Some(count) => count > 0,
        None => find_nonrepetitive_loop(graph, m).is_some(),
    }
}

/// Number of based closed walks of length `m` whose word is primitive:
/// `Σ_{d | m} μ(d) tr(A^{m/d})`. `None` on `u128` overflow.
pub fn primitive_closed_walk_count(graph: &MarkovGraph, m: usize) -> Option<u128> {
    let traces = walk_traces(graph, m)?;
    let mut plus: u128 = 0;
    let mut minus: u128 = 0;
    for d in (1..=m).filter(|d| m % d == 0) {
        match mobius(d) {
            1 => plus = plus.checked_add(traces[m / d])?,
            -1 => minus = minus.checked_add(traces[m / d])?,
            _ => {}
        }
    }
    plus.checked_sub(minus)
}

/// `tr(A^r)` for `r = 0..=m`.
fn walk_traces(graph: &MarkovGraph, m: usize) -> Option<Vec<u128>> {
    let v = graph.vertex_count();
    let adj = graph.adjacency();
    let mut power = vec![0u128; v * v];
    for i in 0..v {
        power[i * v + i] = 1;
    }
    let mut traces = Vec::with_capacity(m + 1);
    traces.push(v as u128);
    for _ in 1..=m {
        let mut next = vec![0u128; v * v];
        for a in 0..v {
            for b in (0..v).filter(|&b| adj[a * v + b]) {
                for c in 0..v {
                    let x = power[b * v + c];
                    if x != 0 {
                        next[a * v + c] = next[a * v + c].checked_add(x)?;
                    }
                }
            }
        }
        power = next;
        let mut tr: u128 = 0;
        for i in 0..v {
            tr = tr.checked_add(power[i * v + i])?;
        }
        traces.push(tr);
    }
    Some(traces)
}

fn mobius(mut n: usize) -> i8 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}
