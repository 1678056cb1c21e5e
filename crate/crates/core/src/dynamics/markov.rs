use alloc::vec;
use alloc::vec::Vec;

use super::primitive::PiecewiseLinearMap;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Directed graph on the unit intervals `J_1, ..., J_{n-1}` with an arrow
/// `J_k -> J_l` whenever `f(J_k) ⊇ J_l`. Vertices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkovGraph {
    vertex_count: usize,
    adjacency: Vec<bool>,
}

impl MarkovGraph {
    /// A graph with arbitrary edges, mostly useful for testing the loop
    /// search on graphs that do not come from a permutation.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![false; vertex_count * vertex_count];
        for &(k, l) in edges {
            for v in [k, l] {
                if v == 0 || v > vertex_count {
                    return Err(Error::BadIndex {
                        index: v,
                        max: vertex_count,
                    });
                }
            }
            adjacency[(k - 1) * vertex_count + (l - 1)] = true;
        }
        Ok(Self {
            vertex_count,
            adjacency,
        })
    }

    pub fn from_map(f: &PiecewiseLinearMap) -> Self {
        let v = f.degree() - 1;
        let mut adjacency = vec![false; v * v];
        for k in 1..=v {
            let img = f.interval_image(k).expect("k in range");
            for l in img.lo()..img.hi() {
                adjacency[(k - 1) * v + (l - 1)] = true;
            }
        }
        Self {
            vertex_count: v,
            adjacency,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn has_edge(&self, k: usize, l: usize) -> bool {
        let v = self.vertex_count;
        (1..=v).contains(&k) && (1..=v).contains(&l) && self.adjacency[(k - 1) * v + (l - 1)]
    }

    pub fn successors(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        let v = self.vertex_count;
        let row = &self.adjacency[(k - 1) * v..k * v];
        row.iter()
            .enumerate()
            .filter_map(|(i, &e)| e.then_some(i + 1))
    }

    /// Edges sorted by `(source, target)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.vertex_count)
            .flat_map(|k| self.successors(k).map(move |l| (k, l)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().filter(|&&e| e).count()
    }

    pub(crate) fn adjacency(&self) -> &[bool] {
        &self.adjacency
    }
}

pub fn markov_graph(p: &Permutation) -> Result<MarkovGraph> {
    Ok(MarkovGraph::from_map(&PiecewiseLinearMap::new(p)?))
}
