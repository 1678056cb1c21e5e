//! DOT and JSON renderings. Every output is a pure function of its input,
//! so identical inputs give byte-identical files.

use std::fmt::Write;

use serde::Serialize;
use simperm_core::{MarkovGraph, Permutation};

/// `digraph markov { ... }` with vertices `J1..Jn` in index order and
/// edges sorted by `(source, target)`.
pub fn markov_dot(g: &MarkovGraph) -> String {
    let mut out = String::from("digraph markov {\n");
    for k in 1..=g.vertex_count() {
        writeln!(out, "  J{k};").unwrap();
    }
    for (k, l) in g.edges() {
        writeln!(out, "  J{k} -> J{l};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkovJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&MarkovGraph> for MarkovJson {
    fn from(g: &MarkovGraph) -> Self {
        MarkovJson {
            vertices: g.vertex_count(),
            edges: g.edges().into_iter().map(|(k, l)| [k, l]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationJson {
    pub order: usize,
    pub count: usize,
    pub perms: Vec<Vec<usize>>,
    /// `"MATCH"` or `"MISMATCH"` against exhaustive search, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<&'static str>,
}

impl EnumerationJson {
    pub fn new(order: usize, perms: &[Permutation], oracle: Option<bool>) -> Self {
        EnumerationJson {
            order,
            count: perms.len(),
            perms: perms.iter().map(|p| p.images().to_vec()).collect(),
            oracle: oracle.map(|ok| if ok { "MATCH" } else { "MISMATCH" }),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain structs always serialize")
}
