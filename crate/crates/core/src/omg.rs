//! Ordinal margin graphs: the majority graph plus a ranking of its edges by margin size.
//!
//! JSON form: `{"vertices":["a","b"],"edges":[["a","b",1]]}` where rank 1 is the smallest margin.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::margin::MarginMatrix;
use crate::profile::{index_of, Alternative, Profile};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrdinalMarginGraph {
    vertices: Vec<Alternative>,
    /// `(from, to) -> rank`, keyed by vertex index.
    edges: BTreeMap<(usize, usize), u32>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Alternative>,
    edges: Vec<(Alternative, Alternative, u32)>,
}

impl OrdinalMarginGraph {
    /// Validates asymmetry and contiguity of ranks (`1..=k`).
    pub fn new(vertices: Vec<Alternative>, edges: BTreeMap<(usize, usize), u32>) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidGraph(
                "vertices must be sorted and distinct".into(),
            ));
        }
        let n = vertices.len();
        for (&(x, y), &r) in &edges {
            if x >= n || y >= n {
                return Err(Error::InvalidGraph("edge endpoint out of range".into()));
            }
            if x == y {
                return Err(Error::InvalidGraph("self loop".into()));
            }
            if edges.contains_key(&(y, x)) {
                return Err(Error::InvalidGraph(format!(
                    "edges {}->{} and {}->{} both present",
                    vertices[x], vertices[y], vertices[y], vertices[x]
                )));
            }
            if r == 0 {
                return Err(Error::InvalidGraph("ranks start at 1".into()));
            }
        }
        let mut ranks: Vec<u32> = edges.values().copied().collect();
        ranks.sort_unstable();
        ranks.dedup();
        if ranks.iter().enumerate().any(|(i, &r)| r as usize != i + 1) {
            return Err(Error::InvalidGraph("ranks must form 1..k".into()));
        }
        Ok(OrdinalMarginGraph { vertices, edges })
    }

    /// Builds from labelled `(from, to, rank)` triples.
    pub fn from_labeled(vertices: &[&str], edges: &[(&str, &str, u32)]) -> Result<Self> {
        let verts = crate::profile::alternatives(vertices)?;
        let mut map = BTreeMap::new();
        for &(x, y, r) in edges {
            let key = (index_of(&verts, x)?, index_of(&verts, y)?);
            if map.insert(key, r).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge {x}->{y}")));
            }
        }
        OrdinalMarginGraph::new(verts, map)
    }

    /// Positive margins become edges; equal magnitudes share a rank.
    pub fn from_margins(m: &MarginMatrix) -> Self {
        let edges = m.majority_edges();
        let mut values: Vec<i64> = edges.iter().map(|e| e.2).collect();
        values.sort_unstable();
        values.dedup();
        let edges = edges
            .into_iter()
            .map(|(x, y, v)| ((x, y), values.binary_search(&v).unwrap() as u32 + 1))
            .collect();
        OrdinalMarginGraph {
            vertices: m.alternatives().to_vec(),
            edges,
        }
    }

    pub fn vertices(&self) -> &[Alternative] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.edges
    }

    pub fn rank(&self, x: usize, y: usize) -> Option<u32> {
        self.edges.get(&(x, y)).copied()
    }

    pub fn max_rank(&self) -> u32 {
        self.edges.values().copied().max().unwrap_or(0)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        index_of(&self.vertices, label)
    }

    /// True when every distinct pair is joined and every rank is distinct.
    pub fn is_linearly_edge_ordered_tournament(&self) -> bool {
        let n = self.len();
        self.edges.len() == n * (n - 1) / 2 && self.max_rank() as usize == self.edges.len()
    }

    /// A margin matrix with `margin(x, y) = rank(x, y)` on edges; realizes the same ordinal graph.
    pub fn rank_matrix(&self) -> MarginMatrix {
        let n = self.len();
        let mut m = vec![0i64; n * n];
        for (&(x, y), &r) in &self.edges {
            m[x * n + y] = r as i64;
            m[y * n + x] = -(r as i64);
        }
        MarginMatrix::new(self.vertices.clone(), m).expect("graph invariants give a valid matrix")
    }

    pub fn to_json(&self) -> String {
        let mut edges: Vec<_> = self.edges.iter().collect();
        edges.sort_by_key(|(&(x, y), &r)| (r, x, y));
        let j = GraphJson {
            vertices: self.vertices.clone(),
            edges: edges
                .into_iter()
                .map(|(&(x, y), &r)| (self.vertices[x].clone(), self.vertices[y].clone(), r))
                .collect(),
        };
        serde_json::to_string(&j).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: GraphJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        // any listing order is accepted
        let mut verts = j.vertices.clone();
        verts.sort();
        verts.dedup();
        if verts.len() != j.vertices.len() {
            return Err(Error::InvalidGraph("duplicate vertex".into()));
        }
        let mut map = BTreeMap::new();
        for (x, y, r) in j.edges {
            let key = (index_of(&verts, x.as_str())?, index_of(&verts, y.as_str())?);
            if map.insert(key, r).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge {x}->{y}")));
            }
        }
        OrdinalMarginGraph::new(verts, map)
    }
}

/// Structural equality: same vertices, same edges, same rank mapping.
pub fn omg_equal(a: &OrdinalMarginGraph, b: &OrdinalMarginGraph) -> bool {
    a == b
}

impl Profile {
    pub fn ordinal_margin_graph(&self) -> OrdinalMarginGraph {
        OrdinalMarginGraph::from_margins(&self.margin_matrix())
    }
}

impl fmt::Display for OrdinalMarginGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut edges: Vec<_> = self.edges.iter().collect();
        edges.sort_by_key(|(&(x, y), &r)| (r, x, y));
        for (i, (&(x, y), &r)) in edges.into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}->{}:{}", self.vertices[x], self.vertices[y], r)?;
        }
        Ok(())
    }
}
