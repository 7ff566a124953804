//! Graphs, rotation systems, planarizations and duals.

pub mod connectivity;
mod dual;
mod embedding;
pub mod plane;

pub use dual::{dual, DualGraph};
pub use embedding::{build_embedding, planarize, CrossingPair, Embedding, EmbeddingFile, PieceOrigin};
pub use plane::{Dart, PlaneGraph};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<[usize; 2]>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &[u, v] in &edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::NotSimple(format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::NotSimple(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &[u, v] in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&[a, b]| (a == u && b == v) || (a == v && b == u))
    }

    /// 1-planar graphs have at most `4n - 8` edges.
    pub fn check_one_planar_density(&self) -> Result<()> {
        if self.n >= 3 {
            let bound = 4 * self.n - 8;
            if self.edges.len() > bound.max(3) {
                return Err(Error::TooManyEdges { edges: self.edges.len(), bound });
            }
        }
        Ok(())
    }

    /// IC-planar graphs have at most `3.25n - 6` edges.
    pub fn within_ic_density(&self) -> bool {
        self.n < 3 || 4 * self.edges.len() + 24 <= 13 * self.n
    }

    /// Requires 2-connectivity, reporting a cut vertex when there is one.
    pub fn check_two_connected(&self) -> Result<()> {
        let adj = self.adjacency();
        if !connectivity::is_connected(&adj) {
            return Err(Error::Disconnected);
        }
        if let Some(v) = connectivity::articulation_point(&adj) {
            return Err(Error::NotTwoConnected(v));
        }
        if self.n < 3 {
            return Err(Error::NotTwoConnected(0));
        }
        Ok(())
    }
}
