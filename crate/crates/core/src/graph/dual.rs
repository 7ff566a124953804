use super::connectivity;
use super::embedding::Embedding;
use super::plane::PlaneGraph;
use crate::error::{Error, Result};

/// Faces as nodes, one arc per primal edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub num_nodes: usize,
    /// For primal edge `e`: (face left of dart `2e`, face right of dart `2e`).
    pub arcs: Vec<(usize, usize)>,
}

impl DualGraph {
    /// Dual of a compacted plane graph (face ids must be dense).
    pub fn of(g: &PlaneGraph) -> Result<Self> {
        let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v)).collect();
        if !connectivity::is_connected(&adj) {
            return Err(Error::Disconnected);
        }
        if let Some(v) = connectivity::articulation_point(&adj) {
            return Err(Error::NotTwoConnected(v));
        }
        debug_assert_eq!(g.num_faces(), g.face_slots());
        let arcs = (0..g.edge_slots())
            .map(|e| g.sides(2 * e))
            .collect();
        Ok(DualGraph { num_nodes: g.num_faces(), arcs })
    }

    pub fn degree(&self, f: usize) -> usize {
        self.arcs
            .iter()
            .map(|&(a, b)| usize::from(a == f) + usize::from(b == f))
            .sum()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_nodes];
        for &(a, b) in &self.arcs {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        connectivity::is_connected(&self.adjacency())
    }
}

/// Dual of the planarization of `emb`.
pub fn dual(emb: &Embedding) -> Result<DualGraph> {
    DualGraph::of(emb.planar())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_embedding, Graph};

    #[test]
    fn triangle_dual_has_three_parallel_arcs() {
        let g = Graph::new(3, vec![[0, 1], [1, 2], [2, 0]]).unwrap();
        let emb = build_embedding(g, vec![vec![0, 2], vec![0, 1], vec![1, 2]], vec![], None).unwrap();
        let d = dual(&emb).unwrap();
        assert_eq!(d.num_nodes, 2);
        assert_eq!(d.arcs.len(), 3);
        assert!(d.arcs.iter().all(|&(a, b)| a != b));
    }
}
