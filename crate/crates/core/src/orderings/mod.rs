//! st-numberings, leftish canonical orderings, rhomboidal numberings of IC-planar
//! graphs, dual numberings and the classification of quadrangles.

mod dual;
mod extend;
mod faces;
mod leftish;
mod rhomboidal;
mod st;

pub use dual::{dual_st_numbering, upward, DualNumbering};
pub use extend::{extend_ordering, ExtendedOrdering, Piece, PieceOrder};
pub use faces::{check_bitonic, classify_by_ranks, classify_faces, is_bitonic, BitonicViolation, FaceClass, FaceKind};
pub use leftish::{leftish_canonical_ordering, CanonicalOrdering};
pub use rhomboidal::{rhomboidal_st_numbering, RhomboidalOrdering};
pub use st::{is_st_numbering, st_order};

use crate::error::Result;
use crate::graph::PlaneGraph;
use crate::normal_form::{planar_skeleton, AugmentedEmbedding};
use serde::Serialize;

/// A vertex numbering `rank` (δ, 1-based) with source `s` and sink `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexOrdering {
    pub rank: Vec<usize>,
    pub s: usize,
    pub t: usize,
    /// Path partition Π of a canonical ordering, in placement order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paths: Option<Vec<Vec<usize>>>,
}

impl VertexOrdering {
    pub fn from_order(order: &[usize]) -> Self {
        let mut rank = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i + 1;
        }
        VertexOrdering { rank, s: order[0], t: order[order.len() - 1], paths: None }
    }

    pub fn n(&self) -> usize {
        self.rank.len()
    }

    /// Vertices in increasing rank.
    pub fn order(&self) -> Vec<usize> {
        let mut out = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            out[r - 1] = v;
        }
        out
    }

    /// Checks the st-property on the underlying graph of `g`.
    pub fn is_valid_for(&self, g: &PlaneGraph) -> bool {
        let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v)).collect();
        is_st_numbering(&adj, &self.rank, self.s, self.t)
    }
}

/// st-numbering of a 2-connected plane graph.
pub fn st_number(g: &PlaneGraph, s: usize, t: usize) -> Result<VertexOrdering> {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    Ok(VertexOrdering::from_order(&st_order(&adj, s, t)?))
}

/// st-numbering of G□ in which every inner component at a separation pair is a
/// consecutive block.
pub fn skeleton_st_number(aug: &AugmentedEmbedding) -> Result<ExtendedOrdering> {
    let sq = planar_skeleton(aug);
    let tree = aug.tree().cloned().unwrap_or_default();
    extend_ordering(&sq, &tree, PieceOrder::St)
}

/// Leftish canonical ordering of every 3-connected piece of G□, extended over the
/// separation pairs.
pub fn extended_leftish_ordering(aug: &AugmentedEmbedding) -> Result<ExtendedOrdering> {
    let sq = planar_skeleton(aug);
    let tree = aug.tree().cloned().unwrap_or_default();
    extend_ordering(&sq, &tree, PieceOrder::Leftish)
}
