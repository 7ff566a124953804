use super::st::{is_st_numbering, st_order};
use super::VertexOrdering;
use crate::error::{Error, Result};
use crate::normal_form::{kite_contract, kite_expand, planar_skeleton, AugmentedEmbedding, Contraction, KiteRoles};

/// st-numbering of G□ for an IC-planar normal form in which every kite is a rhomboid.
#[derive(Clone, Debug)]
pub struct RhomboidalOrdering {
    pub ordering: VertexOrdering,
    /// Skeleton edge `{s, t}`.
    pub st_edge: usize,
    pub roles: Vec<KiteRoles>,
    pub contraction: Contraction,
}

/// Numbers G• from an outer edge, expands every kite as bottom < left < right < top
/// inside the slot of its contracted vertex.
pub fn rhomboidal_st_numbering(aug: &AugmentedEmbedding) -> Result<RhomboidalOrdering> {
    let sq = planar_skeleton(aug);
    let g = &sq.graph;
    let contraction = match aug.bullet() {
        Some(c) => c.clone(),
        None => kite_contract(aug)?,
    };
    let map = &contraction.map;
    let outer = g.face_darts(g.outer());
    let single = contraction.n == 1;
    let st_dart = outer
        .iter()
        .copied()
        .filter(|&d| {
            let (u, v) = (g.tail(d), g.head(d));
            if single {
                // both ends in the one kite: they must be opposite corners
                let c = aug.crossing_classes()[0].boundary;
                let i = c.iter().position(|&w| w == u).unwrap();
                c[(i + 2) % 4] == v
            } else {
                map[u] != map[v]
            }
        })
        .min_by_key(|&d| (g.tail(d), g.head(d)))
        .ok_or_else(|| Error::InvalidOrdering("no outer edge joins two contracted vertices".into()))?;
    let (s, t) = (g.tail(st_dart), g.head(st_dart));
    let bullet_rank = if single {
        vec![1]
    } else {
        let adj = contraction.adjacency();
        let order = st_order(&adj, map[s], map[t])?;
        let mut rank = vec![0; contraction.n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i + 1;
        }
        rank
    };
    let roles = kite_expand(aug, &contraction, &bullet_rank, s, t)?;
    let mut slot: Vec<Vec<usize>> = vec![Vec::new(); contraction.n];
    for v in 0..aug.n() {
        if contraction.kite_of[v].is_none() {
            slot[map[v]].push(v);
        }
    }
    for r in &roles {
        slot[contraction.kite_vertex[r.pair]] = vec![r.bottom, r.left, r.right, r.top];
    }
    let mut by_rank: Vec<usize> = (0..contraction.n).collect();
    by_rank.sort_by_key(|&b| bullet_rank[b]);
    let order: Vec<usize> = by_rank.into_iter().flat_map(|b| slot[b].clone()).collect();
    let ordering = VertexOrdering::from_order(&order);
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    if !is_st_numbering(&adj, &ordering.rank, s, t) {
        return Err(Error::InvalidOrdering("kite expansion broke the st-property".into()));
    }
    Ok(RhomboidalOrdering { ordering, st_edge: st_dart / 2, roles, contraction })
}
