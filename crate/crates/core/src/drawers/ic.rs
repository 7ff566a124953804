use super::planar::layout;
use super::{Mode, SightSegment, VisibilityRepresentation};
use crate::error::{Error, Result};
use crate::normal_form::{planar_skeleton, AugmentedEmbedding, Provenance};
use crate::orderings::{dual_st_numbering, rhomboidal_st_numbering};

/// Flat-rectangle drawing of an IC-planar embedding. G□ is drawn as bars with
/// doubled x; the two side corners of every kite share the level between them so
/// the crossing edges become a horizontal and a vertical sight inside the kite.
pub fn ic_rv_drawer(aug: &AugmentedEmbedding) -> Result<VisibilityRepresentation> {
    if !aug.base().is_ic() {
        return Err(Error::NotICPlanar("two crossing pairs share a vertex".into()));
    }
    let sq = planar_skeleton(aug);
    let g = &sq.graph;
    let rh = rhomboidal_st_numbering(aug)?;
    let rank = &rh.ordering.rank;
    let dual = dual_st_numbering(g, rank, rh.st_edge)?;
    let mut level: Vec<i64> = rank.iter().map(|&r| 2 * r as i64).collect();
    for r in &rh.roles {
        let l = (rank[r.left] + rank[r.right]) as i64;
        level[r.left] = l;
        level[r.right] = l;
    }
    let lay = layout(g, &dual, |v| level[v] - 2, 2);
    let polys = lay.polygons;
    let (mut sights, mut dropped) = (Vec::new(), Vec::new());
    for e in g.edges() {
        let a = sq.aug_edge[e];
        let [u, v] = g.ends(e);
        let s = SightSegment::vertical(a, [u, v], lay.edge_x[e], polys[u].y(), polys[v].y());
        if sq.provenance[e] == Provenance::Original {
            sights.push(s);
        } else {
            dropped.push(s);
        }
    }
    for r in &rh.roles {
        let cc = &aug.crossing_classes()[r.pair];
        let k = dual.delta_star[sq.quad_of[r.pair]] as i64;
        for &a in &cc.edges {
            let ends = aug.edges()[a].ends;
            if same(ends, [r.bottom, r.top]) {
                sights.push(SightSegment::vertical(a, ends, 2 * k - 1, polys[r.bottom].y(), polys[r.top].y()));
            } else if same(ends, [r.left, r.right]) {
                sights.push(SightSegment::horizontal(a, ends, polys[r.left].y(), 2 * k - 2, 2 * k));
            } else {
                return Err(Error::InvalidOrdering(format!("crossing edge {a} does not join opposite kite corners")));
            }
        }
    }
    Ok(VisibilityRepresentation::new(Mode::FlatRectangle, polys, sights, dropped))
}

pub(crate) fn same(a: [usize; 2], b: [usize; 2]) -> bool {
    a == b || a == [b[1], b[0]]
}
