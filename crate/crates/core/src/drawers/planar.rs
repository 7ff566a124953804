use super::{bar_sight, Mode, ShapePolygon, VisibilityRepresentation};
use crate::error::{Error, Result};
use crate::graph::{Embedding, PlaneGraph};
use crate::orderings::{dual_st_numbering, st_number, DualNumbering, VertexOrdering};

/// Bars and edge columns of the classic bar drawing, with x scaled by `sx`.
pub(crate) struct Layout {
    pub polygons: Vec<ShapePolygon>,
    /// Column of the vertical sight per edge slot.
    pub edge_x: Vec<i64>,
}

pub(crate) fn layout(g: &PlaneGraph, dual: &DualNumbering, y: impl Fn(usize) -> i64, sx: i64) -> Layout {
    let polygons = (0..g.n())
        .map(|v| ShapePolygon {
            v,
            bar: [
                y(v),
                sx * dual.vertex_left[v] as i64,
                sx * (dual.vertex_right[v] as i64 - 1),
            ],
            pylon: None,
        })
        .collect();
    let last = sx * (dual.faces as i64 - 1);
    let mut edge_x = vec![0; g.edge_slots()];
    for e in g.edges() {
        edge_x[e] = if e == dual.st_edge { last } else { sx * dual.edge_left[e] as i64 };
    }
    Layout { polygons, edge_x }
}

/// Bar visibility representation of a plane graph from an st-numbering and the
/// matching dual numbering. Vertex `v` sits at `y = rank(v) - 1`; sights carry the
/// plane edge ids.
pub fn visibility_drawer(g: &PlaneGraph, ordering: &VertexOrdering, dual: &DualNumbering) -> VisibilityRepresentation {
    let lay = layout(g, dual, |v| ordering.rank[v] as i64 - 1, 1);
    let sights = g
        .edges()
        .map(|e| bar_sight(e, g.ends(e), lay.edge_x[e], &lay.polygons))
        .collect();
    VisibilityRepresentation::new(Mode::Planar, lay.polygons, sights, Vec::new())
}

/// Draws a crossing-free 2-connected embedding. The source is the smallest vertex
/// on the outer face and the sink its successor there.
pub fn draw_planar(emb: &Embedding) -> Result<VisibilityRepresentation> {
    if !emb.crossings().is_empty() {
        return Err(Error::InvalidOrdering(format!(
            "{} crossing pairs; planar mode needs a crossing-free embedding",
            emb.crossings().len()
        )));
    }
    let g = emb.planar();
    let outer = g.face_darts(g.outer());
    let st = outer
        .iter()
        .copied()
        .min_by_key(|&d| g.tail(d))
        .ok_or_else(|| Error::InvalidOrdering("empty outer face".into()))?;
    let ordering = st_number(g, g.tail(st), g.head(st))?;
    let dual = dual_st_numbering(g, &ordering.rank, st / 2)?;
    let mut rep = visibility_drawer(g, &ordering, &dual);
    for s in &mut rep.sights {
        s.id = emb.piece_origin(s.id).edge();
    }
    rep.sights.sort_by_key(|s| s.id);
    Ok(rep)
}
