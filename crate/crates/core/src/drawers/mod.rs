//! Drawers for bar, flat-rectangle and T-shape visibility representations, plus
//! level compaction and the vertical flip of T-shape output.

mod ic;
mod planar;
mod t;

pub use ic::ic_rv_drawer;
pub use planar::{draw_planar, visibility_drawer};
pub use t::t_drawer;

use crate::error::{Error, Result};
use crate::graph::Embedding;
use crate::normal_form::normalize;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Planar,
    FlatRectangle,
    TShape,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planar" => Ok(Mode::Planar),
            "ic" | "flat_rectangle" => Ok(Mode::FlatRectangle),
            "t" | "t_shape" => Ok(Mode::TShape),
            _ => Err(Error::Format(format!("unknown mode '{s}'; expected planar, ic or t"))),
        }
    }
}

/// Runs the drawer of `mode` on an embedding, normalizing it first where needed.
pub fn draw(emb: &Embedding, mode: Mode) -> Result<VisibilityRepresentation> {
    match mode {
        Mode::Planar => draw_planar(emb),
        Mode::FlatRectangle => ic_rv_drawer(&normalize(emb)),
        Mode::TShape => t_drawer(&normalize(emb)),
    }
}

/// Shape tag of a polygon: a bare bar, a pylon at a bar end, or a pylon strictly
/// inside the bar pointing up (⊥) or down (T).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    I,
    L,
    #[serde(rename = "⊥")]
    Perp,
    T,
}

/// A horizontal bar `[y, x0, x1]`, optionally with one vertical pylon `[x, y0, y1]`
/// whose foot `y0` lies on the bar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapePolygon {
    pub v: usize,
    pub bar: [i64; 3],
    pub pylon: Option<[i64; 3]>,
}

impl ShapePolygon {
    pub fn y(&self) -> i64 {
        self.bar[0]
    }

    pub fn x_range(&self) -> (i64, i64) {
        (self.bar[1], self.bar[2])
    }

    pub fn shape(&self) -> Shape {
        match self.pylon {
            None => Shape::I,
            Some([x, ..]) if x == self.bar[1] || x == self.bar[2] => Shape::L,
            Some([_, a, b]) if b >= a => Shape::Perp,
            Some(_) => Shape::T,
        }
    }

    /// Lower and upper end of the pylon.
    pub fn pylon_span(&self) -> Option<(i64, i64, i64)> {
        self.pylon.map(|[x, a, b]| (x, a.min(b), a.max(b)))
    }

    /// Whether the closed point set of the polygon contains `(x, y)`.
    pub fn contains(&self, x: i64, y: i64) -> bool {
        let [by, x0, x1] = self.bar;
        if y == by && x0 <= x && x <= x1 {
            return true;
        }
        matches!(self.pylon_span(), Some((px, lo, hi)) if x == px && lo <= y && y <= hi)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "h")]
    Horizontal,
    #[serde(rename = "v")]
    Vertical,
}

/// A line of sight for an input edge: vertical at `x = at` over `span = [y0, y1]`
/// or horizontal at `y = at` over `span = [x0, x1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SightSegment {
    pub id: usize,
    pub edge: [usize; 2],
    pub dir: Dir,
    pub at: i64,
    pub span: [i64; 2],
}

impl SightSegment {
    pub fn vertical(id: usize, edge: [usize; 2], x: i64, y0: i64, y1: i64) -> Self {
        SightSegment { id, edge, dir: Dir::Vertical, at: x, span: [y0.min(y1), y0.max(y1)] }
    }

    pub fn horizontal(id: usize, edge: [usize; 2], y: i64, x0: i64, x1: i64) -> Self {
        SightSegment { id, edge, dir: Dir::Horizontal, at: y, span: [x0.min(x1), x0.max(x1)] }
    }

    /// End points as `(x, y)`.
    pub fn endpoints(&self) -> [(i64, i64); 2] {
        let [a, b] = self.span;
        match self.dir {
            Dir::Vertical => [(self.at, a), (self.at, b)],
            Dir::Horizontal => [(a, self.at), (b, self.at)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VisibilityRepresentation {
    pub mode: Mode,
    /// One polygon per vertex, indexed by vertex id.
    pub polygons: Vec<ShapePolygon>,
    /// One sight per input edge.
    pub sights: Vec<SightSegment>,
    /// Width and height of the bounding box, as coordinate extents.
    pub bounds: [i64; 2],
    /// Sights of augmentation edges and pair copies, kept for inspection.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dropped: Vec<SightSegment>,
}

impl VisibilityRepresentation {
    pub(crate) fn new(mode: Mode, polygons: Vec<ShapePolygon>, mut sights: Vec<SightSegment>, dropped: Vec<SightSegment>) -> Self {
        sights.sort_by_key(|s| s.id);
        let mut rep = VisibilityRepresentation { mode, polygons, sights, bounds: [0, 0], dropped };
        rep.normalize_bounds();
        rep
    }

    /// Shifts the drawing so its minimum corner is the origin and recomputes `bounds`.
    pub fn normalize_bounds(&mut self) {
        let (mut xs, mut ys) = (Vec::new(), Vec::new());
        for p in &self.polygons {
            xs.extend([p.bar[1], p.bar[2]]);
            ys.push(p.bar[0]);
            if let Some([x, a, b]) = p.pylon {
                xs.push(x);
                ys.extend([a, b]);
            }
        }
        let (Some(&x0), Some(&x1), Some(&y0), Some(&y1)) = (xs.iter().min(), xs.iter().max(), ys.iter().min(), ys.iter().max()) else {
            return;
        };
        if x0 != 0 || y0 != 0 {
            for p in &mut self.polygons {
                p.bar = [p.bar[0] - y0, p.bar[1] - x0, p.bar[2] - x0];
                p.pylon = p.pylon.map(|[x, a, b]| [x - x0, a - y0, b - y0]);
            }
            for s in self.sights.iter_mut().chain(self.dropped.iter_mut()) {
                let (dx, dy) = match s.dir {
                    Dir::Vertical => (x0, y0),
                    Dir::Horizontal => (y0, x0),
                };
                s.at -= dx;
                s.span = [s.span[0] - dy, s.span[1] - dy];
            }
        }
        self.bounds = [x1 - x0, y1 - y0];
    }

    pub fn n(&self) -> usize {
        self.polygons.len()
    }

    /// Mirrors the drawing top to bottom, turning ⊥-shapes into T-shapes.
    pub fn flip(&self) -> Self {
        let h = self.bounds[1];
        let mut out = self.clone();
        for p in &mut out.polygons {
            p.bar[0] = h - p.bar[0];
            p.pylon = p.pylon.map(|[x, a, b]| [x, h - a, h - b]);
        }
        for s in out.sights.iter_mut().chain(out.dropped.iter_mut()) {
            match s.dir {
                Dir::Vertical => s.span = [h - s.span[1], h - s.span[0]],
                Dir::Horizontal => s.at = h - s.at,
            }
        }
        out
    }
}

/// Vertical sight for a plain edge between two bars.
pub(crate) fn bar_sight(id: usize, edge: [usize; 2], x: i64, polys: &[ShapePolygon]) -> SightSegment {
    SightSegment::vertical(id, edge, x, polys[edge[0]].y(), polys[edge[1]].y())
}

/// Re-levels the bars by longest paths in the "is below" order that the sights
/// induce. Vertices sharing a level stay together and every other y-coordinate is
/// carried along by the level directly below it. Fails if the result no longer
/// verifies.
pub fn compact_levels(rep: &VisibilityRepresentation, edges: &[[usize; 2]]) -> Result<VisibilityRepresentation> {
    let levels: BTreeSet<i64> = rep.polygons.iter().map(|p| p.y()).collect();
    let index: BTreeMap<i64, usize> = levels.iter().enumerate().map(|(i, &y)| (y, i)).collect();
    let k = levels.len();
    let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
    let mut below = |a: usize, b: usize| {
        let (la, lb) = (index[&rep.polygons[a].y()], index[&rep.polygons[b].y()]);
        if la < lb {
            succ[la].insert(lb);
        } else if lb < la {
            succ[lb].insert(la);
        }
    };
    for s in rep.sights.iter().chain(&rep.dropped) {
        below(s.edge[0], s.edge[1]);
    }
    // a pylon must keep clear of every bar it passes
    for p in &rep.polygons {
        if let Some((_, lo, hi)) = p.pylon_span() {
            let (a, b) = (index.range(..=lo).next_back(), index.range(..=hi).next_back());
            if let (Some((_, &a)), Some((_, &b))) = (a, b) {
                for (l, s) in succ.iter_mut().enumerate().take(b).skip(a) {
                    s.insert(l + 1);
                }
            }
        }
    }
    let mut new_level = vec![0i64; k];
    for l in 0..k {
        for &m in &succ[l] {
            new_level[m] = new_level[m].max(new_level[l] + 1);
        }
    }
    let step = if rep.mode == Mode::TShape { 2 } else { 1 };
    let map_y = |y: i64| -> i64 {
        let (&base, &l) = index.range(..=y).next_back().expect("no coordinate below the lowest bar");
        new_level[l] * step + (y - base)
    };
    let mut out = rep.clone();
    for p in &mut out.polygons {
        p.bar[0] = map_y(p.bar[0]);
        p.pylon = p.pylon.map(|[x, a, b]| [x, map_y(a), map_y(b)]);
    }
    for s in out.sights.iter_mut().chain(out.dropped.iter_mut()) {
        match s.dir {
            Dir::Vertical => s.span = [map_y(s.span[0]), map_y(s.span[1])],
            Dir::Horizontal => s.at = map_y(s.at),
        }
    }
    out.normalize_bounds();
    let report = crate::verifier::verify(&out, edges);
    if !report.ok() {
        return Err(Error::CompactionBrokeVisibility);
    }
    Ok(out)
}
