//! Geometric certification of visibility representations, plus the shape, area
//! and thickness-two checks.

mod sweep;

use crate::drawers::{Dir, Mode, Shape, SightSegment, VisibilityRepresentation};
use crate::error::{Error, Result};
use rustworkx_core::petgraph::graph::UnGraph;
use serde::Serialize;
use std::collections::HashMap;
use sweep::{crossings, Seg};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A polygon is malformed: reversed bar, pylon off its bar.
    BadPolygon { v: usize },
    /// Two polygons share a point.
    Overlap { a: usize, b: usize },
    MissingSight { edge: usize },
    /// A sight for an edge id the graph does not have, or a second sight for one.
    ExtraSight { edge: usize },
    /// The sight does not join the polygons of its edge's end vertices.
    BadAnchor { edge: usize },
    /// A polygon touches the interior of the sight.
    Blocked { edge: usize, by: usize },
    /// Two sights overlap along a common line.
    CollinearSights { a: usize, b: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub violations: Vec<Violation>,
}

impl CertReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `rep` is a weak visibility representation of the graph with edge
/// list `edges`: sight `i` realizes `edges[i]`.
pub fn verify(rep: &VisibilityRepresentation, edges: &[[usize; 2]]) -> CertReport {
    let mut out = Vec::new();
    let n = rep.polygons.len();
    for (i, p) in rep.polygons.iter().enumerate() {
        let bad_pylon = matches!(p.pylon, Some([x, y0, _]) if y0 != p.y() || x < p.bar[1] || x > p.bar[2]);
        if p.v != i || p.bar[1] > p.bar[2] || bad_pylon {
            out.push(Violation::BadPolygon { v: i });
        }
    }

    // polygons as closed segments, sights as open ones
    let mut hs = Vec::new();
    let mut vs = Vec::new();
    for p in &rep.polygons {
        hs.push(Seg::closed(p.y(), p.bar[1], p.bar[2], p.v));
        if let Some((x, lo, hi)) = p.pylon_span() {
            vs.push(Seg::closed(x, lo, hi, p.v));
        }
    }
    for (a, b) in crossings(&hs, &vs) {
        if a != b {
            out.push(Violation::Overlap { a: a.min(b), b: a.max(b) });
        }
    }
    for (a, b) in sweep::collinear(&hs).into_iter().chain(sweep::collinear(&vs)) {
        if a != b {
            out.push(Violation::Overlap { a: a.min(b), b: a.max(b) });
        }
    }

    let mut seen = vec![0usize; edges.len()];
    for s in &rep.sights {
        match edges.get(s.id) {
            Some(&[u, v]) if u < n && v < n && (s.edge == [u, v] || s.edge == [v, u]) => {
                seen[s.id] += 1;
                if seen[s.id] > 1 {
                    out.push(Violation::ExtraSight { edge: s.id });
                }
                if !anchored(rep, s) {
                    out.push(Violation::BadAnchor { edge: s.id });
                }
            }
            _ => out.push(Violation::ExtraSight { edge: s.id }),
        }
    }
    for (e, &c) in seen.iter().enumerate() {
        if c == 0 {
            out.push(Violation::MissingSight { edge: e });
        }
    }

    let interior = |s: &SightSegment| Seg::open(s.at, s.span[0], s.span[1], s.id);
    let sh: Vec<Seg> = rep.sights.iter().filter(|s| s.dir == Dir::Horizontal).map(interior).collect();
    let sv: Vec<Seg> = rep.sights.iter().filter(|s| s.dir == Dir::Vertical).map(interior).collect();
    let mut blocked = Vec::new();
    blocked.extend(crossings(&hs, &sv).into_iter().map(|(v, e)| (e, v)));
    blocked.extend(crossings(&sh, &vs));
    blocked.extend(sweep::collinear_between(&sh, &hs));
    blocked.extend(sweep::collinear_between(&sv, &vs));
    for (e, v) in blocked {
        out.push(Violation::Blocked { edge: e, by: v });
    }
    for (a, b) in sweep::collinear(&sh).into_iter().chain(sweep::collinear(&sv)) {
        out.push(Violation::CollinearSights { a: a.min(b), b: a.max(b) });
    }
    out.sort();
    out.dedup();
    CertReport { violations: out }
}

/// Each end of the sight lies on a different one of its two end polygons.
fn anchored(rep: &VisibilityRepresentation, s: &SightSegment) -> bool {
    let [p, q] = s.endpoints();
    let [u, v] = s.edge;
    let on = |w: usize, (x, y): (i64, i64)| rep.polygons[w].contains(x, y);
    p != q && ((on(u, p) && on(v, q)) || (on(v, p) && on(u, q)))
}

/// Shape tag per vertex; fails if a shape is not allowed in the mode.
pub fn check_shape_taxonomy(rep: &VisibilityRepresentation) -> Result<Vec<Shape>> {
    let mut out = Vec::with_capacity(rep.polygons.len());
    for p in &rep.polygons {
        let shape = p.shape();
        let allowed = match rep.mode {
            Mode::Planar | Mode::FlatRectangle => shape == Shape::I,
            Mode::TShape => true,
        };
        if !allowed {
            return Err(Error::ShapeOutOfMode(p.v));
        }
        out.push(shape);
    }
    let perp = out.contains(&Shape::Perp);
    let t = out.contains(&Shape::T);
    if perp && t {
        let v = out.iter().position(|&s| s == Shape::T).unwrap();
        return Err(Error::ShapeOutOfMode(v));
    }
    Ok(out)
}

/// The edges seen horizontally and the edges seen vertically each form a planar graph.
pub fn check_thickness_two(rep: &VisibilityRepresentation) -> bool {
    let planar = |dir: Dir| {
        let mut g: UnGraph<(), ()> = UnGraph::with_capacity(rep.n(), 0);
        for _ in 0..rep.n() {
            g.add_node(());
        }
        let mut seen = HashMap::new();
        for s in rep.sights.iter().filter(|s| s.dir == dir) {
            let [u, v] = s.edge;
            if seen.insert((u.min(v), u.max(v)), ()).is_none() {
                g.add_edge((u as u32).into(), (v as u32).into(), ());
            }
        }
        rustworkx_core::planar::is_planar(&g)
    };
    planar(Dir::Horizontal) && planar(Dir::Vertical)
}

/// Area bound per mode, as `(width, height)`.
pub fn area_bound(n: usize, mode: Mode) -> (i64, i64) {
    let n = n as i64;
    match mode {
        Mode::Planar => (2 * n - 4, n),
        Mode::FlatRectangle => (4 * n - 10, 2 * n),
        Mode::TShape => (6 * n - 15, 2 * n),
    }
}

pub fn check_area(rep: &VisibilityRepresentation, n: usize, mode: Mode) -> bool {
    let (w, h) = area_bound(n, mode);
    rep.bounds[0] <= w && rep.bounds[1] <= h
}
