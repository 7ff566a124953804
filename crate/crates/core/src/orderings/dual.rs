use crate::error::{Error, Result};
use crate::graph::plane::twin;
use crate::graph::{Dart, PlaneGraph};
use serde::Serialize;
use std::collections::VecDeque;

/// s*t*-numbering of the faces of a plane graph under a bipolar orientation.
/// Numbers are 0-based: `s*` gets 0 and the outer face `t*` gets `M - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualNumbering {
    /// Number of faces `M`.
    pub faces: usize,
    /// δ* per face id; `usize::MAX` on unused face slots.
    pub delta_star: Vec<usize>,
    pub s_star: usize,
    pub t_star: usize,
    /// Edge drawn at the left, excluded from the dual order.
    pub st_edge: usize,
    /// δ* of the faces left and right of each edge, oriented upwards.
    pub edge_left: Vec<usize>,
    pub edge_right: Vec<usize>,
    /// Horizontal extent of each vertex: its bar covers `left..right`.
    pub vertex_left: Vec<usize>,
    pub vertex_right: Vec<usize>,
}

/// Dart of edge `e` directed from lower to higher rank.
pub fn upward(g: &PlaneGraph, rank: &[usize], e: usize) -> Dart {
    let [u, v] = g.ends(e);
    if rank[u] < rank[v] {
        2 * e
    } else {
        2 * e + 1
    }
}

pub fn dual_st_numbering(g: &PlaneGraph, rank: &[usize], st_edge: usize) -> Result<DualNumbering> {
    let fs = g.face_slots();
    let st = upward(g, rank, st_edge);
    let t_star = g.face_of(st);
    let s_star = g.face_of(twin(st));
    if t_star == s_star {
        return Err(Error::InvalidOrdering("edge {s, t} is a bridge".into()));
    }
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); fs];
    let mut indeg = vec![0usize; fs];
    for e in g.edges() {
        if e == st_edge {
            continue;
        }
        let d = upward(g, rank, e);
        let (l, r) = (g.face_of(d), g.face_of(twin(d)));
        out_arcs[l].push(r);
        indeg[r] += 1;
    }
    let mut delta_star = vec![usize::MAX; fs];
    let mut queue = VecDeque::new();
    if indeg[s_star] != 0 {
        return Err(Error::InvalidOrdering(format!("face s* = {s_star} has incoming dual arcs")));
    }
    queue.push_back(s_star);
    let mut next = 0;
    while let Some(f) = queue.pop_front() {
        delta_star[f] = next;
        next += 1;
        for &h in &out_arcs[f] {
            indeg[h] -= 1;
            if indeg[h] == 0 {
                queue.push_back(h);
            }
        }
    }
    let m = g.num_faces();
    if next != m || delta_star[t_star] != m - 1 {
        return Err(Error::InvalidOrdering("dual of the orientation is not an s*t*-graph".into()));
    }
    let slots = g.edge_slots();
    let mut edge_left = vec![usize::MAX; slots];
    let mut edge_right = vec![usize::MAX; slots];
    let n = g.n();
    let mut vertex_left = vec![usize::MAX; n];
    let mut vertex_right = vec![0; n];
    for e in g.edges() {
        let d = upward(g, rank, e);
        let (l, r) = (delta_star[g.face_of(d)], delta_star[g.face_of(twin(d))]);
        edge_left[e] = l;
        edge_right[e] = r;
        if e == st_edge {
            continue;
        }
        for v in g.ends(e) {
            vertex_left[v] = vertex_left[v].min(l);
            vertex_right[v] = vertex_right[v].max(r);
        }
    }
    let [s, t] = g.ends(st_edge);
    for v in [s, t] {
        vertex_left[v] = 0;
        vertex_right[v] = m;
    }
    Ok(DualNumbering {
        faces: m,
        delta_star,
        s_star,
        t_star,
        st_edge,
        edge_left,
        edge_right,
        vertex_left,
        vertex_right,
    })
}
