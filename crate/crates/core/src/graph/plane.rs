//! Half-edge representation of an embedded planar multigraph.
//!
//! Edge `e` owns the two darts `2e` (from `ends[e][0]` to `ends[e][1]`) and
//! `2e + 1` (the reverse). Rotations are clockwise. The face of a dart is the
//! face on its left; walking a face uses `next(d) = cw_next(twin(d))`.

use crate::error::{Error, Result};
use std::collections::HashMap;

pub type Dart = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> usize {
    d >> 1
}

/// Dart of edge `e` leaving `v`. Panics on self-loops, which never occur.
#[inline]
pub fn dart_from(ends: &[[usize; 2]], e: usize, v: usize) -> Dart {
    if ends[e][0] == v {
        2 * e
    } else {
        debug_assert_eq!(ends[e][1], v);
        2 * e + 1
    }
}

#[derive(Clone, Debug)]
pub struct PlaneGraph {
    n: usize,
    ends: Vec<[usize; 2]>,
    alive: Vec<bool>,
    cw_next: Vec<Dart>,
    cw_prev: Vec<Dart>,
    first: Vec<Option<Dart>>,
    degree: Vec<usize>,
    face_of: Vec<usize>,
    face_rep: Vec<Option<Dart>>,
    outer: usize,
}

impl PlaneGraph {
    /// Builds the structure from clockwise lists of outgoing darts.
    pub fn from_rotation(n: usize, ends: Vec<[usize; 2]>, rotation: &[Vec<Dart>]) -> Result<Self> {
        if rotation.len() != n {
            return Err(Error::Format(format!(
                "rotation has {} entries for {} vertices",
                rotation.len(),
                n
            )));
        }
        let m = ends.len();
        for (e, &[u, v]) in ends.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(Error::NotSimple(format!("self-loop at edge {e}")));
            }
        }
        let mut seen = vec![false; 2 * m];
        let mut cw_next = vec![usize::MAX; 2 * m];
        let mut cw_prev = vec![usize::MAX; 2 * m];
        let mut first = vec![None; n];
        let mut degree = vec![0; n];
        for (v, list) in rotation.iter().enumerate() {
            for &d in list {
                if d >= 2 * m || seen[d] || Self::tail_of(&ends, d) != v {
                    return Err(Error::BadRotation(v));
                }
                seen[d] = true;
            }
            let k = list.len();
            for i in 0..k {
                cw_next[list[i]] = list[(i + 1) % k];
                cw_prev[list[(i + 1) % k]] = list[i];
            }
            first[v] = list.first().copied();
            degree[v] = k;
        }
        if let Some(d) = seen.iter().position(|s| !s) {
            return Err(Error::BadRotation(Self::tail_of(&ends, d)));
        }
        let mut g = PlaneGraph {
            n,
            ends,
            alive: vec![true; m],
            cw_next,
            cw_prev,
            first,
            degree,
            face_of: vec![usize::MAX; 2 * m],
            face_rep: Vec::new(),
            outer: 0,
        };
        g.recompute_faces();
        g.outer = g.default_outer();
        Ok(g)
    }

    fn tail_of(ends: &[[usize; 2]], d: Dart) -> usize {
        ends[edge_of(d)][d & 1]
    }

    fn recompute_faces(&mut self) {
        self.face_of.iter_mut().for_each(|f| *f = usize::MAX);
        self.face_rep.clear();
        for d in 0..2 * self.ends.len() {
            if !self.alive[edge_of(d)] || self.face_of[d] != usize::MAX {
                continue;
            }
            let id = self.face_rep.len();
            self.face_rep.push(Some(d));
            let mut x = d;
            loop {
                self.face_of[x] = id;
                x = self.next_in_face(x);
                if x == d {
                    break;
                }
            }
        }
    }

    /// Longest boundary walk, ties to the lowest face id.
    pub fn default_outer(&self) -> usize {
        let mut best = 0;
        let mut best_len = 0;
        for f in self.face_ids() {
            let len = self.face_len(f);
            if len > best_len {
                best = f;
                best_len = len;
            }
        }
        best
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edge slots, including removed ones before [`compact`](Self::compact).
    pub fn edge_slots(&self) -> usize {
        self.ends.len()
    }

    pub fn num_edges(&self) -> usize {
        self.alive.iter().filter(|a| **a).count()
    }

    pub fn is_alive(&self, e: usize) -> bool {
        self.alive[e]
    }

    pub fn ends(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }

    pub fn all_ends(&self) -> &[[usize; 2]] {
        &self.ends
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.ends.len()).filter(move |&e| self.alive[e])
    }

    #[inline]
    pub fn tail(&self, d: Dart) -> usize {
        self.ends[edge_of(d)][d & 1]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> usize {
        self.ends[edge_of(d)][(d & 1) ^ 1]
    }

    #[inline]
    pub fn cw_next(&self, d: Dart) -> Dart {
        self.cw_next[d]
    }

    #[inline]
    pub fn cw_prev(&self, d: Dart) -> Dart {
        self.cw_prev[d]
    }

    #[inline]
    pub fn next_in_face(&self, d: Dart) -> Dart {
        self.cw_next[twin(d)]
    }

    #[inline]
    pub fn prev_in_face(&self, d: Dart) -> Dart {
        twin(self.cw_prev[d])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    /// Clockwise outgoing darts of `v`.
    pub fn darts_around(&self, v: usize) -> Vec<Dart> {
        let mut out = Vec::with_capacity(self.degree[v]);
        if let Some(start) = self.first[v] {
            let mut d = start;
            loop {
                out.push(d);
                d = self.cw_next[d];
                if d == start {
                    break;
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.darts_around(v).into_iter().map(|d| self.head(d)).collect()
    }

    /// Outgoing dart from `u` to `v`, if the two are adjacent.
    pub fn find_dart(&self, u: usize, v: usize) -> Option<Dart> {
        self.darts_around(u).into_iter().find(|&d| self.head(d) == v)
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree[u] <= self.degree[v] { (u, v) } else { (v, u) };
        self.find_dart(a, b).is_some()
    }

    #[inline]
    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn face_slots(&self) -> usize {
        self.face_rep.len()
    }

    pub fn face_ids(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.face_rep.len()).filter(move |&f| self.face_rep[f].is_some())
    }

    pub fn num_faces(&self) -> usize {
        self.face_rep.iter().filter(|r| r.is_some()).count()
    }

    pub fn face_rep(&self, f: usize) -> Dart {
        self.face_rep[f].expect("face was merged away")
    }

    /// Boundary darts of face `f` in walking order (face on the left).
    pub fn face_darts(&self, f: usize) -> Vec<Dart> {
        let start = self.face_rep(f);
        let mut out = vec![start];
        let mut d = self.next_in_face(start);
        while d != start {
            out.push(d);
            d = self.next_in_face(d);
        }
        out
    }

    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.face_darts(f).into_iter().map(|d| self.tail(d)).collect()
    }

    /// Vertices of the face left of `d`, starting at `tail(d)`.
    pub fn walk_from(&self, d: Dart) -> Vec<usize> {
        let mut out = vec![self.tail(d)];
        let mut x = self.next_in_face(d);
        while x != d {
            out.push(self.tail(x));
            x = self.next_in_face(x);
        }
        out
    }

    pub fn face_len(&self, f: usize) -> usize {
        let start = self.face_rep(f);
        let mut len = 1;
        let mut d = self.next_in_face(start);
        while d != start {
            len += 1;
            d = self.next_in_face(d);
        }
        len
    }

    pub fn outer(&self) -> usize {
        self.outer
    }

    pub fn set_outer(&mut self, f: usize) -> Result<()> {
        if f >= self.face_rep.len() || self.face_rep[f].is_none() {
            return Err(Error::Format(format!("outer face {f} does not exist")));
        }
        self.outer = f;
        Ok(())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.n as i64 - self.num_edges() as i64 + self.num_faces() as i64
    }

    /// Inserts edge `{head(a), head(c)}` into the face containing darts `a` and `c`.
    /// The new edge is placed right after `a` at `head(a)` and right after `c` at
    /// `head(c)` along the face walk. Returns the new edge id; its dart `2e`
    /// runs from `head(a)` to `head(c)`. The side containing `a` keeps the old
    /// face id (and thus stays outer if the face was outer).
    pub fn insert_edge(&mut self, a: Dart, c: Dart) -> usize {
        let f = self.face_of[a];
        assert_eq!(f, self.face_of[c], "insert_edge across different faces");
        let u = self.head(a);
        let v = self.head(c);
        let e = self.ends.len();
        self.ends.push([u, v]);
        self.alive.push(true);
        let du = 2 * e;
        let dv = 2 * e + 1;
        self.cw_next.extend([usize::MAX, usize::MAX]);
        self.cw_prev.extend([usize::MAX, usize::MAX]);
        self.face_of.extend([usize::MAX, usize::MAX]);
        self.link_after(twin(a), du);
        self.link_after(twin(c), dv);
        self.degree[u] += 1;
        self.degree[v] += 1;
        let new_face = self.face_rep.len();
        self.face_rep.push(Some(dv));
        self.face_rep[f] = Some(du);
        self.relabel(du, f);
        self.relabel(dv, new_face);
        e
    }

    /// Connects isolated vertex `v` to `head(a)` inside the face of `a`, right after
    /// `a` along the face walk. Returns the new edge id; dart `2e` runs from `head(a)`.
    pub fn attach(&mut self, a: Dart, v: usize) -> usize {
        assert_eq!(self.degree[v], 0, "attach needs an isolated vertex");
        let f = self.face_of[a];
        let u = self.head(a);
        let e = self.ends.len();
        self.ends.push([u, v]);
        self.alive.push(true);
        self.cw_next.extend([usize::MAX, usize::MAX]);
        self.cw_prev.extend([usize::MAX, usize::MAX]);
        self.face_of.extend([f, f]);
        self.link_after(twin(a), 2 * e);
        self.link_after(2 * e + 1, 2 * e + 1);
        self.degree[u] += 1;
        self.degree[v] += 1;
        e
    }

    /// Removes edge `e`, merging its two faces. Bridges are rejected.
    pub fn remove_edge(&mut self, e: usize) -> Result<()> {
        let d = 2 * e;
        let t = d + 1;
        let fd = self.face_of[d];
        let ft = self.face_of[t];
        if fd == ft {
            return Err(Error::Format(format!("edge {e} is a bridge")));
        }
        let survivor = self.next_in_face(d);
        self.unlink(d);
        self.unlink(t);
        self.alive[e] = false;
        let [u, v] = self.ends[e];
        self.degree[u] -= 1;
        self.degree[v] -= 1;
        let keep = fd.min(ft);
        let drop = fd.max(ft);
        self.face_rep[drop] = None;
        self.face_rep[keep] = Some(survivor);
        self.relabel(survivor, keep);
        if self.outer == drop {
            self.outer = keep;
        }
        Ok(())
    }

    fn link_after(&mut self, p: Dart, d: Dart) {
        let v = self.tail(d);
        if self.degree[v] == 0 {
            self.cw_next[d] = d;
            self.cw_prev[d] = d;
            self.first[v] = Some(d);
            return;
        }
        let q = self.cw_next[p];
        self.cw_next[p] = d;
        self.cw_prev[d] = p;
        self.cw_next[d] = q;
        self.cw_prev[q] = d;
    }

    fn unlink(&mut self, d: Dart) {
        let v = self.tail(d);
        let p = self.cw_prev[d];
        let q = self.cw_next[d];
        if p == d {
            self.first[v] = None;
        } else {
            self.cw_next[p] = q;
            self.cw_prev[q] = p;
            if self.first[v] == Some(d) {
                self.first[v] = Some(q);
            }
        }
    }

    fn relabel(&mut self, start: Dart, id: usize) {
        let mut d = start;
        loop {
            self.face_of[d] = id;
            d = self.next_in_face(d);
            if d == start {
                break;
            }
        }
    }

    /// Clockwise rotation as dart lists.
    pub fn rotation(&self) -> Vec<Vec<Dart>> {
        (0..self.n).map(|v| self.darts_around(v)).collect()
    }

    /// Drops removed edges and renumbers edges and faces. Returns the new graph
    /// and, for every old edge id, its new id.
    pub fn compact(&self) -> (PlaneGraph, Vec<Option<usize>>) {
        let mut map = vec![None; self.ends.len()];
        let mut ends = Vec::new();
        for e in self.edges() {
            map[e] = Some(ends.len());
            ends.push(self.ends[e]);
        }
        let remap = |d: Dart| 2 * map[edge_of(d)].unwrap() + (d & 1);
        let rotation: Vec<Vec<Dart>> = (0..self.n)
            .map(|v| self.darts_around(v).into_iter().map(remap).collect())
            .collect();
        let mut g = PlaneGraph::from_rotation(self.n, ends, &rotation)
            .expect("compacting a valid plane graph cannot fail");
        let outer_dart = remap(self.face_rep(self.outer));
        g.outer = g.face_of[outer_dart];
        (g, map)
    }

    /// Adds isolated vertices.
    pub fn add_vertices(&mut self, k: usize) -> usize {
        let first_new = self.n;
        self.n += k;
        self.first.extend(std::iter::repeat_n(None, k));
        self.degree.extend(std::iter::repeat_n(0, k));
        first_new
    }

    /// Connected components over live edges; isolated vertices count as components.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut comps = self.n;
        for e in self.edges() {
            let [u, v] = self.ends[e];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps
    }

    pub fn has_face(&self, f: usize) -> bool {
        f < self.face_rep.len() && self.face_rep[f].is_some()
    }

    /// Sub-embedding on the vertices `verts`, using the live edges accepted by
    /// `keep_e` whose ends are both kept. Rotations are restricted, so faces merge
    /// where vertices or edges were dropped. Returns the graph with vertices
    /// renumbered densely in increasing id order, then local-to-global vertex ids and
    /// local-to-global edge ids. Runs in time linear in the degrees of `verts`.
    pub fn induced(&self, verts: &[usize], keep_e: impl Fn(usize) -> bool) -> (PlaneGraph, Vec<usize>, Vec<usize>) {
        let mut global_v = verts.to_vec();
        global_v.sort_unstable();
        global_v.dedup();
        let local: HashMap<usize, usize> = global_v.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut global_e: Vec<usize> = global_v
            .iter()
            .flat_map(|&v| self.darts_around(v))
            .map(edge_of)
            .filter(|&e| {
                let [u, v] = self.ends[e];
                local.contains_key(&u) && local.contains_key(&v) && keep_e(e)
            })
            .collect();
        global_e.sort_unstable();
        global_e.dedup();
        let edge_local: HashMap<usize, usize> = global_e.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let ends = global_e.iter().map(|&e| self.ends[e].map(|v| local[&v])).collect();
        let rotation: Vec<Vec<Dart>> = global_v
            .iter()
            .map(|&v| {
                self.darts_around(v)
                    .into_iter()
                    .filter_map(|d| edge_local.get(&edge_of(d)).map(|&e| 2 * e + (d & 1)))
                    .collect()
            })
            .collect();
        let g = PlaneGraph::from_rotation(global_v.len(), ends, &rotation)
            .expect("restricting a valid rotation system cannot fail");
        (g, global_v, global_e)
    }

    /// Checks the face count against Euler's formula for a connected graph.
    pub fn check_euler(&self) -> Result<()> {
        let chi = self.euler_characteristic();
        if chi != 2 {
            return Err(Error::EulerViolation { euler: chi });
        }
        Ok(())
    }

    /// Face ids on the left and right of dart `d`.
    pub fn sides(&self, d: Dart) -> (usize, usize) {
        (self.face_of[d], self.face_of[twin(d)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        // 0-1, 1-2, 2-0 ; rotations are trivially cyclic
        let ends = vec![[0, 1], [1, 2], [2, 0]];
        let rot = vec![vec![0, 5], vec![1, 2], vec![3, 4]];
        PlaneGraph::from_rotation(3, ends, &rot).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = triangle();
        assert_eq!(g.num_faces(), 2);
        assert!(g.face_ids().all(|f| g.face_len(f) == 3));
        g.check_euler().unwrap();
    }

    #[test]
    fn insert_and_remove_keep_euler() {
        // square 0-1-2-3
        let ends = vec![[0, 1], [1, 2], [2, 3], [3, 0]];
        let rot = vec![vec![0, 7], vec![1, 2], vec![3, 4], vec![5, 6]];
        let mut g = PlaneGraph::from_rotation(4, ends, &rot).unwrap();
        assert_eq!(g.num_faces(), 2);
        let f = 0;
        let darts = g.face_darts(f);
        // chord between head(darts[0]) and head(darts[2])
        let e = g.insert_edge(darts[0], darts[2]);
        assert_eq!(g.num_faces(), 3);
        g.check_euler().unwrap();
        let mut sizes: Vec<usize> = g.face_ids().map(|f| g.face_len(f)).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 4]);
        g.remove_edge(e).unwrap();
        assert_eq!(g.num_faces(), 2);
        let (c, _) = g.compact();
        assert_eq!(c.num_edges(), 4);
        c.check_euler().unwrap();
    }

    #[test]
    fn bad_rotation_rejected() {
        let ends = vec![[0, 1], [1, 2], [2, 0]];
        let rot = vec![vec![0, 0], vec![1, 2], vec![3, 4]];
        assert!(matches!(
            PlaneGraph::from_rotation(3, ends, &rot),
            Err(Error::BadRotation(0))
        ));
    }
}
