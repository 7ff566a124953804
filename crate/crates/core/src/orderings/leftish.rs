//! Leftish canonical ordering by forward construction.
//!
//! The contour runs from `v1` (left) to `v2` (right) over the placed part. The
//! candidate whose left neighbour is contour vertex `c` lives in the face above
//! the contour edge `(c, next(c))`, so every contour vertex offers at most one
//! candidate and the leftish choice is the feasible one with the leftmost `c`.
//! Contour positions are compared through order-maintenance labels.

use crate::error::{Error, Result};
use crate::graph::plane::twin;
use crate::graph::PlaneGraph;
use std::collections::{BTreeMap, HashSet};

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOrdering {
    /// Π in placement order; each path is listed in rank order.
    pub paths: Vec<Vec<usize>>,
    /// Rank of every vertex, 1-based.
    pub rank: Vec<usize>,
    /// Index in `paths` of every vertex.
    pub step: Vec<usize>,
    /// Ordered pairs `(l, r)` that were neighbours, `l` left of `r`, on some contour.
    pub contour_pairs: HashSet<(usize, usize)>,
    pub v1: usize,
    pub v2: usize,
    pub vn: usize,
}

impl CanonicalOrdering {
    pub fn order(&self) -> Vec<usize> {
        let mut out = vec![0; self.rank.len()];
        for (v, &r) in self.rank.iter().enumerate() {
            out[r - 1] = v;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Candidate {
    Single(usize),
    /// Left-to-right along the contour.
    Path(usize, usize),
}

struct Builder<'a> {
    g: &'a PlaneGraph,
    placed: Vec<bool>,
    unplaced_deg: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    label: Vec<u64>,
    on_contour: Vec<bool>,
    vn: usize,
    remaining: usize,
    feasible: BTreeMap<u64, usize>,
    cand: Vec<Option<Candidate>>,
}

impl<'a> Builder<'a> {
    fn above(&self, c: usize) -> Vec<usize> {
        let d = self.g.find_dart(c, self.next[c]).expect("contour edge exists");
        self.g.walk_from(d)
    }

    /// Faces around `z` are walked through its rotation; placed neighbours must form
    /// one block whose faces lie on the contour between its two ends.
    fn single_feasible(&self, z: usize, c: usize) -> bool {
        if self.placed[z] {
            return false;
        }
        if z == self.vn {
            return self.remaining == 1;
        }
        if self.unplaced_deg[z] == 0 {
            return false;
        }
        let darts = self.g.darts_around(z);
        let k = darts.len();
        let is_placed: Vec<bool> = darts.iter().map(|&d| self.placed[self.g.head(d)]).collect();
        // start of the placed block: placed entry whose cw predecessor is unplaced
        let starts: Vec<usize> = (0..k)
            .filter(|&i| is_placed[i] && !is_placed[(i + k - 1) % k])
            .collect();
        if starts.len() != 1 {
            return false;
        }
        let mut block = Vec::new();
        let mut i = starts[0];
        while is_placed[i] {
            block.push(i);
            i = (i + 1) % k;
            if block.len() == k {
                return false;
            }
        }
        if block.len() < 2 {
            return false;
        }
        // cw block runs right to left under z
        let left = self.g.head(darts[*block.last().unwrap()]);
        if left != c {
            return false;
        }
        for (i, w) in block.windows(2).rev().enumerate() {
            let (dr, dl) = (darts[w[0]], darts[w[1]]);
            let (wr, wl) = (self.g.head(dr), self.g.head(dl));
            if !self.on_contour[wr] || !self.on_contour[wl] {
                return false;
            }
            // inner lower neighbours are covered and may only wait for z
            if i > 0 && self.unplaced_deg[wl] != 1 {
                return false;
            }
            let face = self.g.walk_from(twin(dr));
            match face.len() {
                3 => {
                    if self.next[wl] != wr {
                        return false;
                    }
                }
                4 => {
                    let u = face[3];
                    if self.next[wl] != u || self.next[u] != wr || self.unplaced_deg[u] != 0 {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        self.upper_faces_clean(z)
    }

    /// Faces in angles at `z` between two unplaced neighbours hold no placed vertex,
    /// so placing `z` keeps the unplaced part connected.
    fn upper_faces_clean(&self, z: usize) -> bool {
        for d in self.g.darts_around(z) {
            let d2 = self.g.cw_next(d);
            if self.placed[self.g.head(d)] || self.placed[self.g.head(d2)] {
                continue;
            }
            if self.g.walk_from(twin(d)).iter().any(|&v| self.placed[v]) {
                return false;
            }
        }
        true
    }

    fn evaluate(&self, c: usize) -> Option<Candidate> {
        if !self.on_contour[c] || self.next[c] == NONE {
            return None;
        }
        let face = self.above(c);
        let c2 = self.next[c];
        match face.len() {
            3 => {
                let z = face[2];
                self.single_feasible(z, c).then_some(Candidate::Single(z))
            }
            4 => {
                let (z2, z1) = (face[2], face[3]);
                match (self.placed[z1], self.placed[z2]) {
                    (false, false) => {
                        let ok = z1 != self.vn
                            && z2 != self.vn
                            && self.placed_neighbours(z1) == [c]
                            && self.placed_neighbours(z2) == [c2]
                            && self.unplaced_deg[z1] >= 2
                            && self.unplaced_deg[z2] >= 2
                            && self.upper_faces_clean(z1)
                            && self.upper_faces_clean(z2);
                        ok.then_some(Candidate::Path(z1, z2))
                    }
                    (false, true) => self.single_feasible(z1, c).then_some(Candidate::Single(z1)),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn placed_neighbours(&self, z: usize) -> Vec<usize> {
        self.g.neighbors(z).into_iter().filter(|&w| self.placed[w]).collect()
    }

    fn refresh(&mut self, c: usize) {
        if self.cand[c].take().is_some() {
            self.feasible.remove(&self.label[c]);
        }
        if let Some(cd) = self.evaluate(c) {
            self.feasible.insert(self.label[c], c);
            self.cand[c] = Some(cd);
        }
    }

    fn relabel(&mut self, start: usize) {
        let mut order = Vec::new();
        let mut v = start;
        while v != NONE {
            order.push(v);
            v = self.next[v];
        }
        let step = u64::MAX / (order.len() as u64 + 1);
        for (i, &v) in order.iter().enumerate() {
            self.label[v] = step * i as u64;
        }
        self.feasible = order
            .iter()
            .filter(|&&v| self.cand[v].is_some())
            .map(|&v| (self.label[v], v))
            .collect();
    }
}

/// Leftish canonical ordering with `P0 = <v1, v2>`. `{v1, v2}` must lie on the outer
/// face with the outer walk running `v2 -> v1 -> vn`; `vn` becomes last.
pub fn leftish_canonical_ordering(g: &PlaneGraph, v1: usize, v2: usize) -> Result<CanonicalOrdering> {
    let n = g.n();
    let d12 = g.find_dart(v2, v1).ok_or(Error::EdgeNotOnOuterFace(v1, v2))?;
    if g.face_of(d12) != g.outer() {
        return Err(Error::EdgeNotOnOuterFace(v1, v2));
    }
    for f in g.face_ids() {
        let len = g.face_len(f);
        if f != g.outer() && len > 4 {
            return Err(Error::BadFaceSize { face: f, size: len });
        }
    }
    let vn = g.head(g.next_in_face(d12));
    let mut b = Builder {
        g,
        placed: vec![false; n],
        unplaced_deg: (0..n).map(|v| g.degree(v)).collect(),
        next: vec![NONE; n],
        prev: vec![NONE; n],
        label: vec![0; n],
        on_contour: vec![false; n],
        vn,
        remaining: n,
        feasible: BTreeMap::new(),
        cand: vec![None; n],
    };
    let mut rank = vec![0; n];
    let mut step = vec![0; n];
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut pairs = HashSet::new();
    let mut r = 0;
    place(&mut b, v1, &mut rank, &mut step, &mut r, 0);
    place(&mut b, v2, &mut rank, &mut step, &mut r, 0);
    paths.push(vec![v1, v2]);
    b.next[v1] = v2;
    b.prev[v2] = v1;
    b.label[v1] = 0;
    b.label[v2] = u64::MAX;
    pairs.insert((v1, v2));
    b.refresh(v1);

    while b.remaining > 0 {
        let c = match b.feasible.iter().next() {
            Some((_, &c)) => c,
            None => {
                // nothing known feasible: rescan the contour once before giving up
                let mut v = v1;
                while v != NONE {
                    b.refresh(v);
                    v = b.next[v];
                }
                match b.feasible.iter().next() {
                    Some((_, &c)) => c,
                    None => return Err(Error::NotThreeConnected),
                }
            }
        };
        let cand = b.evaluate(c);
        if cand != b.cand[c] || cand.is_none() {
            b.refresh(c);
            continue;
        }
        let k = paths.len();
        let (new, right): (Vec<usize>, usize) = match cand.unwrap() {
            Candidate::Single(z) => {
                // rightmost placed neighbour: the contour walk from c meets them all
                let nb: HashSet<usize> = b.placed_neighbours(z).into_iter().collect();
                let mut seen = 1;
                let mut right = c;
                while seen < nb.len() {
                    right = b.next[right];
                    if nb.contains(&right) {
                        seen += 1;
                    }
                }
                (vec![z], right)
            }
            Candidate::Path(z1, z2) => (vec![z1, z2], b.next[c]),
        };
        // detach covered vertices
        let mut w = b.next[c];
        while w != right {
            let nx = b.next[w];
            b.on_contour[w] = false;
            if b.cand[w].take().is_some() {
                b.feasible.remove(&b.label[w]);
            }
            b.next[w] = NONE;
            b.prev[w] = NONE;
            w = nx;
        }
        let (lo, hi) = (b.label[c], b.label[right]);
        let gap = hi - lo;
        let directed: Vec<usize> = if new.len() == 2 && rank[right] < rank[c] {
            vec![new[1], new[0]]
        } else {
            new.clone()
        };
        for &v in &directed {
            place(&mut b, v, &mut rank, &mut step, &mut r, k);
        }
        paths.push(directed);
        // splice new vertices between c and right
        let mut last = c;
        for (i, &v) in new.iter().enumerate() {
            b.next[last] = v;
            b.prev[v] = last;
            pairs.insert((last, v));
            let pos = (i + 1) as u64;
            b.label[v] = lo + gap / (new.len() as u64 + 1) * pos;
            last = v;
        }
        b.next[last] = right;
        b.prev[right] = last;
        pairs.insert((last, right));
        if gap <= new.len() as u64 + 1 {
            b.relabel(v1);
        }
        // refresh candidates that may have changed
        let mut dirty: Vec<usize> = vec![c, right];
        if b.prev[c] != NONE {
            dirty.push(b.prev[c]);
        }
        dirty.extend(new.iter().copied());
        for &p in &new {
            for d in g.darts_around(p) {
                for z in g.walk_from(d) {
                    if !b.placed[z] {
                        dirty.extend(g.neighbors(z).into_iter().filter(|&u| b.on_contour[u]));
                    }
                }
                let w = g.head(d);
                if b.placed[w] && b.on_contour[w] {
                    for u in [b.prev[w], w] {
                        if u == NONE || b.next[u] == NONE {
                            continue;
                        }
                        for z in b.above(u) {
                            if !b.placed[z] {
                                dirty.extend(g.neighbors(z).into_iter().filter(|&x| b.on_contour[x]));
                            }
                        }
                    }
                    dirty.push(w);
                    if b.prev[w] != NONE {
                        dirty.push(b.prev[w]);
                    }
                }
            }
        }
        dirty.sort_unstable();
        dirty.dedup();
        for v in dirty {
            if b.on_contour[v] {
                b.refresh(v);
            }
        }
    }
    Ok(CanonicalOrdering { paths, rank, step, contour_pairs: pairs, v1, v2, vn })
}

fn place(b: &mut Builder, v: usize, rank: &mut [usize], step: &mut [usize], r: &mut usize, k: usize) {
    b.placed[v] = true;
    b.remaining -= 1;
    b.on_contour[v] = true;
    for w in b.g.neighbors(v) {
        b.unplaced_deg[w] -= 1;
    }
    *r += 1;
    rank[v] = *r;
    step[v] = k;
}
