use super::leftish::CanonicalOrdering;
use crate::error::{Error, Result};
use crate::graph::PlaneGraph;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceKind {
    Triangle,
    Rhomboid,
    LeftTrapezoid,
    RightTrapezoid,
}

/// An inner face with its roles. `left` and `right` are the neighbours of
/// `bottom` on the face, `apex` is the vertex opposite `bottom` (for a triangle
/// the later of `left` and `right`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceClass {
    pub face: usize,
    pub kind: FaceKind,
    pub bottom: usize,
    pub top: usize,
    pub left: usize,
    pub right: usize,
    pub apex: usize,
    pub left_support: bool,
    pub right_support: bool,
    /// Index of the path holding `top`, when known.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closing_step: Option<usize>,
}

impl FaceClass {
    pub fn is_quad(&self) -> bool {
        self.kind != FaceKind::Triangle
    }

    /// For a quadrangle, the two endpoints of the crossing edge that avoids `bottom`.
    pub fn side_pair(&self) -> [usize; 2] {
        [self.left, self.right]
    }
}

/// Face walk starting at its lowest vertex: `[bottom, right, ..., left]`.
fn from_bottom(g: &PlaneGraph, f: usize, rank: &[usize]) -> Vec<usize> {
    let darts = g.face_darts(f);
    let i = (0..darts.len()).min_by_key(|&i| rank[g.tail(darts[i])]).unwrap();
    g.walk_from(darts[i])
}

/// Classifies every inner face by the ranks of its corners: a quadrangle whose
/// top is opposite its bottom is a rhomboid, one whose top follows the bottom on
/// the right is a left-trapezoid, and the mirror case a right-trapezoid. The face
/// `outer` is skipped.
pub fn classify_by_ranks(g: &PlaneGraph, rank: &[usize], outer: usize) -> Result<Vec<FaceClass>> {
    let mut out = Vec::new();
    for f in g.face_ids() {
        if f == outer {
            continue;
        }
        let w = from_bottom(g, f, rank);
        let top = *w.iter().max_by_key(|&&v| rank[v]).unwrap();
        let (bottom, right, left) = (w[0], w[1], w[w.len() - 1]);
        let (kind, apex) = match w.len() {
            3 => (FaceKind::Triangle, top),
            4 if top == w[2] => (FaceKind::Rhomboid, w[2]),
            4 if top == right => (FaceKind::LeftTrapezoid, w[2]),
            4 if top == left => (FaceKind::RightTrapezoid, w[2]),
            _ => return Err(Error::UnclassifiableFace(f)),
        };
        out.push(FaceClass {
            face: f,
            kind,
            bottom,
            top,
            left,
            right,
            apex,
            left_support: false,
            right_support: false,
            closing_step: None,
        });
    }
    Ok(out)
}

/// Classifies the inner faces of a piece by the support of the bottom vertex and
/// the length of the path that closes the face.
pub fn classify_faces(g: &PlaneGraph, co: &CanonicalOrdering) -> Result<Vec<FaceClass>> {
    let mut out = Vec::new();
    for f in g.face_ids() {
        if f == g.outer() {
            continue;
        }
        let w = from_bottom(g, f, &co.rank);
        let (bottom, right, left) = (w[0], w[1], w[w.len() - 1]);
        let left_support = co.contour_pairs.contains(&(left, bottom));
        let right_support = co.contour_pairs.contains(&(bottom, right));
        let closing = w.iter().map(|&v| co.step[v]).max().unwrap();
        let singleton = co.paths[closing].len() == 1;
        let (kind, top) = match w.len() {
            3 if (left_support || right_support) && singleton => {
                let top = if co.rank[left] > co.rank[right] { left } else { right };
                (FaceKind::Triangle, top)
            }
            4 if !singleton || (left_support && right_support) => (FaceKind::Rhomboid, w[2]),
            4 if left_support => (FaceKind::LeftTrapezoid, right),
            4 if right_support => (FaceKind::RightTrapezoid, left),
            _ => return Err(Error::UnclassifiableFace(f)),
        };
        let apex = if w.len() == 3 { top } else { w[2] };
        out.push(FaceClass {
            face: f,
            kind,
            bottom,
            top,
            left,
            right,
            apex,
            left_support,
            right_support,
            closing_step: Some(closing),
        });
    }
    Ok(out)
}

/// A vertex whose later neighbours, read left to right, are not bitonic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BitonicViolation {
    pub vertex: usize,
    /// Later neighbours in clockwise order, empty if they are not contiguous.
    pub sequence: Vec<usize>,
}

/// Bitonic in the strong sense: increasing up to the maximum, decreasing after
/// it, and everything after the maximum above everything before it.
pub fn is_bitonic(seq: &[usize]) -> bool {
    if seq.len() <= 2 {
        return true;
    }
    let p = (0..seq.len()).max_by_key(|&i| seq[i]).unwrap();
    let up = seq[..p].windows(2).all(|w| w[0] < w[1]);
    let down = seq[p..].windows(2).all(|w| w[0] > w[1]);
    let sep = p == 0 || p == seq.len() - 1 || seq[p - 1] < seq[seq.len() - 1];
    up && down && sep
}

/// For every vertex `v`, the neighbours placed after `v`'s path, in clockwise order
/// from left to right, must be bitonic in rank.
pub fn check_bitonic(g: &PlaneGraph, co: &CanonicalOrdering) -> Vec<BitonicViolation> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        let darts = g.darts_around(v);
        let later = |i: usize| co.step[g.head(darts[i])] > co.step[v];
        let k = darts.len();
        let starts: Vec<usize> = (0..k).filter(|&i| later(i) && !later((i + k - 1) % k)).collect();
        if starts.is_empty() {
            continue;
        }
        if starts.len() > 1 {
            out.push(BitonicViolation { vertex: v, sequence: Vec::new() });
            continue;
        }
        let mut seq = Vec::new();
        let mut i = starts[0];
        while later(i) && seq.len() < k {
            seq.push(co.rank[g.head(darts[i])]);
            i = (i + 1) % k;
        }
        if !is_bitonic(&seq) {
            let sequence = seq.iter().map(|&r| co.order()[r - 1]).collect();
            out.push(BitonicViolation { vertex: v, sequence });
        }
    }
    out
}

