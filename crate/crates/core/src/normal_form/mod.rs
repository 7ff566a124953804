//! Normal form of a 1-planar embedding: planar-maximal augmentation, rerouting of
//! B-configurations, copies of separation-pair edges, the planar skeleton and
//! kite contraction.
//!
//! All stages work on the planarization, where crossing points are dummy vertices
//! `n..n+k`. Every planarization edge slot is tagged with the augmented edge it
//! belongs to.

mod contract;
mod skeleton;

pub use contract::{kite_contract, kite_expand, Contraction, KiteRoles};
pub use skeleton::{planar_skeleton, DecompositionTree, SeparationPair, Skeleton};

use crate::graph::plane::{edge_of, twin};
use crate::graph::{Dart, Embedding, PlaneGraph};
use serde::Serialize;
use std::collections::{HashMap, HashSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Original,
    Augmentation,
    StCopy,
}

/// An edge of the augmented graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AugEdge {
    pub ends: [usize; 2],
    pub provenance: Provenance,
    /// For a copy, the augmented edge it duplicates.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub copy_of: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossingKind {
    Kite,
    BConfiguration,
    WConfiguration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingClass {
    pub pair: usize,
    /// Augmented edge ids of the two crossing edges.
    pub edges: [usize; 2],
    pub kind: CrossingKind,
    /// End vertices in clockwise order around the crossing point.
    pub boundary: [usize; 4],
    #[serde(skip)]
    pub dummy: usize,
}

/// An edge moved from its place in the input embedding to close a crossing corner.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reroute {
    pub edge: usize,
    pub ends: [usize; 2],
    /// Crossing pair whose corner the edge now closes.
    pub pair: usize,
    /// Boundary vertices of the two faces the edge separated before the move.
    pub before: [Vec<usize>; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Stage {
    Boxtimes,
    Rerouted,
    Boxplus,
}

/// The input embedding together with its normal-form augmentation.
#[derive(Clone, Debug)]
pub struct AugmentedEmbedding {
    base: Embedding,
    edges: Vec<AugEdge>,
    work: PlaneGraph,
    piece: Vec<usize>,
    adjacent: HashSet<(usize, usize)>,
    crossings: Vec<CrossingClass>,
    reroutes: Vec<Reroute>,
    stage: Stage,
    tree: Option<DecompositionTree>,
    square: Option<Skeleton>,
    bullet: Option<Contraction>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl AugmentedEmbedding {
    pub fn base(&self) -> &Embedding {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Edges of the current stage: the input edges first, under their input ids.
    pub fn edges(&self) -> &[AugEdge] {
        &self.edges
    }

    /// Edges of G⊠, that is everything except separation-pair copies.
    pub fn boxtimes_edges(&self) -> Vec<[usize; 2]> {
        self.edges
            .iter()
            .filter(|e| e.provenance != Provenance::StCopy)
            .map(|e| e.ends)
            .collect()
    }

    /// Planarization of the current stage.
    pub fn planarization(&self) -> &PlaneGraph {
        &self.work
    }

    /// Augmented edge id of a planarization edge slot.
    pub fn piece_edge(&self, slot: usize) -> usize {
        self.piece[slot]
    }

    pub fn crossing_classes(&self) -> &[CrossingClass] {
        &self.crossings
    }

    pub fn reroutes(&self) -> &[Reroute] {
        &self.reroutes
    }

    pub fn tree(&self) -> Option<&DecompositionTree> {
        self.tree.as_ref()
    }

    pub fn square(&self) -> Option<&Skeleton> {
        self.square.as_ref()
    }

    pub fn bullet(&self) -> Option<&Contraction> {
        self.bullet.as_ref()
    }

    pub fn is_dummy(&self, v: usize) -> bool {
        v >= self.n()
    }

    pub fn has_w_configuration(&self) -> bool {
        self.crossings.iter().any(|c| c.kind == CrossingKind::WConfiguration)
    }

    /// Every face of the planarization is a triangle.
    pub fn is_triangulated(&self) -> bool {
        self.work.face_ids().all(|f| self.work.face_len(f) == 3)
    }

    fn from_embedding(emb: &Embedding) -> Self {
        let g = emb.graph();
        let edges: Vec<AugEdge> = g
            .edges()
            .iter()
            .map(|&ends| AugEdge { ends, provenance: Provenance::Original, copy_of: None })
            .collect();
        let work = emb.planar().clone();
        let piece = (0..work.edge_slots()).map(|s| emb.piece_origin(s).edge()).collect();
        let adjacent = g.edges().iter().map(|&[u, v]| key(u, v)).collect();
        let crossings = emb
            .crossings()
            .iter()
            .enumerate()
            .map(|(i, c)| CrossingClass {
                pair: i,
                edges: c.edges,
                kind: CrossingKind::Kite,
                boundary: emb.crossing_corners(i),
                dummy: c.dummy,
            })
            .collect();
        AugmentedEmbedding {
            base: emb.clone(),
            edges,
            work,
            piece,
            adjacent,
            crossings,
            reroutes: Vec::new(),
            stage: Stage::Boxtimes,
            tree: None,
            square: None,
            bullet: None,
        }
    }

    fn add_edge(&mut self, a: Dart, c: Dart, provenance: Provenance, copy_of: Option<usize>) -> usize {
        let slot = self.work.insert_edge(a, c);
        let ends = self.work.ends(slot);
        let id = self.edges.len();
        self.edges.push(AugEdge { ends, provenance, copy_of });
        self.piece.push(id);
        self.adjacent.insert(key(ends[0], ends[1]));
        id
    }

    /// Darts `x -> p` around the dummy of crossing `i`, clockwise.
    fn crossing_darts(&self, i: usize) -> Vec<Dart> {
        self.work.darts_around(self.crossings[i].dummy)
    }

    /// Closes every open crossing corner whose ends are not adjacent yet.
    fn complete_corners(&mut self) {
        for i in 0..self.crossings.len() {
            for k in 0..4 {
                let d = self.crossing_darts(i)[k];
                let f = self.work.face_of(twin(d));
                if self.work.face_len(f) == 3 {
                    continue;
                }
                let d2 = self.work.cw_next(d);
                let (p, q) = (self.work.head(d), self.work.head(d2));
                if !self.adjacent.contains(&key(p, q)) {
                    let a = self.work.prev_in_face(twin(d));
                    self.add_edge(a, d2, Provenance::Augmentation, None);
                }
            }
        }
    }

    /// Adds chords between non-adjacent real vertices until no face admits one.
    fn triangulate(&mut self) {
        let n = self.n();
        let mut work: Vec<usize> = self.work.face_ids().collect();
        while let Some(f) = work.pop() {
            if !self.work.has_face(f) || self.work.face_len(f) <= 3 {
                continue;
            }
            let darts = self.work.face_darts(f);
            let verts: Vec<usize> = darts.iter().map(|&d| self.work.tail(d)).collect();
            let len = verts.len();
            let mut order: Vec<usize> = (0..len).filter(|&i| verts[i] < n).collect();
            order.sort_by_key(|&i| (verts[i], i));
            let mut chord = None;
            'search: for &i in &order {
                for step in 2..len - 1 {
                    let j = (i + step) % len;
                    let (u, w) = (verts[i], verts[j]);
                    if w < n && u != w && !self.adjacent.contains(&key(u, w)) {
                        chord = Some((i, j));
                        break 'search;
                    }
                }
            }
            if let Some((i, j)) = chord {
                let a = darts[(i + len - 1) % len];
                let c = darts[(j + len - 1) % len];
                let id = self.add_edge(a, c, Provenance::Augmentation, None);
                let slot = self.piece.len() - 1;
                debug_assert_eq!(self.piece[slot], id);
                work.push(self.work.face_of(2 * slot));
                work.push(self.work.face_of(2 * slot + 1));
            }
        }
    }

    /// Uncrossed, non-copy planarization edge between `p` and `q`.
    fn planar_edge_between(&self, p: usize, q: usize) -> Option<usize> {
        self.work
            .darts_around(p)
            .into_iter()
            .filter(|&d| self.work.head(d) == q)
            .map(edge_of)
            .find(|&s| self.edges[self.piece[s]].provenance != Provenance::StCopy)
    }

    /// A side of the edge is a triangle closing some crossing corner.
    fn serves_corner(&self, slot: usize) -> bool {
        let n = self.n();
        [2 * slot, 2 * slot + 1].iter().any(|&d| {
            let f = self.work.face_of(d);
            self.work.face_len(f) == 3 && self.work.face_vertices(f).iter().any(|&v| v >= n)
        })
    }

    fn open_corners(&self, i: usize) -> Vec<Dart> {
        self.crossing_darts(i)
            .into_iter()
            .filter(|&d| self.work.face_len(self.work.face_of(twin(d))) != 3)
            .collect()
    }

    fn reroutable(&self, d: Dart) -> Option<usize> {
        let p = self.work.head(d);
        let q = self.work.head(self.work.cw_next(d));
        self.planar_edge_between(p, q).filter(|&s| !self.serves_corner(s))
    }

    fn classify(&mut self) {
        for i in 0..self.crossings.len() {
            let darts = self.crossing_darts(i);
            let open = self.open_corners(i);
            let kind = if open.is_empty() {
                let copy_closed = darts.iter().any(|&d| {
                    let third = self.work.next_in_face(self.work.cw_next(d));
                    self.edges[self.piece[edge_of(third)]].provenance == Provenance::StCopy
                });
                if copy_closed {
                    CrossingKind::WConfiguration
                } else {
                    CrossingKind::Kite
                }
            } else if open.iter().any(|&d| self.reroutable(d).is_some()) {
                CrossingKind::BConfiguration
            } else {
                CrossingKind::WConfiguration
            };
            self.crossings[i].kind = kind;
            let b: Vec<usize> = darts.iter().map(|&d| self.work.head(d)).collect();
            self.crossings[i].boundary = [b[0], b[1], b[2], b[3]];
        }
    }

    /// Adds a parallel copy across every corner that is still open, then across any
    /// remaining non-triangular face.
    fn add_copies(&mut self) {
        let n = self.n();
        let ids: HashMap<(usize, usize), usize> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (key(e.ends[0], e.ends[1]), i))
            .collect();
        let mut work: Vec<usize> = self.work.face_ids().collect();
        while let Some(f) = work.pop() {
            if !self.work.has_face(f) || self.work.face_len(f) <= 3 {
                continue;
            }
            let darts = self.work.face_darts(f);
            let verts: Vec<usize> = darts.iter().map(|&d| self.work.tail(d)).collect();
            let len = verts.len();
            let corner = (0..len).find(|&i| {
                verts[i] >= n && verts[(i + len - 1) % len] != verts[(i + 1) % len]
            });
            let (i, j) = match corner {
                Some(k) => ((k + len - 1) % len, (k + 1) % len),
                None => {
                    let Some(pair) = (0..len)
                        .filter(|&i| verts[i] < n)
                        .flat_map(|i| (2..len - 1).map(move |s| (i, (i + s) % len)))
                        .find(|&(i, j)| verts[j] < n && verts[i] != verts[j])
                    else {
                        continue;
                    };
                    pair
                }
            };
            let (p, q) = (verts[i], verts[j]);
            let source = ids.get(&key(p, q)).copied();
            let a = darts[(i + len - 1) % len];
            let c = darts[(j + len - 1) % len];
            let provenance = if source.is_some() { Provenance::StCopy } else { Provenance::Augmentation };
            self.add_edge(a, c, provenance, source);
            let slot = self.piece.len() - 1;
            work.push(self.work.face_of(2 * slot));
            work.push(self.work.face_of(2 * slot + 1));
        }
    }
}

/// G⊠: closes crossing corners, then adds planar chords until none fits.
pub fn augment_planar_maximal(emb: &Embedding) -> AugmentedEmbedding {
    let mut aug = AugmentedEmbedding::from_embedding(emb);
    aug.complete_corners();
    aug.triangulate();
    aug.classify();
    aug
}

/// Moves each reroutable edge into the open corner it belongs to, turning the
/// B-configuration into a kite, and re-triangulates the vacated faces.
pub fn reroute_b_configurations(aug: &AugmentedEmbedding) -> AugmentedEmbedding {
    let mut aug = aug.clone();
    loop {
        let mut moved = false;
        for i in 0..aug.crossings.len() {
            for d in aug.open_corners(i) {
                if aug.work.face_len(aug.work.face_of(twin(d))) == 3 {
                    continue;
                }
                let Some(slot) = aug.reroutable(d) else { continue };
                let before = [
                    aug.work.face_vertices(aug.work.face_of(2 * slot)),
                    aug.work.face_vertices(aug.work.face_of(2 * slot + 1)),
                ];
                let id = aug.piece[slot];
                aug.work.remove_edge(slot).expect("a corner edge is never a bridge");
                let a = aug.work.prev_in_face(twin(d));
                let c = aug.work.cw_next(d);
                let new_slot = aug.work.insert_edge(a, c);
                aug.piece.push(id);
                debug_assert_eq!(new_slot + 1, aug.piece.len());
                let ends = aug.edges[id].ends;
                aug.reroutes.push(Reroute { edge: id, ends, pair: i, before });
                moved = true;
            }
        }
        if !moved {
            break;
        }
        aug.triangulate();
    }
    aug.classify();
    aug.stage = aug.stage.max(Stage::Rerouted);
    aug
}

/// G⊞: copies of separation-pair edges make every face a triangle; also derives
/// the planar skeleton and the decomposition tree.
pub fn build_boxplus(aug: &AugmentedEmbedding) -> AugmentedEmbedding {
    let mut aug = if aug.stage < Stage::Rerouted { reroute_b_configurations(aug) } else { aug.clone() };
    aug.add_copies();
    aug.classify();
    aug.stage = Stage::Boxplus;
    let square = skeleton::build(&aug);
    aug.tree = Some(skeleton::decompose(&square));
    aug.square = Some(square);
    aug
}

/// The whole normal-form pipeline.
pub fn normalize(emb: &Embedding) -> AugmentedEmbedding {
    build_boxplus(&reroute_b_configurations(&augment_planar_maximal(emb)))
}

/// Puts a copy of every rerouted input edge back at its original place. Returns the
/// affected edge ids; the drawing of the copies can then follow the input embedding.
pub fn undo_reroutes(aug: &AugmentedEmbedding) -> Vec<usize> {
    aug.reroutes.iter().map(|r| r.edge).collect()
}
