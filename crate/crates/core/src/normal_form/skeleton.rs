use super::{AugmentedEmbedding, Provenance};
use crate::graph::plane::edge_of;
use crate::graph::{Dart, PlaneGraph};
use std::collections::{BTreeMap, VecDeque};

/// G□: the planarization of G⊞ with every crossing pair removed.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub graph: PlaneGraph,
    /// Augmented edge id per skeleton edge.
    pub aug_edge: Vec<usize>,
    pub provenance: Vec<Provenance>,
    /// Quadrangle face per crossing pair.
    pub quad_of: Vec<usize>,
    /// Crossing pair per face, if the face is a quadrangle.
    pub crossing_at: Vec<Option<usize>>,
}

impl Skeleton {
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn is_copy(&self, e: usize) -> bool {
        self.provenance[e] == Provenance::StCopy
    }

    pub fn quad_count(&self) -> usize {
        self.quad_of.len()
    }
}

pub(super) fn build(aug: &AugmentedEmbedding) -> Skeleton {
    let n = aug.n();
    let w = &aug.work;
    let mut local = vec![usize::MAX; w.edge_slots()];
    let mut ends = Vec::new();
    let mut aug_edge = Vec::new();
    for s in w.edges() {
        let [u, v] = w.ends(s);
        if u < n && v < n {
            local[s] = ends.len();
            ends.push([u, v]);
            aug_edge.push(aug.piece[s]);
        }
    }
    let map = |d: Dart| 2 * local[edge_of(d)] + (d & 1);
    let rotation: Vec<Vec<Dart>> = (0..n)
        .map(|v| {
            w.darts_around(v)
                .into_iter()
                .filter(|&d| local[edge_of(d)] != usize::MAX)
                .map(map)
                .collect()
        })
        .collect();
    let mut graph = PlaneGraph::from_rotation(n, ends, &rotation)
        .expect("removing crossing pairs keeps a valid rotation system");
    let outer_dart = w
        .face_darts(w.outer())
        .into_iter()
        .find(|&d| local[edge_of(d)] != usize::MAX)
        .expect("the outer face of a triangulated planarization has a real edge");
    graph
        .set_outer(graph.face_of(map(outer_dart)))
        .expect("face exists");
    let mut crossing_at = vec![None; graph.face_slots()];
    let mut quad_of = Vec::with_capacity(aug.crossings.len());
    for (i, c) in aug.crossings.iter().enumerate() {
        let d = w.darts_around(c.dummy)[0];
        let third = w.next_in_face(w.cw_next(d));
        let f = graph.face_of(map(third));
        crossing_at[f] = Some(i);
        quad_of.push(f);
    }
    let provenance = aug_edge.iter().map(|&e| aug.edges[e].provenance).collect();
    Skeleton { graph, aug_edge, provenance, quad_of, crossing_at }
}

/// Pair `{x, y}` joined by parallel copies in G□, with the regions the copies cut out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationPair {
    pub x: usize,
    pub y: usize,
    /// Skeleton edges between `x` and `y` in clockwise order at `x`.
    pub copies: Vec<usize>,
    /// Region `k` lies clockwise between `copies[k]` and `copies[k + 1]` at `x`.
    pub regions: Vec<Vec<usize>>,
    /// Index of the region holding the outer face.
    pub outer_region: usize,
}

impl SeparationPair {
    /// Inner components in clockwise order at `x`, starting after the outer region.
    pub fn inner(&self) -> impl Iterator<Item = (usize, &Vec<usize>)> {
        let k = self.regions.len();
        (1..k).map(move |i| {
            let r = (self.outer_region + i) % k;
            (r, &self.regions[r])
        })
    }
}

/// Separation pairs and their nesting. An inner region's parent is the smallest
/// inner region of another pair that contains it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionTree {
    pub pairs: Vec<SeparationPair>,
    /// Per pair: enclosing `(pair, region)`, or `None` under the outer component.
    pub parent: Vec<Option<(usize, usize)>>,
}

impl DecompositionTree {
    pub fn is_trivial(&self) -> bool {
        self.pairs.is_empty()
    }
}

pub(super) fn decompose(sq: &Skeleton) -> DecompositionTree {
    let g = &sq.graph;
    let n = g.n();
    let mut groups: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in g.edges() {
        let [u, v] = g.ends(e);
        *groups.entry((u.min(v), u.max(v))).or_default() += 1;
    }
    let outer_vertices = g.face_vertices(g.outer());
    let mut pairs = Vec::new();
    for (&(x, y), &count) in &groups {
        if count < 2 {
            continue;
        }
        let around = g.darts_around(x);
        let pos: Vec<usize> = (0..around.len()).filter(|&i| g.head(around[i]) == y).collect();
        let copies: Vec<usize> = pos.iter().map(|&i| edge_of(around[i])).collect();
        let mut regions = Vec::new();
        for k in 0..pos.len() {
            let (a, b) = (pos[k], pos[(k + 1) % pos.len()]);
            let mut seeds = Vec::new();
            let mut i = (a + 1) % around.len();
            while i != b {
                seeds.push(g.head(around[i]));
                i = (i + 1) % around.len();
            }
            regions.push(flood(g, &seeds, x, y, n));
        }
        let outer_region = regions
            .iter()
            .position(|r| outer_vertices.iter().any(|v| *v != x && *v != y && r.binary_search(v).is_ok()))
            .unwrap_or(0);
        pairs.push(SeparationPair { x, y, copies, regions, outer_region });
    }
    let mut parent = vec![None; pairs.len()];
    for p in 0..pairs.len() {
        let probe = pairs[p].inner().next().and_then(|(_, r)| r.first().copied());
        let Some(v) = probe else { continue };
        let mut best: Option<(usize, usize, usize)> = None;
        for (q, pair) in pairs.iter().enumerate() {
            if q == p {
                continue;
            }
            for (r, region) in pair.inner() {
                let contains = region.binary_search(&v).is_ok()
                    && [pairs[p].x, pairs[p].y]
                        .iter()
                        .all(|u| region.binary_search(u).is_ok() || *u == pair.x || *u == pair.y);
                if contains && best.is_none_or(|(_, _, size)| region.len() < size) {
                    best = Some((q, r, region.len()));
                }
            }
        }
        parent[p] = best.map(|(q, r, _)| (q, r));
    }
    DecompositionTree { pairs, parent }
}

fn flood(g: &PlaneGraph, seeds: &[usize], x: usize, y: usize, n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    seen[x] = true;
    seen[y] = true;
    let mut queue = VecDeque::new();
    for &s in seeds {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        out.push(v);
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

/// G□ of a normalized embedding.
pub fn planar_skeleton(aug: &AugmentedEmbedding) -> Skeleton {
    match aug.square() {
        Some(s) => s.clone(),
        None => build(&super::build_boxplus(aug)),
    }
}
