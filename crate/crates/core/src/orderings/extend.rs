//! Orderings of G□ assembled from its pieces at separation pairs. Every piece is
//! a 3-connected component together with its separation pair and one copy of the
//! pair edge; inner components are numbered as consecutive blocks right before
//! the higher vertex of their pair.

use super::leftish::{leftish_canonical_ordering, CanonicalOrdering};
use super::st::st_order;
use super::VertexOrdering;
use crate::error::{Error, Result};
use crate::graph::plane::edge_of;
use crate::graph::{Dart, PlaneGraph};
use crate::normal_form::{DecompositionTree, Skeleton};
use std::collections::{HashMap, HashSet};

/// A pair vertex position with the paths of one inner component.
type Block = (usize, Vec<Vec<usize>>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceOrder {
    St,
    Leftish,
}

/// A component of G□ between separation pairs, as its own plane graph.
#[derive(Clone, Debug)]
pub struct Piece {
    /// `(pair, region)` of the tree, or `None` for the outermost piece.
    pub node: Option<(usize, usize)>,
    pub graph: PlaneGraph,
    /// Skeleton vertex per local vertex.
    pub vertices: Vec<usize>,
    /// Skeleton edge per local edge.
    pub edges: Vec<usize>,
    /// Local leftish ordering; `None` in st mode or if the piece is not 3-connected.
    pub canonical: Option<CanonicalOrdering>,
}

#[derive(Clone, Debug)]
pub struct ExtendedOrdering {
    pub ordering: VertexOrdering,
    /// Skeleton edge `{s, t}` that is drawn at the left.
    pub st_edge: usize,
    pub pieces: Vec<Piece>,
}

/// Numbers G□ piece by piece, descending the decomposition tree.
pub fn extend_ordering(sq: &Skeleton, tree: &DecompositionTree, mode: PieceOrder) -> Result<ExtendedOrdering> {
    let g = &sq.graph;
    let mut children: HashMap<Option<(usize, usize)>, Vec<usize>> = HashMap::new();
    for (q, &p) in tree.parent.iter().enumerate() {
        children.entry(p).or_default().push(q);
    }
    let mut ctx = Ctx { g, tree, children, mode, pieces: Vec::new() };
    let top = ctx.solve(None, None)?;
    let st_edge = top.st_edge;
    let paths = top.paths;
    let n = g.n();
    let mut rank = vec![0; n];
    let mut r = 0;
    for p in &paths {
        for &v in p {
            r += 1;
            rank[v] = r;
        }
    }
    if r != n {
        return Err(Error::InvalidOrdering(format!("{r} of {n} vertices numbered")));
    }
    let [s, t] = [paths[0][0], *paths.last().unwrap().last().unwrap()];
    let ordering = VertexOrdering {
        rank,
        s,
        t,
        paths: (mode == PieceOrder::Leftish).then_some(paths),
    };
    Ok(ExtendedOrdering { ordering, st_edge, pieces: ctx.pieces })
}

struct Ctx<'a> {
    g: &'a PlaneGraph,
    tree: &'a DecompositionTree,
    children: HashMap<Option<(usize, usize)>, Vec<usize>>,
    mode: PieceOrder,
    pieces: Vec<Piece>,
}

struct Solved {
    paths: Vec<Vec<usize>>,
    st_edge: usize,
}

impl Ctx<'_> {
    /// Orders the piece at `node`. For an inner piece `bound = (lo, hi, copy)` fixes
    /// the pair edge kept and the first and last vertex; both are left out of the
    /// result.
    fn solve(&mut self, node: Option<(usize, usize)>, bound: Option<(usize, usize, usize)>) -> Result<Solved> {
        let g = self.g;
        let mut drop: HashSet<usize> = HashSet::new();
        let mut verts: Vec<usize> = match node {
            None => (0..g.n()).collect(),
            Some((p, r)) => {
                let pair = &self.tree.pairs[p];
                let kept = bound.expect("inner pieces are bounded").2;
                drop.extend(pair.copies.iter().copied().filter(|&e| e != kept));
                pair.regions[r].iter().copied().chain([pair.x, pair.y]).collect()
            }
        };
        let kids = self.children.get(&node).cloned().unwrap_or_default();
        let mut inside: HashSet<usize> = HashSet::new();
        for &q in &kids {
            let pair = &self.tree.pairs[q];
            for (_, region) in pair.inner() {
                inside.extend(region.iter().copied());
            }
            let o = pair.outer_region;
            drop.extend(pair.copies.iter().copied().filter(|&e| e != pair.copies[o]));
        }
        verts.retain(|v| !inside.contains(v));
        let (mut local, gv, ge) = g.induced(&verts, |e| !drop.contains(&e));
        let mut le = HashMap::new();
        for (i, &e) in ge.iter().enumerate() {
            le.insert(e, i);
        }
        let to_local = |d: Dart| -> Option<Dart> {
            let e = *le.get(&edge_of(d))?;
            let [u, _] = g.ends(edge_of(d));
            Some(if g.tail(d) == u { 2 * e } else { 2 * e + 1 })
        };
        let st_dart = match bound {
            Some((lo, _, copy)) => {
                let d = if g.tail(2 * copy) == lo { 2 * copy } else { 2 * copy + 1 };
                let ld = to_local(d).expect("kept copy is in the piece");
                local.set_outer(local.face_of(ld))?;
                ld
            }
            None => {
                let od = g
                    .face_darts(g.outer())
                    .into_iter()
                    .find_map(to_local)
                    .ok_or_else(|| Error::InvalidOrdering("outer face lost in the top piece".into()))?;
                local.set_outer(local.face_of(od))?;
                let darts = local.face_darts(local.outer());
                let s = darts.iter().map(|&d| local.tail(d)).min_by_key(|&v| gv[v]).unwrap();
                darts.into_iter().find(|&d| local.tail(d) == s).unwrap()
            }
        };
        let (v1, vn) = (local.tail(st_dart), local.head(st_dart));
        let v2 = local.tail(local.prev_in_face(st_dart));
        let st_fallback = |local: &PlaneGraph| -> Result<Vec<Vec<usize>>> {
            let adj: Vec<Vec<usize>> = (0..local.n()).map(|v| local.neighbors(v)).collect();
            Ok(st_order(&adj, v1, vn)?.into_iter().map(|v| vec![v]).collect())
        };
        let (local_paths, canonical) = match self.mode {
            // pieces that are not 3-connected (tiny outer remnants) get a plain st-order
            PieceOrder::Leftish => match leftish_canonical_ordering(&local, v1, v2) {
                Ok(co) => {
                    if co.vn != vn {
                        return Err(Error::InvalidOrdering(format!(
                            "piece ends at {} instead of {}",
                            gv[co.vn], gv[vn]
                        )));
                    }
                    (co.paths.clone(), Some(co))
                }
                Err(Error::NotThreeConnected) => (st_fallback(&local)?, None),
                Err(e) => return Err(e),
            },
            PieceOrder::St => (st_fallback(&local)?, None),
        };
        let st_edge = ge[edge_of(st_dart)];
        let mut paths: Vec<Vec<usize>> = local_paths
            .iter()
            .map(|p| p.iter().map(|&v| gv[v]).collect())
            .collect();
        let order: HashMap<usize, usize> = paths.iter().flatten().enumerate().map(|(i, &v)| (v, i)).collect();
        let local_rank = |v: usize| -> usize { order[&v] };
        // blocks of inner components, keyed by the higher pair vertex
        let mut blocks: HashMap<usize, Vec<Block>> = HashMap::new();
        let mut sorted_kids = kids;
        sorted_kids.sort_unstable();
        for q in sorted_kids {
            let pair = self.tree.pairs[q].clone();
            let (x, y) = (pair.x, pair.y);
            let x_low = local_rank(x) < local_rank(y);
            let (lo, hi) = if x_low { (x, y) } else { (y, x) };
            let mut regions: Vec<usize> = pair.inner().map(|(r, _)| r).collect();
            if !x_low {
                regions.reverse();
            }
            let k = pair.copies.len();
            let mut out = Vec::new();
            for r in regions {
                let copy = if x_low { pair.copies[r] } else { pair.copies[(r + 1) % k] };
                let sub = self.solve(Some((q, r)), Some((lo, hi, copy)))?;
                out.extend(sub.paths);
            }
            blocks.entry(hi).or_default().push((lo, out));
        }
        if !blocks.is_empty() {
            let mut merged = Vec::with_capacity(paths.len());
            for p in paths {
                match p.iter().position(|v| blocks.contains_key(v)) {
                    None => merged.push(p),
                    Some(i) => {
                        let hi = p[i];
                        let list = blocks.remove(&hi).unwrap();
                        // split only if a low end shares the path with `hi`
                        let split = list.iter().any(|(lo, _)| p[..i].contains(lo));
                        if split && i > 0 {
                            merged.push(p[..i].to_vec());
                            for (_, b) in list {
                                merged.extend(b);
                            }
                            merged.push(p[i..].to_vec());
                        } else {
                            for (_, b) in list {
                                merged.extend(b);
                            }
                            merged.push(p);
                        }
                    }
                }
            }
            paths = merged;
        }
        if let Some((lo, hi, _)) = bound {
            for p in &mut paths {
                p.retain(|&v| v != lo && v != hi);
            }
            paths.retain(|p| !p.is_empty());
        }
        self.pieces.push(Piece { node, graph: local, vertices: gv, edges: ge, canonical });
        Ok(Solved { paths, st_edge })
    }
}
