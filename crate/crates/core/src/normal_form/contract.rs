use super::{AugmentedEmbedding, CrossingKind};
use crate::error::{Error, Result};
use crate::graph::connectivity;

/// G•: every kite of an IC-planar normal form contracted to one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    /// Vertex count of G•.
    pub n: usize,
    /// G• vertex of each original vertex.
    pub map: Vec<usize>,
    /// G• vertex of each crossing pair.
    pub kite_vertex: Vec<usize>,
    /// Crossing pair owning each original vertex, if any.
    pub kite_of: Vec<Option<usize>>,
    /// Edges of G□ between distinct G• vertices, parallel edges kept.
    pub edges: Vec<[usize; 2]>,
}

impl Contraction {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &[u, v] in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Adjacency with parallel edges merged.
    pub fn simple_adjacency(&self) -> Vec<Vec<usize>> {
        connectivity::simplify(&self.adjacency())
    }
}

/// Contracts all kites. Needs the G⊞ stage, vertex-disjoint kites and no W-configuration.
pub fn kite_contract(aug: &AugmentedEmbedding) -> Result<Contraction> {
    let n = aug.n();
    let sq = match aug.square() {
        Some(s) => s.clone(),
        None => super::planar_skeleton(aug),
    };
    let mut kite_of = vec![None; n];
    for c in aug.crossing_classes() {
        if c.kind == CrossingKind::WConfiguration {
            return Err(Error::WConfigurationPresent(c.boundary[0], c.boundary[2]));
        }
        for &v in &c.boundary {
            if let Some(other) = kite_of[v] {
                return Err(Error::NotICPlanar(format!(
                    "vertex {v} lies in the crossing pairs {other} and {}",
                    c.pair
                )));
            }
            kite_of[v] = Some(c.pair);
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut kite_vertex = vec![usize::MAX; aug.crossing_classes().len()];
    let mut next = 0;
    for v in 0..n {
        match kite_of[v] {
            Some(k) => {
                if kite_vertex[k] == usize::MAX {
                    kite_vertex[k] = next;
                    next += 1;
                }
                map[v] = kite_vertex[k];
            }
            None => {
                map[v] = next;
                next += 1;
            }
        }
    }
    let edges = sq
        .graph
        .edges()
        .map(|e| sq.graph.ends(e))
        .filter(|&[u, v]| map[u] != map[v])
        .map(|[u, v]| [map[u], map[v]])
        .collect();
    Ok(Contraction { n: next, map, kite_vertex, kite_of, edges })
}

/// Corner roles of an expanded kite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KiteRoles {
    pub pair: usize,
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
    pub top: usize,
}

/// Chooses bottom and top of each kite from an st-numbering of G• (ranks per G•
/// vertex), then the left and right ends from the embedding of G□.
///
/// A corner with only incoming external edges becomes the bottom if it is the only
/// such corner; symmetrically a unique corner with only outgoing edges becomes the
/// top. Otherwise the first opposite pair, in boundary order, whose bottom has an
/// incoming and whose top has an outgoing edge is used. `s` and `t` are forced to
/// be bottom and top of their kites.
pub fn kite_expand(
    aug: &AugmentedEmbedding,
    contraction: &Contraction,
    rank: &[usize],
    s: usize,
    t: usize,
) -> Result<Vec<KiteRoles>> {
    let sq = match aug.square() {
        Some(sq) => sq.clone(),
        None => super::planar_skeleton(aug),
    };
    let g = &sq.graph;
    let mut out = Vec::new();
    for c in aug.crossing_classes() {
        let kv = contraction.kite_vertex[c.pair];
        let corners = c.boundary;
        let mut has_in = [false; 4];
        let mut has_out = [false; 4];
        for (i, &u) in corners.iter().enumerate() {
            for w in g.neighbors(u) {
                let mw = contraction.map[w];
                if mw == kv {
                    continue;
                }
                if rank[mw] < rank[kv] {
                    has_in[i] = true;
                } else {
                    has_out[i] = true;
                }
            }
        }
        let valid = |b: usize, tp: usize| {
            let (cb, ct) = (corners[b], corners[tp]);
            let s_ok = if corners.contains(&s) { cb == s } else { has_in[b] };
            let t_ok = if corners.contains(&t) { ct == t } else { has_out[tp] };
            s_ok && t_ok
        };
        let only_in: Vec<usize> = (0..4).filter(|&i| has_in[i] && !has_out[i]).collect();
        let only_out: Vec<usize> = (0..4).filter(|&i| has_out[i] && !has_in[i]).collect();
        let mut choice = None;
        if only_in.len() == 1 && valid(only_in[0], (only_in[0] + 2) % 4) {
            choice = Some((only_in[0], (only_in[0] + 2) % 4));
        } else if only_out.len() == 1 && valid((only_out[0] + 2) % 4, only_out[0]) {
            choice = Some(((only_out[0] + 2) % 4, only_out[0]));
        } else {
            for (b, tp) in [(0, 2), (2, 0), (1, 3), (3, 1)] {
                if valid(b, tp) {
                    choice = Some((b, tp));
                    break;
                }
            }
        }
        let (b, tp) = choice.ok_or_else(|| {
            Error::InvalidOrdering(format!("no bottom/top choice for kite {}", c.pair))
        })?;
        let bottom = corners[b];
        let top = corners[tp];
        let (p, q) = (corners[(b + 1) % 4], corners[(b + 3) % 4]);
        let quad = sq.quad_of[c.pair];
        let p_is_left = g
            .find_dart(p, bottom)
            .map(|d| g.face_of(d) == quad)
            .unwrap_or(false);
        let (left, right) = if p_is_left { (p, q) } else { (q, p) };
        out.push(KiteRoles { pair: c.pair, bottom, left, right, top });
    }
    Ok(out)
}
