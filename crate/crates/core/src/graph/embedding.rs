use super::plane::{dart_from, Dart, PlaneGraph};
use super::Graph;
use crate::error::{Error, Result};

/// Two edges declared crossing, and the planarization vertex standing for the crossing point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingPair {
    pub edges: [usize; 2],
    pub dummy: usize,
}

/// Where an edge of the planarization comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceOrigin {
    /// An uncrossed edge of the graph.
    Whole(usize),
    /// Half of a crossed edge; `part` 0 is the half at `edges[e][0]`.
    Half { edge: usize, part: u8 },
}

impl PieceOrigin {
    pub fn edge(self) -> usize {
        match self {
            PieceOrigin::Whole(e) | PieceOrigin::Half { edge: e, .. } => e,
        }
    }
}

/// A graph with a rotation system and declared crossings, plus the derived
/// planarization in which crossings are degree-4 dummy vertices `n..n+k`.
#[derive(Clone, Debug)]
pub struct Embedding {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    crossings: Vec<CrossingPair>,
    planar: PlaneGraph,
    origin: Vec<PieceOrigin>,
    pieces: Vec<Vec<usize>>,
    /// Set when this embedding is itself a planarization: dummy vertex -> crossing pair
    /// of the embedding it was made from.
    dummy_of: Vec<Option<[usize; 2]>>,
}

impl Embedding {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn crossings(&self) -> &[CrossingPair] {
        &self.crossings
    }

    pub fn planar(&self) -> &PlaneGraph {
        &self.planar
    }

    pub fn outer_face(&self) -> usize {
        self.planar.outer()
    }

    pub fn piece_origin(&self, planar_edge: usize) -> PieceOrigin {
        self.origin[planar_edge]
    }

    /// Planarization edges of graph edge `e`, the piece at `edges[e][0]` first.
    pub fn pieces(&self, e: usize) -> &[usize] {
        &self.pieces[e]
    }

    pub fn is_dummy(&self, v: usize) -> bool {
        v >= self.graph.n()
    }

    pub fn dummy_of(&self, v: usize) -> Option<[usize; 2]> {
        self.dummy_of.get(v).copied().flatten()
    }

    /// Crossing pair index per graph edge.
    pub fn crossing_of_edge(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.graph.num_edges()];
        for (i, c) in self.crossings.iter().enumerate() {
            out[c.edges[0]] = Some(i);
            out[c.edges[1]] = Some(i);
        }
        out
    }

    /// Face boundaries of the planarization as vertex cycles.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.planar.face_ids().map(|f| self.planar.face_vertices(f)).collect()
    }

    /// No two crossing pairs share an endpoint.
    pub fn is_ic(&self) -> bool {
        let mut used = vec![false; self.graph.n()];
        for c in &self.crossings {
            for &e in &c.edges {
                for &v in &self.graph.edges()[e] {
                    if used[v] {
                        return false;
                    }
                }
            }
            for &e in &c.edges {
                for &v in &self.graph.edges()[e] {
                    used[v] = true;
                }
            }
        }
        true
    }

    /// Endpoints of crossing pair `i` in the clockwise order they have around its dummy.
    pub fn crossing_corners(&self, i: usize) -> [usize; 4] {
        let x = self.crossings[i].dummy;
        let around = self.planar.neighbors(x);
        [around[0], around[1], around[2], around[3]]
    }
}

/// Validates a rotation system with declared crossings and derives its planarization.
///
/// Crossing `[e1, e2]` puts the endpoints clockwise around its dummy as
/// `e1[0], e2[0], e1[1], e2[1]`; if the resulting face structure violates
/// Euler's formula the mirrored order is tried per crossing, keeping each flip
/// that increases the face count.
pub fn build_embedding(
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    crossings: Vec<[usize; 2]>,
    outer_face: Option<usize>,
) -> Result<Embedding> {
    let n = graph.n();
    let m = graph.num_edges();
    if rotation.len() != n {
        return Err(Error::Format(format!("rotation has {} lists for {n} vertices", rotation.len())));
    }
    let mut expected: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &[u, v]) in graph.edges().iter().enumerate() {
        expected[u].push(e);
        expected[v].push(e);
    }
    for (v, list) in rotation.iter().enumerate() {
        if list.iter().any(|&e| e >= m) {
            return Err(Error::BadRotation(v));
        }
        let mut got = list.clone();
        got.sort_unstable();
        if got != expected[v] {
            return Err(Error::BadRotation(v));
        }
    }
    let mut in_pair = vec![false; m];
    for &[a, b] in &crossings {
        for e in [a, b] {
            if e >= m {
                return Err(Error::EdgeOutOfRange(e));
            }
        }
        if a == b {
            return Err(Error::BadCrossing(a, b, "an edge cannot cross itself".into()));
        }
        let [p, q] = graph.edges()[a];
        let [r, s] = graph.edges()[b];
        if p == r || p == s || q == r || q == s {
            return Err(Error::BadCrossing(a, b, "crossing edges share an endpoint".into()));
        }
        for e in [a, b] {
            if in_pair[e] {
                return Err(Error::DuplicateCrossing(e));
            }
            in_pair[e] = true;
        }
    }
    graph.check_two_connected()?;
    graph.check_one_planar_density()?;

    let crossings: Vec<CrossingPair> = crossings
        .into_iter()
        .enumerate()
        .map(|(i, edges)| CrossingPair { edges, dummy: n + i })
        .collect();
    let (ends, origin, pieces) = planarization_edges(&graph, &crossings);
    let mut flips = vec![false; crossings.len()];
    let mut planar = assemble(&graph, &rotation, &crossings, &ends, &pieces, &flips)?;
    if planar.euler_characteristic() != 2 {
        for i in 0..crossings.len() {
            flips[i] = true;
            let trial = assemble(&graph, &rotation, &crossings, &ends, &pieces, &flips)?;
            if trial.num_faces() > planar.num_faces() {
                planar = trial;
            } else {
                flips[i] = false;
            }
        }
    }
    planar.check_euler()?;
    if let Some(f) = outer_face {
        planar.set_outer(f)?;
    }
    Ok(Embedding {
        graph,
        rotation,
        crossings,
        planar,
        origin,
        pieces,
        dummy_of: Vec::new(),
    })
}

type PieceTables = (Vec<[usize; 2]>, Vec<PieceOrigin>, Vec<Vec<usize>>);

fn planarization_edges(graph: &Graph, crossings: &[CrossingPair]) -> PieceTables {
    let mut dummy_at = vec![None; graph.num_edges()];
    for c in crossings {
        dummy_at[c.edges[0]] = Some(c.dummy);
        dummy_at[c.edges[1]] = Some(c.dummy);
    }
    let mut ends = Vec::new();
    let mut origin = Vec::new();
    let mut pieces = Vec::with_capacity(graph.num_edges());
    for (e, &[u, v]) in graph.edges().iter().enumerate() {
        match dummy_at[e] {
            None => {
                pieces.push(vec![ends.len()]);
                ends.push([u, v]);
                origin.push(PieceOrigin::Whole(e));
            }
            Some(x) => {
                pieces.push(vec![ends.len(), ends.len() + 1]);
                ends.push([u, x]);
                origin.push(PieceOrigin::Half { edge: e, part: 0 });
                ends.push([x, v]);
                origin.push(PieceOrigin::Half { edge: e, part: 1 });
            }
        }
    }
    (ends, origin, pieces)
}

fn assemble(
    graph: &Graph,
    rotation: &[Vec<usize>],
    crossings: &[CrossingPair],
    ends: &[[usize; 2]],
    pieces: &[Vec<usize>],
    flips: &[bool],
) -> Result<PlaneGraph> {
    let n = graph.n();
    let total = n + crossings.len();
    let mut rot: Vec<Vec<Dart>> = vec![Vec::new(); total];
    for (v, list) in rotation.iter().enumerate() {
        for &e in list {
            let piece = if graph.edges()[e][0] == v {
                pieces[e][0]
            } else {
                *pieces[e].last().unwrap()
            };
            rot[v].push(dart_from(ends, piece, v));
        }
    }
    for (i, c) in crossings.iter().enumerate() {
        let x = c.dummy;
        let [e1, e2] = c.edges;
        let a = dart_from(ends, pieces[e1][0], x);
        let cc = dart_from(ends, pieces[e1][1], x);
        let b = dart_from(ends, pieces[e2][0], x);
        let d = dart_from(ends, pieces[e2][1], x);
        rot[x] = if flips[i] { vec![a, d, cc, b] } else { vec![a, b, cc, d] };
    }
    PlaneGraph::from_rotation(total, ends.to_vec(), &rot)
}

/// The planarization as an embedding of its own: no crossings, dummies are ordinary
/// vertices, and each dummy remembers the pair it replaced. Planarizing a
/// crossing-free embedding returns it unchanged.
pub fn planarize(emb: &Embedding) -> Embedding {
    if emb.crossings.is_empty() {
        return emb.clone();
    }
    let g = &emb.planar;
    let graph = Graph {
        n: g.n(),
        edges: g.all_ends().to_vec(),
    };
    let rotation: Vec<Vec<usize>> = (0..g.n())
        .map(|v| g.darts_around(v).into_iter().map(|d| d >> 1).collect())
        .collect();
    let mut dummy_of = vec![None; g.n()];
    for c in &emb.crossings {
        dummy_of[c.dummy] = Some(c.edges);
    }
    let m = graph.edges.len();
    Embedding {
        graph,
        rotation,
        crossings: Vec::new(),
        planar: g.clone(),
        origin: (0..m).map(PieceOrigin::Whole).collect(),
        pieces: (0..m).map(|e| vec![e]).collect(),
        dummy_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// K4 drawn as a kite: 4-cycle 0-1-2-3 with diagonals {0,2} x {1,3}.
    pub(crate) fn kite() -> Embedding {
        let edges = vec![[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [1, 3]];
        let g = Graph::new(4, edges).unwrap();
        // clockwise in the plane with 0 bottom-left, 1 top-left, 2 top-right, 3 bottom-right
        let rotation = vec![vec![0, 4, 3], vec![1, 5, 0], vec![2, 4, 1], vec![3, 5, 2]];
        build_embedding(g, rotation, vec![[4, 5]], None).unwrap()
    }

    #[test]
    fn kite_planarization_counts() {
        let emb = kite();
        let p = emb.planar();
        assert_eq!(p.n(), 5);
        assert_eq!(p.num_edges(), 8);
        assert_eq!(p.num_faces(), 5);
        assert_eq!(p.degree(4), 4);
    }

    #[test]
    fn euler_violation_detected() {
        // K4 with a non-planar rotation at one vertex and no crossings
        let edges = vec![[0, 1], [0, 2], [0, 3], [1, 2], [2, 3], [3, 1]];
        let g = Graph::new(4, edges).unwrap();
        let rotation = vec![vec![0, 1, 2], vec![0, 3, 5], vec![1, 4, 3], vec![2, 4, 5]];
        let res = build_embedding(g, rotation, vec![], None);
        assert!(matches!(res, Err(Error::EulerViolation { .. })), "{res:?}");
    }

    #[test]
    fn duplicate_crossing_rejected() {
        let edges = vec![[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [1, 3]];
        let g = Graph::new(4, edges).unwrap();
        let rotation = vec![vec![0, 4, 3], vec![1, 5, 0], vec![2, 4, 1], vec![3, 5, 2]];
        let res = build_embedding(g, rotation, vec![[4, 5], [5, 4]], None);
        assert!(matches!(res, Err(Error::DuplicateCrossing(_))));
    }

    #[test]
    fn cut_vertex_rejected() {
        let edges = vec![[0, 1], [1, 2], [2, 0], [2, 3], [3, 4], [4, 2]];
        let g = Graph::new(5, edges).unwrap();
        let rotation = vec![vec![0, 2], vec![0, 1], vec![1, 2, 3, 5], vec![3, 4], vec![4, 5]];
        let res = build_embedding(g, rotation, vec![], None);
        assert!(matches!(res, Err(Error::NotTwoConnected(2))), "{res:?}");
    }

    #[test]
    fn planarize_is_idempotent() {
        let emb = kite();
        let p = planarize(&emb);
        assert!(p.crossings().is_empty());
        assert_eq!(p.dummy_of(4), Some([4, 5]));
        let pp = planarize(&p);
        assert_eq!(pp.planar().num_faces(), p.planar().num_faces());
        assert_eq!(pp.graph(), p.graph());
    }
}

/// The JSON graph file: an edge list, clockwise rotations of edge ids, crossing
/// pairs and an optional outer face id of the planarization.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct EmbeddingFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub rotation: Vec<Vec<usize>>,
    #[serde(default)]
    pub crossings: Vec<[usize; 2]>,
    #[serde(default)]
    pub outer_face: Option<usize>,
}

impl EmbeddingFile {
    pub fn build(&self) -> Result<Embedding> {
        let graph = Graph::new(self.n, self.edges.clone())?;
        build_embedding(graph, self.rotation.clone(), self.crossings.clone(), self.outer_face)
    }
}

impl Embedding {
    /// Pair order under which the default dummy rotation matches this embedding.
    fn oriented(&self, c: &CrossingPair) -> [usize; 2] {
        let [e1, e2] = c.edges;
        let around = self.planar.neighbors(c.dummy);
        let i = around.iter().position(|&v| v == self.graph.edges()[e1][0]).unwrap();
        if around[(i + 1) % 4] == self.graph.edges()[e2][0] {
            [e1, e2]
        } else {
            [e2, e1]
        }
    }

    pub fn to_file(&self) -> EmbeddingFile {
        EmbeddingFile {
            n: self.n(),
            edges: self.graph.edges().to_vec(),
            rotation: self.rotation.clone(),
            crossings: self.crossings.iter().map(|c| self.oriented(c)).collect(),
            outer_face: Some(self.planar.outer()),
        }
    }
}
