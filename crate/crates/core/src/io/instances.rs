//! Built-in embeddings. Vertex `i` carries the label `i + 1` of the figures.

use crate::error::{Error, Result};
use crate::graph::{EmbeddingFile, Graph};

pub const NAMED: [&str; 8] = ["c3", "k4_planar", "k4_kite", "w4", "xw6", "dxw", "b_config", "w_config"];

/// Rotation system from a drawing: straight edges, except that `bends` overrides the
/// direction in which edge `e` leaves vertex `v`. The outer face is the one left of
/// the dart `outer.0 -> outer.1`.
pub(crate) fn from_drawing(
    pos: &[(f64, f64)],
    edges: &[[usize; 2]],
    crossings: &[[usize; 2]],
    bends: &[(usize, usize, (f64, f64))],
    outer: (usize, usize),
) -> Result<EmbeddingFile> {
    let n = pos.len();
    let mut rotation: Vec<Vec<(f64, usize)>> = vec![Vec::new(); n];
    for (e, &[u, v]) in edges.iter().enumerate() {
        for (a, b) in [(u, v), (v, u)] {
            let dir = bends
                .iter()
                .find(|&&(w, f, _)| w == a && f == e)
                .map(|&(_, _, d)| d)
                .unwrap_or((pos[b].0 - pos[a].0, pos[b].1 - pos[a].1));
            rotation[a].push((dir.1.atan2(dir.0), e));
        }
    }
    let rotation = rotation
        .into_iter()
        .map(|mut list| {
            // clockwise means decreasing angle
            list.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap());
            list.into_iter().map(|(_, e)| e).collect()
        })
        .collect();
    let file = EmbeddingFile {
        n,
        edges: edges.to_vec(),
        rotation,
        crossings: crossings.to_vec(),
        outer_face: None,
    };
    with_outer_dart(&file, outer.0, outer.1)
}

/// Sets the outer face to the face left of the uncrossed dart `u -> v`.
pub(crate) fn with_outer_dart(file: &EmbeddingFile, u: usize, v: usize) -> Result<EmbeddingFile> {
    let emb = file.build()?;
    let g = emb.planar();
    let d = g
        .find_dart(u, v)
        .ok_or_else(|| Error::Format(format!("no uncrossed edge {{{u}, {v}}} to fix the outer face")))?;
    let mut out = emb.to_file();
    out.outer_face = Some(g.face_of(d));
    Ok(out)
}

/// Glues `gadget` into the face left of the host dart `y -> x`, identifying gadget
/// vertices `gx, gy` with `x, y` and the gadget edge `{gx, gy}` with the host edge
/// `{x, y}`. The gadget is mirrored if needed so that its outer face lies on the
/// host face. Gadget vertices get fresh ids in their original order.
pub(crate) fn glue(
    host: &EmbeddingFile,
    x: usize,
    y: usize,
    gadget: &EmbeddingFile,
    gx: usize,
    gy: usize,
) -> Result<EmbeddingFile> {
    let host_emb = host.build()?;
    let hp = host_emb.planar();
    let outer_dart = hp
        .face_darts(hp.outer())
        .into_iter()
        .find(|&d| hp.tail(d) < host.n && hp.head(d) < host.n)
        .ok_or_else(|| Error::Format("outer face of the host has no uncrossed edge".into()))?;
    let (ou, ov) = (hp.tail(outer_dart), hp.head(outer_dart));
    let graph = Graph::new(host.n, host.edges.clone())?;
    let e0 = graph.find_edge(x, y).ok_or_else(|| Error::Format(format!("host has no edge {{{x}, {y}}}")))?;
    let ggraph = Graph::new(gadget.n, gadget.edges.clone())?;
    let g0 = ggraph
        .find_edge(gx, gy)
        .ok_or_else(|| Error::Format(format!("gadget has no edge {{{gx}, {gy}}}")))?;

    let gemb = gadget.build()?;
    let gp = gemb.planar();
    let mut gadget = gemb.to_file();
    let outer_ok = gp.find_dart(gx, gy).map(|d| gp.face_of(d)) == Some(gp.outer());
    if !outer_ok {
        for list in &mut gadget.rotation {
            list.reverse();
        }
        for c in &mut gadget.crossings {
            c.swap(0, 1);
        }
    }

    let mut vmap = vec![usize::MAX; gadget.n];
    vmap[gx] = x;
    vmap[gy] = y;
    let mut next = host.n;
    for (v, slot) in vmap.iter_mut().enumerate() {
        if v != gx && v != gy {
            *slot = next;
            next += 1;
        }
    }
    let mut emap = vec![usize::MAX; gadget.edges.len()];
    let mut edges = host.edges.clone();
    for (e, &[u, v]) in gadget.edges.iter().enumerate() {
        if e == g0 {
            emap[e] = e0;
        } else {
            emap[e] = edges.len();
            edges.push([vmap[u], vmap[v]]);
        }
    }
    let mut rotation = host.rotation.clone();
    rotation.resize(next, Vec::new());
    // cyclic gadget list starting right after g0, without g0
    let after = |list: &[usize]| -> Vec<usize> {
        let i = list.iter().position(|&e| e == g0).unwrap();
        (1..list.len()).map(|k| emap[list[(i + k) % list.len()]]).collect()
    };
    let at_x = after(&gadget.rotation[gx]);
    let at_y = after(&gadget.rotation[gy]);
    let ix = rotation[x].iter().position(|&e| e == e0).unwrap();
    rotation[x].splice(ix + 1..ix + 1, at_x);
    let iy = rotation[y].iter().position(|&e| e == e0).unwrap();
    rotation[y].splice(iy..iy, at_y);
    for (v, list) in gadget.rotation.iter().enumerate() {
        if v != gx && v != gy {
            rotation[vmap[v]] = list.iter().map(|&e| emap[e]).collect();
        }
    }
    let mut crossings = host.crossings.clone();
    crossings.extend(gadget.crossings.iter().map(|&[a, b]| [emap[a], emap[b]]));
    let file = EmbeddingFile { n: next, edges, rotation, crossings, outer_face: None };
    with_outer_dart(&file, ou, ov)
}

fn c3() -> Result<EmbeddingFile> {
    from_drawing(&[(0.0, 0.0), (2.0, 0.0), (1.0, 2.0)], &[[0, 1], [1, 2], [2, 0]], &[], &[], (0, 2))
}

fn k4_planar() -> Result<EmbeddingFile> {
    let pos = [(0.0, 0.0), (4.0, 0.0), (2.0, 4.0), (2.0, 1.0)];
    let edges = [[0, 1], [1, 2], [2, 0], [0, 3], [1, 3], [2, 3]];
    from_drawing(&pos, &edges, &[], &[], (0, 2))
}

fn k4_kite() -> Result<EmbeddingFile> {
    let pos = [(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)];
    let edges = [[0, 1], [1, 2], [2, 3], [3, 0], [0, 2], [1, 3]];
    from_drawing(&pos, &edges, &[[4, 5]], &[], (0, 3))
}

/// Wheel with rim 1-2-3-4 and hub 5; the outer face is the triangle (1, 5, 2).
fn w4() -> Result<EmbeddingFile> {
    let pos = [(0.0, 0.0), (4.0, 0.0), (3.0, 1.0), (1.0, 1.0), (2.0, 5.0)];
    let edges = [[0, 1], [1, 2], [2, 3], [3, 0], [4, 0], [4, 1], [4, 2], [4, 3]];
    from_drawing(&pos, &edges, &[], &[], (0, 4))
}

/// The cube with both diagonals in every face. Outer square 1, 2, 7, 8 and inner
/// square 3, 4, 6, 5; the diagonals 1-7 and 2-8 cross outside, and the outer face is
/// the triangle between 1, 8 and that crossing.
fn xw6() -> Result<EmbeddingFile> {
    let pos = [
        (0.0, 0.0),
        (4.0, 0.0),
        (1.0, 1.0),
        (3.0, 1.0),
        (1.0, 3.0),
        (3.0, 3.0),
        (4.0, 4.0),
        (0.0, 4.0),
    ];
    let l = |a: usize, b: usize| [a - 1, b - 1];
    let edges = [
        l(1, 2),
        l(2, 7),
        l(7, 8),
        l(8, 1),
        l(3, 4),
        l(4, 6),
        l(6, 5),
        l(5, 3),
        l(1, 3),
        l(2, 4),
        l(7, 6),
        l(8, 5),
        l(1, 7),
        l(2, 8),
        l(3, 6),
        l(4, 5),
        l(1, 4),
        l(3, 2),
        l(1, 5),
        l(3, 8),
        l(5, 7),
        l(6, 8),
        l(6, 2),
        l(4, 7),
    ];
    let crossings = [[12, 13], [14, 15], [16, 17], [18, 19], [20, 21], [22, 23]];
    let bends = [
        (0, 12, (-1.0, -1.0)),
        (6, 12, (1.0, 1.0)),
        (1, 13, (1.0, -1.0)),
        (7, 13, (-1.0, 1.0)),
    ];
    from_drawing(&pos, &edges, &crossings, &bends, (0, 7))
}

/// Two copies of XW6 sharing the edge 1-8: the second sits in the triangle between
/// 1, 8 and the crossing of 1-5 with 3-8. Its vertices 2', ..., 7' get ids 8..13.
fn dxw() -> Result<EmbeddingFile> {
    let a = xw6()?;
    glue(&a, 0, 7, &a, 0, 7)
}

/// A kite whose side 1-2 carries a copy of XW6 on its inner side: the crossing of
/// the kite and the outer crossing of XW6 face each other at the separation pair
/// [1, 2].
fn w_config() -> Result<EmbeddingFile> {
    glue(&k4_kite()?, 1, 0, &xw6()?, 0, 7)
}

/// Crossing 1-3 x 2-4 whose corner edge 1-2 is routed around 3 and 4; vertex 5
/// closes the graph on the left.
fn b_config() -> Result<EmbeddingFile> {
    let pos = [(0.0, 0.0), (0.0, 4.0), (3.0, 3.0), (3.0, 1.0), (-2.0, 2.0)];
    let edges = [[0, 2], [1, 3], [0, 1], [2, 3], [0, 4], [1, 4]];
    let bends = [(0, 2, (1.0, -1.0)), (1, 2, (1.0, 1.0))];
    from_drawing(&pos, &edges, &[[0, 1]], &bends, (4, 1))
}

/// Looks up a built-in instance by name.
pub fn named_instance(name: &str) -> Result<EmbeddingFile> {
    match name {
        "c3" => c3(),
        "k4_planar" => k4_planar(),
        "k4_kite" => k4_kite(),
        "w4" => w4(),
        "xw6" => xw6(),
        "dxw" => dxw(),
        "b_config" => b_config(),
        "w_config" => w_config(),
        _ => Err(Error::Format(format!("unknown instance '{name}'; known: {}", NAMED.join(", ")))),
    }
}
