use super::instances::{glue, named_instance, with_outer_dart};
use crate::error::{Error, Result};
use crate::graph::plane::edge_of;
use crate::graph::{Embedding, EmbeddingFile, PlaneGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Ic,
    OnePlanar,
    Planar,
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ic" => Ok(InstanceKind::Ic),
            "one_planar" | "1planar" => Ok(InstanceKind::OnePlanar),
            "planar" => Ok(InstanceKind::Planar),
            _ => Err(Error::Format(format!("unknown instance kind '{s}'"))),
        }
    }
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::Ic => "ic",
            InstanceKind::OnePlanar => "one_planar",
            InstanceKind::Planar => "planar",
        }
    }
}

/// Optional overrides; `None` lets the seed decide.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenOptions {
    /// Number of crossing pairs placed in the triangulation.
    pub kites: Option<usize>,
    /// Number of XW6 copies glued in at kite corners (one_planar only).
    pub gadgets: Option<usize>,
}

/// Random instance, a pure function of its arguments.
pub fn generate_instance(n: usize, seed: u64, kind: InstanceKind) -> Result<Embedding> {
    generate_with(n, seed, kind, GenOptions::default())?.build()
}

pub fn generate_with(n: usize, seed: u64, kind: InstanceKind, opts: GenOptions) -> Result<EmbeddingFile> {
    if n < 4 {
        return Err(Error::InfeasibleParams(format!("n = {n} < 4")));
    }
    let salt = match kind {
        InstanceKind::Ic => 0x1c,
        InstanceKind::OnePlanar => 0x1f,
        InstanceKind::Planar => 0x0f,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt);
    let gadgets = match (kind, opts.gadgets) {
        (InstanceKind::OnePlanar, Some(k)) => k,
        (InstanceKind::OnePlanar, None) if n >= 20 => rng.gen_range(0..=(n / 20).min(3)),
        (_, Some(k)) if k > 0 => {
            return Err(Error::InfeasibleParams("gadgets need kind one_planar".into()));
        }
        _ => 0,
    };
    if n < 6 * gadgets + 4 {
        return Err(Error::InfeasibleParams(format!("{gadgets} gadgets need n >= {}", 6 * gadgets + 4)));
    }
    let base_n = n - 6 * gadgets;
    if kind == InstanceKind::Ic {
        if let Some(k) = opts.kites {
            if k > n / 4 {
                return Err(Error::InfeasibleParams(format!("{k} independent kites need n >= {}", 4 * k)));
            }
        }
    }
    if kind == InstanceKind::Planar && opts.kites.unwrap_or(0) > 0 {
        return Err(Error::InfeasibleParams("planar instances have no crossings".into()));
    }

    // a requested kite count may need a few triangulations before it fits
    let mut attempt = 0;
    let (t, mut kites) = loop {
        let t = random_triangulation(base_n, &mut rng);
        match pick_kites(&t, kind, opts.kites, gadgets, &mut rng) {
            Ok(k) => break (t, k),
            Err(_) if opts.kites.is_some() && attempt < 1000 => attempt += 1,
            Err(e) => return Err(e),
        }
    };
    kites.sort_unstable();
    let mut file = assemble(&t, &kites);
    if gadgets > 0 {
        let xw6 = named_instance("xw6")?;
        // every kite side is a candidate host edge
        let mut sides = Vec::new();
        for (i, &e) in kites.iter().enumerate() {
            let [a, c] = t.ends(e);
            let b = third(&t, 2 * e);
            let d = third(&t, 2 * e + 1);
            let around = [a, b, c, d];
            for k in 0..4 {
                sides.push((i, around[k], around[(k + 1) % 4]));
            }
        }
        sides.shuffle(&mut rng);
        let mut used = std::collections::HashSet::new();
        let mut placed = 0;
        for (_, p, q) in sides {
            if placed == gadgets {
                break;
            }
            if !used.insert((p.min(q), p.max(q))) {
                continue;
            }
            file = glue(&file, p, q, &xw6, 0, 7)?;
            placed += 1;
        }
        if placed < gadgets {
            return Err(Error::InfeasibleParams(format!("room for only {placed} gadgets")));
        }
    }
    let file = with_outer_dart(&file, 1, 0)?;
    debug_assert_eq!(file.n, n);
    Ok(file)
}

/// Stacked triangulation on `n` vertices followed by random flips of inner edges.
/// The outer face is the triangle 0, 1, 2 and lies left of the dart `1 -> 0`.
fn random_triangulation(n: usize, rng: &mut ChaCha8Rng) -> PlaneGraph {
    let ends = vec![[0, 1], [1, 2], [2, 0]];
    let rot = vec![vec![0, 5], vec![1, 2], vec![3, 4]];
    let mut g = PlaneGraph::from_rotation(3, ends, &rot).expect("triangle");
    let outer = g.face_of(1);
    g.set_outer(outer).expect("face exists");
    let mut faces = vec![g.face_of(0)];
    for _ in 3..n {
        let f = faces[rng.gen_range(0..faces.len())];
        let darts = g.face_darts(f);
        let (d0, d1, d2) = (darts[0], darts[1], darts[2]);
        let v = g.add_vertices(1);
        let e = g.attach(d2, v);
        g.insert_edge(d0, 2 * e);
        g.insert_edge(d1, 2 * e);
        faces.push(g.face_of(d1));
        faces.push(g.face_of(d2));
    }
    for _ in 0..2 * n {
        let e = rng.gen_range(0..g.edge_slots());
        if !g.is_alive(e) {
            continue;
        }
        let (fl, fr) = g.sides(2 * e);
        if fl == g.outer() || fr == g.outer() {
            continue;
        }
        let [u, v] = g.ends(e);
        let (x, y) = (third(&g, 2 * e), third(&g, 2 * e + 1));
        if x == y || g.degree(u) <= 3 || g.degree(v) <= 3 || g.are_adjacent(x, y) {
            continue;
        }
        let dx = g.next_in_face(2 * e);
        let dy = g.next_in_face(2 * e + 1);
        g.remove_edge(e).expect("inner edge of a triangulation");
        g.insert_edge(dx, dy);
    }
    g.compact().0
}

/// Apex of the triangle left of dart `d`.
fn third(g: &PlaneGraph, d: usize) -> usize {
    g.head(g.next_in_face(d))
}

/// Triangulation edges that become the first edge of a crossing pair. Their two
/// faces are used by no other kite; for `ic` the four corners are fresh too.
fn pick_kites(
    t: &PlaneGraph,
    kind: InstanceKind,
    budget: Option<usize>,
    gadgets: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<usize>> {
    if kind == InstanceKind::Planar {
        return Ok(Vec::new());
    }
    let mut cand: Vec<usize> = t
        .edges()
        .filter(|&e| {
            let (fl, fr) = t.sides(2 * e);
            fl != t.outer() && fr != t.outer() && !t.are_adjacent(third(t, 2 * e), third(t, 2 * e + 1))
        })
        .collect();
    cand.shuffle(rng);
    let mut face_used = vec![false; t.face_slots()];
    let mut vertex_used = vec![false; t.n()];
    let mut added = std::collections::HashSet::new();
    let mut out = Vec::new();
    for e in cand {
        let (fl, fr) = t.sides(2 * e);
        if face_used[fl] || face_used[fr] {
            continue;
        }
        let [a, c] = t.ends(e);
        let corners = [a, c, third(t, 2 * e), third(t, 2 * e + 1)];
        if kind == InstanceKind::Ic && corners.iter().any(|&v| vertex_used[v]) {
            continue;
        }
        let (b, d) = (corners[2], corners[3]);
        if !added.insert((b.min(d), b.max(d))) {
            continue;
        }
        face_used[fl] = true;
        face_used[fr] = true;
        for v in corners {
            vertex_used[v] = true;
        }
        out.push(e);
    }
    let target = match budget {
        Some(k) => {
            if k > out.len() {
                return Err(Error::InfeasibleParams(format!("found room for only {} kites", out.len())));
            }
            k
        }
        None => {
            let lo = (out.len() / 2).max(gadgets.div_ceil(4)).min(out.len());
            rng.gen_range(lo..=out.len())
        }
    };
    if 4 * target < gadgets {
        return Err(Error::InfeasibleParams("not enough kites to host the gadgets".into()));
    }
    out.truncate(target);
    Ok(out)
}

/// File of the triangulation plus, per chosen edge `a -> c`, the crossing edge
/// between the apexes `b` (left of `a -> c`) and `d` (right).
fn assemble(t: &PlaneGraph, kites: &[usize]) -> EmbeddingFile {
    let mut edges: Vec<[usize; 2]> = t.edges().map(|e| t.ends(e)).collect();
    let mut rotation: Vec<Vec<usize>> = (0..t.n())
        .map(|v| t.darts_around(v).into_iter().map(edge_of).collect())
        .collect();
    let mut crossings = Vec::new();
    for &e in kites {
        let [a, c] = t.ends(e);
        let b = third(t, 2 * e);
        let d = third(t, 2 * e + 1);
        let id = edges.len();
        edges.push([b, d]);
        // at b the kite angle follows b -> c; at d it follows d -> a
        let eb = t.find_dart(b, c).map(edge_of).unwrap();
        let ed = t.find_dart(d, a).map(edge_of).unwrap();
        let ib = rotation[b].iter().position(|&x| x == eb).unwrap();
        rotation[b].insert(ib + 1, id);
        let id_ = rotation[d].iter().position(|&x| x == ed).unwrap();
        rotation[d].insert(id_ + 1, id);
        crossings.push([e, id]);
    }
    EmbeddingFile { n: t.n(), edges, rotation, crossings, outer_face: None }
}
