//! Corpus and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};
use visrep::drawers::{Dir, VisibilityRepresentation};
use visrep::graph::{Embedding, PlaneGraph};
use visrep::io::{generate_instance, InstanceKind};
use visrep::orderings::{CanonicalOrdering, FaceKind};
use visrep::verifier::Violation;

pub const KINDS: [InstanceKind; 3] = [InstanceKind::Planar, InstanceKind::Ic, InstanceKind::OnePlanar];

pub fn corpus_n(seed: u64) -> usize {
    8 + (seed as usize * 37) % 193
}

/// 200 instances per kind, `n` in 8..=200.
pub fn corpus() -> Vec<(String, InstanceKind, Embedding)> {
    let mut out = Vec::new();
    for kind in KINDS {
        for seed in 0..200u64 {
            let n = corpus_n(seed);
            let emb = generate_instance(n, seed, kind).expect("corpus instance");
            out.push((format!("{}-n{n}-s{seed}", kind.as_str()), kind, emb));
        }
    }
    out
}

/// Doubled-grid points covered by a closed segment from `(x0, y0)` to `(x1, y1)`.
fn raster(x0: i64, y0: i64, x1: i64, y1: i64) -> Vec<(i64, i64)> {
    let (x0, y0, x1, y1) = (2 * x0, 2 * y0, 2 * x1, 2 * y1);
    if y0 == y1 {
        (x0.min(x1)..=x0.max(x1)).map(|x| (x, y0)).collect()
    } else {
        (y0.min(y1)..=y0.max(y1)).map(|y| (x0, y)).collect()
    }
}

/// Exhaustive verifier: rasterizes every polygon and sight on the doubled grid and
/// reads all violations off the cells.
pub fn scan_verify(rep: &VisibilityRepresentation, edges: &[[usize; 2]]) -> Vec<Violation> {
    let n = rep.polygons.len();
    let mut out = BTreeSet::new();
    let mut cells: HashMap<(i64, i64), BTreeSet<usize>> = HashMap::new();
    for (i, p) in rep.polygons.iter().enumerate() {
        let [y, x0, x1] = p.bar;
        let mut bad = p.v != i || x0 > x1;
        let mut pts = if x0 <= x1 { raster(x0, y, x1, y) } else { Vec::new() };
        if let Some([x, a, b]) = p.pylon {
            bad |= a != y || x < x0 || x > x1;
            pts.extend(raster(x, a, x, b));
        }
        if bad {
            out.insert(Violation::BadPolygon { v: i });
        }
        for pt in pts {
            cells.entry(pt).or_default().insert(p.v);
        }
    }
    for owners in cells.values() {
        let o: Vec<usize> = owners.iter().copied().collect();
        for i in 0..o.len() {
            for j in i + 1..o.len() {
                out.insert(Violation::Overlap { a: o[i], b: o[j] });
            }
        }
    }
    let on = |w: usize, pt: (i64, i64)| cells.get(&pt).is_some_and(|s| s.contains(&w));
    let mut seen = vec![0; edges.len()];
    let mut interiors = Vec::new();
    for s in &rep.sights {
        let [lo, hi] = s.span;
        type Pt = (i64, i64);
        let (p, q, inner): (Pt, Pt, Vec<Pt>) = match s.dir {
            Dir::Vertical => ((2 * s.at, 2 * lo), (2 * s.at, 2 * hi), (2 * lo + 1..2 * hi).map(|y| (2 * s.at, y)).collect()),
            Dir::Horizontal => ((2 * lo, 2 * s.at), (2 * hi, 2 * s.at), (2 * lo + 1..2 * hi).map(|x| (x, 2 * s.at)).collect()),
        };
        match edges.get(s.id) {
            Some(&[u, v]) if u < n && v < n && (s.edge == [u, v] || s.edge == [v, u]) => {
                seen[s.id] += 1;
                if seen[s.id] > 1 {
                    out.insert(Violation::ExtraSight { edge: s.id });
                }
                let [a, b] = s.edge;
                if p == q || !((on(a, p) && on(b, q)) || (on(b, p) && on(a, q))) {
                    out.insert(Violation::BadAnchor { edge: s.id });
                }
            }
            _ => {
                out.insert(Violation::ExtraSight { edge: s.id });
            }
        }
        for pt in &inner {
            for &w in cells.get(pt).into_iter().flatten() {
                out.insert(Violation::Blocked { edge: s.id, by: w });
            }
        }
        interiors.push((s.dir, s.id, inner.into_iter().collect::<HashSet<_>>()));
    }
    for (e, &c) in seen.iter().enumerate() {
        if c == 0 {
            out.insert(Violation::MissingSight { edge: e });
        }
    }
    for i in 0..interiors.len() {
        for j in i + 1..interiors.len() {
            let (da, a, ref pa) = interiors[i];
            let (db, b, ref pb) = interiors[j];
            if da == db && !pa.is_disjoint(pb) {
                out.insert(Violation::CollinearSights { a: a.min(b), b: a.max(b) });
            }
        }
    }
    out.into_iter().collect()
}

/// Face kinds and tops of a canonical ordering, found by replaying the contour
/// path by path on a plain vector.
pub fn replay_classes(g: &PlaneGraph, co: &CanonicalOrdering) -> HashMap<usize, (FaceKind, usize)> {
    let mut contour = co.paths[0].clone();
    let mut step = vec![usize::MAX; g.n()];
    for (k, p) in co.paths.iter().enumerate() {
        for &v in p {
            step[v] = k;
        }
    }
    // contour segment under each path, as it was when the path was placed
    let mut under: Vec<Vec<usize>> = vec![Vec::new()];
    for p in &co.paths[1..] {
        let touch: Vec<usize> = (0..contour.len())
            .filter(|&i| p.iter().any(|&z| g.are_adjacent(z, contour[i])))
            .collect();
        let (lo, hi) = (touch[0], *touch.last().unwrap());
        let mut p = p.clone();
        if p.len() > 1 && !g.are_adjacent(p[0], contour[lo]) {
            p.reverse();
        }
        under.push(contour[lo..=hi].to_vec());
        let mut next = contour[..=lo].to_vec();
        next.extend(&p);
        next.extend(&contour[hi..]);
        contour = next;
    }
    let mut out = HashMap::new();
    for f in g.face_ids().filter(|&f| f != g.outer()) {
        let verts = g.face_vertices(f);
        let k = verts.iter().map(|&v| step[v]).max().unwrap();
        let bottom = *verts.iter().min_by_key(|&&v| co.rank[v]).unwrap();
        let bi = verts.iter().position(|&v| v == bottom).unwrap();
        let opposite = verts[(bi + verts.len() / 2) % verts.len()];
        let top = *verts.iter().max_by_key(|&&v| co.rank[v]).unwrap();
        let new = verts.iter().filter(|&&v| step[v] == k).count();
        let kind = match (verts.len(), new) {
            (3, _) => FaceKind::Triangle,
            (4, 2) => FaceKind::Rhomboid,
            (4, _) => {
                // the three older corners lie consecutively on the contour below
                let seg = &under[k];
                let old: Vec<usize> = seg.iter().copied().filter(|v| verts.contains(v)).collect();
                let pos = old.iter().position(|&v| v == bottom).unwrap();
                match pos {
                    1 => FaceKind::Rhomboid,
                    0 => FaceKind::RightTrapezoid,
                    _ => FaceKind::LeftTrapezoid,
                }
            }
            _ => panic!("face {f} has {} sides", verts.len()),
        };
        let top = if kind == FaceKind::Rhomboid { opposite } else { top };
        out.insert(f, (kind, top));
    }
    out
}
