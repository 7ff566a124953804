use super::ic::same;
use super::planar::layout;
use super::{Mode, ShapePolygon, SightSegment, VisibilityRepresentation};
use crate::error::{Error, Result};
use crate::graph::plane::{edge_of, twin, PlaneGraph};
use crate::normal_form::{planar_skeleton, AugmentedEmbedding, Provenance};
use crate::orderings::{classify_by_ranks, dual_st_numbering, extended_leftish_ordering, upward, FaceKind};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// `(vertex, a, b)`: a target reached by a sight, or a stub pylon.
type Route = (usize, i64, i64);

/// A crossing quadrangle as drawn: `v` the bottom, `c` opposite it, `b` and `d`
/// the other two corners. For trapezoids `d` is the top.
#[derive(Clone, Copy, Debug)]
struct Quad {
    face: usize,
    kind: FaceKind,
    pair: usize,
    k: i64,
    v: usize,
    b: usize,
    c: usize,
    d: usize,
    /// The side `{v, d}` is a copy of a separation pair.
    copy_side: bool,
}

/// T-shape drawing of a 1-planar embedding from an extended leftish ordering of
/// G□. Bars get `x * 3` and `y * 2`; each crossing quadrangle with dual number `k`
/// owns the free columns `3k - 2` and `3k - 1`. Every vertex gets at most one
/// pylon, which sees the apexes of its trapezoids and, for the lower side of a
/// rhombus, the upper side. Pylons point up, so the shapes are ⊥ and L; flip the
/// result for T-shapes.
pub fn t_drawer(aug: &AugmentedEmbedding) -> Result<VisibilityRepresentation> {
    let sq = planar_skeleton(aug);
    let g = &sq.graph;
    let ext = extended_leftish_ordering(aug)?;
    let rank = &ext.ordering.rank;
    let dual = dual_st_numbering(g, rank, ext.st_edge)?;
    let lay = layout(g, &dual, |v| 2 * (rank[v] as i64 - 1), 3);
    let mut polys = lay.polygons;
    let y = |v: usize| 2 * (rank[v] as i64 - 1);

    let copy_between = |u: usize, w: usize| {
        g.darts_around(u)
            .into_iter()
            .any(|d| g.head(d) == w && sq.is_copy(d / 2))
    };
    let mut quads = Vec::new();
    for fc in classify_by_ranks(g, rank, dual.t_star)? {
        let Some(pair) = sq.crossing_at[fc.face] else { continue };
        let k = dual.delta_star[fc.face] as i64;
        let (b, d) = match fc.kind {
            FaceKind::LeftTrapezoid | FaceKind::Rhomboid => (fc.left, fc.right),
            FaceKind::RightTrapezoid => (fc.right, fc.left),
            FaceKind::Triangle => return Err(Error::UnclassifiableFace(fc.face)),
        };
        let copy_side = fc.kind == FaceKind::LeftTrapezoid && copy_between(fc.bottom, d);
        quads.push(Quad { face: fc.face, kind: fc.kind, pair, k, v: fc.bottom, b, c: fc.apex, d, copy_side });
    }
    // t* is bounded by {s, t} and the path s, b, c, t
    if let Some(pair) = sq.crossing_at[dual.t_star] {
        let st = upward(g, rank, ext.st_edge);
        let w = g.walk_from(st);
        if w.len() != 4 {
            return Err(Error::UnclassifiableFace(dual.t_star));
        }
        let k = dual.faces as i64 - 1;
        quads.push(Quad { face: dual.t_star, kind: FaceKind::LeftTrapezoid, pair, k, v: w[0], b: w[3], c: w[2], d: w[1], copy_side: false });
    }

    // quadrangles in s* need room left of every bar: move {s, t} to the left edge
    let m = dual.faces as i64;
    let st_x = if quads.iter().any(|q| q.k == 0) {
        let t_quad = quads.iter().any(|q| q.k == m - 1);
        for v in g.ends(ext.st_edge) {
            polys[v].bar[1] = -3;
            if !t_quad {
                polys[v].bar[2] = 3 * (m - 2);
            }
        }
        -3
    } else {
        lay.edge_x[ext.st_edge]
    };

    let edge_x = |e: usize| if e == ext.st_edge { st_x } else { lay.edge_x[e] };
    let mut quad_at = vec![None; g.face_slots()];
    for (i, q) in quads.iter().enumerate() {
        quad_at[q.face] = Some(i);
    }
    let fans: Vec<Fan> = (0..g.n()).map(|v| fan(g, rank, dual.t_star, v, &edge_x)).collect();

    // what each pylon must see: (height, fan position, quad)
    let mut needs: Vec<Vec<(i64, isize, usize)>> = vec![Vec::new(); g.n()];
    for (i, q) in quads.iter().enumerate() {
        match q.kind {
            FaceKind::Rhomboid => {
                let (lo, hi) = rhombus_sides(q, rank);
                let pos = if lo == q.b { fans[lo].darts.len() as isize - 1 } else { -1 };
                needs[lo].push((y(hi), pos, i));
            }
            _ => {
                let pos = fans[q.v].faces.iter().position(|&f| f == q.face).ok_or(Error::UnclassifiableFace(q.face))?;
                needs[q.v].push((y(q.c) + i64::from(q.copy_side), pos as isize, i));
            }
        }
    }
    for q in &quads {
        let k = q.k;
        match q.kind {
            FaceKind::LeftTrapezoid => polys[q.b].bar[2] = polys[q.b].bar[2].max(3 * k - 2),
            FaceKind::RightTrapezoid => polys[q.b].bar[1] = polys[q.b].bar[1].min(3 * k - 1),
            _ => {}
        }
    }

    let mut board = Board::default();
    let mut pylon: Vec<Option<(i64, i64)>> = vec![None; g.n()];
    // half-unit pylons for the outer quadrangle of an inner component; an apex
    // with a pylon of its own is met there instead
    let mut copy_apex = vec![false; g.n()];
    for q in quads.iter().filter(|q| q.copy_side) {
        copy_apex[q.c] = true;
        if !needs[q.c].is_empty() {
            continue;
        }
        if pylon[q.c].is_some() {
            return Err(Error::ShapeOutOfMode(q.c));
        }
        let x = polys[q.c].bar[2];
        pylon[q.c] = Some((x, y(q.c) + 1));
        board.pylon(x, y(q.c), y(q.c) + 1);
    }

    // candidate pylon places per vertex, safe ones first
    let mut plans: Vec<Vec<Plan>> = vec![Vec::new(); g.n()];
    for v in 0..g.n() {
        let need = &needs[v];
        if need.is_empty() {
            continue;
        }
        let top = need.iter().map(|n| n.0).max().unwrap_or_default();
        let fan = &fans[v];
        let sees_all = |j: isize| {
            need.iter().all(|&(h, i, qi)| {
                let q = &quads[qi];
                match usize::try_from(j) {
                    Ok(j) if j < fan.faces.len() => fan.sees(j, i, h, q.kind, q.copy_side.then_some(q.d)),
                    // beyond the outermost darts only the rhombus there is seen
                    _ => i == j,
                }
            })
        };
        let mut safe = Vec::new();
        let mut other = Vec::new();
        // a rhombus with `v` as its lower side, pylon at the end of the bar of `v`
        for &(_, i, qi) in need.iter().filter(|n| quads[n.2].kind == FaceKind::Rhomboid) {
            let q = &quads[qi];
            if y(q.c) <= top {
                continue;
            }
            let x = if v == q.b { 3 * q.k - 2 } else { 3 * q.k - 1 };
            let plan = Plan { x, top, roof: y(q.c), rhombus: Some(qi), safe: sees_all(i) };
            if plan.safe { safe.push(plan) } else { other.push(plan) }
        }
        // the face with the highest trapezoid apex first
        let fmax = need
            .iter()
            .filter(|n| quads[n.2].kind != FaceKind::Rhomboid)
            .max_by_key(|n| (y(quads[n.2].c), std::cmp::Reverse(n.1)))
            .map(|n| n.1 as usize);
        let mut seen = vec![false; fan.faces.len()];
        for j in fmax.into_iter().chain(0..fan.faces.len()) {
            if std::mem::replace(&mut seen[j], true) {
                continue;
            }
            let f = fan.faces[j];
            let kind = quad_at[f].map(|i| quads[i].kind);
            let roof = g.face_vertices(f).into_iter().map(y).max().unwrap_or_default();
            if kind == Some(FaceKind::Rhomboid) || roof <= top {
                continue;
            }
            let k = dual.delta_star[f] as i64;
            let x = if kind == Some(FaceKind::RightTrapezoid) { 3 * k - 2 } else { 3 * k - 1 };
            let plan = Plan { x, top, roof, rhombus: None, safe: sees_all(j as isize) };
            if plan.safe { safe.push(plan) } else { other.push(plan) }
        }
        // a lone rhombus keeps its pylon inside the rhombus
        if !(need.len() == 1 && safe.first().is_some_and(|p| p.rhombus.is_some())) {
            safe.sort_by_key(|p| p.rhombus.is_some());
        }
        safe.append(&mut other);
        plans[v] = safe;
    }

    // horizontal sights of `v` from a pylon at `x`: (level, target end)
    let targets = |v: usize, x: i64, polys: &[ShapePolygon], pylon: &[Option<(i64, i64)>]| -> Vec<(usize, i64, i64, usize)> {
        needs[v]
            .iter()
            .map(|&(h, _, qi)| {
                let q = &quads[qi];
                let w = match q.kind {
                    FaceKind::Rhomboid => rhombus_sides(q, rank).1,
                    _ => q.c,
                };
                let end = match pylon[w] {
                    Some((px, _)) if q.copy_side => px,
                    _ if polys[w].bar[2] < x => polys[w].bar[2],
                    _ => polys[w].bar[1],
                };
                (qi, h, end, w)
            })
            .collect()
    };
    // columns of vertical sights leaving each bar upward
    let mut sight_cols: Vec<Vec<i64>> = vec![Vec::new(); g.n()];
    for e in g.edges() {
        let [a, b] = g.ends(e);
        let lo = if rank[a] < rank[b] { a } else { b };
        sight_cols[lo].push(edge_x(e));
    }
    for q in &quads {
        let k = q.k;
        match q.kind {
            FaceKind::Rhomboid => sight_cols[q.v].extend([3 * k - 2, 3 * k - 1]),
            FaceKind::LeftTrapezoid => sight_cols[q.b].push(3 * k - 2),
            _ => sight_cols[q.b].push(3 * k - 1),
        }
    }
    let mut inner = vec![false; quads.len()];
    let mut sight_of = vec![None; quads.len()];
    // apexes met at their pylons first, then vertices with a safe place, then the rest
    let mut order: Vec<usize> = (0..g.n()).filter(|&v| !plans[v].is_empty()).collect();
    order.sort_by_key(|&v| (!copy_apex[v], !plans[v][0].safe));
    for v in order {
        let y0 = polys[v].y();
        // sights of a plan and the pylon height they need; a target that cannot be
        // reached at its own level is met at its pylon on a level without bars
        let evaluate = |p: &Plan| -> Option<(i64, Vec<Route>, Vec<Route>)> {
            let mut top = p.top;
            let mut out = Vec::new();
            let mut stubs: Vec<Route> = Vec::new();
            for (qi, h, end, w) in targets(v, p.x, &polys, &pylon) {
                let bar = &polys[w].bar;
                if (bar[1]..=bar[2]).contains(&p.x) {
                    return None;
                }
                if board.free_h(h, p.x, end) {
                    out.push((qi, h, end));
                    continue;
                }
                let yw = polys[w].y();
                if let Some((wx, wtop)) = pylon[w] {
                    let lo = yw.max(y0) + 1;
                    let h = (lo..=wtop.min(p.roof - 1)).filter(|h| h % 2 != 0).find(|&h| board.free_h(h, p.x, wx))?;
                    top = top.max(h);
                    out.push((qi, h, wx));
                    continue;
                }
                // a vertex without a pylon of its own gets a unit pylon on its bar,
                // in a column where no vertical sight leaves the bar
                let h = yw + 1;
                if !needs[w].is_empty() || h >= p.roof || stubs.iter().any(|s| s.0 == w) {
                    return None;
                }
                let cols: Box<dyn Iterator<Item = i64>> =
                    if p.x < bar[1] { Box::new(bar[1]..=bar[2]) } else { Box::new((bar[1]..=bar[2]).rev()) };
                let end = cols
                    .filter(|x| !sight_cols[w].contains(x))
                    .take(16)
                    .find(|&x| board.free_h(h, p.x, x) && board.free_v(x, yw, h))?;
                top = top.max(h);
                stubs.push((w, end, h));
                out.push((qi, h, end));
            }
            board.free_v(p.x, y0, top).then_some((top, out, stubs))
        };
        let (plan, (top, routes, stubs)) = plans[v]
            .iter()
            .find_map(|p| evaluate(p).map(|r| (*p, r)))
            .ok_or(Error::NoPylonPosition(v))?;
        for (w, x, h) in stubs {
            pylon[w] = Some((x, h));
            board.pylon(x, polys[w].y(), h);
        }
        if let Some(qi) = plan.rhombus {
            if v == quads[qi].b {
                polys[v].bar[2] = polys[v].bar[2].max(plan.x);
            } else {
                polys[v].bar[1] = polys[v].bar[1].min(plan.x);
            }
            inner[qi] = true;
        }
        pylon[v] = Some((plan.x, top));
        board.pylon(plan.x, y0, top);
        for (qi, h, end) in routes {
            board.sight(h, plan.x, end);
            sight_of[qi] = Some((h, end, plan.x));
        }
    }
    for (v, p) in pylon.iter().enumerate() {
        if let Some((x, top)) = *p {
            polys[v].pylon = Some([x, polys[v].y(), top]);
        }
    }
    let (mut sights, mut dropped) = (Vec::new(), Vec::new());
    for e in g.edges() {
        let a = sq.aug_edge[e];
        let [u, v] = g.ends(e);
        let s = SightSegment::vertical(a, [u, v], edge_x(e), polys[u].y(), polys[v].y());
        if sq.provenance[e] == Provenance::Original {
            sights.push(s);
        } else {
            dropped.push(s);
        }
    }
    for (i, q) in quads.iter().enumerate() {
        let cc = &aug.crossing_classes()[q.pair];
        let (vc, bd) = {
            let [e0, e1] = cc.edges;
            if same(aug.edges()[e0].ends, [q.v, q.c]) {
                (e0, e1)
            } else {
                (e1, e0)
            }
        };
        let (vc_ends, bd_ends) = (aug.edges()[vc].ends, aug.edges()[bd].ends);
        if !same(vc_ends, [q.v, q.c]) || !same(bd_ends, [q.b, q.d]) {
            return Err(Error::InvalidOrdering(format!("crossing pair {} does not match its quadrangle", q.pair)));
        }
        let k = q.k;
        match q.kind {
            FaceKind::Rhomboid => {
                let lo = rhombus_sides(q, rank).0;
                let vx = if inner[i] && lo != q.b { 3 * k - 2 } else { 3 * k - 1 };
                let (h, x0, x1) = sight_of[i].expect("lower side has a pylon");
                sights.push(SightSegment::horizontal(bd, bd_ends, h, x0, x1));
                sights.push(SightSegment::vertical(vc, vc_ends, vx, y(q.v), y(q.c)));
            }
            _ => {
                let bx = if q.kind == FaceKind::LeftTrapezoid { 3 * k - 2 } else { 3 * k - 1 };
                sights.push(SightSegment::vertical(bd, bd_ends, bx, y(q.b), y(q.d)));
                let (hy, cx, px) = sight_of[i].expect("bottom has a pylon");
                sights.push(SightSegment::horizontal(vc, vc_ends, hy, cx, px));
            }
        }
    }
    Ok(VisibilityRepresentation::new(Mode::TShape, polys, sights, dropped))
}

#[derive(Clone, Copy, Debug)]
struct Plan {
    x: i64,
    top: i64,
    /// Level of the first bar above the pylon.
    roof: i64,
    /// The pylon stands in this rhombus at the end of the bar.
    rhombus: Option<usize>,
    /// Every sight passes only through faces above the vertex.
    safe: bool,
}

/// Pylons and horizontal sights placed so far, to keep them from meeting.
#[derive(Default)]
struct Board {
    pylons: BTreeMap<i64, Vec<(i64, i64)>>,
    sights: BTreeMap<i64, Vec<(i64, i64)>>,
}

impl Board {
    fn pylon(&mut self, x: i64, lo: i64, hi: i64) {
        self.pylons.entry(x).or_default().push((lo, hi));
    }

    fn sight(&mut self, h: i64, a: i64, b: i64) {
        self.sights.entry(h).or_default().push((a.min(b), a.max(b)));
    }

    fn free_v(&self, x: i64, lo: i64, hi: i64) -> bool {
        self.sights.range(lo..=hi).all(|(_, s)| s.iter().all(|&(a, b)| x <= a || x >= b))
    }

    fn free_h(&self, h: i64, a: i64, b: i64) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        let pylons = self.pylons.range(a + 1..b).all(|(_, p)| p.iter().all(|&(lo, hi)| h < lo || h > hi));
        pylons && self.sights.get(&h).is_none_or(|s| s.iter().all(|&(c, d)| d <= a || c >= b))
    }
}

/// The faces above a vertex from left to right, between its upward darts.
struct Fan {
    /// Head and level of the head of each upward dart.
    heads: Vec<usize>,
    darts: Vec<i64>,
    /// `faces[j]` lies between darts `j` and `j + 1`.
    faces: Vec<usize>,
}

impl Fan {
    /// Whether a horizontal sight at level `h` from a pylon in face `j` reaches fan
    /// position `i` (`-1` and `darts.len() - 1` lie beyond the outermost darts).
    /// Apexes of left-trapezoids are met from the right, of right-trapezoids from the
    /// left. A left-trapezoid whose right side copies the separation pair `{v, top}`
    /// is also met from the left, passing over the component inside the pair.
    fn sees(&self, j: usize, i: isize, h: i64, kind: FaceKind, copy_top: Option<usize>) -> bool {
        let j = j as isize;
        let above = |r: std::ops::RangeInclusive<isize>| r.into_iter().all(|d| self.darts[d as usize] > h);
        match i.cmp(&j) {
            Ordering::Equal => true,
            Ordering::Less => kind != FaceKind::RightTrapezoid && above(i + 1..=j),
            Ordering::Greater if kind != FaceKind::LeftTrapezoid => above(j + 1..=i),
            Ordering::Greater => match copy_top {
                Some(top) => (j + 1..=i).any(|p| self.heads[p as usize] == top && above(j + 1..=p)),
                None => false,
            },
        }
    }
}

fn fan(g: &PlaneGraph, rank: &[usize], t_star: usize, v: usize, edge_x: &impl Fn(usize) -> i64) -> Fan {
    let y = |w: usize| 2 * (rank[w] as i64 - 1);
    let mut up: Vec<_> = g.darts_around(v).into_iter().filter(|&d| rank[g.head(d)] > rank[v]).collect();
    up.sort_by_key(|&d| edge_x(edge_of(d)));
    let mut faces: Vec<usize> = up.windows(2).map(|w| g.face_of(twin(w[0]))).collect();
    // with {s, t} at the left, t* lies right of the last dart of s
    if let Some(&last) = up.last() {
        if g.face_of(twin(last)) == t_star && !faces.contains(&t_star) {
            faces.push(t_star);
        }
    }
    Fan { heads: up.iter().map(|&d| g.head(d)).collect(), darts: up.iter().map(|&d| y(g.head(d))).collect(), faces }
}

/// Lower and upper of the two side corners of a rhombus.
fn rhombus_sides(q: &Quad, rank: &[usize]) -> (usize, usize) {
    if rank[q.b] < rank[q.d] {
        (q.b, q.d)
    } else {
        (q.d, q.b)
    }
}
