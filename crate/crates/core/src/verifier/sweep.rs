use std::collections::{BTreeMap, HashMap};

/// An axis-parallel segment at the fixed coordinate `at` over `lo..=hi`, in doubled
/// coordinates so that open segments become closed ones.
#[derive(Clone, Copy, Debug)]
pub struct Seg {
    at: i64,
    lo: i64,
    hi: i64,
    owner: usize,
}

impl Seg {
    pub fn closed(at: i64, lo: i64, hi: i64, owner: usize) -> Self {
        Seg { at: 2 * at, lo: 2 * lo, hi: 2 * hi, owner }
    }

    /// The segment without its end points; empty if `lo == hi`.
    pub fn open(at: i64, lo: i64, hi: i64, owner: usize) -> Self {
        Seg { at: 2 * at, lo: 2 * lo + 1, hi: 2 * hi - 1, owner }
    }

    fn is_empty(&self) -> bool {
        self.lo > self.hi
    }
}

/// Owner pairs `(h, v)` of horizontal and vertical segments that meet.
pub fn crossings(hs: &[Seg], vs: &[Seg]) -> Vec<(usize, usize)> {
    // (y, order, index): vertical insert, horizontal query, vertical removal
    let mut events: Vec<(i64, u8, usize)> = Vec::with_capacity(hs.len() + 2 * vs.len());
    for (i, v) in vs.iter().enumerate().filter(|(_, s)| !s.is_empty()) {
        events.push((v.lo, 0, i));
        events.push((v.hi, 2, i));
    }
    for (i, h) in hs.iter().enumerate().filter(|(_, s)| !s.is_empty()) {
        events.push((h.at, 1, i));
    }
    events.sort_unstable();
    let mut active: BTreeMap<(i64, usize), usize> = BTreeMap::new();
    let mut out = Vec::new();
    for (_, kind, i) in events {
        match kind {
            0 => {
                active.insert((vs[i].at, i), vs[i].owner);
            }
            2 => {
                active.remove(&(vs[i].at, i));
            }
            _ => {
                let h = hs[i];
                for (_, &o) in active.range((h.lo, 0)..=(h.hi, usize::MAX)) {
                    out.push((h.owner, o));
                }
            }
        }
    }
    out
}

fn groups(segs: &[Seg]) -> HashMap<i64, Vec<Seg>> {
    let mut by_at: HashMap<i64, Vec<Seg>> = HashMap::new();
    for s in segs.iter().filter(|s| !s.is_empty()) {
        by_at.entry(s.at).or_default().push(*s);
    }
    for g in by_at.values_mut() {
        g.sort_unstable_by_key(|s| (s.lo, s.hi, s.owner));
    }
    by_at
}

/// Owner pairs of segments in one family that overlap on a common line.
pub fn collinear(segs: &[Seg]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for g in groups(segs).values() {
        for (i, s) in g.iter().enumerate() {
            for t in &g[i + 1..] {
                if t.lo > s.hi {
                    break;
                }
                out.push((s.owner, t.owner));
            }
        }
    }
    out
}

/// Owner pairs `(a, b)` with `a` from `xs` and `b` from `ys` overlapping on a common line.
pub fn collinear_between(xs: &[Seg], ys: &[Seg]) -> Vec<(usize, usize)> {
    let by_at = groups(ys);
    let mut out = Vec::new();
    for a in xs.iter().filter(|s| !s.is_empty()) {
        let Some(g) = by_at.get(&a.at) else { continue };
        let end = g.partition_point(|s| s.lo <= a.hi);
        out.extend(g[..end].iter().filter(|s| s.hi >= a.lo).map(|s| (a.owner, s.owner)));
    }
    out
}
