use std::collections::HashSet;
use visrep::drawers::{compact_levels, draw, Dir, Mode, VisibilityRepresentation};
use visrep::graph::Embedding;
use visrep::io::{generate_instance, named_instance, InstanceKind};
use visrep::verifier::verify;
use visrep::Error;

fn named(name: &str) -> Embedding {
    named_instance(name).unwrap().build().unwrap()
}

fn certified(emb: &Embedding, mode: Mode) -> VisibilityRepresentation {
    let rep = draw(emb, mode).unwrap();
    let report = verify(&rep, emb.graph().edges());
    assert!(report.ok(), "{:?}", report.violations);
    rep
}

#[test]
fn planar_bars_only() {
    for name in ["c3", "k4_planar", "w4"] {
        let emb = named(name);
        let rep = certified(&emb, Mode::Planar);
        assert!(rep.polygons.iter().all(|p| p.pylon.is_none()));
        assert_eq!(rep.sights.len(), emb.graph().num_edges());
        assert!(rep.sights.iter().all(|s| s.dir == Dir::Vertical));
    }
}

#[test]
fn planar_mode_rejects_crossings() {
    assert!(draw(&named("xw6"), Mode::Planar).is_err());
}

#[test]
fn ic_kite_sights_cross_once_inside_the_kite() {
    let emb = named("k4_kite");
    let rep = certified(&emb, Mode::FlatRectangle);
    assert!(rep.polygons.iter().all(|p| p.pylon.is_none()));
    let h: Vec<_> = rep.sights.iter().filter(|s| s.dir == Dir::Horizontal).collect();
    assert_eq!(h.len(), 1);
    let crossing = emb.crossings()[0].edges;
    let v = rep.sights.iter().find(|s| s.dir == Dir::Vertical && crossing.contains(&s.id) && s.id != h[0].id).unwrap();
    // the crossing point is strictly inside both sights
    assert!(h[0].span[0] < v.at && v.at < h[0].span[1]);
    assert!(v.span[0] < h[0].at && h[0].at < v.span[1]);
}

#[test]
fn ic_mode_rejects_shared_kite_corners() {
    assert!(matches!(draw(&named("xw6"), Mode::FlatRectangle), Err(Error::NotICPlanar(_))));
}

#[test]
fn t_pylons_have_distinct_columns_and_bars_distinct_levels() {
    for emb in [named("xw6"), named("dxw"), generate_instance(120, 7, InstanceKind::OnePlanar).unwrap()] {
        let rep = certified(&emb, Mode::TShape);
        let cols: Vec<i64> = rep.polygons.iter().filter_map(|p| p.pylon.map(|[x, ..]| x)).collect();
        assert_eq!(cols.len(), cols.iter().collect::<HashSet<_>>().len());
        let levels: HashSet<i64> = rep.polygons.iter().map(|p| p.y()).collect();
        assert_eq!(levels.len(), rep.n(), "one bar per level before compaction");
        assert!(rep.polygons.iter().any(|p| p.pylon.is_some()));
    }
}

#[test]
fn flip_keeps_visibility() {
    let emb = named("dxw");
    let rep = certified(&emb, Mode::TShape);
    let f = rep.flip();
    assert!(verify(&f, emb.graph().edges()).ok());
    assert_eq!(f.flip(), rep);
}

#[test]
fn compaction_keeps_visibility_and_never_grows() {
    for (n, seed, kind) in [(60, 1, InstanceKind::Ic), (80, 2, InstanceKind::OnePlanar), (40, 3, InstanceKind::Planar)] {
        let emb = generate_instance(n, seed, kind).unwrap();
        for mode in [Mode::TShape, Mode::FlatRectangle, Mode::Planar] {
            let Ok(rep) = draw(&emb, mode) else { continue };
            let c = compact_levels(&rep, emb.graph().edges()).unwrap();
            assert!(verify(&c, emb.graph().edges()).ok());
            assert!(c.bounds[1] <= rep.bounds[1]);
            assert_eq!(c.bounds[0], rep.bounds[0]);
        }
    }
}

#[test]
fn one_sight_per_input_edge_in_t_mode() {
    let emb = named("dxw");
    let rep = certified(&emb, Mode::TShape);
    assert_eq!(rep.sights.len(), emb.graph().num_edges());
    let json = serde_json::to_value(&rep).unwrap();
    assert!(json["polygons"][0]["bar"].is_array());
}
