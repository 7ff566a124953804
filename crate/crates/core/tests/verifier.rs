use visrep::drawers::{draw, Mode, Shape, ShapePolygon, SightSegment, VisibilityRepresentation};
use visrep::io::named_instance;
use visrep::verifier::{area_bound, check_area, check_shape_taxonomy, check_thickness_two, verify, Violation};
use visrep::Error;

fn bar(v: usize, y: i64, x0: i64, x1: i64) -> ShapePolygon {
    ShapePolygon { v, bar: [y, x0, x1], pylon: None }
}

fn rep(mode: Mode, polygons: Vec<ShapePolygon>, sights: Vec<SightSegment>) -> VisibilityRepresentation {
    let mut r = VisibilityRepresentation { mode, polygons, sights, bounds: [0, 0], dropped: vec![] };
    r.normalize_bounds();
    r
}

fn k2() -> VisibilityRepresentation {
    rep(Mode::Planar, vec![bar(0, 0, 0, 2), bar(1, 2, 0, 2)], vec![SightSegment::vertical(0, [0, 1], 1, 0, 2)])
}

fn drawn(name: &str, mode: Mode) -> (VisibilityRepresentation, Vec<[usize; 2]>) {
    let emb = named_instance(name).unwrap().build().unwrap();
    (draw(&emb, mode).unwrap(), emb.graph().edges().to_vec())
}

#[test]
fn k2_is_valid() {
    assert!(verify(&k2(), &[[0, 1]]).ok());
}

#[test]
fn third_bar_blocks_the_sight() {
    let mut r = k2();
    r.polygons.push(bar(2, 1, 1, 3));
    let v = verify(&r, &[[0, 1]]).violations;
    assert_eq!(v, vec![Violation::Blocked { edge: 0, by: 2 }]);
}

#[test]
fn bar_beside_the_sight_does_not_block() {
    let mut r = k2();
    r.polygons.push(bar(2, 1, 2, 3));
    assert!(verify(&r, &[[0, 1]]).ok());
    r.polygons[2] = bar(2, 1, 1, 1);
    assert_eq!(verify(&r, &[[0, 1]]).violations, vec![Violation::Blocked { edge: 0, by: 2 }]);
}

#[test]
fn pylon_crossing_a_horizontal_sight_blocks_it() {
    let polys = vec![
        ShapePolygon { v: 0, bar: [0, 0, 4], pylon: Some([0, 0, 4]) },
        bar(1, 2, 4, 6),
        ShapePolygon { v: 2, bar: [1, 1, 3], pylon: Some([2, 1, 3]) },
    ];
    let r = rep(Mode::TShape, polys, vec![SightSegment::horizontal(0, [0, 1], 2, 0, 4)]);
    assert_eq!(verify(&r, &[[0, 1]]).violations, vec![Violation::Blocked { edge: 0, by: 2 }]);
}

#[test]
fn missing_extra_and_unanchored_sights() {
    let r = k2();
    assert_eq!(verify(&r, &[[0, 1], [1, 0]]).violations, vec![Violation::MissingSight { edge: 1 }]);
    let mut r2 = r.clone();
    r2.sights.push(SightSegment::vertical(0, [0, 1], 2, 0, 2));
    assert_eq!(verify(&r2, &[[0, 1]]).violations, vec![Violation::ExtraSight { edge: 0 }]);
    let mut r3 = r.clone();
    r3.sights[0] = SightSegment::vertical(0, [0, 1], 3, 0, 2);
    assert_eq!(verify(&r3, &[[0, 1]]).violations, vec![Violation::BadAnchor { edge: 0 }]);
}

#[test]
fn overlapping_polygons_and_collinear_sights() {
    let r = rep(Mode::Planar, vec![bar(0, 0, 0, 2), bar(1, 0, 2, 4)], vec![]);
    assert_eq!(verify(&r, &[]).violations, vec![Violation::Overlap { a: 0, b: 1 }]);
    let polys = vec![bar(0, 0, 0, 4), bar(1, 2, 0, 4)];
    let sights = vec![SightSegment::vertical(0, [0, 1], 1, 0, 2), SightSegment::vertical(1, [0, 1], 1, 0, 2)];
    let r = rep(Mode::Planar, polys, sights);
    let v = verify(&r, &[[0, 1], [0, 1]]).violations;
    assert!(v.contains(&Violation::CollinearSights { a: 0, b: 1 }));
}

#[test]
fn crossing_sights_are_allowed() {
    let (r, edges) = drawn("k4_kite", Mode::FlatRectangle);
    assert!(verify(&r, &edges).ok());
}

#[test]
fn shape_tags() {
    let mut p = bar(0, 0, 0, 4);
    assert_eq!(p.shape(), Shape::I);
    p.pylon = Some([0, 0, 3]);
    assert_eq!(p.shape(), Shape::L);
    p.pylon = Some([2, 0, 3]);
    assert_eq!(p.shape(), Shape::Perp);
    p.pylon = Some([2, 0, -3]);
    assert_eq!(p.shape(), Shape::T);
    let r = rep(Mode::Planar, vec![ShapePolygon { v: 0, bar: [0, 0, 4], pylon: Some([2, 0, 3]) }], vec![]);
    assert_eq!(check_shape_taxonomy(&r), Err(Error::ShapeOutOfMode(0)));
}

#[test]
fn t_output_shapes_are_i_l_or_perp() {
    let (r, _) = drawn("dxw", Mode::TShape);
    let shapes = check_shape_taxonomy(&r).unwrap();
    assert!(shapes.iter().all(|s| matches!(s, Shape::I | Shape::L | Shape::Perp)));
    assert!(shapes.contains(&Shape::Perp) || shapes.contains(&Shape::L));
    let flipped = check_shape_taxonomy(&r.flip()).unwrap();
    assert!(!flipped.contains(&Shape::Perp));
}

#[test]
fn thickness_two() {
    let (r, _) = drawn("w4", Mode::Planar);
    assert!(r.sights.iter().all(|s| s.dir == visrep::drawers::Dir::Vertical));
    assert!(check_thickness_two(&r));
    assert!(check_thickness_two(&drawn("k4_kite", Mode::FlatRectangle).0));
    assert!(check_thickness_two(&drawn("dxw", Mode::TShape).0));
}

#[test]
fn area_bounds() {
    let (c3, _) = drawn("c3", Mode::Planar);
    assert!(check_area(&c3, 3, Mode::Planar));
    // extents 1 x 2, that is a grid of 2 x 3 points
    assert_eq!(c3.bounds, [1, 2]);
    let (xw6, _) = drawn("xw6", Mode::TShape);
    assert_eq!(area_bound(8, Mode::TShape), (33, 16));
    assert!(check_area(&xw6, 8, Mode::TShape));
    let (w, h) = area_bound(3, Mode::TShape);
    assert!(w > 0 && h > 0);
}
