//! Certifying a hand-made drawing and reading the violations.

use visrep::drawers::{Mode, ShapePolygon, SightSegment, VisibilityRepresentation};
use visrep::verifier::{check_shape_taxonomy, verify};

fn main() -> visrep::Result<()> {
    let polygons = vec![
        ShapePolygon { v: 0, bar: [0, 0, 4], pylon: Some([3, 0, 3]) },
        ShapePolygon { v: 1, bar: [2, 0, 2], pylon: None },
        ShapePolygon { v: 2, bar: [4, 0, 4], pylon: None },
    ];
    let sights = vec![
        SightSegment::vertical(0, [0, 1], 1, 0, 2),
        SightSegment::horizontal(1, [0, 1], 2, 2, 3),
        SightSegment::vertical(2, [1, 2], 1, 2, 4),
    ];
    let edges = [[0, 1], [0, 1], [1, 2]];
    let mut rep = VisibilityRepresentation { mode: Mode::TShape, polygons, sights, bounds: [0, 0], dropped: vec![] };
    rep.normalize_bounds();
    println!("shapes: {:?}", check_shape_taxonomy(&rep)?);
    println!("violations: {:?}", verify(&rep, &edges).violations);

    // a bar across the sight of edge 2
    rep.polygons.push(ShapePolygon { v: 3, bar: [3, 0, 2], pylon: None });
    for v in verify(&rep, &edges).violations {
        println!("{}", serde_json::to_string(&v).expect("serializable"));
    }
    Ok(())
}
