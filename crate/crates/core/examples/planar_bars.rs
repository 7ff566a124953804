//! Bar visibility representation of a crossing-free embedding.

use visrep::drawers::draw_planar;
use visrep::io::named_instance;
use visrep::verifier::{check_area, verify};

fn main() -> visrep::Result<()> {
    let emb = named_instance("w4")?.build()?;
    let rep = draw_planar(&emb)?;
    println!("bounds {:?}", rep.bounds);
    for p in &rep.polygons {
        println!("vertex {}: y = {}, x = {}..{}", p.v, p.y(), p.bar[1], p.bar[2]);
    }
    for s in &rep.sights {
        println!("edge {:?}: x = {}, y = {}..{}", s.edge, s.at, s.span[0], s.span[1]);
    }
    let report = verify(&rep, emb.graph().edges());
    println!("valid: {}, within area bound: {}", report.ok(), check_area(&rep, emb.n(), rep.mode));
    Ok(())
}
