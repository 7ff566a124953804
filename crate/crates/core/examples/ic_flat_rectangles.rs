//! Flat-rectangle visibility of a random IC-planar graph: every kite becomes one
//! horizontal and one vertical sight that cross inside it.

use visrep::drawers::{ic_rv_drawer, Dir};
use visrep::io::{generate_with, GenOptions, InstanceKind};
use visrep::normal_form::normalize;
use visrep::verifier::{area_bound, check_thickness_two, verify};

fn main() -> visrep::Result<()> {
    let emb = generate_with(24, 3, InstanceKind::Ic, GenOptions { kites: Some(4), gadgets: None })?.build()?;
    let rep = ic_rv_drawer(&normalize(&emb))?;
    let horizontal = rep.sights.iter().filter(|s| s.dir == Dir::Horizontal).count();
    println!("n = {}, kites = {}, horizontal sights = {horizontal}", emb.n(), emb.crossings().len());
    println!("bounds {:?}, bound {:?}", rep.bounds, area_bound(emb.n(), rep.mode));
    println!("valid: {}, thickness two: {}", verify(&rep, emb.graph().edges()).ok(), check_thickness_two(&rep));
    Ok(())
}
