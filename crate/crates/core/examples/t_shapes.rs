//! T-shape visibility of a 1-planar graph with a separation pair, written as JSON
//! and SVG next to the system temp dir.

use visrep::drawers::{compact_levels, t_drawer};
use visrep::io::{named_instance, render_svg, to_json};
use visrep::normal_form::normalize;
use visrep::verifier::{check_shape_taxonomy, verify};

fn main() -> visrep::Result<()> {
    let emb = named_instance("dxw")?.build()?;
    let rep = t_drawer(&normalize(&emb))?;
    let edges = emb.graph().edges();
    println!("⊥ drawing: bounds {:?}, valid {}", rep.bounds, verify(&rep, edges).ok());
    println!("shapes: {:?}", check_shape_taxonomy(&rep)?);

    let compact = compact_levels(&rep, edges)?;
    let t = compact.flip();
    println!("compacted and flipped: bounds {:?}, valid {}", t.bounds, verify(&t, edges).ok());

    let dir = std::env::temp_dir();
    std::fs::write(dir.join("dxw_t.json"), to_json(&t)?).expect("write json");
    std::fs::write(dir.join("dxw_t.svg"), render_svg(&t)).expect("write svg");
    println!("wrote {}", dir.join("dxw_t.svg").display());
    Ok(())
}
