//! Normal form of 1-planar embeddings: planar-maximal augmentation, rerouted
//! B-configurations and copies of separation-pair edges.

use visrep::io::named_instance;
use visrep::normal_form::{normalize, planar_skeleton, Provenance};

fn main() -> visrep::Result<()> {
    for name in ["b_config", "w_config", "dxw"] {
        let emb = named_instance(name)?.build()?;
        let aug = normalize(&emb);
        let count = |p: Provenance| aug.edges().iter().filter(|e| e.provenance == p).count();
        println!("{name}: n = {}, input edges = {}", emb.n(), emb.graph().num_edges());
        println!(
            "  added = {}, copies = {}, triangulated = {}",
            count(Provenance::Augmentation),
            count(Provenance::StCopy),
            aug.is_triangulated()
        );
        for c in aug.crossing_classes() {
            println!("  crossing {} {:?} around {:?}", c.pair, c.kind, c.boundary);
        }
        for r in aug.reroutes() {
            println!("  rerouted edge {} {:?} into the corner of crossing {}", r.edge, r.ends, r.pair);
        }
        if let Some(tree) = aug.tree() {
            for p in &tree.pairs {
                println!("  separation pair {{{}, {}}} with {} inner regions", p.x, p.y, p.regions.len() - 1);
            }
        }
        println!("  skeleton quadrangles: {}", planar_skeleton(&aug).quad_count());
    }
    Ok(())
}
