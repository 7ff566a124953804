//! Leftish canonical ordering of the planar skeleton, its face classes and the
//! dual numbering that fixes the x-coordinates.

use visrep::io::named_instance;
use visrep::normal_form::{normalize, planar_skeleton};
use visrep::orderings::{check_bitonic, classify_by_ranks, dual_st_numbering, extended_leftish_ordering};

fn main() -> visrep::Result<()> {
    let emb = named_instance("xw6")?.build()?;
    let aug = normalize(&emb);
    let sq = planar_skeleton(&aug);
    let x = extended_leftish_ordering(&aug)?;
    println!("order by rank: {:?}", x.ordering.order());
    for p in &x.pieces {
        if let Some(co) = &p.canonical {
            println!("paths: {:?}", co.paths);
            println!("bitonic violations: {}", check_bitonic(&p.graph, co).len());
        }
    }
    let dual = dual_st_numbering(&sq.graph, &x.ordering.rank, x.st_edge)?;
    for c in classify_by_ranks(&sq.graph, &x.ordering.rank, dual.t_star)? {
        if c.is_quad() {
            println!("face {} ({:?}): bottom {}, top {}, δ* = {}", c.face, c.kind, c.bottom, c.top, dual.delta_star[c.face]);
        }
    }
    Ok(())
}
