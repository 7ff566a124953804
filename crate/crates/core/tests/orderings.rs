mod common;

use visrep::graph::Embedding;
use visrep::io::{generate_instance, named_instance, InstanceKind};
use visrep::normal_form::{normalize, planar_skeleton};
use visrep::orderings::{
    check_bitonic, classify_by_ranks, classify_faces, dual_st_numbering, extended_leftish_ordering, is_bitonic,
    is_st_numbering, rhomboidal_st_numbering, skeleton_st_number, st_number, FaceKind,
};

fn named(name: &str) -> Embedding {
    named_instance(name).unwrap().build().unwrap()
}

#[test]
fn st_numbering_of_the_wheel() {
    let emb = named("w4");
    let g = emb.planar();
    let o = st_number(g, 0, 1).unwrap();
    assert_eq!((o.rank[0], o.rank[1]), (1, 5));
    assert!(o.is_valid_for(g));
}

#[test]
fn st_predicate_rejects_a_local_maximum() {
    // path 0 - 1 - 2 plus edge 0 - 2; vertex 1 ranked last but is not t
    let adj = vec![vec![1, 2], vec![0, 2], vec![1, 0]];
    assert!(is_st_numbering(&adj, &[1, 2, 3], 0, 2));
    assert!(!is_st_numbering(&adj, &[1, 3, 2], 0, 2));
}

#[test]
fn bitonic_sequences() {
    assert!(is_bitonic(&[]));
    assert!(is_bitonic(&[3, 1]));
    assert!(is_bitonic(&[1, 4, 6, 5]));
    assert!(!is_bitonic(&[4, 1, 6]));
    assert!(!is_bitonic(&[1, 6, 4, 5]));
    // everything after the maximum sits above everything before it
    assert!(!is_bitonic(&[5, 6, 2]));
}

#[test]
fn leftish_ordering_shape() {
    for emb in [named("xw6"), named("dxw"), generate_instance(60, 4, InstanceKind::OnePlanar).unwrap()] {
        let aug = normalize(&emb);
        let sq = planar_skeleton(&aug);
        let x = extended_leftish_ordering(&aug).unwrap();
        assert!(x.ordering.is_valid_for(&sq.graph));
        for p in &x.pieces {
            let Some(co) = &p.canonical else { continue };
            assert_eq!(co.paths[0], vec![co.v1, co.v2]);
            assert_eq!(co.paths.last().unwrap(), &vec![co.vn]);
            assert!(co.paths.iter().all(|p| p.len() <= 2));
            assert!(check_bitonic(&p.graph, co).is_empty());
        }
    }
}

#[test]
fn face_classes_match_contour_replay() {
    for seed in 0..20 {
        let emb = generate_instance(10 + seed as usize, seed, InstanceKind::OnePlanar).unwrap();
        let aug = normalize(&emb);
        let x = extended_leftish_ordering(&aug).unwrap();
        for p in &x.pieces {
            let Some(co) = &p.canonical else { continue };
            let oracle = common::replay_classes(&p.graph, co);
            let by_ranks = classify_by_ranks(&p.graph, &co.rank, p.graph.outer()).unwrap();
            for c in classify_faces(&p.graph, co).unwrap() {
                assert_eq!(oracle[&c.face], (c.kind, c.top), "seed {seed} face {}", c.face);
                let r = by_ranks.iter().find(|r| r.face == c.face).unwrap();
                assert_eq!(r.kind, c.kind);
            }
        }
    }
}

#[test]
fn dual_numbering_ends() {
    let emb = named("dxw");
    let aug = normalize(&emb);
    let sq = planar_skeleton(&aug);
    let x = extended_leftish_ordering(&aug).unwrap();
    let d = dual_st_numbering(&sq.graph, &x.ordering.rank, x.st_edge).unwrap();
    assert_eq!(d.delta_star[d.s_star], 0);
    assert_eq!(d.delta_star[d.t_star], d.faces - 1);
    // every upward edge has its left face before its right face
    for e in sq.graph.edges().filter(|&e| e != d.st_edge) {
        assert!(d.edge_left[e] < d.edge_right[e]);
    }
}

#[test]
fn skeleton_st_number_keeps_components_consecutive() {
    let emb = named("dxw");
    let aug = normalize(&emb);
    let sq = planar_skeleton(&aug);
    let x = skeleton_st_number(&aug).unwrap();
    assert!(x.ordering.is_valid_for(&sq.graph));
    let tree = aug.tree().unwrap();
    for pair in &tree.pairs {
        for (_, region) in pair.inner() {
            let mut ranks: Vec<usize> = region.iter().map(|&v| x.ordering.rank[v]).collect();
            ranks.sort_unstable();
            assert!(ranks.windows(2).all(|w| w[1] == w[0] + 1), "region {region:?} is not a block");
        }
    }
}

#[test]
fn kites_are_rhomboids() {
    for emb in [named("k4_kite"), generate_instance(64, 5, InstanceKind::Ic).unwrap()] {
        let aug = normalize(&emb);
        let sq = planar_skeleton(&aug);
        let r = rhomboidal_st_numbering(&aug).unwrap();
        assert!(r.ordering.is_valid_for(&sq.graph));
        let cl = classify_by_ranks(&sq.graph, &r.ordering.rank, sq.graph.outer()).unwrap();
        for &f in &sq.quad_of {
            assert_eq!(cl.iter().find(|c| c.face == f).map(|c| c.kind), Some(FaceKind::Rhomboid));
        }
    }
}
