use visrep::graph::connectivity::is_triconnected;
use visrep::graph::Embedding;
use visrep::io::{generate_instance, named_instance, InstanceKind};
use visrep::normal_form::{
    augment_planar_maximal, build_boxplus, kite_contract, normalize, planar_skeleton, reroute_b_configurations,
    undo_reroutes, CrossingKind, Provenance,
};

fn named(name: &str) -> Embedding {
    named_instance(name).unwrap().build().unwrap()
}

#[test]
fn normal_form_is_triangulated_and_sparse() {
    for emb in [named("xw6"), named("dxw"), named("w4"), generate_instance(90, 3, InstanceKind::OnePlanar).unwrap()] {
        let aug = normalize(&emb);
        assert!(aug.is_triangulated());
        assert!(aug.boxtimes_edges().len() <= 4 * emb.n() - 8);
        // input edges keep their ids
        for (e, ends) in emb.graph().edges().iter().enumerate() {
            assert_eq!(aug.edges()[e].ends, *ends);
            assert_eq!(aug.edges()[e].provenance, Provenance::Original);
        }
    }
}

#[test]
fn xw6_is_already_maximal() {
    let emb = named("xw6");
    let aug = augment_planar_maximal(&emb);
    assert_eq!(aug.edges().len(), 24);
    assert!(aug.crossing_classes().iter().all(|c| c.kind == CrossingKind::Kite));
}

#[test]
fn b_configuration_is_rerouted_into_a_kite() {
    let emb = named("b_config");
    let aug = augment_planar_maximal(&emb);
    assert!(aug.crossing_classes().iter().any(|c| c.kind == CrossingKind::BConfiguration));
    let r = reroute_b_configurations(&aug);
    assert!(!r.reroutes().is_empty());
    assert!(r.crossing_classes().iter().all(|c| c.kind != CrossingKind::BConfiguration));
    assert_eq!(undo_reroutes(&r), r.reroutes().iter().map(|x| x.edge).collect::<Vec<_>>());
}

#[test]
fn separation_pairs_get_copies() {
    let emb = named("dxw");
    let aug = build_boxplus(&augment_planar_maximal(&emb));
    let tree = aug.tree().unwrap();
    assert!(!tree.is_trivial());
    assert!(aug.edges().iter().any(|e| e.provenance == Provenance::StCopy));
    let sq = planar_skeleton(&aug);
    assert_eq!(sq.quad_count(), emb.crossings().len());
}

#[test]
fn w_configuration_is_detected() {
    let aug = normalize(&named("w_config"));
    assert!(aug.has_w_configuration());
}

#[test]
fn kite_contraction_of_a_single_kite() {
    let aug = normalize(&named("k4_kite"));
    let c = kite_contract(&aug).unwrap();
    assert_eq!(c.n, 1);
}

/// A vertex of degree 3 with two neighbours in one kite keeps only two distinct
/// neighbours after the contraction, so G• need not be 3-connected.
#[test]
fn kite_contraction_can_leave_a_separation_pair() {
    let emb = generate_instance(8, 0, InstanceKind::Ic).unwrap();
    let c = kite_contract(&normalize(&emb)).unwrap();
    let adj = c.simple_adjacency();
    assert!(adj.len() >= 4);
    assert!(adj.iter().any(|nb| nb.len() == 2));
    assert!(!is_triconnected(&adj));
}

#[test]
fn kite_contraction_needs_ic() {
    assert!(kite_contract(&normalize(&named("xw6"))).is_err());
}
