//! End-to-end flows over the worked six-element examples, with every
//! expected table and relation frozen to hand-checked values. The two
//! operator pairs here separate the Dunn laws from the Fischer Servi laws
//! in both directions, so they exercise every branch of the classifier
//! and of the representation checks.

use gf_core::duality::{downset_algebra, order_isos, stone};
use gf_core::frames::{classify_two_rel, dual_one_rel_roundtrip, one_rel_transform};
use gf_core::modal::{classify, induced_relations, verify_representation};
use gf_core::{
    theorem_catalog, verify_theorem, Budget, Forest, Gao, Mask, OneRelClass, OneRelFrame,
    TwoRelFrame,
};

/// Two-chain plus an isolated point. Its downset algebra is the free
/// one-generated member of the variety: six elements, generated by the
/// downset of the isolated point.
fn free_forest() -> Forest {
    Forest::from_covers(3, &[(0, 1)]).unwrap()
}

/// Tree with a root, a middle node, and two maximal children.
fn four_tree() -> Forest {
    Forest::from_covers(4, &[(0, 1), (1, 2), (1, 3)]).unwrap()
}

#[test]
fn free_algebra_dual_flow() {
    let f = free_forest();
    let dual = downset_algebra(&f).unwrap();
    let a = &dual.algebra;
    assert_eq!(a.n(), 6);

    // Downsets in canonical order: 0, {0}, {2}, {0,1}, {0,2}, X.
    let expect: Vec<Mask> =
        [&[][..], &[0], &[2], &[0, 1], &[0, 2], &[0, 1, 2]].iter().map(|s| Mask::from_slice(s)).collect();
    assert_eq!(dual.downsets, expect);

    // Join irreducibles are exactly the principal downsets, and the
    // complemented elements form the four-element Boolean skeleton.
    assert_eq!(a.join_irreducibles(), vec![1, 2, 3]);
    assert_eq!(a.boolean_elements(), Mask::from_slice(&[0, 2, 3, 5]));

    // The spectrum recovers the forest we started from, and the Stone map
    // is an isomorphism onto the algebra of its downsets.
    let corr = stone(a).unwrap();
    assert!(!order_isos(corr.spectrum.forest.poset(), f.poset()).is_empty());
    assert_eq!(corr.r_index.len(), 6);
    let mut seen = corr.r_index.clone();
    seen.sort_unstable();
    assert_eq!(seen, vec![0, 1, 2, 3, 4, 5]);
}

#[test]
fn dunn_without_fischer_servi_flow() {
    let dual = downset_algebra(&free_forest()).unwrap();
    let g = Gao::new(dual.algebra, vec![3, 3, 3, 3, 3, 5], vec![0, 0, 2, 2, 2, 2]).unwrap();

    let fl = classify(&g);
    assert!(fl.d1.holds() && fl.d2.holds() && fl.fs1.holds());
    assert!(fl.bb.holds() && fl.db.holds());
    assert!(fl.wgao() && fl.dgao() && !fl.fsgao() && !fl.fsdgao());
    let w = fl.fs2.witness().unwrap();
    assert_eq!(w.args, vec![1, 0]);
    assert_eq!((w.lhs, w.rhs), (5, 3));
    assert!(!g.algebra().leq(w.lhs, w.rhs));

    // Dunn GAO: the single intersection relation supports the same
    // reconstruction as the two separate relations.
    let rep = verify_representation(&g).unwrap();
    assert_eq!(rep.routes, vec!["thm:isoBox", "isoDUNN"]);

    // Only the isolated point of the spectrum sees anything: its box row
    // is everything and its diamond row is the two non-root points.
    let ind = induced_relations(&g).unwrap();
    assert_eq!(ind.rbox.pairs(), vec![(1, 0), (1, 1), (1, 2)]);
    assert_eq!(ind.rdia.pairs(), vec![(1, 1), (1, 2)]);
    assert_eq!(ind.ra.pairs(), vec![(1, 1), (1, 2)]);

    let fr = TwoRelFrame::new(ind.spectrum.forest, ind.rbox, ind.rdia).unwrap();
    assert!(classify_two_rel(&fr).forest_frame());
}

#[test]
fn fischer_servi_without_dunn_flow() {
    let dual = downset_algebra(&four_tree()).unwrap();
    let g = Gao::new(dual.algebra, vec![0, 0, 1, 5, 1, 5], vec![0, 4, 4, 4, 4, 4]).unwrap();

    let fl = classify(&g);
    assert!(fl.fs1.holds() && fl.fs2.holds() && fl.d2.holds());
    assert!(fl.fsgao() && !fl.dgao() && !fl.wgao());
    let w = fl.d1.witness().unwrap();
    assert_eq!(w.args, vec![0, 3]);
    assert_eq!((w.lhs, w.rhs), (5, 4));
    assert!(!g.algebra().leq(w.lhs, w.rhs));

    let rep = verify_representation(&g).unwrap();
    assert_eq!(rep.routes, vec!["thm:isoBox", "fsRep"]);

    // The induced relations on the four-point spectrum, frozen pair by
    // pair. The intersection drops exactly the row of the left leaf.
    let ind = induced_relations(&g).unwrap();
    assert!(!order_isos(ind.spectrum.forest.poset(), four_tree().poset()).is_empty());
    #[rustfmt::skip]
    let rbox = vec![
        (0, 0), (0, 1),
        (1, 0), (1, 1), (1, 2),
        (2, 0), (2, 1), (2, 2),
        (3, 0), (3, 1), (3, 2),
    ];
    assert_eq!(ind.rbox.pairs(), rbox);
    #[rustfmt::skip]
    let ra = vec![
        (0, 0), (0, 1),
        (1, 0), (1, 1), (1, 2),
        (3, 0), (3, 1), (3, 2),
    ];
    assert_eq!(ind.ra.pairs(), ra);
    assert_eq!(ind.rdia.pair_count(), 12);
    assert!(ind.rdia.row(2).is_empty());
}

/// The complex algebra of a one-relation frame always induces the basic
/// representative of its class on the spectrum, so the roundtrip target is
/// the class transform. Checked here on a frame that is already basic
/// (recovered on the nose) and on one that is not.
#[test]
fn one_rel_roundtrips_reach_the_transform() {
    let basic = OneRelFrame::new(
        four_tree(),
        gf_core::Rel::from_pairs(4, &[(0, 1), (1, 1), (2, 3), (3, 2)]).unwrap(),
    )
    .unwrap();
    let rep = dual_one_rel_roundtrip(&basic, OneRelClass::Cj).unwrap();
    assert_eq!(rep.target.r().pairs(), basic.r().pairs());
    assert_eq!(rep.iso.len(), 4);

    // Two-chain with a non-convex row: the duality returns the basic
    // representative, which has one more pair.
    let fr = OneRelFrame::new(
        Forest::from_covers(2, &[(0, 1)]).unwrap(),
        gf_core::Rel::from_pairs(2, &[(0, 0), (0, 1), (1, 0)]).unwrap(),
    )
    .unwrap();
    let rep = dual_one_rel_roundtrip(&fr, OneRelClass::Fs).unwrap();
    let target = one_rel_transform(&fr, OneRelClass::Fs).unwrap();
    assert_eq!(rep.target.r().pairs(), target.r().pairs());
    assert_eq!(rep.dual.r().pair_count(), 4);
    assert_eq!(target.r().pair_count(), 4);
}

#[test]
fn theorem_suite_passes_at_three_nodes() {
    for (tag, _) in theorem_catalog() {
        let report = verify_theorem(tag, 3, &Budget::default()).unwrap();
        assert!(report.pass(), "{tag} failed: {:?}", report.counterexample);
        assert!(report.instances > 0, "{tag} checked nothing");
    }
}
