//! Randomized invariants: every derived structure is re-checked against a
//! direct recomputation from its definition, on forests and relations drawn
//! from seed vectors. Sizes stay small because the carriers are doubly
//! exponential in the forest.

use gf_core::duality::{downset_algebra, order_isos, spectrum, stone};
use gf_core::modal::{beta, classify, delta};
use gf_core::{enum_gaos, Budget, Forest, Mask, Rel};
use proptest::prelude::*;

/// Forest from a parent-seed vector: node `i` hangs below `seeds[i-1] % (i+1)`
/// unless the draw says it is a root. Every forest on `n` nodes arises this
/// way up to relabeling.
fn forest_of(n: usize, seeds: &[u64]) -> Forest {
    let mut covers = Vec::new();
    for (k, s) in seeds.iter().enumerate() {
        let i = k + 1;
        let p = (s % (i as u64 + 1)) as usize;
        if p < i {
            covers.push((p, i));
        }
    }
    Forest::from_covers(n, &covers).unwrap()
}

fn rel_of(n: usize, rows: &[u64]) -> Rel {
    let mut r = Rel::empty(n);
    for (a, bits) in rows.iter().enumerate() {
        for b in 0..n {
            if bits >> b & 1 == 1 {
                r.insert(a, b);
            }
        }
    }
    r
}

fn forest_and_rels(max_n: usize, k: usize) -> impl Strategy<Value = (Forest, Vec<Rel>)> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(any::<u64>(), n - 1),
            proptest::collection::vec(proptest::collection::vec(any::<u64>(), n), k),
        )
            .prop_map(move |(seeds, rowsets)| {
                (forest_of(n, &seeds), rowsets.iter().map(|rows| rel_of(n, rows)).collect())
            })
    })
}

proptest! {
    /// `downsets()` agrees with a scan over all bit patterns.
    #[test]
    fn downsets_match_a_subset_scan((f, _) in forest_and_rels(8, 0)) {
        let n = f.n();
        let mut scan: Vec<Mask> = (0..1u64 << n)
            .map(Mask::from_bits)
            .filter(|&s| f.is_downset(s))
            .collect();
        scan.sort_by_key(|m| m.canonical_key());
        prop_assert_eq!(f.downsets(), scan);
    }

    /// The spectrum of the downset algebra is the forest we started from,
    /// and the Stone map back onto the downsets is an isomorphism. The
    /// join irreducibles are exactly the principal downsets.
    #[test]
    fn spectrum_inverts_the_downset_algebra((f, _) in forest_and_rels(5, 0)) {
        let dual = downset_algebra(&f).unwrap();
        prop_assert_eq!(dual.algebra.join_irreducibles().len(), f.n());
        let spec = spectrum(&dual.algebra).unwrap();
        prop_assert!(!order_isos(spec.forest.poset(), f.poset()).is_empty());
        stone(&dual.algebra).unwrap();
    }

    /// Implication really is the residual of meet, and the algebra is
    /// prelinear: (a→b) ∨ (b→a) = ⊤.
    #[test]
    fn downset_algebras_are_residuated_and_prelinear((f, _) in forest_and_rels(4, 0)) {
        let a = downset_algebra(&f).unwrap().algebra;
        let n = a.n();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(a.join(a.imp(x, y), a.imp(y, x)), a.top());
                for c in 0..n {
                    let left = a.leq(a.meet(x, c), y);
                    let right = a.leq(c, a.imp(x, y));
                    prop_assert_eq!(left, right, "residuation at ({}, {}, {})", x, y, c);
                }
            }
        }
    }

    /// Composition is associative, has the identity as unit, and transposes
    /// contravariantly.
    #[test]
    fn compose_is_associative((f, rels) in forest_and_rels(6, 3)) {
        let n = f.n();
        let (r, s, t) = (&rels[0], &rels[1], &rels[2]);
        let left = r.compose(s).unwrap().compose(t).unwrap();
        let right = r.compose(&s.compose(t).unwrap()).unwrap();
        prop_assert_eq!(left.pairs(), right.pairs());
        let id = Rel::identity(n);
        prop_assert_eq!(id.compose(r).unwrap().pairs(), r.pairs());
        prop_assert_eq!(r.compose(&id).unwrap().pairs(), r.pairs());
        let flipped = r.compose(s).unwrap().transpose();
        prop_assert_eq!(flipped.pairs(), s.transpose().compose(&r.transpose()).unwrap().pairs());
    }

    /// `beta` and `delta` agree with their defining quantifiers on every
    /// downset, after closing an arbitrary relation under the monotonicity
    /// condition the operator needs.
    #[test]
    fn beta_delta_match_their_definitions((f, rels) in forest_and_rels(5, 1)) {
        let rm = f.geq_rel().compose(&rels[0]).unwrap();
        let rd = f.leq_rel().compose(&rels[0]).unwrap();
        for a in f.downsets() {
            let by_def: Mask =
                Mask::from_bits((0..f.n()).filter(|&y| rm.row(y).is_subset(a)).fold(0, |m, y| m | 1 << y));
            prop_assert_eq!(beta(&f, &rm, a).unwrap(), by_def);
            let by_def: Mask =
                Mask::from_bits((0..f.n()).filter(|&y| !rd.row(y).inter(a).is_empty()).fold(0, |m, y| m | 1 << y));
            prop_assert_eq!(delta(&f, &rd, a).unwrap(), by_def);
        }
    }

    /// The spectrum order is reverse inclusion of the prime filters.
    #[test]
    fn spectrum_order_is_reverse_filter_inclusion((f, _) in forest_and_rels(5, 0)) {
        let a = downset_algebra(&f).unwrap().algebra;
        let spec = spectrum(&a).unwrap();
        let filters = a.prime_filters();
        prop_assert_eq!(filters.len(), spec.generators.len());
        for (i, &(ji, fi)) in filters.iter().enumerate() {
            prop_assert_eq!(ji, spec.generators[i]);
            for (j, &(_, fj)) in filters.iter().enumerate() {
                prop_assert_eq!(spec.forest.leq(i, j), fj.is_subset(fi));
            }
        }
    }
}

/// Every witness the classifier reports must re-evaluate to a violation
/// when recomputed from its arguments.
#[test]
fn classifier_witnesses_reevaluate() {
    type BinLaw = fn(&gf_core::Gao, usize, usize) -> (usize, usize);
    let mut lawful = 0usize;
    let mut broken = 0usize;
    for (_, g) in enum_gaos(2, &Budget::default()).unwrap() {
        let a = g.algebra();
        let fl = classify(&g);
        let binary: [(&str, &gf_core::LawCheck, BinLaw); 4] = [
            ("d1", &fl.d1, |g, x, y| {
                let a = g.algebra();
                (g.box_of(a.join(x, y)), a.join(g.box_of(x), g.dia_of(y)))
            }),
            ("d2", &fl.d2, |g, x, y| {
                let a = g.algebra();
                (a.meet(g.box_of(x), g.dia_of(y)), g.dia_of(a.meet(x, y)))
            }),
            ("fs1", &fl.fs1, |g, x, y| {
                let a = g.algebra();
                (g.dia_of(a.imp(x, y)), a.imp(g.box_of(x), g.dia_of(y)))
            }),
            ("fs2", &fl.fs2, |g, x, y| {
                let a = g.algebra();
                (a.imp(g.dia_of(x), g.box_of(y)), g.box_of(a.imp(x, y)))
            }),
        ];
        for (name, check, law) in binary {
            match check.witness() {
                None => lawful += 1,
                Some(w) => {
                    broken += 1;
                    let (lhs, rhs) = law(&g, w.args[0], w.args[1]);
                    assert_eq!((lhs, rhs), (w.lhs, w.rhs), "{name} witness drifted");
                    assert!(!a.leq(lhs, rhs), "{name} witness is not a violation");
                }
            }
        }
        for (name, check) in [("bb", &fl.bb), ("db", &fl.db), ("bao", &fl.bao)] {
            if let Some(w) = check.witness() {
                assert_ne!(w.lhs, a.top(), "{name} witness is not a violation");
                assert_eq!(w.rhs, a.top());
            }
        }
    }
    assert!(lawful > 0 && broken > 0, "both outcomes must occur in the sample");
}
