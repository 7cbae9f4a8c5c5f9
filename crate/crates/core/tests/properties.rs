//! Structural invariants checked over randomized instances.

use lgc_core::bits::{BitMatrix, Subset};
use lgc_core::galois::GaloisPair;
use lgc_core::gen::{element_names, gen_algebra, gen_lattice, InstanceSpec, Kind};
use lgc_core::lattice::{birkhoff_map, FiniteLattice};
use lgc_core::order::{rauszer_coimplication, rauszer_implication, upsets, QuasiOrder};
use lgc_core::suite::all_quasiorders;
use lgc_core::term::{parse_term, Span, Term, TermKind};
use lgc_core::Signature;
use proptest::prelude::*;

fn quasiorder_strategy(max_n: usize) -> impl Strategy<Value = QuasiOrder> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = bits
                .iter()
                .enumerate()
                .filter(|&(_, &b)| b)
                .map(|(k, _)| (k / n.max(1), k % n.max(1)))
                .collect();
            QuasiOrder::closure_of_pairs(element_names(n), &pairs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn upsets_then_specialization_returns_the_quasiorder(q in quasiorder_strategy(7)) {
        let family = upsets(&q).unwrap();
        prop_assert_eq!(family.specialization_order(), q);
    }

    #[test]
    fn specialization_then_upsets_returns_the_family(q in quasiorder_strategy(7)) {
        // Validate the family independently of its origin, then round-trip
        // through the specialization order.
        let sets = upsets(&q).unwrap().sets().to_vec();
        let family = lgc_core::order::UpSetFamily::validate(q.carrier().to_vec(), sets).unwrap();
        let back = upsets(&family.specialization_order()).unwrap();
        prop_assert_eq!(back.sets(), family.sets());
    }

    #[test]
    fn neighbourhoods_are_smallest_containing_opens(q in quasiorder_strategy(6)) {
        let family = upsets(&q).unwrap();
        for x in 0..q.len() {
            let mut meet = Subset::full(q.len());
            for &s in family.sets() {
                if s.contains(x) {
                    meet = meet.intersection(s);
                }
            }
            prop_assert_eq!(meet, q.least_neighborhood(x).unwrap());
        }
    }

    #[test]
    fn minimal_base_is_the_join_irreducible_opens(q in quasiorder_strategy(6)) {
        let family = upsets(&q).unwrap();
        let mut irreducible = Vec::new();
        for &s in family.sets() {
            let mut below = Subset::empty(q.len());
            for &r in family.sets() {
                if r != s && r.is_subset_of(s) {
                    below = below.union(r);
                }
            }
            if below != s {
                irreducible.push(s);
            }
        }
        prop_assert_eq!(q.minimal_base(), irreducible);
    }

    #[test]
    fn rauszer_operators_agree_with_their_characterizations(q in quasiorder_strategy(5)) {
        let family = upsets(&q).unwrap();
        for &a in family.sets() {
            for &b in family.sets() {
                let imp = rauszer_implication(&q, a, b).unwrap();
                prop_assert!(q.is_up_closed(imp));
                prop_assert_eq!(imp, family.interior(a.complement().union(b)));

                let co = rauszer_coimplication(&q, a, b).unwrap();
                prop_assert!(q.is_up_closed(co));
                prop_assert!(b.is_subset_of(a.union(co)));
                for &x in family.sets() {
                    if b.is_subset_of(a.union(x)) {
                        prop_assert!(co.is_subset_of(x));
                    }
                }
            }
        }
    }
}

fn term(kind: TermKind) -> Term {
    Term { kind, span: Span { start: 0, end: 0 } }
}

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(term(TermKind::Zero)),
        Just(term(TermKind::One)),
        prop_oneof![Just("x"), Just("y"), Just("z"), Just("w1"), Just("fine")]
            .prop_map(|v| term(TermKind::Var(v.to_string()))),
    ];
    leaf.prop_recursive(6, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| term(TermKind::Meet(a.into(), b.into()))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| term(TermKind::Join(a.into(), b.into()))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| term(TermKind::Imp(a.into(), b.into()))),
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| term(TermKind::Coimp(a.into(), b.into()))),
            inner.clone().prop_map(|a| term(TermKind::F(a.into()))),
            inner.prop_map(|a| term(TermKind::G(a.into()))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn printing_then_parsing_is_the_identity(t in term_strategy()) {
        let printed = t.to_string();
        let reparsed = parse_term(&printed).unwrap();
        prop_assert_eq!(reparsed, t, "printed as {}", printed);
    }
}

/// Every lattice on at most four elements, by filtering all posets.
fn all_small_lattices(n: usize) -> Vec<FiniteLattice> {
    all_quasiorders(n)
        .into_iter()
        .filter(|q| q.is_antisymmetric())
        .filter_map(|q| {
            FiniteLattice::from_order(q.carrier().to_vec(), BitMatrix::from_subset_rows(q.rows()))
                .ok()
        })
        .collect()
}

#[test]
fn jid_and_mid_coincide_with_distributivity_on_all_small_lattices() {
    for n in 1..=4 {
        for l in all_small_lattices(n) {
            let d = l.is_distributive();
            assert_eq!(l.check_jid(), d);
            assert_eq!(l.check_mid(), d);
            // Finite lattices are spatial and weakly atomic across the board.
            assert!(l.is_spatial());
            assert!(l.is_weakly_atomic());
            // Heyting structure is exactly distributivity here.
            assert_eq!(l.is_heyting(), d);
            assert_eq!(l.is_heyting_brouwer(), d);
        }
    }
}

#[test]
fn implications_never_fail_on_generated_distributive_lattices() {
    for seed in 0..60 {
        let spec = InstanceSpec {
            kind: Kind::Lattice,
            size: 1 + (seed as usize % 5),
            seed,
            density: 0.4,
            signature: Signature::Hbgc,
        };
        let l = gen_lattice(&spec).unwrap();
        for a in 0..l.len() {
            for b in 0..l.len() {
                let imp = l.implication(a, b).unwrap();
                let co = l.coimplication(a, b).unwrap();
                for x in 0..l.len() {
                    assert_eq!(l.leq(l.meet(a, x), b), l.leq(x, imp));
                    assert_eq!(l.leq(b, l.join(a, x)), l.leq(co, x));
                }
            }
        }
    }
}

#[test]
fn birkhoff_duality_on_generated_lattices() {
    for seed in 0..40 {
        let spec = InstanceSpec {
            kind: Kind::Lattice,
            size: 1 + (seed as usize % 4),
            seed: seed * 131 + 7,
            density: 0.45,
            signature: Signature::Hbgc,
        };
        let l = gen_lattice(&spec).unwrap();
        let (_, family, images) = birkhoff_map(&l).unwrap();
        let mut sorted = images.clone();
        sorted.sort_by(Subset::canonical_cmp);
        sorted.dedup();
        assert_eq!(sorted.len(), l.len(), "injective");
        assert_eq!(sorted.as_slice(), family.sets(), "onto the dual up-sets");
        for x in 0..l.len() {
            for y in 0..l.len() {
                assert_eq!(images[l.join(x, y)], images[x].union(images[y]));
                assert_eq!(images[l.meet(x, y)], images[x].intersection(images[y]));
            }
        }
    }
}

#[test]
fn generated_pairs_compose_idempotently() {
    for seed in 0..60 {
        let spec = InstanceSpec {
            kind: Kind::Algebra,
            size: 1 + (seed as usize % 5),
            seed: seed * 17 + 3,
            density: 0.4,
            signature: Signature::Hbgc,
        };
        let pair = gen_algebra(&spec).unwrap();
        let l = pair.lattice();
        for x in 0..l.len() {
            assert_eq!(pair.f_at(pair.g_at(pair.f_at(x))), pair.f_at(x));
            assert_eq!(pair.g_at(pair.f_at(pair.g_at(x))), pair.g_at(x));
        }
        // Both validators accept the generated pair.
        GaloisPair::validate_by_characterization(
            l.clone(),
            pair.f().to_vec(),
            pair.g().to_vec(),
        )
        .unwrap();
    }
}
