//! Property tests: rings and ideals are drawn from the order ≤ 16 corpus.

mod common;

use std::collections::BTreeSet;

use common::*;
use graded_ideals::classify::{witness_violates, Classifier, Predicate};
use graded_ideals::constructions::{localize, multiplicative_closure, quotient};
use graded_ideals::harness::Origin;
use graded_ideals::ringspec;
use graded_ideals::{ElementSet, GradedIdeal, PhiMap};
use proptest::prelude::*;

fn ring_index() -> impl Strategy<Value = usize> {
    0..small_harness().corpus().len()
}

/// (ring, ideal index) pairs.
fn ring_and_ideal() -> impl Strategy<Value = (usize, usize)> {
    ring_index().prop_flat_map(|r| (Just(r), 0..small_harness().inventory(r).unwrap().len()))
}

fn ring_and_two_ideals() -> impl Strategy<Value = (usize, usize, usize)> {
    ring_index().prop_flat_map(|r| {
        let n = small_harness().inventory(r).unwrap().len();
        (Just(r), 0..n, 0..n)
    })
}

fn phi() -> impl Strategy<Value = PhiMap> {
    prop_oneof![
        Just(PhiMap::Empty),
        Just(PhiMap::Zero),
        Just(PhiMap::Omega),
        (2u32..5).prop_map(PhiMap::Power),
        Just(PhiMap::Identity),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_sums_back(r in ring_index()) {
        let ring = &small_harness().corpus().entries()[r].ring;
        for a in ring.elements() {
            let parts = ring.decompose(a);
            let sum = parts.iter().fold(ring.zero(), |s, &x| ring.add(s, x));
            prop_assert_eq!(sum, a);
            for (g, &x) in parts.iter().enumerate() {
                prop_assert!(ring.component(g).contains(x));
            }
        }
    }

    #[test]
    fn regular_and_zero_divisors_partition(r in ring_index()) {
        let ring = &small_harness().corpus().entries()[r].ring;
        let reg = ring.regular_elements();
        let zd = ring.zero_divisors();
        prop_assert!(reg.is_disjoint(zd));
        prop_assert_eq!(reg.union(zd).len(), ring.order());
        prop_assert!(reg.contains(ring.one()));
        for x in reg.iter() {
            for y in reg.iter() {
                prop_assert!(reg.contains(ring.mul(x, y)));
            }
        }
        prop_assert_eq!(zd.to_vec(), zero_divisors_oracle(ring));
    }

    #[test]
    fn homogeneous_products_land_in_product_degree(r in ring_index()) {
        let ring = &small_harness().corpus().entries()[r].ring;
        let group = ring.group();
        for a in ring.homogeneous().iter() {
            for b in ring.homogeneous().iter() {
                let ab = ring.mul(a, b);
                if let (Some(g), Some(h), true) = (ring.degree(a), ring.degree(b), ab != ring.zero()) {
                    prop_assert_eq!(ring.degree(ab), Some(group.mul(g, h)));
                }
            }
        }
    }

    #[test]
    fn graded_ideals_contain_components((r, i) in ring_and_ideal()) {
        let h = small_harness();
        let ring = &h.corpus().entries()[r].ring;
        let p = h.inventory(r).unwrap().get(i);
        for a in p.elements().iter() {
            for &x in ring.decompose(a) {
                prop_assert!(p.contains(x));
            }
        }
    }

    #[test]
    fn radical_laws((r, i, j) in ring_and_two_ideals()) {
        let inv = small_harness().inventory(r).unwrap();
        let (a, b) = (inv.get(i), inv.get(j));
        let ga = a.graded_radical().unwrap();
        prop_assert_eq!(ga.elements().to_vec(), radical_oracle(a));
        prop_assert!(a.is_subset(&ga));
        prop_assert_eq!(&ga.graded_radical().unwrap(), &ga);
        let gb = b.graded_radical().unwrap();
        let lhs = a.intersection(b).unwrap().graded_radical().unwrap();
        prop_assert_eq!(lhs, ga.intersection(&gb).unwrap());
    }

    #[test]
    fn powers_descend_to_omega((r, i) in ring_and_ideal()) {
        let p = small_harness().inventory(r).unwrap().get(i);
        let omega = p.omega_intersection();
        let top = p.stabilization_index() as u32 + 1;
        for n in 1..=top {
            prop_assert!(p.power(n + 1).is_subset(&p.power(n)));
            prop_assert!(omega.is_subset(&p.power(n)));
        }
        prop_assert_eq!(&p.power(top), &omega);
    }

    #[test]
    fn products_match_oracle((r, i, j) in ring_and_two_ideals()) {
        let inv = small_harness().inventory(r).unwrap();
        let (a, b) = (inv.get(i), inv.get(j));
        let ab = a.product(b).unwrap();
        prop_assert_eq!(ab.elements().to_vec(), product_oracle(a, b));
        prop_assert!(ab.is_subset(&a.intersection(b).unwrap()));
    }

    #[test]
    fn colon_contains_ideal((r, i) in ring_and_ideal()) {
        let h = small_harness();
        let ring = &h.corpus().entries()[r].ring;
        let p = h.inventory(r).unwrap().get(i);
        for a in ring.homogeneous().iter() {
            let c = p.colon(a).unwrap();
            prop_assert_eq!(c.elements().to_vec(), colon_oracle(p, a));
            prop_assert!(p.is_subset(&c));
            if ring.is_regular(a) {
                prop_assert_eq!(&c, p);
            }
        }
    }

    #[test]
    fn false_verdicts_carry_genuine_witnesses((r, i) in ring_and_ideal(), phi in phi()) {
        let h = small_harness();
        let inv = h.inventory(r).unwrap();
        let p = inv.get(i);
        prop_assume!(p.is_proper());
        let c = Classifier::new().classify(p, &phi, inv).unwrap();
        let checks = [
            (Predicate::PhiPrime, &c.phi_prime),
            (Predicate::PhiR, &c.phi_r),
            (Predicate::PhiPr, &c.phi_pr),
            (Predicate::StronglyPhiR, &c.strongly_phi_r),
            (Predicate::PhiPure, &c.phi_pure),
            (Predicate::PhiVnr, &c.phi_vnr),
        ];
        for (pred, v) in checks {
            prop_assert_eq!(v.holds, v.witness.is_none());
            if let Some(w) = &v.witness {
                prop_assert!(witness_violates(pred, p, &phi, w).unwrap());
            }
        }
        if c.phi_r.holds {
            prop_assert!(c.phi_pr.holds);
        }
    }

    #[test]
    fn phi_chain_is_monotone((r, i) in ring_and_ideal()) {
        let p = small_harness().inventory(r).unwrap().get(i);
        prop_assume!(p.is_proper());
        let cls = Classifier::new();
        let v: Vec<bool> = PhiMap::ordered_chain().iter().map(|phi| cls.graded_phi_r(p, phi).unwrap().holds).collect();
        prop_assert!(v.windows(2).all(|w| !w[0] || w[1]));
    }

    #[test]
    fn quotient_projection_is_graded_homomorphism((r, i) in ring_and_ideal()) {
        let h = small_harness();
        let ring = &h.corpus().entries()[r].ring;
        let p = h.inventory(r).unwrap().get(i);
        prop_assume!(p.is_proper());
        let q = quotient(p).unwrap();
        let t = q.target();
        for a in ring.elements() {
            for b in ring.elements() {
                prop_assert_eq!(q.project(ring.add(a, b)), t.add(q.project(a), q.project(b)));
                prop_assert_eq!(q.project(ring.mul(a, b)), t.mul(q.project(a), q.project(b)));
            }
        }
        for g in ring.group().elements() {
            prop_assert_eq!(&q.project_set(ring.component(g)), t.component(g));
        }
    }

    #[test]
    fn localization_map_is_homomorphism(r in ring_index(), pick in any::<prop::sample::Index>()) {
        let ring = &small_harness().corpus().entries()[r].ring;
        let candidates: Vec<usize> = ring
            .homogeneous()
            .iter()
            .filter(|&x| x != ring.zero() && ring.first_power_in(x, &ElementSet::singleton(ring.order(), ring.zero())).is_none())
            .collect();
        prop_assume!(!candidates.is_empty());
        let s = multiplicative_closure(ring, &[candidates[pick.index(candidates.len())]]);
        let l = localize(ring, &s).unwrap();
        let t = l.target();
        prop_assert_eq!(l.canonical(ring.one()), t.one());
        for a in ring.elements() {
            for b in ring.elements() {
                prop_assert_eq!(l.canonical(ring.add(a, b)), t.add(l.canonical(a), l.canonical(b)));
                prop_assert_eq!(l.canonical(ring.mul(a, b)), t.mul(l.canonical(a), l.canonical(b)));
            }
        }
    }

    #[test]
    fn ringspec_round_trips(r in ring_index()) {
        let ring = &small_harness().corpus().entries()[r].ring;
        let text = ringspec::emit(ring);
        let back = ringspec::parse(&text).unwrap();
        prop_assert_eq!(back.ring.ring().add_table(), ring.ring().add_table());
        prop_assert_eq!(back.ring.ring().mul_table(), ring.ring().mul_table());
        prop_assert_eq!(back.ring.grading().components(), ring.grading().components());
        prop_assert_eq!(ringspec::emit(&back.ring), text);
    }

    #[test]
    fn element_sets_match_btreeset(
        a in prop::collection::btree_set(0usize..100, 0..40),
        b in prop::collection::btree_set(0usize..100, 0..40),
    ) {
        let sa = ElementSet::from_elements(100, a.iter().copied());
        let sb = ElementSet::from_elements(100, b.iter().copied());
        let collect = |s: ElementSet| s.iter().collect::<BTreeSet<_>>();
        prop_assert_eq!(collect(sa.union(&sb)), a.union(&b).copied().collect());
        prop_assert_eq!(collect(sa.intersection(&sb)), a.intersection(&b).copied().collect());
        prop_assert_eq!(collect(sa.difference(&sb)), a.difference(&b).copied().collect());
        prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        prop_assert_eq!(sa.is_disjoint(&sb), a.is_disjoint(&b));
        prop_assert_eq!(sa.len(), a.len());
        prop_assert_eq!(sa.first(), a.first().copied());
    }
}

#[test]
fn idealizations_satisfy_zero_divisor_identity() {
    for e in small_harness().corpus().entries() {
        if let Origin::Idealization(x) = &e.origin {
            assert!(x.zero_divisor_mismatches().is_empty(), "{}", e.name);
        }
    }
}

#[test]
fn generated_ideals_match_closure() {
    let h = small_harness();
    for e in h.corpus().entries() {
        for x in e.ring.homogeneous().iter() {
            let p = GradedIdeal::generate(&e.ring, &[x]).unwrap();
            assert_eq!(p.elements().to_vec(), ideal_closure_oracle(&e.ring, &[x]), "{} <{x}>", e.name);
        }
    }
}
