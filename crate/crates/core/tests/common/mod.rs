//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use graded_ideals::harness::{build_corpus, CorpusSpec, Harness};
use graded_ideals::{ElementSet, FiniteGroup, FiniteRing, GradedIdeal, GradedRing};

/// The default corpus trimmed to rings of order at most 16.
pub fn small_harness() -> &'static Harness {
    static H: OnceLock<Harness> = OnceLock::new();
    H.get_or_init(|| {
        let spec = CorpusSpec {
            max_ring_order: 16,
            ..CorpusSpec::default()
        };
        Harness::new(build_corpus(&spec).unwrap()).unwrap()
    })
}

pub fn zmod(n: usize) -> Arc<GradedRing> {
    Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(n).unwrap()))
}

/// Z_2[x]/(x^2) with deg x = 1 in Z_2.
pub fn dual_numbers_z2() -> Arc<GradedRing> {
    let ring = FiniteRing::polyquot(2, &[0, 0, 1]).unwrap();
    Arc::new(
        GradedRing::new(
            ring,
            FiniteGroup::cyclic(2).unwrap(),
            vec![ElementSet::from_elements(4, [0, 1]), ElementSet::from_elements(4, [0, 2])],
        )
        .unwrap(),
    )
}

pub fn set(universe: usize, xs: &[usize]) -> ElementSet {
    ElementSet::from_elements(universe, xs.iter().copied())
}

pub fn ideal(r: &Arc<GradedRing>, xs: &[usize]) -> GradedIdeal {
    GradedIdeal::from_elements(r, set(r.order(), xs)).unwrap()
}

/// Elements x with xy = 1 for some y.
pub fn units_oracle(r: &GradedRing) -> Vec<usize> {
    r.elements().filter(|&x| r.elements().any(|y| r.mul(x, y) == r.one())).collect()
}

/// Elements x with xy = 0 for some nonzero y, together with 0.
pub fn zero_divisors_oracle(r: &GradedRing) -> Vec<usize> {
    r.elements()
        .filter(|&x| x == r.zero() || r.elements().any(|y| y != r.zero() && r.mul(x, y) == r.zero()))
        .collect()
}

/// Smallest additive subgroup containing `seed` and closed under
/// multiplication by every ring element.
pub fn ideal_closure_oracle(r: &GradedRing, seed: &[usize]) -> Vec<usize> {
    let mut members = vec![false; r.order()];
    members[r.zero()] = true;
    for &s in seed {
        members[s] = true;
    }
    loop {
        let current: Vec<usize> = r.elements().filter(|&x| members[x]).collect();
        let mut grew = false;
        for &x in &current {
            for &y in &current {
                let s = r.add(x, y);
                if !members[s] {
                    members[s] = true;
                    grew = true;
                }
            }
            for t in r.elements() {
                let p = r.mul(t, x);
                if !members[p] {
                    members[p] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return r.elements().filter(|&x| members[x]).collect();
        }
    }
}

/// { b : ab ∈ P }.
pub fn colon_oracle(p: &GradedIdeal, a: usize) -> Vec<usize> {
    let r = p.ring();
    r.elements().filter(|&b| p.contains(r.mul(a, b))).collect()
}

/// Elements each of whose homogeneous components has a power in I.
pub fn radical_oracle(i: &GradedIdeal) -> Vec<usize> {
    let r = i.ring();
    let has_power = |c: usize| {
        let mut y = c;
        for _ in 0..=r.order() {
            if i.contains(y) {
                return true;
            }
            y = r.mul(y, c);
        }
        false
    };
    r.elements()
        .filter(|&x| {
            r.group().elements().all(|g| {
                let comp = r.decompose(x)[g];
                has_power(comp)
            })
        })
        .collect()
}

/// Ideal generated by all products ab with a ∈ I, b ∈ J.
pub fn product_oracle(i: &GradedIdeal, j: &GradedIdeal) -> Vec<usize> {
    let r = i.ring();
    let products: Vec<usize> = i.elements().iter().flat_map(|a| j.elements().iter().map(move |b| r.mul(a, b))).collect();
    ideal_closure_oracle(r, &products)
}
