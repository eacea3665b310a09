//! Graded ring isomorphism by backtracking over homogeneous additive
//! generators.

use crate::elements::ElementSet;
use crate::graded::GradedRing;

/// A bijection `f` with `f[a]` the image of `a`, preserving addition,
/// multiplication, unity and every component, if one exists. Both rings must
/// be graded by the same group table.
pub fn graded_isomorphism(a: &GradedRing, b: &GradedRing) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.group() != b.group() {
        return None;
    }
    let k = a.group().order();
    if (0..k).any(|g| a.component(g).len() != b.component(g).len()) {
        return None;
    }
    if a.regular_elements().len() != b.regular_elements().len() {
        return None;
    }
    let gens = homogeneous_generators(a);
    let mut search = Search {
        a,
        b,
        gens: &gens,
        additive_order_a: additive_orders(a),
        additive_order_b: additive_orders(b),
    };
    let mut map = vec![usize::MAX; a.order()];
    map[a.zero()] = b.zero();
    search.extend(0, &mut map)
}

pub fn graded_isomorphic(a: &GradedRing, b: &GradedRing) -> bool {
    graded_isomorphism(a, b).is_some()
}

/// Greedy homogeneous generators of the additive group, smallest first.
fn homogeneous_generators(r: &GradedRing) -> Vec<usize> {
    let mut span = ElementSet::singleton(r.order(), r.zero());
    let mut gens = Vec::new();
    for x in r.homogeneous().iter() {
        if span.contains(x) {
            continue;
        }
        gens.push(x);
        span = closure_with(r, &span, x);
        if span.len() == r.order() {
            break;
        }
    }
    gens
}

fn closure_with(r: &GradedRing, span: &ElementSet, x: usize) -> ElementSet {
    let mut out = span.clone();
    let mut frontier: Vec<usize> = span.iter().collect();
    while let Some(y) = frontier.pop() {
        let z = r.add(y, x);
        if out.insert(z) {
            frontier.push(z);
        }
    }
    out
}

fn additive_orders(r: &GradedRing) -> Vec<usize> {
    r.elements()
        .map(|x| {
            let mut y = x;
            let mut n = 1;
            while y != r.zero() {
                y = r.add(y, x);
                n += 1;
            }
            n
        })
        .collect()
}

struct Search<'a> {
    a: &'a GradedRing,
    b: &'a GradedRing,
    gens: &'a [usize],
    additive_order_a: Vec<usize>,
    additive_order_b: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize, map: &mut [usize]) -> Option<Vec<usize>> {
        if depth == self.gens.len() {
            return self.is_isomorphism(map).then(|| map.to_vec());
        }
        let x = self.gens[depth];
        let degree = self.a.degree(x).expect("generators are nonzero");
        for y in self.b.component(degree).iter() {
            if y == self.b.zero() || self.additive_order_a[x] != self.additive_order_b[y] {
                continue;
            }
            let mut next = map.to_vec();
            if self.absorb(&mut next, x, y) {
                if let Some(found) = self.extend(depth + 1, &mut next) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Extends an additive map defined on a subgroup by x ↦ y, failing when
    /// the result is not a well-defined injection.
    fn absorb(&self, map: &mut [usize], x: usize, y: usize) -> bool {
        let (a, b) = (self.a, self.b);
        let mut used = ElementSet::empty(b.order());
        let domain: Vec<usize> = a.elements().filter(|&s| map[s] != usize::MAX).collect();
        for &s in &domain {
            used.insert(map[s]);
        }
        let mut frontier = domain;
        while let Some(s) = frontier.pop() {
            let t = a.add(s, x);
            let image = b.add(map[s], y);
            if map[t] == usize::MAX {
                if !used.insert(image) {
                    return false;
                }
                map[t] = image;
                frontier.push(t);
            } else if map[t] != image {
                return false;
            }
        }
        true
    }

    fn is_isomorphism(&self, map: &[usize]) -> bool {
        let (a, b) = (self.a, self.b);
        if map.contains(&usize::MAX) || map[a.one()] != b.one() {
            return false;
        }
        let additive = a
            .elements()
            .all(|x| a.elements().all(|y| map[a.add(x, y)] == b.add(map[x], map[y])));
        let multiplicative = a
            .elements()
            .all(|x| a.elements().all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
        let graded = a
            .group()
            .elements()
            .all(|g| a.component(g).iter().all(|x| b.component(g).contains(map[x])));
        additive && multiplicative && graded
    }
}
