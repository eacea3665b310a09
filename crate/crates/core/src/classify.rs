//! Ideal-class predicates decided by exhaustive search over homogeneous
//! elements (or over pairs of graded ideals for the strong variant).
//!
//! Every negative verdict carries the first violating witness in the
//! canonical scan order, and [`witness_violates`] re-checks a witness directly
//! against the defining implication.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::elements::ElementSet;
use crate::graded::GradedRing;
use crate::ideal::{GradedIdeal, IdealError};
use crate::lattice::IdealInventory;
use crate::phi::{PhiError, PhiMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the ideal is not proper")]
    NotProper,
    #[error("the ideal inventory belongs to a different ring")]
    ParentMismatch,
    #[error(transparent)]
    Phi(#[from] PhiError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Deliberate defects that can be switched on to check that the theorem
/// harness notices broken predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// φ-r and φ-pr scans accept every homogeneous `x`, not only regular ones.
    DropRegularGuard,
    /// φ-r and φ-pr scans demand `y ∈ φ(P)` instead of `y ∈ P`.
    ConclusionInPhi,
    /// Zd(R) is reported without zero.
    ZeroDivisorsWithoutZero,
    /// r(R) is reported as every nonzero element.
    RegularIncludesZeroDivisors,
    /// The φ-pure scan looks for `x = x²y`.
    PureUsesSquare,
    /// The φ-vNr scan looks for `x = xy`.
    VnrDropsSquare,
}

impl Mutation {
    pub const ALL: [Mutation; 6] = [
        Mutation::DropRegularGuard,
        Mutation::ConclusionInPhi,
        Mutation::ZeroDivisorsWithoutZero,
        Mutation::RegularIncludesZeroDivisors,
        Mutation::PureUsesSquare,
        Mutation::VnrDropsSquare,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Mutation::DropRegularGuard => "drop-regular-guard",
            Mutation::ConclusionInPhi => "conclusion-in-phi",
            Mutation::ZeroDivisorsWithoutZero => "zero-divisors-without-zero",
            Mutation::RegularIncludesZeroDivisors => "regular-includes-zero-divisors",
            Mutation::PureUsesSquare => "pure-uses-square",
            Mutation::VnrDropsSquare => "vnr-drops-square",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Pair { x: usize, y: usize },
    Element { x: usize },
    Ideals { i: ElementSet, j: ElementSet },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair { x, y } => write!(f, "(x={x}, y={y})"),
            Witness::Element { x } => write!(f, "(x={x})"),
            Witness::Ideals { i, j } => write!(f, "(I={i}, J={j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn holds() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    fn fails(witness: Witness) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// The predicates whose witnesses can be replayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    PhiPrime,
    PhiR,
    PhiPr,
    StronglyPhiR,
    PhiPure,
    PhiVnr,
}

/// Every predicate verdict for one ideal under one φ.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub ideal: ElementSet,
    pub phi: String,
    pub graded_prime: Verdict,
    pub weakly_prime: Verdict,
    pub phi_prime: Verdict,
    pub r_ideal: Verdict,
    pub pr_ideal: Verdict,
    pub phi_r: Verdict,
    pub phi_pr: Verdict,
    pub strongly_phi_r: Verdict,
    pub phi_pure: Verdict,
    pub phi_vnr: Verdict,
}

impl Classification {
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 10] {
        [
            ("graded_prime", &self.graded_prime),
            ("weakly_prime", &self.weakly_prime),
            ("phi_prime", &self.phi_prime),
            ("r_ideal", &self.r_ideal),
            ("pr_ideal", &self.pr_ideal),
            ("phi_r", &self.phi_r),
            ("phi_pr", &self.phi_pr),
            ("strongly_phi_r", &self.strongly_phi_r),
            ("phi_pure", &self.phi_pure),
            ("phi_vnr", &self.phi_vnr),
        ]
    }
}

/// Runs the predicates, optionally with one injected [`Mutation`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Classifier {
    mutation: Option<Mutation>,
}

fn require_proper(p: &GradedIdeal) -> Result<(), ClassifyError> {
    if p.is_proper() {
        Ok(())
    } else {
        Err(ClassifyError::NotProper)
    }
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_mutation(mutation: Mutation) -> Self {
        Self {
            mutation: Some(mutation),
        }
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    fn mutated(&self, m: Mutation) -> bool {
        self.mutation == Some(m)
    }

    pub fn regular_elements(&self, ring: &GradedRing) -> ElementSet {
        if self.mutated(Mutation::RegularIncludesZeroDivisors) {
            let mut all = ElementSet::full(ring.order());
            all.remove(ring.zero());
            all
        } else {
            ring.regular_elements().clone()
        }
    }

    pub fn zero_divisors(&self, ring: &GradedRing) -> ElementSet {
        let mut zd = ring.zero_divisors().clone();
        if self.mutated(Mutation::ZeroDivisorsWithoutZero) {
            zd.remove(ring.zero());
        }
        zd
    }

    pub fn graded_prime(&self, p: &GradedIdeal) -> Result<Verdict, ClassifyError> {
        self.graded_phi_prime(p, &PhiMap::Empty)
    }

    /// ab ∈ P − φ(P) with a, b homogeneous forces a ∈ P or b ∈ P.
    pub fn graded_phi_prime(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
        require_proper(p)?;
        let ring = p.ring();
        let excused = phi.excused(p)?;
        let h = ring.homogeneous();
        for a in h.iter().filter(|&a| !p.contains(a)) {
            for b in h.iter().filter(|&b| !p.contains(b)) {
                let ab = ring.mul(a, b);
                if p.contains(ab) && !excused.contains(ab) {
                    return Ok(Verdict::fails(Witness::Pair { x: a, y: b }));
                }
            }
        }
        Ok(Verdict::holds())
    }

    fn r_scan(
        &self,
        p: &GradedIdeal,
        phi: &PhiMap,
        conclusion: impl Fn(usize) -> bool,
    ) -> Result<Verdict, ClassifyError> {
        require_proper(p)?;
        let ring = p.ring();
        let excused = phi.excused(p)?;
        let h = ring.homogeneous();
        let xs = if self.mutated(Mutation::DropRegularGuard) {
            h.clone()
        } else {
            h.intersection(&self.regular_elements(ring))
        };
        let in_phi = self.mutated(Mutation::ConclusionInPhi);
        for x in xs.iter() {
            for y in h.iter() {
                let xy = ring.mul(x, y);
                if !p.contains(xy) || excused.contains(xy) {
                    continue;
                }
                let satisfied = if in_phi { excused.contains(y) } else { conclusion(y) };
                if !satisfied {
                    return Ok(Verdict::fails(Witness::Pair { x, y }));
                }
            }
        }
        Ok(Verdict::holds())
    }

    pub fn graded_r_ideal(&self, p: &GradedIdeal) -> Result<Verdict, ClassifyError> {
        self.graded_phi_r(p, &PhiMap::Empty)
    }

    /// xy ∈ P − φ(P) with x, y homogeneous and Ann(x) = 0 forces y ∈ P.
    pub fn graded_phi_r(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
        self.r_scan(p, phi, |y| p.contains(y))
    }

    pub fn graded_pr_ideal(&self, p: &GradedIdeal) -> Result<Verdict, ClassifyError> {
        self.graded_phi_pr(p, &PhiMap::Empty)
    }

    /// As [`Self::graded_phi_r`] with the conclusion weakened to `y^n ∈ P`
    /// for some `1 <= n <= |R|`.
    pub fn graded_phi_pr(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
        let ring = p.ring();
        self.r_scan(p, phi, |y| ring.first_power_in(y, p.elements()).is_some())
    }

    /// For all graded I, J with IJ ⊆ P, IJ ⊄ φ(P) and Ann(I) = 0: J ⊆ P.
    pub fn graded_strongly_phi_r(
        &self,
        p: &GradedIdeal,
        phi: &PhiMap,
        inventory: &IdealInventory,
    ) -> Result<Verdict, ClassifyError> {
        require_proper(p)?;
        if !crate::ideal::same_ring(p.ring(), inventory.ring()) {
            return Err(ClassifyError::ParentMismatch);
        }
        let ring = p.ring();
        let excused = phi.excused(p)?;
        for i in inventory.ideals() {
            if ring.annihilator_of(i.elements()).len() != 1 {
                continue;
            }
            for j in inventory.ideals() {
                let ij = i.product(j)?;
                if ij.is_subset(p) && !ij.elements().is_subset(&excused) && !j.is_subset(p) {
                    return Ok(Verdict::fails(Witness::Ideals {
                        i: i.elements().clone(),
                        j: j.elements().clone(),
                    }));
                }
            }
        }
        Ok(Verdict::holds())
    }

    fn witness_scan(
        &self,
        p: &GradedIdeal,
        phi: &PhiMap,
        solves: impl Fn(usize, usize) -> bool,
    ) -> Result<Verdict, ClassifyError> {
        require_proper(p)?;
        let excused = phi.excused(p)?;
        let members = p.homogeneous_elements();
        for x in members.iter().filter(|&x| !excused.contains(x)) {
            if !members.iter().any(|y| solves(x, y)) {
                return Ok(Verdict::fails(Witness::Element { x }));
            }
        }
        Ok(Verdict::holds())
    }

    /// Every x ∈ (P ∩ h(R)) − φ(P) has y ∈ P ∩ h(R) with x = xy.
    pub fn graded_phi_pure(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
        let ring = p.ring();
        let square = self.mutated(Mutation::PureUsesSquare);
        self.witness_scan(p, phi, |x, y| {
            let xy = ring.mul(x, y);
            if square {
                ring.mul(x, xy) == x
            } else {
                xy == x
            }
        })
    }

    /// Every x ∈ (P ∩ h(R)) − φ(P) has y ∈ P ∩ h(R) with x = x²y.
    pub fn graded_phi_vnr(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
        let ring = p.ring();
        let drop_square = self.mutated(Mutation::VnrDropsSquare);
        self.witness_scan(p, phi, |x, y| {
            let xy = ring.mul(x, y);
            if drop_square {
                xy == x
            } else {
                ring.mul(x, xy) == x
            }
        })
    }

    /// Compares the φ-pure verdict with the degree-restricted form: every
    /// nonzero x ∈ (P ∩ h(R)) − φ(P) has a solution of x = xy in P_e.
    pub fn pure_characterization_agrees(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<bool, ClassifyError> {
        let direct = self.graded_phi_pure(p, phi)?.holds;
        let ring = p.ring();
        let excused = phi.excused(p)?;
        let p_e = p.component(ring.group().identity());
        let characterized = p
            .homogeneous_elements()
            .iter()
            .filter(|&x| x != ring.zero() && !excused.contains(x))
            .all(|x| p_e.iter().any(|y| ring.mul(x, y) == x));
        Ok(direct == characterized)
    }

    /// Compares the φ-vNr verdict with the degree-restricted form: every
    /// nonzero x ∈ (P ∩ h(R)) − φ(P) has, for some g, a solution of x = x²y
    /// in P_{g⁻¹}.
    pub fn vnr_characterization_agrees(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<bool, ClassifyError> {
        let direct = self.graded_phi_vnr(p, phi)?.holds;
        let ring = p.ring();
        let group = ring.group();
        let excused = phi.excused(p)?;
        let characterized = p
            .homogeneous_elements()
            .iter()
            .filter(|&x| x != ring.zero() && !excused.contains(x))
            .all(|x| {
                let xx = ring.mul(x, x);
                group.elements().any(|g| {
                    p.component(group.inverse(g))
                        .iter()
                        .any(|y| ring.mul(xx, y) == x)
                })
            });
        Ok(direct == characterized)
    }

    pub fn classify(
        &self,
        p: &GradedIdeal,
        phi: &PhiMap,
        inventory: &IdealInventory,
    ) -> Result<Classification, ClassifyError> {
        Ok(Classification {
            ideal: p.elements().clone(),
            phi: phi.to_string(),
            graded_prime: self.graded_prime(p)?,
            weakly_prime: self.graded_phi_prime(p, &PhiMap::Zero)?,
            phi_prime: self.graded_phi_prime(p, phi)?,
            r_ideal: self.graded_r_ideal(p)?,
            pr_ideal: self.graded_pr_ideal(p)?,
            phi_r: self.graded_phi_r(p, phi)?,
            phi_pr: self.graded_phi_pr(p, phi)?,
            strongly_phi_r: self.graded_strongly_phi_r(p, phi, inventory)?,
            phi_pure: self.graded_phi_pure(p, phi)?,
            phi_vnr: self.graded_phi_vnr(p, phi)?,
        })
    }
}

pub fn is_graded_prime(p: &GradedIdeal) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_prime(p)
}

pub fn is_graded_phi_prime(p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_phi_prime(p, phi)
}

pub fn is_graded_r_ideal(p: &GradedIdeal) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_r_ideal(p)
}

pub fn is_graded_phi_r_ideal(p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_phi_r(p, phi)
}

pub fn is_graded_pr_ideal(p: &GradedIdeal) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_pr_ideal(p)
}

pub fn is_graded_phi_pr_ideal(p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_phi_pr(p, phi)
}

pub fn is_graded_strongly_phi_r_ideal(
    p: &GradedIdeal,
    phi: &PhiMap,
    inventory: &IdealInventory,
) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_strongly_phi_r(p, phi, inventory)
}

pub fn is_graded_phi_pure(p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_phi_pure(p, phi)
}

pub fn is_graded_phi_vnr(p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, ClassifyError> {
    Classifier::new().graded_phi_vnr(p, phi)
}

pub fn check_pure_characterization(p: &GradedIdeal, phi: &PhiMap) -> Result<bool, ClassifyError> {
    Classifier::new().pure_characterization_agrees(p, phi)
}

pub fn check_vnr_characterization(p: &GradedIdeal, phi: &PhiMap) -> Result<bool, ClassifyError> {
    Classifier::new().vnr_characterization_agrees(p, phi)
}

pub fn classify(p: &GradedIdeal, phi: &PhiMap, inventory: &IdealInventory) -> Result<Classification, ClassifyError> {
    Classifier::new().classify(p, phi, inventory)
}

/// Re-evaluates `witness` directly against the definition of `predicate`
/// (without any mutation) and reports whether it is a genuine violation.
pub fn witness_violates(
    predicate: Predicate,
    p: &GradedIdeal,
    phi: &PhiMap,
    witness: &Witness,
) -> Result<bool, ClassifyError> {
    let ring = p.ring();
    let excused = phi.excused(p)?;
    let in_p_minus_phi = |z: usize| p.contains(z) && !excused.contains(z);
    Ok(match (predicate, witness) {
        (Predicate::PhiPrime, &Witness::Pair { x, y }) => {
            ring.is_homogeneous(x)
                && ring.is_homogeneous(y)
                && in_p_minus_phi(ring.mul(x, y))
                && !p.contains(x)
                && !p.contains(y)
        }
        (Predicate::PhiR, &Witness::Pair { x, y }) => {
            ring.is_homogeneous(x)
                && ring.is_homogeneous(y)
                && ring.annihilator(x).len() == 1
                && in_p_minus_phi(ring.mul(x, y))
                && !p.contains(y)
        }
        (Predicate::PhiPr, &Witness::Pair { x, y }) => {
            ring.is_homogeneous(x)
                && ring.is_homogeneous(y)
                && ring.annihilator(x).len() == 1
                && in_p_minus_phi(ring.mul(x, y))
                && (1..=ring.order()).all(|n| !p.contains(ring.ring().pow(y, n)))
        }
        (Predicate::StronglyPhiR, Witness::Ideals { i, j }) => {
            let i = GradedIdeal::from_elements(ring, i.clone())?;
            let j = GradedIdeal::from_elements(ring, j.clone())?;
            let ij = i.product(&j)?;
            ij.is_subset(p)
                && !ij.elements().is_subset(&excused)
                && ring.annihilator_of(i.elements()).len() == 1
                && !j.is_subset(p)
        }
        (Predicate::PhiPure, &Witness::Element { x }) => {
            let members = p.homogeneous_elements();
            members.contains(x)
                && !excused.contains(x)
                && !members.iter().any(|y| ring.mul(x, y) == x)
        }
        (Predicate::PhiVnr, &Witness::Element { x }) => {
            let members = p.homogeneous_elements();
            let xx = ring.mul(x, x);
            members.contains(x)
                && !excused.contains(x)
                && !members.iter().any(|y| ring.mul(xx, y) == x)
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_graded_ideals;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn zmod(n: usize) -> Arc<GradedRing> {
        Arc::new(GradedRing::trivially_graded(FiniteRing::zmod(n).unwrap()))
    }

    fn ideal(r: &Arc<GradedRing>, gens: &[usize]) -> GradedIdeal {
        GradedIdeal::generate(r, gens).unwrap()
    }

    #[test]
    fn graded_prime_examples() {
        assert!(is_graded_prime(&ideal(&zmod(4), &[2])).unwrap().holds);
        let v = is_graded_prime(&ideal(&zmod(8), &[4])).unwrap();
        assert_eq!(v.witness, Some(Witness::Pair { x: 2, y: 2 }));
        assert!(is_graded_prime(&GradedIdeal::zero(&zmod(7))).unwrap().holds);
        assert_eq!(
            is_graded_prime(&GradedIdeal::unit(&zmod(7))),
            Err(ClassifyError::NotProper)
        );
    }

    #[test]
    fn phi_prime_examples() {
        let r = zmod(8);
        let p = ideal(&r, &[4]);
        assert!(is_graded_phi_prime(&p, &PhiMap::Identity).unwrap().holds);
        let v = is_graded_phi_prime(&p, &PhiMap::Zero).unwrap();
        assert_eq!(v.witness, Some(Witness::Pair { x: 2, y: 2 }));
        let prime = ideal(&r, &[2]);
        for phi in PhiMap::standard_sweep() {
            assert!(is_graded_phi_prime(&prime, &phi).unwrap().holds);
        }
    }

    #[test]
    fn pure_and_vnr_examples() {
        let z4 = zmod(4);
        assert!(is_graded_phi_pure(&GradedIdeal::zero(&z4), &PhiMap::Empty).unwrap().holds);
        let v = is_graded_phi_pure(&ideal(&z4, &[2]), &PhiMap::Empty).unwrap();
        assert_eq!(v.witness, Some(Witness::Element { x: 2 }));
        let v = is_graded_phi_vnr(&ideal(&z4, &[2]), &PhiMap::Empty).unwrap();
        assert_eq!(v.witness, Some(Witness::Element { x: 2 }));
        assert!(is_graded_phi_vnr(&GradedIdeal::zero(&z4), &PhiMap::Empty).unwrap().holds);

        let z6 = zmod(6);
        let p = ideal(&z6, &[3]);
        assert!(is_graded_phi_pure(&p, &PhiMap::Empty).unwrap().holds);
        assert!(is_graded_phi_vnr(&p, &PhiMap::Empty).unwrap().holds);
    }

    #[test]
    fn strongly_phi_r_identity_is_vacuous() {
        let r = zmod(8);
        let inv = enumerate_graded_ideals(&r).unwrap();
        for p in inv.proper() {
            assert!(is_graded_strongly_phi_r_ideal(p, &PhiMap::Identity, &inv).unwrap().holds);
        }
        let other = enumerate_graded_ideals(&zmod(4)).unwrap();
        assert_eq!(
            is_graded_strongly_phi_r_ideal(inv.get(0), &PhiMap::Zero, &other),
            Err(ClassifyError::ParentMismatch)
        );
    }

    #[test]
    fn mutated_witnesses_are_rejected_by_replay() {
        let r = zmod(4);
        let p = ideal(&r, &[2]);
        let mutated = Classifier::with_mutation(Mutation::DropRegularGuard);
        let v = mutated.graded_r_ideal(&p).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w, Witness::Pair { x: 0, y: 1 });
        assert!(!witness_violates(Predicate::PhiR, &p, &PhiMap::Empty, &w).unwrap());
    }
}
