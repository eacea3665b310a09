//! One hypothesis → conclusion check per registered result, evaluated
//! exhaustively over the graded ideals of a corpus ring.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::classify::{Classifier, Verdict};
use crate::constructions::quotient;
use crate::elements::ElementSet;
use crate::ideal::GradedIdeal;
use crate::lattice::{enumerate_graded_ideals, IdealInventory};
use crate::phi::PhiMap;

use super::corpus::{CorpusEntry, Origin};
use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Prop1_1,
    Prop1_2,
    Prop1_3,
    Prop1_4,
    Thm1_1,
    Thm1_2,
    Thm2,
    Prop2,
    Thm3,
    Thm4,
    Prop3,
    Prop4,
    Prop5,
    Prop6,
    Thm6,
    Thm7,
    Prop7,
    PurePropn,
    VnrPropn,
    Thm8,
    Thm9,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::Prop1_1,
        TheoremId::Prop1_2,
        TheoremId::Prop1_3,
        TheoremId::Prop1_4,
        TheoremId::Thm1_1,
        TheoremId::Thm1_2,
        TheoremId::Thm2,
        TheoremId::Prop2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::Prop3,
        TheoremId::Prop4,
        TheoremId::Prop5,
        TheoremId::Prop6,
        TheoremId::Thm6,
        TheoremId::Thm7,
        TheoremId::Prop7,
        TheoremId::PurePropn,
        TheoremId::VnrPropn,
        TheoremId::Thm8,
        TheoremId::Thm9,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Prop1_1 => "Prop1.1",
            TheoremId::Prop1_2 => "Prop1.2",
            TheoremId::Prop1_3 => "Prop1.3",
            TheoremId::Prop1_4 => "Prop1.4",
            TheoremId::Thm1_1 => "Thm1.1",
            TheoremId::Thm1_2 => "Thm1.2",
            TheoremId::Thm2 => "Thm2",
            TheoremId::Prop2 => "Prop2",
            TheoremId::Thm3 => "Thm3",
            TheoremId::Thm4 => "Thm4",
            TheoremId::Prop3 => "Prop3",
            TheoremId::Prop4 => "Prop4",
            TheoremId::Prop5 => "Prop5",
            TheoremId::Prop6 => "Prop6",
            TheoremId::Thm6 => "Thm6",
            TheoremId::Thm7 => "Thm7",
            TheoremId::Prop7 => "Prop7",
            TheoremId::PurePropn => "PurePropn",
            TheoremId::VnrPropn => "VnrPropn",
            TheoremId::Thm8 => "Thm8",
            TheoremId::Thm9 => "Thm9",
        }
    }

    /// Results whose literal hypothesis asks a set containing 0 to consist of
    /// regular elements, which no nonzero ring allows.
    pub fn expected_vacuous(&self) -> bool {
        matches!(self, TheoremId::Thm1_1 | TheoremId::Thm7)
    }

    /// The weakened hypothesis checked alongside an expected-vacuous result.
    pub fn relaxed_reading(&self) -> Option<&'static str> {
        match self {
            TheoremId::Thm1_1 => Some("nonzero elements of phi(P) are regular"),
            TheoremId::Thm7 => Some("nonzero elements of K are regular"),
            _ => None,
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            TheoremId::Prop1_1 => "phi1 <= phi2 and P phi1-r => P phi2-r",
            TheoremId::Prop1_2 => "r <=> weakly r; weakly r => omega-r => 4-almost r => 3-almost r => almost r",
            TheoremId::Prop1_3 => "omega-r <=> n-almost r for every n >= 2",
            TheoremId::Prop1_4 => "P idempotent => P phi_n-r for every n >= 1",
            TheoremId::Thm1_1 => "P phi-r and phi(P) in r(R) => P/phi(P) r-ideal of R/phi(P)",
            TheoremId::Thm1_2 => "P/phi(P) r-ideal and phi(P) r-ideal => P phi-r",
            TheoremId::Thm2 => "phi-r <=> (P:a) = P u (phi(P):a) <=> (P:a) in {P, (phi(P):a)} for a in h(R) n r(R)",
            TheoremId::Prop2 => "P phi-r => (P n h(R)) - phi(P) in Zd(R)",
            TheoremId::Thm3 => "phi(P) r-ideal => (P phi-r <=> P r-ideal)",
            TheoremId::Thm4 => "Grad(phi(P)) = phi(Grad(P)) and P phi-r => Grad(P) phi-r",
            TheoremId::Prop3 => "phi(P) r-ideal and P phi-r => P n h(R) in Zd(R)",
            TheoremId::Prop4 => "P prime and phi(P) r-ideal => (P phi-r <=> P n h(R) in Zd(R))",
            TheoremId::Prop5 => "a in h(R) - P, (phi(P):a) in phi((P:a)), P phi-r => (P:a) phi-r",
            TheoremId::Prop6 => "strongly phi-r => phi-r",
            TheoremId::Thm6 => "P phi-r, phi(P) r-ideal, IJ in P, IJ not in phi(P), Ann(I) = 0 = Ann(c), c in I n h(R) => J in P",
            TheoremId::Thm7 => "K in r(R), K in I, I phi-r => I/K phi_K-r in R/K",
            TheoremId::Prop7 => "K r-ideal, K in I, I/K r-ideal of R/K => I phi-r",
            TheoremId::PurePropn => "phi-pure <=> every nonzero x in (P n h(R)) - phi(P) has x = xy with y in P_e",
            TheoremId::VnrPropn => "phi-vNr <=> every nonzero x in (P n h(R)) - phi(P) has x = x^2 y with y in P_(g^-1)",
            TheoremId::Thm8 => "Zd(R) = Zd(M) and P(+)M phi2-r => P phi1-r",
            TheoremId::Thm9 => "S in r(R), S n P empty, P phi-r, S^-1 phi(P) in phi_S(S^-1 P) => S^-1 P phi_S-r, and S^-1 P n R in Zd(R) when S^-1 P != S^-1 phi(P)",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| HarnessError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Vacuous,
    Holds,
    Violated(String),
}

/// One evaluated instance. `key` locates it again on the same ring for
/// replay; its meaning depends on the theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceResult {
    pub key: [usize; 4],
    pub relaxed: bool,
    pub outcome: Outcome,
}

pub(crate) struct Ctx<'a> {
    pub entry: &'a CorpusEntry,
    pub inv: &'a IdealInventory,
    pub cls: &'a Classifier,
}

struct Out(Vec<InstanceResult>);

impl Out {
    fn push(&mut self, key: [usize; 4], hyp: bool, failure: Option<String>) {
        self.push_with(key, false, hyp, failure);
    }

    fn push_with(&mut self, key: [usize; 4], relaxed: bool, hyp: bool, failure: Option<String>) {
        let outcome = match (hyp, failure) {
            (false, _) => Outcome::Vacuous,
            (true, None) => Outcome::Holds,
            (true, Some(d)) => Outcome::Violated(d),
        };
        self.0.push(InstanceResult { key, relaxed, outcome });
    }
}

fn witness_text(v: &Verdict) -> String {
    v.witness.as_ref().map_or_else(|| "none".to_string(), |w| w.to_string())
}

/// (I : a) as a set, with (∅ : a) = ∅.
fn colon_set(i: &Option<GradedIdeal>, a: usize, universe: usize) -> Result<ElementSet, HarnessError> {
    Ok(match i {
        Some(i) => i.colon(a)?.elements().clone(),
        None => ElementSet::empty(universe),
    })
}

impl Ctx<'_> {
    fn sweep(&self) -> Vec<PhiMap> {
        PhiMap::standard_sweep()
    }

    fn phi_r(&self, p: &GradedIdeal, phi: &PhiMap) -> Result<Verdict, HarnessError> {
        Ok(self.cls.graded_phi_r(p, phi)?)
    }

    fn r_ideal(&self, p: &GradedIdeal) -> Result<bool, HarnessError> {
        Ok(p.is_proper() && self.cls.graded_r_ideal(p)?.holds)
    }

    /// φ(P) is a (nonempty) graded r-ideal.
    fn phi_is_r_ideal(&self, value: &Option<GradedIdeal>) -> Result<bool, HarnessError> {
        match value {
            Some(v) => self.r_ideal(v),
            None => Ok(false),
        }
    }

    fn zero_divisors(&self) -> ElementSet {
        self.cls.zero_divisors(&self.entry.ring)
    }

    fn regular(&self) -> ElementSet {
        self.cls.regular_elements(&self.entry.ring)
    }

    fn label(&self, p: &GradedIdeal, phi: &PhiMap) -> String {
        format!("P={} phi={}", p.elements(), phi)
    }

    pub fn run(&self, id: TheoremId) -> Result<Vec<InstanceResult>, HarnessError> {
        let mut out = Out(Vec::new());
        match id {
            TheoremId::Prop1_1 => self.prop1_1(&mut out)?,
            TheoremId::Prop1_2 => self.prop1_2(&mut out)?,
            TheoremId::Prop1_3 => self.prop1_3(&mut out)?,
            TheoremId::Prop1_4 => self.prop1_4(&mut out)?,
            TheoremId::Thm1_1 => self.thm1_1(&mut out)?,
            TheoremId::Thm1_2 => self.thm1_2(&mut out)?,
            TheoremId::Thm2 => self.thm2(&mut out)?,
            TheoremId::Prop2 => self.prop2(&mut out)?,
            TheoremId::Thm3 => self.thm3(&mut out)?,
            TheoremId::Thm4 => self.thm4(&mut out)?,
            TheoremId::Prop3 => self.prop3(&mut out)?,
            TheoremId::Prop4 => self.prop4(&mut out)?,
            TheoremId::Prop5 => self.prop5(&mut out)?,
            TheoremId::Prop6 => self.prop6(&mut out)?,
            TheoremId::Thm6 => self.thm6(&mut out)?,
            TheoremId::Thm7 => self.thm7(&mut out)?,
            TheoremId::Prop7 => self.prop7(&mut out)?,
            TheoremId::PurePropn => self.pure(&mut out)?,
            TheoremId::VnrPropn => self.vnr(&mut out)?,
            TheoremId::Thm8 => self.thm8(&mut out)?,
            TheoremId::Thm9 => self.thm9(&mut out)?,
        }
        Ok(out.0)
    }

    fn prop1_1(&self, out: &mut Out) -> Result<(), HarnessError> {
        let chain = PhiMap::ordered_chain();
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            let verdicts = chain
                .iter()
                .map(|phi| self.phi_r(p, phi))
                .collect::<Result<Vec<_>, _>>()?;
            for i in 0..chain.len() {
                for j in i + 1..chain.len() {
                    let failure = (!verdicts[j].holds).then(|| {
                        format!(
                            "P={} is {}-r but not {}-r (witness {})",
                            p.elements(),
                            chain[i],
                            chain[j],
                            witness_text(&verdicts[j])
                        )
                    });
                    out.push([pi, i, j, 0], verdicts[i].holds, failure);
                }
            }
        }
        Ok(())
    }

    fn prop1_2(&self, out: &mut Out) -> Result<(), HarnessError> {
        let chain = [
            PhiMap::Zero,
            PhiMap::Omega,
            PhiMap::Power(4),
            PhiMap::Power(3),
            PhiMap::Power(2),
        ];
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            let r = self.phi_r(p, &PhiMap::Empty)?;
            let verdicts = chain
                .iter()
                .map(|phi| self.phi_r(p, phi))
                .collect::<Result<Vec<_>, _>>()?;
            let failure = (r.holds != verdicts[0].holds).then(|| {
                format!(
                    "P={}: r-ideal verdict {} but weakly r verdict {}",
                    p.elements(),
                    r.holds,
                    verdicts[0].holds
                )
            });
            out.push([pi, 0, 0, 0], true, failure);
            for i in 0..chain.len() - 1 {
                let failure = (!verdicts[i + 1].holds).then(|| {
                    format!(
                        "P={} is {}-r but not {}-r (witness {})",
                        p.elements(),
                        chain[i],
                        chain[i + 1],
                        witness_text(&verdicts[i + 1])
                    )
                });
                out.push([pi, 1, i, 0], verdicts[i].holds, failure);
            }
        }
        Ok(())
    }

    fn prop1_3(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            let omega = self.phi_r(p, &PhiMap::Omega)?.holds;
            let top = (p.stabilization_index() + 1).max(3) as u32;
            let mut all = true;
            for n in 2..=top {
                all &= self.phi_r(p, &PhiMap::Power(n))?.holds;
            }
            let failure = (omega != all).then(|| {
                format!(
                    "P={}: omega-r verdict {omega} but n-almost r for all 2 <= n <= {top} is {all}",
                    p.elements()
                )
            });
            out.push([pi, 0, 0, 0], true, failure);
        }
        Ok(())
    }

    fn prop1_4(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            let idempotent = p.power(2) == *p;
            for n in 1..=4u32 {
                let phi = if n == 1 { PhiMap::Identity } else { PhiMap::Power(n) };
                let (hyp, failure) = if idempotent {
                    let v = self.phi_r(p, &phi)?;
                    let failure = (!v.holds).then(|| {
                        format!(
                            "idempotent P={} is not {}-r (witness {})",
                            p.elements(),
                            phi,
                            witness_text(&v)
                        )
                    });
                    (true, failure)
                } else {
                    (false, None)
                };
                out.push([pi, n as usize, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn thm1_1(&self, out: &mut Out) -> Result<(), HarnessError> {
        let regular = self.regular();
        let zero = self.entry.ring.zero();
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let value = phi.apply(p)?;
                let Some(v) = value.as_ref() else {
                    out.push_with([pi, fi, 0, 0], false, false, None);
                    out.push_with([pi, fi, 0, 0], true, false, None);
                    continue;
                };
                let is_phi_r = self.phi_r(p, phi)?.holds;
                let literal = is_phi_r && v.elements().is_subset(&regular);
                let mut nonzero = v.elements().clone();
                nonzero.remove(zero);
                let relaxed = is_phi_r && nonzero.is_subset(&regular);
                let failure = if literal || relaxed {
                    let q = quotient(v)?;
                    let image = q.image(p)?;
                    let verdict = self.cls.graded_r_ideal(&image)?;
                    (!verdict.holds).then(|| {
                        format!(
                            "{}: P/phi(P) is not an r-ideal of R/phi(P) (witness {} in the quotient)",
                            self.label(p, phi),
                            witness_text(&verdict)
                        )
                    })
                } else {
                    None
                };
                out.push_with([pi, fi, 0, 0], false, literal, failure.clone());
                out.push_with([pi, fi, 0, 0], true, relaxed, failure);
            }
        }
        Ok(())
    }

    fn thm1_2(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let value = phi.apply(p)?;
                let mut hyp = false;
                if let Some(v) = value.as_ref() {
                    if self.r_ideal(v)? {
                        let q = quotient(v)?;
                        hyp = self.r_ideal(&q.image(p)?)?;
                    }
                }
                let failure = if hyp {
                    let verdict = self.phi_r(p, phi)?;
                    (!verdict.holds)
                        .then(|| format!("{} is not phi-r (witness {})", self.label(p, phi), witness_text(&verdict)))
                } else {
                    None
                };
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn thm2(&self, out: &mut Out) -> Result<(), HarnessError> {
        let ring = &self.entry.ring;
        let candidates = ring.homogeneous().intersection(&self.regular());
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let value = phi.apply(p)?;
                let first = self.phi_r(p, phi)?.holds;
                let mut second = true;
                let mut third = true;
                let mut breaking = None;
                for a in candidates.iter() {
                    let colon_p = p.colon(a)?;
                    let colon_phi = colon_set(&value, a, ring.order())?;
                    let union = p.elements().union(&colon_phi);
                    let ok2 = *colon_p.elements() == union;
                    let ok3 = colon_p == *p || *colon_p.elements() == colon_phi;
                    if (!ok2 || !ok3) && breaking.is_none() {
                        breaking = Some(a);
                    }
                    second &= ok2;
                    third &= ok3;
                }
                let failure = !(first == second && second == third);
                let failure = failure.then(|| {
                    format!(
                        "{}: (1) {first}, (2) {second}, (3) {third}; first failing a = {}",
                        self.label(p, phi),
                        breaking.map_or_else(|| "none".to_string(), |a| a.to_string())
                    )
                });
                out.push([pi, fi, 0, 0], true, failure);
            }
        }
        Ok(())
    }

    fn prop2(&self, out: &mut Out) -> Result<(), HarnessError> {
        let zd = self.zero_divisors();
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let hyp = self.phi_r(p, phi)?.holds;
                let excused = phi.excused(p)?;
                let outside = p.homogeneous_elements().difference(&excused).difference(&zd);
                let failure = (hyp && !outside.is_empty()).then(|| {
                    format!(
                        "{}: {} lies in (P n h(R)) - phi(P) but not in Zd(R)",
                        self.label(p, phi),
                        outside.first().expect("nonempty")
                    )
                });
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn thm3(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let hyp = self.phi_is_r_ideal(&phi.apply(p)?)?;
                let failure = if hyp {
                    let phi_r = self.phi_r(p, phi)?.holds;
                    let r = self.r_ideal(p)?;
                    (phi_r != r)
                        .then(|| format!("{}: phi-r verdict {phi_r} but r-ideal verdict {r}", self.label(p, phi)))
                } else {
                    None
                };
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn thm4(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            let grad = p.graded_radical()?;
            for (fi, phi) in self.sweep().iter().enumerate() {
                let value = phi.apply(p)?;
                let grad_of_phi = match value.as_ref() {
                    Some(v) => Some(v.graded_radical()?.elements().clone()),
                    None => None,
                };
                let phi_of_grad = phi.apply(&grad)?.map(|v| v.elements().clone());
                let hyp = grad_of_phi == phi_of_grad && self.phi_r(p, phi)?.holds;
                let failure = if hyp {
                    let v = self.phi_r(&grad, phi)?;
                    (!v.holds).then(|| {
                        format!(
                            "{}: Grad(P)={} is not phi-r (witness {})",
                            self.label(p, phi),
                            grad.elements(),
                            witness_text(&v)
                        )
                    })
                } else {
                    None
                };
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn prop3(&self, out: &mut Out) -> Result<(), HarnessError> {
        let zd = self.zero_divisors();
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let hyp = self.phi_is_r_ideal(&phi.apply(p)?)? && self.phi_r(p, phi)?.holds;
                let outside = p.homogeneous_elements().difference(&zd);
                let failure = (hyp && !outside.is_empty()).then(|| {
                    format!(
                        "{}: {} lies in P n h(R) but not in Zd(R)",
                        self.label(p, phi),
                        outside.first().expect("nonempty")
                    )
                });
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn prop4(&self, out: &mut Out) -> Result<(), HarnessError> {
        let zd = self.zero_divisors();
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            let prime = self.cls.graded_prime(p)?.holds;
            for (fi, phi) in self.sweep().iter().enumerate() {
                let hyp = prime && self.phi_is_r_ideal(&phi.apply(p)?)?;
                let failure = if hyp {
                    let phi_r = self.phi_r(p, phi)?.holds;
                    let inside = p.homogeneous_elements().is_subset(&zd);
                    (phi_r != inside).then(|| {
                        format!(
                            "{}: phi-r verdict {phi_r} but P n h(R) in Zd(R) is {inside}",
                            self.label(p, phi)
                        )
                    })
                } else {
                    None
                };
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn prop5(&self, out: &mut Out) -> Result<(), HarnessError> {
        let ring = &self.entry.ring;
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            let outside = ring.homogeneous().difference(p.elements());
            for (fi, phi) in self.sweep().iter().enumerate() {
                let value = phi.apply(p)?;
                let p_is_phi_r = self.phi_r(p, phi)?.holds;
                for a in outside.iter() {
                    let pa = p.colon(a)?;
                    let lhs = colon_set(&value, a, ring.order())?;
                    let contained = match (value.is_some(), phi.apply(&pa)?) {
                        (false, _) => true,
                        (true, None) => false,
                        (true, Some(rhs)) => lhs.is_subset(rhs.elements()),
                    };
                    let hyp = p_is_phi_r && contained;
                    let failure = if hyp {
                        let v = self.phi_r(&pa, phi)?;
                        (!v.holds).then(|| {
                            format!(
                                "{}, a={a}: (P:a)={} is not phi-r (witness {})",
                                self.label(p, phi),
                                pa.elements(),
                                witness_text(&v)
                            )
                        })
                    } else {
                        None
                    };
                    out.push([pi, fi, a, 0], hyp, failure);
                }
            }
        }
        Ok(())
    }

    fn prop6(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let hyp = self.cls.graded_strongly_phi_r(p, phi, self.inv)?.holds;
                let failure = if hyp {
                    let v = self.phi_r(p, phi)?;
                    (!v.holds).then(|| {
                        format!(
                            "{} is strongly phi-r but not phi-r (witness {})",
                            self.label(p, phi),
                            witness_text(&v)
                        )
                    })
                } else {
                    None
                };
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn thm6(&self, out: &mut Out) -> Result<(), HarnessError> {
        let ring = &self.entry.ring;
        // I with Ann(I) = 0 and Ann(c) = Ann(I) for some homogeneous c in I
        let admissible: Vec<usize> = (0..self.inv.len())
            .filter(|&ii| {
                let i = self.inv.get(ii);
                let ann = ring.annihilator_of(i.elements());
                ann.len() == 1
                    && i.homogeneous_elements().iter().any(|c| ring.annihilator(c) == ann)
            })
            .collect();
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let value = phi.apply(p)?;
                let base = self.phi_r(p, phi)?.holds && self.phi_is_r_ideal(&value)?;
                let excused = phi.excused(p)?;
                for &ii in &admissible {
                    let i = self.inv.get(ii);
                    for ji in 0..self.inv.len() {
                        let j = self.inv.get(ji);
                        let hyp = base && {
                            let ij = i.product(j)?;
                            ij.is_subset(p) && !ij.elements().is_subset(&excused)
                        };
                        let failure = (hyp && !j.is_subset(p)).then(|| {
                            format!(
                                "{}, I={}, J={}: J is not contained in P",
                                self.label(p, phi),
                                i.elements(),
                                j.elements()
                            )
                        });
                        out.push([pi, fi, ii, ji], hyp, failure);
                    }
                }
            }
        }
        Ok(())
    }

    fn thm7(&self, out: &mut Out) -> Result<(), HarnessError> {
        let ring = &self.entry.ring;
        let regular = self.regular();
        for ki in self.inv.proper_indices() {
            let k = self.inv.get(ki);
            let literal_k = k.elements().is_subset(&regular);
            let mut nonzero = k.elements().clone();
            nonzero.remove(ring.zero());
            let relaxed_k = nonzero.is_subset(&regular);
            let quotient_data = if literal_k || relaxed_k {
                let q = quotient(k)?;
                let target_inv = enumerate_graded_ideals(q.target())?;
                Some((q, target_inv))
            } else {
                None
            };
            for ii in self.inv.proper_indices() {
                let i = self.inv.get(ii);
                if !k.is_subset(i) {
                    continue;
                }
                for (fi, phi) in self.sweep().iter().enumerate() {
                    let key = [ki, ii, fi, 0];
                    let Some((q, target_inv)) = quotient_data.as_ref() else {
                        out.push_with(key, false, false, None);
                        out.push_with(key, true, false, None);
                        continue;
                    };
                    let i_phi_r = self.phi_r(i, phi)?.holds;
                    let failure = if i_phi_r {
                        let induced = q.induced_phi(phi, target_inv)?;
                        let image = q.image(i)?;
                        let v = self.cls.graded_phi_r(&image, &induced)?;
                        (!v.holds).then(|| {
                            format!(
                                "K={}, I={}, phi={}: I/K is not phi_K-r in R/K (witness {})",
                                k.elements(),
                                i.elements(),
                                phi,
                                witness_text(&v)
                            )
                        })
                    } else {
                        None
                    };
                    out.push_with(key, false, literal_k && i_phi_r, failure.clone());
                    out.push_with(key, true, relaxed_k && i_phi_r, failure);
                }
            }
        }
        Ok(())
    }

    fn prop7(&self, out: &mut Out) -> Result<(), HarnessError> {
        for ki in self.inv.proper_indices() {
            let k = self.inv.get(ki);
            let k_is_r = self.r_ideal(k)?;
            let q = if k_is_r { Some(quotient(k)?) } else { None };
            for ii in self.inv.proper_indices() {
                let i = self.inv.get(ii);
                if !k.is_subset(i) {
                    continue;
                }
                let hyp = match q.as_ref() {
                    Some(q) => self.r_ideal(&q.image(i)?)?,
                    None => false,
                };
                for (fi, phi) in self.sweep().iter().enumerate() {
                    let failure = if hyp {
                        let v = self.phi_r(i, phi)?;
                        (!v.holds).then(|| {
                            format!(
                                "K={}, I={}: I is not {}-r (witness {})",
                                k.elements(),
                                i.elements(),
                                phi,
                                witness_text(&v)
                            )
                        })
                    } else {
                        None
                    };
                    out.push([ki, ii, fi, 0], hyp, failure);
                }
            }
        }
        Ok(())
    }

    fn pure(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let agrees = self.cls.pure_characterization_agrees(p, phi)?;
                let failure = (!agrees).then(|| {
                    format!(
                        "{}: phi-pure verdict {} disagrees with the P_e characterization",
                        self.label(p, phi),
                        self.cls.graded_phi_pure(p, phi).map(|v| v.holds).unwrap_or(false)
                    )
                });
                out.push([pi, fi, 0, 0], true, failure);
            }
        }
        Ok(())
    }

    fn vnr(&self, out: &mut Out) -> Result<(), HarnessError> {
        for pi in self.inv.proper_indices() {
            let p = self.inv.get(pi);
            for (fi, phi) in self.sweep().iter().enumerate() {
                let agrees = self.cls.vnr_characterization_agrees(p, phi)?;
                let failure = (!agrees).then(|| {
                    format!(
                        "{}: phi-vNr verdict {} disagrees with the P_(g^-1) characterization",
                        self.label(p, phi),
                        self.cls.graded_phi_vnr(p, phi).map(|v| v.holds).unwrap_or(false)
                    )
                });
                out.push([pi, fi, 0, 0], true, failure);
            }
        }
        Ok(())
    }

    fn thm8(&self, out: &mut Out) -> Result<(), HarnessError> {
        let Origin::Idealization(x) = &self.entry.origin else {
            return Ok(());
        };
        let base_inv = enumerate_graded_ideals(x.base())?;
        let agree = x.zero_divisors_agree();
        for (fi, phi1) in self.sweep().iter().enumerate() {
            let phi2 = x.lift_phi(phi1, &base_inv)?;
            for pi in base_inv.proper_indices() {
                let p = base_inv.get(pi);
                let lifted = x.ideal_plus_module(p)?;
                let hyp = agree && self.phi_r(&lifted, &phi2)?.holds;
                let failure = if hyp {
                    let v = self.phi_r(p, phi1)?;
                    (!v.holds).then(|| {
                        format!(
                            "P={}, phi1={}: P(+)M is phi2-r but P is not phi1-r (witness {})",
                            p.elements(),
                            phi1,
                            witness_text(&v)
                        )
                    })
                } else {
                    None
                };
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }

    fn thm9(&self, out: &mut Out) -> Result<(), HarnessError> {
        let Origin::Localization { map, .. } = &self.entry.origin else {
            return Ok(());
        };
        let source = map.source();
        let s = map.mult_set();
        let source_inv = enumerate_graded_ideals(source)?;
        let units = s.is_subset(&self.cls.regular_elements(source));
        let zd = self.cls.zero_divisors(source);
        for (fi, phi) in self.sweep().iter().enumerate() {
            let phi_s = map.induced_phi(phi, self.inv)?;
            for pi in source_inv.proper_indices() {
                let p = source_inv.get(pi);
                let mut hyp = units && s.is_disjoint(p.elements()) && self.phi_r(p, phi)?.holds;
                let extended = map.extend(p)?;
                let extended_phi = match phi.apply(p)? {
                    Some(v) => Some(map.extend(&v)?),
                    None => None,
                };
                if hyp {
                    hyp = match (&extended_phi, phi_s.apply(&extended)?) {
                        (None, _) => true,
                        (Some(_), None) => false,
                        (Some(a), Some(b)) => a.is_subset(&b),
                    };
                }
                let failure = if hyp {
                    let label = format!("P={}, phi={}", p.elements(), phi);
                    if !extended.is_proper() {
                        Some(format!("{label}: S^-1 P is the unit ideal"))
                    } else {
                        let v = self.cls.graded_phi_r(&extended, &phi_s)?;
                        if !v.holds {
                            Some(format!(
                                "{label}: S^-1 P={} is not phi_S-r (witness {})",
                                extended.elements(),
                                witness_text(&v)
                            ))
                        } else if extended_phi.as_ref() != Some(&extended) {
                            let contracted = map.contract(&extended)?;
                            let outside = contracted.elements().difference(&zd);
                            outside.first().map(|x| {
                                format!(
                                    "{label}: {x} lies in S^-1 P n R={} but not in Zd(R)",
                                    contracted.elements()
                                )
                            })
                        } else {
                            None
                        }
                    }
                } else {
                    None
                };
                out.push([pi, fi, 0, 0], hyp, failure);
            }
        }
        Ok(())
    }
}

/// Whether (P : a) = P ∪ (φ(P) : a) holds element by element.
pub fn colon_identity_holds(p: &GradedIdeal, phi: &PhiMap, a: usize) -> Result<bool, HarnessError> {
    let value = phi.apply(p)?;
    let lhs = p.colon(a)?;
    let rhs = p.elements().union(&colon_set(&value, a, p.ring().order())?);
    Ok(*lhs.elements() == rhs)
}
