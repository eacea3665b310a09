//! Exhaustive verification of the registered results over a corpus of small
//! graded rings.

mod corpus;
mod report;
mod theorems;

use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{ClassifyError, Classifier};
use crate::constructions::ConstructionError;
use crate::ideal::IdealError;
use crate::lattice::{enumerate_graded_ideals, IdealInventory};
use crate::phi::PhiError;

pub use corpus::{
    build_corpus, Corpus, CorpusEntry, CorpusError, CorpusSpec, Families, GroupChoice, Origin,
};
pub use report::{RelaxedReport, Status, SuiteReport, TheoremReport, Violation};
pub use theorems::{colon_identity_holds, InstanceResult, Outcome, TheoremId};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("ring index {0} is outside the corpus")]
    RingIndex(usize),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Phi(#[from] PhiError),
}

/// A corpus with its graded ideal inventories and the classifier every
/// check consults.
pub struct Harness {
    corpus: Corpus,
    inventories: Vec<IdealInventory>,
    classifier: Classifier,
}

impl Harness {
    pub fn new(corpus: Corpus) -> Result<Self, HarnessError> {
        Self::with_classifier(corpus, Classifier::new())
    }

    pub fn with_classifier(corpus: Corpus, classifier: Classifier) -> Result<Self, HarnessError> {
        let inventories = corpus
            .entries()
            .par_iter()
            .map(|e| enumerate_graded_ideals(&e.ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Harness {
            corpus,
            inventories,
            classifier,
        })
    }

    pub fn corpus(&self) -> &Corpus {
        &self.corpus
    }

    pub fn inventory(&self, ring_index: usize) -> Option<&IdealInventory> {
        self.inventories.get(ring_index)
    }

    pub fn classifier(&self) -> &Classifier {
        &self.classifier
    }

    /// Every instance of one theorem on one corpus ring.
    pub fn instances(&self, id: TheoremId, ring_index: usize) -> Result<Vec<InstanceResult>, HarnessError> {
        let entry = self
            .corpus
            .entries()
            .get(ring_index)
            .ok_or(HarnessError::RingIndex(ring_index))?;
        let ctx = theorems::Ctx {
            entry,
            inv: &self.inventories[ring_index],
            cls: &self.classifier,
        };
        ctx.run(id)
    }

    pub fn run(&self, id: TheoremId) -> Result<TheoremReport, HarnessError> {
        let per_ring = (0..self.corpus.len())
            .into_par_iter()
            .map(|i| self.instances(id, i))
            .collect::<Result<Vec<_>, _>>()?;

        let mut literal = Tally::default();
        let mut relaxed = Tally::default();
        for (ring_index, results) in per_ring.into_iter().enumerate() {
            let name = &self.corpus.entries()[ring_index].name;
            for r in results {
                let tally = if r.relaxed { &mut relaxed } else { &mut literal };
                tally.checked += 1;
                match r.outcome {
                    Outcome::Vacuous => {}
                    Outcome::Holds => tally.satisfied += 1,
                    Outcome::Violated(detail) => {
                        tally.satisfied += 1;
                        tally.violations.push(Violation {
                            theorem: id,
                            ring_index,
                            ring: name.clone(),
                            key: r.key,
                            relaxed: r.relaxed,
                            detail,
                        });
                    }
                }
            }
        }

        let status = TheoremReport::status_of(literal.satisfied, &literal.violations);
        let vacuity_note = (status == Status::Vacuous).then(|| vacuity_note(id));
        let relaxed = id.relaxed_reading().map(|reading| RelaxedReport {
            reading: reading.to_string(),
            instances_checked: relaxed.checked,
            hypothesis_satisfied: relaxed.satisfied,
            violations: relaxed.violations,
        });
        Ok(TheoremReport {
            theorem: id,
            statement: id.statement().to_string(),
            status,
            instances_checked: literal.checked,
            hypothesis_satisfied: literal.satisfied,
            violations: literal.violations,
            expected_vacuous: id.expected_vacuous(),
            vacuity_note,
            relaxed,
        })
    }

    pub fn run_selected(&self, ids: &[TheoremId]) -> Result<SuiteReport, HarnessError> {
        let reports = ids.iter().map(|&id| self.run(id)).collect::<Result<Vec<_>, _>>()?;
        Ok(SuiteReport {
            corpus_size: self.corpus.len(),
            mutation: self.classifier.mutation().map(|m| m.name()),
            reports,
        })
    }

    pub fn run_all(&self) -> Result<SuiteReport, HarnessError> {
        self.run_selected(&TheoremId::ALL)
    }

    /// Re-evaluates the recorded instance and reports whether it fails again
    /// with the same detail.
    pub fn replay(&self, violation: &Violation) -> Result<bool, HarnessError> {
        let results = self.instances(violation.theorem, violation.ring_index)?;
        Ok(results.iter().any(|r| {
            r.key == violation.key
                && r.relaxed == violation.relaxed
                && r.outcome == Outcome::Violated(violation.detail.clone())
        }))
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    satisfied: usize,
    violations: Vec<Violation>,
}

fn vacuity_note(id: TheoremId) -> String {
    match id {
        TheoremId::Thm1_1 => {
            "phi(P) always contains 0, which is never regular in a nonzero ring, so phi(P) in r(R) cannot hold"
                .to_string()
        }
        TheoremId::Thm7 => {
            "K always contains 0, which is never regular in a nonzero ring, so K in r(R) cannot hold".to_string()
        }
        _ => "no corpus instance satisfies the hypotheses".to_string(),
    }
}
