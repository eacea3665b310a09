use std::fmt::Write as _;

use serde::Serialize;

use super::theorems::TheoremId;

/// A concrete counterexample: the ring, the instance key that locates it,
/// and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub theorem: TheoremId,
    pub ring_index: usize,
    pub ring: String,
    pub key: [usize; 4],
    pub relaxed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Vacuous,
    Violated,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Vacuous => "vacuous",
            Status::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RelaxedReport {
    pub reading: String,
    pub instances_checked: usize,
    pub hypothesis_satisfied: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub statement: String,
    pub status: Status,
    pub instances_checked: usize,
    pub hypothesis_satisfied: usize,
    pub violations: Vec<Violation>,
    pub expected_vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vacuity_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relaxed: Option<RelaxedReport>,
}

impl TheoremReport {
    pub(crate) fn status_of(hypothesis_satisfied: usize, violations: &[Violation]) -> Status {
        if !violations.is_empty() {
            Status::Violated
        } else if hypothesis_satisfied == 0 {
            Status::Vacuous
        } else {
            Status::Verified
        }
    }

    /// Vacuity is acceptable only where it was predicted.
    pub fn coverage_ok(&self) -> bool {
        self.status != Status::Vacuous || self.expected_vacuous
    }

    pub fn all_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .chain(self.relaxed.iter().flat_map(|r| r.violations.iter()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub corpus_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutation: Option<&'static str>,
    pub reports: Vec<TheoremReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.all_violations().next().is_none())
    }

    pub fn violation_count(&self) -> usize {
        self.reports.iter().map(|r| r.all_violations().count()).sum()
    }

    pub fn get(&self, id: TheoremId) -> Option<&TheoremReport> {
        self.reports.iter().find(|r| r.theorem == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text table, listing at most `max_violations` per theorem.
    pub fn render_text(&self, max_violations: usize) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "corpus: {} rings", self.corpus_size);
        if let Some(m) = self.mutation {
            let _ = writeln!(s, "mutation: {m}");
        }
        for r in &self.reports {
            let _ = writeln!(
                s,
                "{:<10} {:<9} instances={:<8} satisfied={:<8} violations={}",
                r.theorem.as_str(),
                r.status.as_str(),
                r.instances_checked,
                r.hypothesis_satisfied,
                r.violations.len()
            );
            if let Some(note) = &r.vacuity_note {
                let _ = writeln!(s, "    note: {note}");
            }
            if let Some(rel) = &r.relaxed {
                let _ = writeln!(
                    s,
                    "    relaxed ({}): instances={} satisfied={} violations={}",
                    rel.reading,
                    rel.instances_checked,
                    rel.hypothesis_satisfied,
                    rel.violations.len()
                );
            }
            for v in r.all_violations().take(max_violations) {
                let _ = writeln!(s, "    [{}] {}", v.ring, v.detail);
            }
        }
        let _ = writeln!(
            s,
            "{}",
            if self.passed() {
                "result: no violations".to_string()
            } else {
                format!("result: {} violations", self.violation_count())
            }
        );
        s
    }
}
