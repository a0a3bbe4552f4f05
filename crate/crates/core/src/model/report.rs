use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

/// Witnesses kept per law; further failures are only counted.
pub const WITNESS_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: String,
    /// Named inputs, rendered in the term grammar.
    pub witness: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one law suite. Passes iff no failure was recorded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LawReport {
    pub suite: String,
    pub model: String,
    pub cases: usize,
    /// Number of failures per law, including those beyond the witness limit.
    pub failure_counts: BTreeMap<String, usize>,
    pub failures: Vec<LawFailure>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Records,
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    suite: &'a str,
    model: &'a str,
    cases: usize,
    status: &'a str,
    failures: usize,
}

#[derive(Serialize)]
struct FailureRecord<'a> {
    suite: &'a str,
    model: &'a str,
    law: &'a str,
    status: &'a str,
    witness: BTreeMap<&'a str, &'a str>,
    lhs: &'a str,
    rhs: &'a str,
}

impl LawReport {
    pub fn new(suite: impl Into<String>, model: impl Into<String>) -> Self {
        LawReport {
            suite: suite.into(),
            model: model.into(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_failures(&self) -> usize {
        self.failure_counts.values().sum()
    }

    pub fn record(&mut self, law: &str, witness: Vec<(String, String)>, lhs: String, rhs: String) {
        let count = self.failure_counts.entry(law.to_string()).or_insert(0);
        *count += 1;
        if *count <= WITNESS_LIMIT {
            self.failures.push(LawFailure {
                law: law.to_string(),
                witness,
                lhs,
                rhs,
            });
        }
    }

    /// Whether `law` failed at least once.
    pub fn failed_law(&self, law: &str) -> bool {
        self.failure_counts.contains_key(law)
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Text => self.render_text(),
            ReportFormat::Records => self.render_records(),
        }
    }

    fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} model {} cases {} status {} failures {}",
            self.suite,
            self.model,
            self.cases,
            self.status(),
            self.total_failures()
        );
        for (law, count) in &self.failure_counts {
            let _ = writeln!(out, "  law {law} failed {count} times");
        }
        for f in &self.failures {
            let _ = writeln!(out, "  witness {}", f.law);
            for (k, v) in &f.witness {
                let _ = writeln!(out, "    {k} = {v}");
            }
            let _ = writeln!(out, "    lhs = {}", f.lhs);
            let _ = writeln!(out, "    rhs = {}", f.rhs);
        }
        out
    }

    fn render_records(&self) -> String {
        let mut out = serde_json::to_string(&SummaryRecord {
            suite: &self.suite,
            model: &self.model,
            cases: self.cases,
            status: self.status(),
            failures: self.total_failures(),
        })
        .expect("plain record");
        out.push('\n');
        for f in &self.failures {
            let rec = FailureRecord {
                suite: &self.suite,
                model: &self.model,
                law: &f.law,
                status: "fail",
                witness: f.witness.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect(),
                lhs: &f.lhs,
                rhs: &f.rhs,
            };
            out.push_str(&serde_json::to_string(&rec).expect("plain record"));
            out.push('\n');
        }
        out
    }
}
