//! Verification reports: per-axiom outcomes with counterexamples and an
//! honest record of how strong the evidence is.

use std::fmt;

/// How a check was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    /// Every relevant instance was covered.
    Exhaustive,
    /// All words up to the stated length were covered.
    BoundedWords { max_len: usize },
    /// Seeded random sampling.
    Sampled { count: u64, seed: u64 },
}

impl Evidence {
    pub fn is_exhaustive(self) -> bool {
        matches!(self, Evidence::Exhaustive)
    }
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Exhaustive => write!(f, "exhaustive"),
            Evidence::BoundedWords { max_len } => write!(f, "words up to length {max_len}"),
            Evidence::Sampled { count, seed } => write!(f, "{count} samples (seed {seed})"),
        }
    }
}

/// The partial-group axioms checked by the verifier. `Inv` covers the
/// requirement that inversion is an involutory bijection fixing the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomId {
    Inv,
    Pg1,
    Pg2,
    Pg3,
    Pg4,
}

impl AxiomId {
    pub const ALL: [AxiomId; 5] = [
        AxiomId::Inv,
        AxiomId::Pg1,
        AxiomId::Pg2,
        AxiomId::Pg3,
        AxiomId::Pg4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Inv => "INV",
            AxiomId::Pg1 => "PG1",
            AxiomId::Pg2 => "PG2",
            AxiomId::Pg3 => "PG3",
            AxiomId::Pg4 => "PG4",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one axiom sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: AxiomId,
    pub max_len: usize,
    pub passed: bool,
    /// Rendered witness of the failure; always present on a failed entry.
    pub counterexample: Option<String>,
    pub exhaustive: bool,
}

/// Report produced by `PartialGroup::verify_axioms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub entries: Vec<AxiomCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, axiom: AxiomId) -> Option<&AxiomCheck> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    pub fn failed(&self) -> Vec<&AxiomCheck> {
        self.entries.iter().filter(|e| !e.passed).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(
                f,
                "{}: {} (bound {}, {}){}",
                e.axiom,
                if e.passed { "pass" } else { "FAIL" },
                e.max_len,
                if e.exhaustive { "exhaustive" } else { "bounded" },
                match &e.counterexample {
                    Some(w) => format!(" counterexample: {w}"),
                    None => String::new(),
                }
            )?;
        }
        Ok(())
    }
}

/// Outcome of one named check in a larger suite (locality axioms, lemma
/// suites, hypothesis bullets). Kept string-typed so reports serialize
/// uniformly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: String,
    pub passed: bool,
    pub evidence: Evidence,
    pub counterexample: Option<String>,
    /// Number of instances inspected, when meaningful.
    pub instances: u64,
}

impl CheckOutcome {
    pub fn pass(id: impl Into<String>, evidence: Evidence, instances: u64) -> CheckOutcome {
        CheckOutcome {
            id: id.into(),
            passed: true,
            evidence,
            counterexample: None,
            instances,
        }
    }

    pub fn fail(
        id: impl Into<String>,
        evidence: Evidence,
        counterexample: impl Into<String>,
        instances: u64,
    ) -> CheckOutcome {
        CheckOutcome {
            id: id.into(),
            passed: false,
            evidence,
            counterexample: Some(counterexample.into()),
            instances,
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({})",
            self.id,
            if self.passed { "pass" } else { "FAIL" },
            self.evidence
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}

/// A list of `CheckOutcome`s with a single pass/fail verdict.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn push(&mut self, outcome: CheckOutcome) {
        self.outcomes.push(outcome);
    }

    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed)
    }

    pub fn outcome(&self, id: &str) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| o.id == id)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}
